#include "morphic/sync_forest.hpp"

#include <stdexcept>
#include <string>

namespace morphic {

SyncForest::SyncForest(std::size_t n) : parent_(n + 1), flag_l_(n + 1, false), flag_r_(n + 1, false) {
    for (std::size_t c = 0; c <= n; ++c) parent_[c] = c;
}

void SyncForest::check(std::size_t c) const {
    if (c >= parent_.size())
        throw std::out_of_range("cut " + std::to_string(c) + " outside 0.." +
                                std::to_string(parent_.size() - 1));
}

std::size_t SyncForest::find(std::size_t c) const {
    check(c);
    return parent_[c];
}

void SyncForest::set_flag(std::size_t c, Side side) {
    flags(side)[find(c)] = true;
}

bool SyncForest::has_flag(std::size_t c, Side side) const {
    return flags(side)[find(c)];
}

void SyncForest::add_edge(std::size_t a, std::size_t b) {
    check(a);
    check(b);
    pending_.emplace_back(a, b);
}

void SyncForest::add_edges(std::span<const CutPair> edges) {
    for (auto [a, b] : edges) add_edge(a, b);
}

std::size_t SyncForest::recompress() {
    if (pending_.empty()) return 0;
    const std::size_t cuts = parent_.size();

    // Adjacency in CSR form over root links and pending edges.
    std::vector<std::size_t> degree(cuts + 1, 0);
    auto count_edge = [&](std::size_t a, std::size_t b) {
        ++degree[a + 1];
        ++degree[b + 1];
    };
    for (std::size_t c = 0; c < cuts; ++c)
        if (parent_[c] != c) count_edge(c, parent_[c]);
    for (auto [a, b] : pending_) count_edge(a, b);
    for (std::size_t c = 0; c < cuts; ++c) degree[c + 1] += degree[c];

    std::vector<std::size_t> adj(degree.back());
    std::vector<std::size_t> fill(degree.begin(), degree.end() - 1);
    auto put_edge = [&](std::size_t a, std::size_t b) {
        adj[fill[a]++] = b;
        adj[fill[b]++] = a;
    };
    for (std::size_t c = 0; c < cuts; ++c)
        if (parent_[c] != c) put_edge(c, parent_[c]);
    for (auto [a, b] : pending_) put_edge(a, b);

    std::vector<std::size_t> next_parent(cuts, cuts);
    std::vector<bool> next_l(cuts, false);
    std::vector<bool> next_r(cuts, false);
    std::vector<std::size_t> stack;
    std::size_t cells = 0;

    // Ascending sweep: the first unvisited cut of a component is its minimum.
    for (std::size_t root = 0; root < cuts; ++root) {
        if (next_parent[root] != cuts) continue;
        next_parent[root] = root;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            ++cells;
            const std::size_t old_root = parent_[c];
            if (flag_l_[old_root]) next_l[root] = true;
            if (flag_r_[old_root]) next_r[root] = true;
            for (std::size_t e = degree[c]; e < degree[c + 1]; ++e) {
                ++cells;
                const std::size_t d = adj[e];
                if (next_parent[d] == cuts) {
                    next_parent[d] = root;
                    stack.push_back(d);
                }
            }
        }
    }

    parent_ = std::move(next_parent);
    flag_l_ = std::move(next_l);
    flag_r_ = std::move(next_r);
    pending_.clear();
    return cells;
}

std::vector<std::size_t> SyncForest::flagged_cuts(Side side) const {
    std::vector<std::size_t> out;
    const auto& f = flags(side);
    for (std::size_t c = 0; c < parent_.size(); ++c)
        if (f[parent_[c]]) out.push_back(c);
    return out;
}

bool SyncForest::is_flat() const {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (parent_[parent_[c]] != parent_[c]) return false;
        if (parent_[c] != c && (flag_l_[c] || flag_r_[c])) return false;
    }
    return true;
}

}  // namespace morphic
