#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace morphic {

enum class Side { left, right };

using CutPair = std::pair<std::size_t, std::size_t>;

/// Components of cuts 0..n that must agree on left/right membership, kept as
/// a forest of rooted trees of height one. Membership flags live at the roots.
///
/// Edges are buffered by add_edges() and only merged into the component
/// structure by recompress(). A flag set in between lands on the component
/// as known at that time; recompress() ORs the flags of merged components.
class SyncForest {
public:
    explicit SyncForest(std::size_t n = 0);

    /// Number of cuts, n + 1.
    std::size_t cut_count() const noexcept { return parent_.size(); }

    std::size_t find(std::size_t c) const;
    void set_flag(std::size_t c, Side side);
    bool has_flag(std::size_t c, Side side) const;

    void add_edge(std::size_t a, std::size_t b);
    void add_edges(std::span<const CutPair> edges);
    std::size_t pending_edge_count() const noexcept { return pending_.size(); }

    /// Merges pending edges into the forest. Each component is re-rooted at
    /// its smallest cut. Returns the number of cells touched: one per cut
    /// visited plus one per adjacency entry traversed.
    std::size_t recompress();

    /// Cuts whose component carries the flag, ascending.
    std::vector<std::size_t> flagged_cuts(Side side) const;

    /// parent[parent[c]] == parent[c] for every cut and flags only at roots.
    bool is_flat() const;

private:
    void check(std::size_t c) const;
    std::vector<bool>& flags(Side side) { return side == Side::left ? flag_l_ : flag_r_; }
    const std::vector<bool>& flags(Side side) const { return side == Side::left ? flag_l_ : flag_r_; }

    std::vector<std::size_t> parent_;
    std::vector<bool> flag_l_;
    std::vector<bool> flag_r_;
    std::vector<CutPair> pending_;
};

}  // namespace morphic
