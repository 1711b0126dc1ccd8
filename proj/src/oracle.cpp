#include "morphic/oracle.hpp"

#include <algorithm>
#include <string>

namespace morphic::oracle {

std::vector<std::vector<Letter>> BlockAssignment::images(const Word& w) const {
    std::vector<std::vector<Letter>> out(w.alphabet_size());
    const auto letters = w.letters();
    for (std::size_t b = 1; b < cuts.size(); ++b) {
        std::vector<Letter> block(letters.begin() + static_cast<std::ptrdiff_t>(cuts[b - 1]),
                                  letters.begin() + static_cast<std::ptrdiff_t>(cuts[b]));
        for (Letter a : block) {
            if (std::binary_search(expanding.begin(), expanding.end(), a)) {
                out[a] = block;
                break;
            }
        }
    }
    return out;
}

namespace {

struct Search {
    const Word& w;
    std::vector<bool> in_e;
    std::vector<std::size_t> occ;  // 1-based positions of E-letters
    std::vector<std::size_t> cuts;
    // First block chosen for each E-letter, as a [begin, end) cut range.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> fixed;

    bool same(std::size_t b0, std::size_t b1, std::size_t len) const {
        const auto l = w.letters();
        return std::equal(l.begin() + static_cast<std::ptrdiff_t>(b0),
                          l.begin() + static_cast<std::ptrdiff_t>(b0 + len),
                          l.begin() + static_cast<std::ptrdiff_t>(b1));
    }

    // Block i (0-based) starts at cut `start` and must contain position occ[i].
    bool extend(std::size_t i, std::size_t start) {
        const std::size_t n = w.size();
        const std::size_t q = occ.size();
        if (i == q) return start == n;

        const std::size_t p = occ[i];
        const Letter e = w.at(p);
        const std::size_t lo = p;                             // block end, cut coordinates
        const std::size_t hi = i + 1 < q ? occ[i + 1] - 1 : n;

        if (fixed[e]) {
            const auto [b0, e0] = *fixed[e];
            const std::size_t len = e0 - b0;
            const std::size_t end = start + len;
            if (end < lo || end > hi) return false;
            if (!same(b0, start, len)) return false;
            cuts.push_back(end);
            if (extend(i + 1, end)) return true;
            cuts.pop_back();
            return false;
        }
        if (i + 1 == q) {
            // Last block runs to the end of the word.
            fixed[e] = std::make_pair(start, n);
            cuts.push_back(n);
            if (extend(i + 1, n)) return true;
            cuts.pop_back();
            fixed[e].reset();
            return false;
        }
        for (std::size_t end = lo; end <= hi; ++end) {
            fixed[e] = std::make_pair(start, end);
            cuts.push_back(end);
            if (extend(i + 1, end)) return true;
            cuts.pop_back();
        }
        fixed[e].reset();
        return false;
    }
};

}  // namespace

std::optional<BlockAssignment> find_factorization(const Word& w, std::vector<Letter> expanding) {
    if (expanding.empty()) throw std::invalid_argument("expanding set must be nonempty");
    std::sort(expanding.begin(), expanding.end());
    expanding.erase(std::unique(expanding.begin(), expanding.end()), expanding.end());

    Search s{w, std::vector<bool>(w.alphabet_size(), false), {}, {0}, {}};
    for (Letter a : expanding) {
        if (a >= w.alphabet_size()) throw std::invalid_argument("expanding set not within alph(w)");
        s.in_e[a] = true;
    }
    s.fixed.resize(w.alphabet_size());
    for (std::size_t p = 1; p <= w.size(); ++p)
        if (s.in_e[w.at(p)]) s.occ.push_back(p);

    if (!s.extend(0, 0)) return std::nullopt;
    return BlockAssignment{std::move(expanding), std::move(s.cuts)};
}

MinExpanding min_expanding(const Word& w, Limits limits) {
    if (w.size() > limits.max_len && !limits.force)
        throw GuardError("word of length " + std::to_string(w.size()) +
                         " exceeds oracle limit " + std::to_string(limits.max_len));
    const std::size_t m = w.alphabet_size();
    if (m == 0) return {};

    // Subsets of each size in lexicographic order via a selection mask.
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<bool> mask(m, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<Letter> subset;
            for (Letter a = 0; a < m; ++a)
                if (mask[a]) subset.push_back(a);
            if (auto found = find_factorization(w, subset))
                return MinExpanding{k, k < m, std::move(found)};
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    // E = alph(w) always factors into single letters.
    throw std::logic_error("identity factorization not found");
}

bool is_primitive(const Word& w, Limits limits) {
    return !min_expanding(w, limits).proper;
}

void for_each_word(std::size_t max_len, std::size_t max_alphabet,
                   const std::function<void(const Word&)>& visit) {
    if (max_alphabet == 0) return;
    std::vector<std::string> pool;
    for (std::size_t a = 0; a < max_alphabet; ++a)
        pool.push_back(a < 26 ? std::string(1, static_cast<char>('a' + a)) : "x" + std::to_string(a - 25));

    // Restricted growth strings: s[0] = 0, s[i] <= 1 + max(s[0..i-1]).
    std::vector<std::size_t> rgs;
    std::vector<std::string> symbols;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t len, std::size_t i, std::size_t used) {
            if (i == len) {
                symbols.clear();
                for (auto x : rgs) symbols.push_back(pool[x]);
                visit(Word::intern(symbols));
                return;
            }
            const std::size_t top = std::min(used + 1, max_alphabet);
            for (std::size_t x = 0; x < top; ++x) {
                rgs.push_back(x);
                rec(len, i + 1, std::max(used, x + 1));
                rgs.pop_back();
            }
        };
    for (std::size_t len = 1; len <= max_len; ++len) rec(len, 0, 0);
}

std::vector<Word> all_words(std::size_t max_len, std::size_t max_alphabet) {
    std::vector<Word> out;
    for_each_word(max_len, max_alphabet, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace morphic::oracle
