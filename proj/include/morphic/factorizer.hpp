#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "morphic/sync_forest.hpp"
#include "morphic/word.hpp"

namespace morphic {

/// Letter -> image word. Letters outside the expanding set map to the empty word.
struct Morphism {
    std::vector<std::vector<Letter>> images;
    std::vector<Letter> expanding;  // ascending letter ids

    std::span<const Letter> operator()(Letter a) const { return images.at(a); }
    bool is_identity() const;
};

/// Work done by one evaluation of the loop condition plus, when it found a
/// violation, the expansion that followed.
struct RoundCounters {
    std::size_t positions_scanned = 0;    // find_violation positions
    std::size_t neighborhood_visits = 0;  // positions read computing the neighborhood
    std::size_t edges_added = 0;          // synchronization edges
    std::size_t recompress_cells = 0;     // cells touched by recompression
    std::size_t cuts_flagged = 0;         // flag writes from (B.a) and (B.b)
};

struct RoundRecord {
    std::size_t round = 0;  // 1-based
    Letter letter = 0;
    Neighborhood neighborhood;
    std::vector<std::size_t> left_cuts;   // after recompression, ascending
    std::vector<std::size_t> right_cuts;
    RoundCounters counters;
};

struct FactorizationResult {
    Morphism morphism;
    bool primitive = true;
    std::size_t rounds = 0;
    std::size_t condition_checks = 0;
    std::vector<RoundRecord> trace;
    std::size_t final_check_scanned = 0;  // positions scanned by the last, violation-free check
    std::vector<std::size_t> left_cuts;
    std::vector<std::size_t> right_cuts;
    /// Boundaries of the morphic factorization induced by the morphism: the
    /// cuts k with |f(w[1..k])| = k.
    std::vector<std::size_t> factor_cuts;

    RoundCounters totals() const;
};

/// State of one factorization run: expanding set E and the cut sets L and R
/// held as flags on the synchronization forest. The word must outlive it.
class Engine {
public:
    explicit Engine(const Word& w);

    const Word& word() const noexcept { return word_; }
    const PosIndex& index() const noexcept { return index_; }
    const SyncForest& forest() const noexcept { return forest_; }

    bool is_expanding(Letter a) const { return expanding_.at(a); }
    std::vector<Letter> expanding() const;
    std::size_t rounds() const noexcept { return trace_.size(); }
    std::size_t condition_checks() const noexcept { return checks_; }
    /// Positions scanned by the most recent find_violation() call.
    std::size_t last_scan() const noexcept { return last_scan_; }
    std::span<const RoundRecord> trace() const noexcept { return trace_; }

    /// Cached neighborhood; computed on first use.
    const Neighborhood& neighborhood(Letter a);

    /// Evaluates the loop condition. Sweeps cuts left to right; within each
    /// stretch between consecutive R cuts the leftmost least-frequent position
    /// of every suffix is maintained right to left, so alpha(l, next R after
    /// l) is available for each L cut l in O(1). Returns w[alpha] for the
    /// smallest l whose alpha letter is not expanding. At most n positions
    /// are scanned per call.
    std::optional<Letter> find_violation();

    /// Adds a to E and restores conditions (B.a), (B.b) and (B.c).
    /// Throws std::invalid_argument if a is already expanding.
    void expand_letter(Letter a);

    /// Image of an expanding letter, anchored at its occurrence-th occurrence.
    /// Meaningful once the state is stable.
    std::vector<Letter> image(Letter a, std::size_t occurrence = 1) const;

private:
    const Word& word_;
    PosIndex index_;
    SyncForest forest_;
    std::vector<bool> expanding_;
    std::vector<std::optional<Neighborhood>> hoods_;
    std::vector<std::size_t> hood_visits_;
    std::vector<RoundRecord> trace_;
    std::size_t checks_ = 0;
    std::size_t last_scan_ = 0;
};

/// Runs the factorization loop to completion and builds the morphism.
FactorizationResult run(const Word& w);

/// Concatenation of the images of seq.
std::vector<Letter> apply(const Morphism& f, std::span<const Letter> seq);

/// |f(w[1..k])| for k = 0..n.
std::vector<std::size_t> prefix_image_lengths(const Word& w, const Morphism& f);

/// f(w) = w and f(f(a)) = f(a) for every letter.
bool verify(const Word& w, const Morphism& f);

/// Every cut in L is a left cut (|f(w[1..k])| <= k) and every cut in R a
/// right cut (|f(w[1..k])| >= k).
bool left_right_cut_check(const Word& w, const Morphism& f, std::span<const std::size_t> left,
                          std::span<const std::size_t> right);

/// Cuts that are both left and right cuts of f.
std::vector<std::size_t> factor_cuts(const Word& w, const Morphism& f);

}  // namespace morphic
