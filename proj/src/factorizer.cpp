#include "morphic/factorizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace morphic {

bool Morphism::is_identity() const {
    for (std::size_t a = 0; a < images.size(); ++a)
        if (images[a].size() != 1 || images[a][0] != a) return false;
    return true;
}

RoundCounters FactorizationResult::totals() const {
    RoundCounters t;
    t.positions_scanned = final_check_scanned;
    for (const auto& r : trace) {
        t.positions_scanned += r.counters.positions_scanned;
        t.neighborhood_visits += r.counters.neighborhood_visits;
        t.edges_added += r.counters.edges_added;
        t.recompress_cells += r.counters.recompress_cells;
        t.cuts_flagged += r.counters.cuts_flagged;
    }
    return t;
}

Engine::Engine(const Word& w)
    : word_(w),
      index_(w),
      forest_(w.size()),
      expanding_(w.alphabet_size(), false),
      hoods_(w.alphabet_size()),
      hood_visits_(w.alphabet_size(), 0) {
    for (Side side : {Side::left, Side::right}) {
        forest_.set_flag(0, side);
        forest_.set_flag(w.size(), side);
    }
}

std::vector<Letter> Engine::expanding() const {
    std::vector<Letter> out;
    for (Letter a = 0; a < expanding_.size(); ++a)
        if (expanding_[a]) out.push_back(a);
    return out;
}

const Neighborhood& Engine::neighborhood(Letter a) {
    auto& slot = hoods_.at(a);
    if (!slot) slot = compute_neighborhood(word_, index_, a, hood_visits_[a]);
    return *slot;
}

std::optional<Letter> Engine::find_violation() {
    ++checks_;
    last_scan_ = 0;
    const std::size_t n = word_.size();
    auto freq = [&](std::size_t p) { return index_.count(word_.at(p)); };

    std::size_t segment_start = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        if (!forest_.has_flag(r, Side::right)) continue;
        // Positions segment_start+1..r; L cuts l in [segment_start, r) have r
        // as their nearest R cut to the right.
        std::size_t best = r;
        std::optional<Letter> violation;
        for (std::size_t p = r; p > segment_start; --p) {
            ++last_scan_;
            if (freq(p) <= freq(best)) best = p;
            const Letter a = word_.at(best);
            if (forest_.has_flag(p - 1, Side::left) && !expanding_[a]) violation = a;
        }
        if (violation) return violation;
        segment_start = r;
    }
    return std::nullopt;
}

void Engine::expand_letter(Letter a) {
    if (a >= expanding_.size()) throw std::out_of_range("letter not in alphabet");
    if (expanding_[a])
        throw std::invalid_argument("letter " + word_.symbol(a) + " is already expanding");
    expanding_[a] = true;

    RoundRecord rec;
    rec.round = trace_.size() + 1;
    rec.letter = a;
    rec.counters.positions_scanned = last_scan_;
    last_scan_ = 0;

    const std::size_t visits_before = hood_visits_[a];
    const Neighborhood hood = neighborhood(a);
    rec.neighborhood = hood;
    rec.counters.neighborhood_visits = hood_visits_[a] - visits_before;

    const auto ps = index_.positions(a);
    for (std::size_t k : ps) {
        forest_.set_flag(k - 1, Side::left);                    // (B.a)
        forest_.set_flag(k, Side::right);
        forest_.set_flag(k + hood.right_len, Side::left);       // (B.b)
        forest_.set_flag(k - hood.left_len - 1, Side::right);
        rec.counters.cuts_flagged += 4;
    }

    // (B.c): star edges from the first occurrence, offsets -|lambda|-1 .. |rho|.
    const std::size_t first = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) {
        for (std::size_t off = 0; off <= hood.left_len + hood.right_len + 1; ++off) {
            const std::size_t delta = hood.left_len + 1;
            forest_.add_edge(first + off - delta, ps[i] + off - delta);
            ++rec.counters.edges_added;
        }
    }
    rec.counters.recompress_cells = forest_.recompress();

    rec.left_cuts = forest_.flagged_cuts(Side::left);
    rec.right_cuts = forest_.flagged_cuts(Side::right);
    trace_.push_back(std::move(rec));
}

std::vector<Letter> Engine::image(Letter a, std::size_t occurrence) const {
    if (a >= expanding_.size() || !expanding_[a])
        throw std::invalid_argument("image requested for a non-expanding letter");
    const std::size_t k = index_.pos(a, occurrence);
    const std::size_t n = word_.size();

    std::size_t i = 0;
    while (!forest_.has_flag(k - i - 1, Side::right)) ++i;

    // Largest j with cut k+j in R and no L cut among k .. k+j-1.
    std::size_t j = 0;
    for (std::size_t t = 0; k + t <= n; ++t) {
        if (forest_.has_flag(k + t, Side::right)) j = t;
        if (forest_.has_flag(k + t, Side::left)) break;
    }

    const auto letters = word_.letters();
    return {letters.begin() + static_cast<std::ptrdiff_t>(k - i - 1),
            letters.begin() + static_cast<std::ptrdiff_t>(k + j)};
}

FactorizationResult run(const Word& w) {
    Engine engine(w);
    while (auto a = engine.find_violation()) engine.expand_letter(*a);

    FactorizationResult result;
    result.final_check_scanned = engine.last_scan();
    result.condition_checks = engine.condition_checks();
    result.rounds = engine.rounds();
    result.trace.assign(engine.trace().begin(), engine.trace().end());
    result.left_cuts = engine.forest().flagged_cuts(Side::left);
    result.right_cuts = engine.forest().flagged_cuts(Side::right);

    auto& f = result.morphism;
    f.images.resize(w.alphabet_size());
    f.expanding = engine.expanding();
    for (Letter a : f.expanding) f.images[a] = engine.image(a);
    result.primitive = f.expanding.size() == w.alphabet_size();
    result.factor_cuts = factor_cuts(w, f);
    return result;
}

std::vector<Letter> apply(const Morphism& f, std::span<const Letter> seq) {
    std::vector<Letter> out;
    for (Letter a : seq) {
        const auto img = f(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

std::vector<std::size_t> prefix_image_lengths(const Word& w, const Morphism& f) {
    std::vector<std::size_t> lens(w.size() + 1, 0);
    for (std::size_t p = 1; p <= w.size(); ++p) lens[p] = lens[p - 1] + f(w.at(p)).size();
    return lens;
}

bool verify(const Word& w, const Morphism& f) {
    if (f.images.size() != w.alphabet_size()) return false;
    const auto image = apply(f, w.letters());
    if (!std::equal(image.begin(), image.end(), w.letters().begin(), w.letters().end()))
        return false;
    for (Letter a = 0; a < f.images.size(); ++a) {
        const auto twice = apply(f, f(a));
        const auto once = f(a);
        if (!std::equal(twice.begin(), twice.end(), once.begin(), once.end())) return false;
    }
    return true;
}

bool left_right_cut_check(const Word& w, const Morphism& f, std::span<const std::size_t> left,
                          std::span<const std::size_t> right) {
    const auto lens = prefix_image_lengths(w, f);
    for (std::size_t k : left)
        if (k >= lens.size() || lens[k] > k) return false;
    for (std::size_t k : right)
        if (k >= lens.size() || lens[k] < k) return false;
    return true;
}

std::vector<std::size_t> factor_cuts(const Word& w, const Morphism& f) {
    const auto lens = prefix_image_lengths(w, f);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < lens.size(); ++k)
        if (lens[k] == k) out.push_back(k);
    return out;
}

}  // namespace morphic
