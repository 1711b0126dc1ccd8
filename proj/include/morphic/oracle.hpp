#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "morphic/word.hpp"

// Brute-force decision of morphic imprimitivity by exhaustive search over
// block factorizations. Deliberately shares no code with the factorizer.

namespace morphic::oracle {

/// Thrown when a word exceeds the configured length guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::size_t max_len = 16;
    bool force = false;
};

/// A factorization w = w_1 ... w_q with one E-occurrence per block and equal
/// blocks for equal E-letters. cuts = c_0 = 0 < c_1 < ... < c_q = n.
struct BlockAssignment {
    std::vector<Letter> expanding;  // ascending
    std::vector<std::size_t> cuts;

    /// Block for each letter (empty for letters outside E).
    std::vector<std::vector<Letter>> images(const Word& w) const;
};

/// Searches for a block assignment with expanding set exactly E.
/// Throws std::invalid_argument if E is empty or not a subset of alph(w).
std::optional<BlockAssignment> find_factorization(const Word& w, std::vector<Letter> expanding);

inline bool factorization_exists(const Word& w, std::vector<Letter> expanding) {
    return find_factorization(w, std::move(expanding)).has_value();
}

struct MinExpanding {
    std::size_t size = 0;
    bool proper = false;  // minimizer is a proper subset of alph(w)
    std::optional<BlockAssignment> witness;
};

/// Smallest |E| admitting a factorization, searched by increasing |E|.
/// Throws GuardError if |w| > limits.max_len and not forced.
MinExpanding min_expanding(const Word& w, Limits limits = {});

bool is_primitive(const Word& w, Limits limits = {});

/// Calls visit for every nonempty word of length <= max_len whose letters are
/// labeled in first-occurrence order using at most max_alphabet letters
/// (one representative per renaming class). Shorter words first, then
/// lexicographic.
void for_each_word(std::size_t max_len, std::size_t max_alphabet,
                   const std::function<void(const Word&)>& visit);

std::vector<Word> all_words(std::size_t max_len, std::size_t max_alphabet);

}  // namespace morphic::oracle
