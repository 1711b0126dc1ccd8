#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphic {

/// Dense letter identifier, assigned in order of first appearance.
using Letter = std::uint32_t;

/// A word over a compact alphabet. Positions are 1-based; cut k follows the
/// prefix of length k, so a word of length n has cuts 0..n.
class Word {
public:
    Word() = default;

    /// Interns surface symbols; the alphabet is exactly the set of symbols seen.
    static Word intern(std::span<const std::string> symbols);
    /// One symbol per UTF-8 scalar value. Throws std::invalid_argument on
    /// malformed input.
    static Word from_utf8(std::string_view text);
    /// One symbol per whitespace-separated token.
    static Word from_tokens(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t alphabet_size() const noexcept { return symbols_.size(); }

    /// Letter at 1-based position p.
    Letter at(std::size_t p) const { return letters_.at(p - 1); }
    std::span<const Letter> letters() const noexcept { return letters_; }

    const std::string& symbol(Letter a) const { return symbols_.at(a); }
    std::span<const std::string> symbols() const noexcept { return symbols_; }

    /// Surface form of an arbitrary letter sequence over this word's alphabet.
    std::string render(std::span<const Letter> seq, std::string_view sep = "") const;
    std::string str(std::string_view sep = "") const { return render(letters_, sep); }

private:
    std::vector<Letter> letters_;
    std::vector<std::string> symbols_;
};

/// Splits UTF-8 text into scalar-value symbols.
std::vector<std::string> split_utf8(std::string_view text);

/// Occurrence counts |w|_a and occurrence positions Pos[a,i], stored as one
/// flat array partitioned by letter.
class PosIndex {
public:
    PosIndex() = default;
    explicit PosIndex(const Word& w);

    std::size_t count(Letter a) const { return offsets_.at(a + 1) - offsets_.at(a); }
    /// Ascending 1-based positions of a.
    std::span<const std::size_t> positions(Letter a) const;
    /// Position of the i-th occurrence of a, i >= 1.
    std::size_t pos(Letter a, std::size_t i) const;
    std::size_t alphabet_size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> positions_;
};

inline PosIndex build_index(const Word& w) { return PosIndex(w); }

/// Lengths of the longest left and right contexts shared by every occurrence
/// of a letter: the neighborhood of a is w[p-left_len .. p+right_len].
struct Neighborhood {
    std::size_t left_len = 0;
    std::size_t right_len = 0;

    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
};

/// Computes the neighborhood of a by growing the context one step at a time
/// over all occurrences until the first mismatch or boundary overrun.
/// `visited` is incremented once per word position read (at most 2n).
Neighborhood compute_neighborhood(const Word& w, const PosIndex& idx, Letter a,
                                  std::size_t& visited);
Neighborhood compute_neighborhood(const Word& w, const PosIndex& idx, Letter a);

/// Leftmost position in (i, j] holding a letter of least global frequency.
/// Reference implementation, linear in j - i.
std::size_t alpha_naive(const Word& w, const PosIndex& idx, std::size_t i, std::size_t j);

}  // namespace morphic
