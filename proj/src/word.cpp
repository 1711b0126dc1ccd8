#include "morphic/word.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace morphic {

Word Word::intern(std::span<const std::string> symbols) {
    Word w;
    std::unordered_map<std::string, Letter> ids;
    w.letters_.reserve(symbols.size());
    for (const auto& s : symbols) {
        auto [it, inserted] = ids.try_emplace(s, static_cast<Letter>(w.symbols_.size()));
        if (inserted) w.symbols_.push_back(s);
        w.letters_.push_back(it->second);
    }
    return w;
}

Word Word::from_utf8(std::string_view text) {
    const auto symbols = split_utf8(text);
    return intern(symbols);
}

Word Word::from_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return intern(tokens);
}

std::string Word::render(std::span<const Letter> seq, std::string_view sep) const {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += sep;
        out += symbols_.at(seq[i]);
    }
    return out;
}

std::vector<std::string> split_utf8(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len;
        if (lead < 0x80) len = 1;
        else if ((lead & 0xE0) == 0xC0) len = 2;
        else if ((lead & 0xF0) == 0xE0) len = 3;
        else if ((lead & 0xF8) == 0xF0) len = 4;
        else throw std::invalid_argument("invalid UTF-8 lead byte at offset " + std::to_string(i));
        if (i + len > text.size()) throw std::invalid_argument("truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80)
                throw std::invalid_argument("invalid UTF-8 continuation byte at offset " +
                                            std::to_string(i + k));
        }
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

PosIndex::PosIndex(const Word& w) {
    const std::size_t m = w.alphabet_size();
    offsets_.assign(m + 1, 0);
    for (Letter a : w.letters()) ++offsets_[a + 1];
    for (std::size_t a = 0; a < m; ++a) offsets_[a + 1] += offsets_[a];
    positions_.resize(w.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    std::size_t p = 1;
    for (Letter a : w.letters()) positions_[fill[a]++] = p++;
}

std::span<const std::size_t> PosIndex::positions(Letter a) const {
    if (a + 1 >= offsets_.size()) throw std::out_of_range("letter not in alphabet");
    return std::span<const std::size_t>(positions_).subspan(offsets_[a], count(a));
}

std::size_t PosIndex::pos(Letter a, std::size_t i) const {
    auto ps = positions(a);
    if (i == 0 || i > ps.size()) throw std::out_of_range("occurrence ordinal out of range");
    return ps[i - 1];
}

Neighborhood compute_neighborhood(const Word& w, const PosIndex& idx, Letter a,
                                  std::size_t& visited) {
    if (a >= w.alphabet_size()) throw std::out_of_range("letter not in alphabet");
    const auto ps = idx.positions(a);
    const std::size_t n = w.size();

    // Extends while every occurrence agrees with the first one at offset k.
    auto agree_right = [&](std::size_t k) {
        if (ps.back() + k > n) return false;
        const Letter ref = w.at(ps.front() + k);
        ++visited;
        for (std::size_t i = 1; i < ps.size(); ++i) {
            ++visited;
            if (w.at(ps[i] + k) != ref) return false;
        }
        return true;
    };
    auto agree_left = [&](std::size_t k) {
        if (ps.front() <= k) return false;
        const Letter ref = w.at(ps.front() - k);
        ++visited;
        for (std::size_t i = 1; i < ps.size(); ++i) {
            ++visited;
            if (w.at(ps[i] - k) != ref) return false;
        }
        return true;
    };

    Neighborhood hood;
    while (agree_right(hood.right_len + 1)) ++hood.right_len;
    while (agree_left(hood.left_len + 1)) ++hood.left_len;
    return hood;
}

Neighborhood compute_neighborhood(const Word& w, const PosIndex& idx, Letter a) {
    std::size_t visited = 0;
    return compute_neighborhood(w, idx, a, visited);
}

std::size_t alpha_naive(const Word& w, const PosIndex& idx, std::size_t i, std::size_t j) {
    if (i >= j) throw std::invalid_argument("alpha requires i < j");
    if (j > w.size()) throw std::out_of_range("cut beyond end of word");
    std::size_t best = i + 1;
    for (std::size_t k = i + 2; k <= j; ++k) {
        if (idx.count(w.at(k)) < idx.count(w.at(best))) best = k;
    }
    return best;
}

}  // namespace morphic
