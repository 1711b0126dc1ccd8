#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace morphic {

/// Surface symbols for an alphabet of size m: 'a'..'z' when m <= 26,
/// otherwise the tokens x1, x2, ... for every letter.
std::vector<std::string> symbol_pool(std::size_t m);

/// True when symbols from symbol_pool(m) must be written space-separated.
inline bool pool_needs_tokens(std::size_t m) { return m > 26; }

/// a_1 a_2 ... a_k a_k ... a_2 a_1.
std::vector<std::string> wn_word(std::size_t k);

/// Uniform random word of the given length over symbol_pool(alphabet);
/// deterministic for a fixed seed.
std::vector<std::string> random_word(std::size_t length, std::size_t alphabet, std::uint64_t seed);

}  // namespace morphic
