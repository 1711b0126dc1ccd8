#include "morphic/generate.hpp"

#include <random>
#include <stdexcept>

namespace morphic {

std::vector<std::string> symbol_pool(std::size_t m) {
    std::vector<std::string> pool;
    pool.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        pool.push_back(pool_needs_tokens(m) ? "x" + std::to_string(i + 1)
                                            : std::string(1, static_cast<char>('a' + i)));
    return pool;
}

std::vector<std::string> wn_word(std::size_t k) {
    if (k == 0) throw std::invalid_argument("w_n family requires n >= 1");
    const auto pool = symbol_pool(k);
    std::vector<std::string> out(pool.begin(), pool.end());
    out.insert(out.end(), pool.rbegin(), pool.rend());
    return out;
}

std::vector<std::string> random_word(std::size_t length, std::size_t alphabet, std::uint64_t seed) {
    if (alphabet == 0) throw std::invalid_argument("alphabet size must be >= 1");
    const auto pool = symbol_pool(alphabet);
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(pool[rng() % alphabet]);
    return out;
}

}  // namespace morphic
