#include <doctest.h>

#include <random>

#include "morphic/oracle.hpp"
#include "morphic/word.hpp"
#include "support/audit.hpp"

using namespace morphic;

namespace {
const char* const kExample = "caabcaadeaabeaad";

std::vector<Letter> ids(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

Letter letter_of(const Word& w, const std::string& s) {
    for (Letter a = 0; a < w.alphabet_size(); ++a)
        if (w.symbol(a) == s) return a;
    FAIL("symbol not in word: " << s);
    return 0;
}

// Small words plus a few longer random ones.
std::vector<Word> corpus() {
    auto words = oracle::all_words(8, 4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::string> s;
        const std::size_t len = 20 + rng() % 60, m = 1 + rng() % 5;
        for (std::size_t k = 0; k < len; ++k) s.emplace_back(1, static_cast<char>('a' + rng() % m));
        words.push_back(Word::intern(s));
    }
    return words;
}
}  // namespace

TEST_CASE("intern assigns ids in first-appearance order") {
    auto w = Word::from_utf8("abaaba");
    CHECK(ids(w) == std::vector<Letter>{0, 1, 0, 0, 1, 0});
    CHECK(w.alphabet_size() == 2);
    CHECK(w.str() == "abaaba");

    auto empty = Word::from_utf8("");
    CHECK(empty.size() == 0);
    CHECK(empty.alphabet_size() == 0);

    auto ex = Word::from_utf8(kExample);
    CHECK(ex.size() == 16);
    CHECK(ex.alphabet_size() == 5);
}

TEST_CASE("utf8 and token surface forms round-trip") {
    auto w = Word::from_utf8("αβαβ");
    CHECK(w.size() == 4);
    CHECK(w.alphabet_size() == 2);
    CHECK(w.str() == "αβαβ");

    auto t = Word::from_tokens("  x1 x2\tx1  ");
    CHECK(ids(t) == std::vector<Letter>{0, 1, 0});
    CHECK(t.str(" ") == "x1 x2 x1");

    CHECK_THROWS_AS(Word::from_utf8("\xff"), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_utf8("a\xc3"), std::invalid_argument);
}

TEST_CASE("position index") {
    auto w = Word::from_utf8("abaaba");
    PosIndex idx(w);
    CHECK(idx.count(0) == 4);
    CHECK(idx.count(1) == 2);
    CHECK(idx.pos(1, 1) == 2);
    CHECK(idx.pos(1, 2) == 5);
    CHECK_THROWS(idx.pos(1, 3));

    auto ex = Word::from_utf8(kExample);
    PosIndex ei(ex);
    CHECK(ei.count(letter_of(ex, "a")) == 8);
    for (auto s : {"b", "c", "d", "e"}) CHECK(ei.count(letter_of(ex, s)) == 2);

    PosIndex none(Word::from_utf8(""));
    CHECK(none.alphabet_size() == 0);
}

TEST_CASE("position index invariants") {
    for (const auto& w : corpus()) {
        PosIndex idx(w);
        std::size_t total = 0;
        for (Letter a = 0; a < w.alphabet_size(); ++a) {
            const auto ps = idx.positions(a);
            total += ps.size();
            CHECK(ps.size() >= 1);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                CHECK(w.at(ps[i]) == a);
                if (i > 0) CHECK(ps[i - 1] < ps[i]);
            }
        }
        CHECK(total == w.size());
    }
}

TEST_CASE("neighborhoods of the worked example") {
    auto w = Word::from_utf8(kExample);
    PosIndex idx(w);
    CHECK(compute_neighborhood(w, idx, letter_of(w, "a")) == Neighborhood{0, 0});
    CHECK(compute_neighborhood(w, idx, letter_of(w, "b")) == Neighborhood{2, 0});
    CHECK(compute_neighborhood(w, idx, letter_of(w, "c")) == Neighborhood{0, 2});
    CHECK(compute_neighborhood(w, idx, letter_of(w, "d")) == Neighborhood{2, 0});
    CHECK(compute_neighborhood(w, idx, letter_of(w, "e")) == Neighborhood{0, 2});
}

TEST_CASE("neighborhood edge cases") {
    auto w = Word::from_utf8("abaaba");
    PosIndex idx(w);
    CHECK(compute_neighborhood(w, idx, 1) == Neighborhood{1, 1});

    // Single occurrence reaches both word boundaries.
    auto abc = Word::from_utf8("abc");
    PosIndex ai(abc);
    CHECK(compute_neighborhood(abc, ai, 1) == Neighborhood{1, 1});
    CHECK(compute_neighborhood(abc, ai, 0) == Neighborhood{0, 2});

    CHECK_THROWS_AS(compute_neighborhood(w, idx, 2), std::out_of_range);
}

TEST_CASE("neighborhood matches brute force and respects the visit bound") {
    for (const auto& w : corpus()) {
        PosIndex idx(w);
        for (Letter a = 0; a < w.alphabet_size(); ++a) {
            std::size_t visited = 0;
            const auto h = compute_neighborhood(w, idx, a, visited);
            CHECK(h == testing::brute_neighborhood(w, a));
            CHECK(visited <= 2 * w.size());
        }
    }
}

TEST_CASE("observation: letters inside a neighborhood are at least as frequent") {
    for (const auto& w : corpus()) {
        PosIndex idx(w);
        for (Letter a = 0; a < w.alphabet_size(); ++a) {
            const auto h = compute_neighborhood(w, idx, a);
            const std::size_t p = idx.pos(a, 1);
            std::size_t a_count = 0;
            for (std::size_t q = p - h.left_len; q <= p + h.right_len; ++q) {
                CHECK(idx.count(w.at(q)) >= idx.count(a));
                a_count += w.at(q) == a;
            }
            CHECK(a_count == 1);
        }
    }
}

TEST_CASE("alpha") {
    auto w = Word::from_utf8(kExample);
    PosIndex idx(w);
    CHECK(alpha_naive(w, idx, 0, 16) == 1);
    CHECK(alpha_naive(w, idx, 7, 9) == 8);
    CHECK(alpha_naive(w, idx, 3, 4) == 4);
    for (std::size_t i = 0; i < 16; ++i) CHECK(alpha_naive(w, idx, i, i + 1) == i + 1);
    CHECK_THROWS_AS(alpha_naive(w, idx, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(alpha_naive(w, idx, 5, 2), std::invalid_argument);
}

TEST_CASE("alpha agrees with the definition and is stable under left narrowing") {
    for (const auto& w : oracle::all_words(7, 4)) {
        PosIndex idx(w);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j <= w.size(); ++j) {
                const std::size_t k = alpha_naive(w, idx, i, j);
                REQUIRE(k == testing::brute_alpha(w, i, j));
                for (std::size_t i2 = i; i2 < k; ++i2) CHECK(alpha_naive(w, idx, i2, j) == k);
            }
    }
}
