#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "morphic/cli.hpp"
#include "morphic/generate.hpp"
#include "morphic/oracle.hpp"

using namespace morphic;
using namespace morphic::cli;

namespace {
struct Io {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    explicit Io(std::string input = "") : in(std::move(input)) {}
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);) out.push_back(line);
    return out;
}
}  // namespace

TEST_CASE("check reads one word per line") {
    Io io("abaaba\nabba\n\na\r\n");
    CHECK(cmd_check({}, io.in, io.out, io.err) == ok);
    CHECK(io.out.str() == "abaaba\timprimitive\nabba\tprimitive\n\tprimitive\na\tprimitive\n");
}

TEST_CASE("check with a worker pool keeps input order") {
    std::string input;
    std::string expected;
    for (const auto& w : oracle::all_words(7, 3)) {
        input += w.str() + "\n";
        expected += w.str() + (run(w).primitive ? "\tprimitive\n" : "\timprimitive\n");
    }
    Io io(input);
    CheckArgs args;
    args.jobs = 4;
    CHECK(cmd_check(args, io.in, io.out, io.err) == ok);
    CHECK(io.out.str() == expected);
}

TEST_CASE("check errors") {
    Io io;
    CheckArgs args;
    args.input_file = "/nonexistent/words.txt";
    CHECK(cmd_check(args, io.in, io.out, io.err) == io_error);

    Io bad("ab\xff\n");
    CHECK(cmd_check({}, bad.in, bad.out, bad.err) == io_error);
    CHECK_FALSE(bad.err.str().empty());
}

TEST_CASE("check in token mode") {
    Io io;
    CheckArgs args;
    args.tokens = true;
    args.words = {"x1 x2 x1 x1 x2 x1", "x1 x2 x2 x1"};
    CHECK(cmd_check(args, io.in, io.out, io.err) == ok);
    CHECK(io.out.str() == "x1 x2 x1 x1 x2 x1\timprimitive\nx1 x2 x2 x1\tprimitive\n");
}

TEST_CASE("factorize text output") {
    Io io;
    CHECK(cmd_factorize({false, "caabcaadeaabeaad", false}, io.in, io.out, io.err) == ok);
    CHECK(lines_of(io.out.str()) ==
          std::vector<std::string>{"imprimitive", "a↦ε, b↦aab, c↦c, d↦aad, e↦e", "c|aab|c|aad|e|aab|e|aad"});

    Io intro("abaaba\n");
    CHECK(cmd_factorize({}, intro.in, intro.out, intro.err) == ok);
    CHECK(lines_of(intro.out.str()) == std::vector<std::string>{"imprimitive", "a↦ε, b↦aba", "aba|aba"});

    Io single;
    CHECK(cmd_factorize({false, "a", false}, single.in, single.out, single.err) == ok);
    CHECK(lines_of(single.out.str()) == std::vector<std::string>{"primitive", "a↦a", "a"});
}

TEST_CASE("factorize json emits the final block") {
    Io io;
    CHECK(cmd_factorize({false, "abaaba", true}, io.in, io.out, io.err) == ok);
    const auto doc = nlohmann::json::parse(io.out.str());
    CHECK(doc["primitive"] == false);
    CHECK(doc["images"]["a"] == "");
    CHECK(doc["images"]["b"] == "aba");
    CHECK(doc["expanding"] == nlohmann::json::array({"b"}));
    CHECK(doc["factor_cuts"] == nlohmann::json::array({0, 3, 6}));
}

TEST_CASE("trace document") {
    Io io;
    CHECK(cmd_trace({false, "caabcaadeaabeaad", false}, io.in, io.out, io.err) == ok);
    const std::string text = io.out.str();
    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc["rounds"].size() == 4);
    CHECK(doc["rounds"][0]["letter"] == "c");
    CHECK(doc["rounds"][0]["L"] == nlohmann::json::array({0, 3, 4, 7, 16}));
    CHECK(doc["rounds"][0]["R"] == nlohmann::json::array({0, 1, 4, 5, 16}));
    CHECK(doc["rounds"][0]["neighborhood"]["right"] == 2);
    CHECK(doc["rounds"][3]["L"] == nlohmann::json::array({0, 3, 4, 7, 8, 11, 12, 15, 16}));
    CHECK(doc["rounds"][3]["R"] == nlohmann::json::array({0, 1, 4, 5, 8, 9, 12, 13, 16}));
    CHECK(doc["counters"]["condition_checks"] == 5);

    // Re-parsing and re-serializing is byte-identical.
    CHECK(doc.dump(2) + "\n" == text);

    Io abba;
    CHECK(cmd_trace({false, "abba", false}, abba.in, abba.out, abba.err) == ok);
    const auto d2 = nlohmann::json::parse(abba.out.str());
    REQUIRE(d2["rounds"].size() == 2);
    CHECK(d2["rounds"][0]["letter"] == "a");
    CHECK(d2["rounds"][1]["letter"] == "b");
}

TEST_CASE("trace output is deterministic across the corpus") {
    for (const auto& w : oracle::all_words(6, 3)) {
        const auto text = trace_document(w, run(w), false).dump(2);
        CHECK(nlohmann::json::parse(text).dump(2) == text);
        CHECK(trace_document(w, run(w), false).dump(2) == text);
    }
}

TEST_CASE("oracle command") {
    Io io;
    CHECK(cmd_oracle({{false, "abaaba", false}, 16, false}, io.in, io.out, io.err) == ok);
    CHECK(lines_of(io.out.str()) ==
          std::vector<std::string>{"abaaba\timprimitive", "min_expanding\t1", "witness\t{b}", "factorization\taba|aba"});

    Io abba;
    CHECK(cmd_oracle({{false, "abba", false}, 16, false}, abba.in, abba.out, abba.err) == ok);
    CHECK(lines_of(abba.out.str())[0] == "abba\tprimitive");

    Io big;
    CHECK(cmd_oracle({{false, "abcdefghijklmnopq", false}, 16, false}, big.in, big.out, big.err) ==
          guard_refusal);
    CHECK(big.out.str().empty());
    Io forced;
    CHECK(cmd_oracle({{false, "abcdefghijklmnopq", false}, 16, true}, forced.in, forced.out, forced.err) == ok);
    Io raised;
    CHECK(cmd_oracle({{false, "abcdefghijklmnopq", false}, 17, false}, raised.in, raised.out, raised.err) == ok);
}

TEST_CASE("gen") {
    std::ostringstream out, err;
    CorpusArgs wn;
    wn.family = "wn";
    wn.n = 3;
    CHECK(cmd_gen(wn, out, err) == ok);
    CHECK(out.str() == "abccba\n");

    std::ostringstream one;
    wn.n = 1;
    CHECK(cmd_gen(wn, one, err) == ok);
    CHECK(one.str() == "aa\n");

    CorpusArgs rnd;
    rnd.random = true;
    rnd.length = 50;
    rnd.alphabet = 4;
    rnd.seed = 7;
    rnd.count = 3;
    std::ostringstream a, b;
    CHECK(cmd_gen(rnd, a, err) == ok);
    CHECK(cmd_gen(rnd, b, err) == ok);
    CHECK(a.str() == b.str());
    CHECK(lines_of(a.str()).size() == 3);

    std::ostringstream bad_err, unused;
    CHECK(cmd_gen({}, unused, bad_err) == usage);
    CorpusArgs zero;
    zero.family = "wn";
    CHECK(cmd_gen(zero, unused, bad_err) == usage);
}

TEST_CASE("gen wn is a palindrome of length 2k with k letters") {
    for (std::size_t k = 1; k <= 40; ++k) {
        CorpusArgs args;
        args.family = "wn";
        args.n = k;
        bool tokens = false;
        const auto words = generate_corpus(args, tokens);
        REQUIRE(words.size() == 1);
        const auto& w = words[0];
        CHECK(w.size() == 2 * k);
        CHECK(std::equal(w.begin(), w.end(), w.rbegin()));
        CHECK(std::set<std::string>(w.begin(), w.end()).size() == k);
        CHECK(tokens == (k > 26));
    }
    CHECK(symbol_pool(27)[0] == "x1");
}

TEST_CASE("bench rows") {
    BenchArgs args;
    args.csv = true;
    args.corpus.family = "wn";
    args.corpus.n = 5;
    Io io;
    CHECK(cmd_bench(args, io.in, io.out, io.err) == ok);
    auto rows = lines_of(io.out.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,m,E,rounds,scanned,edges,nanoseconds");
    CHECK(rows[1].rfind("10,5,5,5,", 0) == 0);

    BenchArgs from_stdin;
    from_stdin.csv = true;
    Io empty("\n");
    CHECK(cmd_bench(from_stdin, empty.in, empty.out, empty.err) == ok);
    rows = lines_of(empty.out.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].rfind("0,0,0,0,", 0) == 0);

    BenchArgs missing;
    missing.file = "/nonexistent/corpus.txt";
    Io io2;
    CHECK(cmd_bench(missing, io2.in, io2.out, io2.err) == io_error);
}
