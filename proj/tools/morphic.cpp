// morphic: decide morphic primitivity and print witness morphisms.

#include <iostream>

#include <CLI11.hpp>

#include "morphic/cli.hpp"

namespace {

void add_corpus_options(CLI::App* cmd, morphic::cli::CorpusArgs& args) {
    cmd->add_option("--family", args.family, "Word family (wn)");
    cmd->add_option("--n", args.n, "Family parameter");
    cmd->add_flag("--random", args.random, "Uniform random words");
    cmd->add_option("--len", args.length, "Random word length");
    cmd->add_option("--alphabet", args.alphabet, "Random alphabet size");
    cmd->add_option("--seed", args.seed, "Random seed");
    cmd->add_option("--count", args.count, "Number of random words")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace morphic::cli;

    CLI::App app{"Morphic primitivity: decision, factorization, traces, oracle cross-check"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Print primitive/imprimitive for each input word");
    check_cmd->add_flag("--tokens", check.tokens, "Words are whitespace-separated tokens");
    check_cmd->add_option("--input", check.input_file, "Read words from file instead of stdin");
    check_cmd->add_option("--jobs", check.jobs, "Worker threads")->check(CLI::PositiveNumber);
    check_cmd->add_option("words", check.words, "Words (default: one per stdin line)");

    WordArgs factorize;
    auto* fact_cmd = app.add_subcommand("factorize", "Print the witness morphism and factorization");
    fact_cmd->add_flag("--tokens", factorize.tokens, "Word is whitespace-separated tokens");
    fact_cmd->add_flag("--json", factorize.json, "Emit JSON");
    fact_cmd->add_option("word", factorize.word, "Word (default: first stdin line)");

    WordArgs trace;
    auto* trace_cmd = app.add_subcommand("trace", "Emit the round-by-round JSON trace");
    trace_cmd->add_flag("--tokens", trace.tokens, "Word is whitespace-separated tokens");
    trace_cmd->add_option("word", trace.word, "Word (default: first stdin line)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force verdict and minimal expanding set");
    oracle_cmd->add_flag("--tokens", oracle.word.tokens, "Word is whitespace-separated tokens");
    oracle_cmd->add_option("--max-len", oracle.max_len, "Length guard");
    oracle_cmd->add_flag("--force", oracle.force, "Ignore the length guard");
    oracle_cmd->add_option("word", oracle.word.word, "Word (default: first stdin line)");

    CorpusArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate words, one per line");
    add_corpus_options(gen_cmd, gen);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run with counters and timing");
    add_corpus_options(bench_cmd, bench.corpus);
    bench_cmd->add_option("--file", bench.file, "Read words from file");
    bench_cmd->add_flag("--tokens", bench.tokens, "Words are whitespace-separated tokens");
    bench_cmd->add_flag("--csv", bench.csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    if (*check_cmd) return cmd_check(check, std::cin, std::cout, std::cerr);
    if (*fact_cmd) return cmd_factorize(factorize, std::cin, std::cout, std::cerr);
    if (*trace_cmd) return cmd_trace(trace, std::cin, std::cout, std::cerr);
    if (*oracle_cmd) return cmd_oracle(oracle, std::cin, std::cout, std::cerr);
    if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cin, std::cout, std::cerr);
    return usage;
}
