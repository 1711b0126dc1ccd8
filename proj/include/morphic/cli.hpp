#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "morphic/factorizer.hpp"
#include "morphic/word.hpp"

namespace morphic::cli {

enum ExitCode : int { ok = 0, usage = 1, guard_refusal = 2, io_error = 3 };

/// Parses one input line as a word: UTF-8 symbols, or whitespace tokens.
Word parse_word(std::string_view line, bool tokens);

/// Separator used when rendering symbols back to text.
inline std::string_view separator(bool tokens) { return tokens ? " " : ""; }

/// "a↦ε, b↦aab, ..." with letters sorted by surface symbol.
std::string format_morphism(const Word& w, const Morphism& f, bool tokens);

/// Factors between consecutive cuts, joined by '|'.
std::string format_factors(const Word& w, const std::vector<std::size_t>& cuts, bool tokens);

/// The "final" block: primitive flag, expanding letters, images, factor cuts.
nlohmann::json final_block(const Word& w, const FactorizationResult& r, bool tokens);

/// Round-by-round document. Keys serialize in sorted order and cut arrays are
/// ascending, so dump() output is deterministic.
nlohmann::json trace_document(const Word& w, const FactorizationResult& r, bool tokens);

struct CheckArgs {
    bool tokens = false;
    std::vector<std::string> words;  // read lines from the input stream when empty
    std::optional<std::string> input_file;
    unsigned jobs = 1;
};
int cmd_check(const CheckArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

struct WordArgs {
    bool tokens = false;
    std::optional<std::string> word;  // first input line when absent
    bool json = false;
};
int cmd_factorize(const WordArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_trace(const WordArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

struct OracleArgs {
    WordArgs word;
    std::size_t max_len = 16;
    bool force = false;
};
int cmd_oracle(const OracleArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

struct CorpusArgs {
    std::optional<std::string> family;  // "wn"
    std::size_t n = 0;
    bool random = false;
    std::size_t length = 0;
    std::size_t alphabet = 0;
    std::uint64_t seed = 0;
    std::size_t count = 1;
};

/// Generated corpus; sets tokens when the symbols need separators.
std::vector<std::vector<std::string>> generate_corpus(const CorpusArgs& args, bool& tokens);

int cmd_gen(const CorpusArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
    CorpusArgs corpus;
    std::optional<std::string> file;
    bool tokens = false;
    bool csv = false;
};
int cmd_bench(const BenchArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace morphic::cli
