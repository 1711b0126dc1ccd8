#include "morphic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>

#include "morphic/generate.hpp"
#include "morphic/oracle.hpp"

namespace morphic::cli {

using nlohmann::json;

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::size_t> letters_by_symbol(const Word& w) {
    std::vector<std::size_t> order(w.alphabet_size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return w.symbol(static_cast<Letter>(a)) < w.symbol(static_cast<Letter>(b)); });
    return order;
}

std::vector<Letter> segment(const Word& w, std::size_t from, std::size_t to) {
    const auto l = w.letters();
    return {l.begin() + static_cast<std::ptrdiff_t>(from), l.begin() + static_cast<std::ptrdiff_t>(to)};
}

// Reads the word argument, falling back to the first input line.
std::optional<Word> read_word(const WordArgs& args, std::istream& in, std::ostream& err, int& code) {
    std::string text;
    if (args.word) {
        text = *args.word;
    } else if (!std::getline(in, text) && in.bad()) {
        err << "error: cannot read input\n";
        code = io_error;
        return std::nullopt;
    }
    strip_cr(text);
    try {
        return parse_word(text, args.tokens);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        code = io_error;
        return std::nullopt;
    }
}

}  // namespace

Word parse_word(std::string_view line, bool tokens) {
    return tokens ? Word::from_tokens(line) : Word::from_utf8(line);
}

std::string format_morphism(const Word& w, const Morphism& f, bool tokens) {
    std::string out;
    for (std::size_t a : letters_by_symbol(w)) {
        if (!out.empty()) out += ", ";
        const auto img = f(static_cast<Letter>(a));
        out += w.symbol(static_cast<Letter>(a));
        out += "↦";
        out += img.empty() ? std::string("ε") : w.render(img, separator(tokens));
    }
    return out;
}

std::string format_factors(const Word& w, const std::vector<std::size_t>& cuts, bool tokens) {
    std::string out;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (i > 1) out += tokens ? " | " : "|";
        out += w.render(segment(w, cuts[i - 1], cuts[i]), separator(tokens));
    }
    return out;
}

json final_block(const Word& w, const FactorizationResult& r, bool tokens) {
    json images = json::object();
    for (Letter a = 0; a < w.alphabet_size(); ++a)
        images[w.symbol(a)] = w.render(r.morphism(a), separator(tokens));
    json expanding = json::array();
    std::vector<std::string> e;
    for (Letter a : r.morphism.expanding) e.push_back(w.symbol(a));
    std::sort(e.begin(), e.end());
    for (auto& s : e) expanding.push_back(s);
    json factors = json::array();
    for (std::size_t i = 1; i < r.factor_cuts.size(); ++i)
        factors.push_back(w.render(segment(w, r.factor_cuts[i - 1], r.factor_cuts[i]), separator(tokens)));
    return json{{"primitive", r.primitive},
                {"expanding", expanding},
                {"images", images},
                {"factor_cuts", r.factor_cuts},
                {"factors", factors}};
}

static json counters_json(const RoundCounters& c) {
    return json{{"positions_scanned", c.positions_scanned},
                {"neighborhood_visits", c.neighborhood_visits},
                {"edges_added", c.edges_added},
                {"recompress_cells", c.recompress_cells},
                {"cuts_flagged", c.cuts_flagged}};
}

json trace_document(const Word& w, const FactorizationResult& r, bool tokens) {
    json rounds = json::array();
    for (const auto& rec : r.trace) {
        rounds.push_back(json{{"round", rec.round},
                              {"letter", w.symbol(rec.letter)},
                              {"neighborhood",
                               {{"left", rec.neighborhood.left_len}, {"right", rec.neighborhood.right_len}}},
                              {"L", rec.left_cuts},
                              {"R", rec.right_cuts},
                              {"counters", counters_json(rec.counters)}});
    }
    json counters = counters_json(r.totals());
    counters["condition_checks"] = r.condition_checks;
    return json{{"word", w.str(separator(tokens))},
                {"length", w.size()},
                {"rounds", rounds},
                {"final", final_block(w, r, tokens)},
                {"counters", counters}};
}

int cmd_check(const CheckArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines = args.words;
    if (lines.empty()) {
        std::ifstream file;
        std::istream* src = &in;
        if (args.input_file) {
            file.open(*args.input_file);
            if (!file) {
                err << "error: cannot open " << *args.input_file << '\n';
                return io_error;
            }
            src = &file;
        }
        for (std::string line; std::getline(*src, line);) {
            strip_cr(line);
            lines.push_back(std::move(line));
        }
        if (src->bad()) {
            err << "error: cannot read input\n";
            return io_error;
        }
    }

    // Worker pool over contiguous chunks; results are written by index so
    // output order matches input order.
    std::vector<std::optional<bool>> verdicts(lines.size());
    std::vector<std::string> errors(lines.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                verdicts[i] = run(parse_word(lines[i], args.tokens)).primitive;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(args.jobs, 1, std::max<std::size_t>(1, lines.size()));
    if (jobs == 1) {
        work(0, lines.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (lines.size() + jobs - 1) / jobs;
        for (std::size_t b = 0; b < lines.size(); b += chunk)
            pool.emplace_back(work, b, std::min(lines.size(), b + chunk));
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!verdicts[i]) {
            err << "error: line " << i + 1 << ": " << errors[i] << '\n';
            return io_error;
        }
        out << lines[i] << '\t' << (*verdicts[i] ? "primitive" : "imprimitive") << '\n';
    }
    return ok;
}

int cmd_factorize(const WordArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = ok;
    auto w = read_word(args, in, err, code);
    if (!w) return code;
    const auto r = run(*w);
    if (args.json) {
        out << final_block(*w, r, args.tokens).dump(2) << '\n';
        return ok;
    }
    out << (r.primitive ? "primitive" : "imprimitive") << '\n';
    out << format_morphism(*w, r.morphism, args.tokens) << '\n';
    out << format_factors(*w, r.factor_cuts, args.tokens) << '\n';
    return ok;
}

int cmd_trace(const WordArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = ok;
    auto w = read_word(args, in, err, code);
    if (!w) return code;
    out << trace_document(*w, run(*w), args.tokens).dump(2) << '\n';
    return ok;
}

int cmd_oracle(const OracleArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = ok;
    auto w = read_word(args.word, in, err, code);
    if (!w) return code;
    oracle::MinExpanding res;
    try {
        res = oracle::min_expanding(*w, {args.max_len, args.force});
    } catch (const oracle::GuardError& e) {
        err << "error: " << e.what() << " (use --max-len or --force)\n";
        return guard_refusal;
    }
    const bool tokens = args.word.tokens;
    out << w->str(separator(tokens)) << '\t' << (res.proper ? "imprimitive" : "primitive") << '\n';
    out << "min_expanding\t" << res.size << '\n';
    if (res.witness) {
        std::vector<std::string> e;
        for (Letter a : res.witness->expanding) e.push_back(w->symbol(a));
        std::sort(e.begin(), e.end());
        out << "witness\t{";
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
        out << "}\n";
        out << "factorization\t" << format_factors(*w, res.witness->cuts, tokens) << '\n';
    }
    return ok;
}

std::vector<std::vector<std::string>> generate_corpus(const CorpusArgs& args, bool& tokens) {
    std::vector<std::vector<std::string>> words;
    if (args.family) {
        if (*args.family != "wn") throw std::invalid_argument("unknown family: " + *args.family);
        if (args.n == 0) throw std::invalid_argument("--n must be >= 1");
        words.push_back(wn_word(args.n));
        tokens = pool_needs_tokens(args.n);
    } else if (args.random) {
        if (args.alphabet == 0) throw std::invalid_argument("--alphabet must be >= 1");
        for (std::size_t i = 0; i < args.count; ++i)
            words.push_back(random_word(args.length, args.alphabet, args.seed + i));
        tokens = pool_needs_tokens(args.alphabet);
    } else {
        throw std::invalid_argument("one of --family or --random is required");
    }
    return words;
}

int cmd_gen(const CorpusArgs& args, std::ostream& out, std::ostream& err) {
    bool tokens = false;
    std::vector<std::vector<std::string>> words;
    try {
        words = generate_corpus(args, tokens);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) out << (tokens && i ? " " : "") << w[i];
        out << '\n';
    }
    return ok;
}

int cmd_bench(const BenchArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Word> words;
    if (args.corpus.family || args.corpus.random) {
        bool tokens = false;
        try {
            for (const auto& syms : generate_corpus(args.corpus, tokens)) words.push_back(Word::intern(syms));
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return usage;
        }
    } else {
        std::ifstream file;
        std::istream* src = &in;
        if (args.file) {
            file.open(*args.file);
            if (!file) {
                err << "error: cannot open " << *args.file << '\n';
                return io_error;
            }
            src = &file;
        }
        for (std::string line; std::getline(*src, line);) {
            strip_cr(line);
            try {
                words.push_back(parse_word(line, args.tokens));
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return io_error;
            }
        }
        if (src->bad()) {
            err << "error: cannot read input\n";
            return io_error;
        }
    }

    if (args.csv) out << "n,m,E,rounds,scanned,edges,nanoseconds\n";
    else
        out << std::setw(10) << "n" << std::setw(8) << "m" << std::setw(8) << "E" << std::setw(8) << "rounds"
            << std::setw(14) << "scanned" << std::setw(12) << "edges" << std::setw(14) << "ns" << '\n';
    for (const auto& w : words) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = run(w);
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
        const auto t = r.totals();
        if (args.csv) {
            out << w.size() << ',' << w.alphabet_size() << ',' << r.morphism.expanding.size() << ',' << r.rounds
                << ',' << t.positions_scanned << ',' << t.edges_added << ',' << ns << '\n';
        } else {
            out << std::setw(10) << w.size() << std::setw(8) << w.alphabet_size() << std::setw(8)
                << r.morphism.expanding.size() << std::setw(8) << r.rounds << std::setw(14) << t.positions_scanned
                << std::setw(12) << t.edges_added << std::setw(14) << ns << '\n';
        }
    }
    return ok;
}

}  // namespace morphic::cli
