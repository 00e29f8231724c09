// scoutbench: search, verify and benchmark the exact-match algorithms.
//
// Exit status: 0 success or found, 1 verification failure or not found,
// 2 usage or environment error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scout/algorithms.hpp"
#include "scout/bench.hpp"
#include "scout/testbeds.hpp"
#include "scout/text.hpp"
#include "scout/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

std::string algorithm_tokens() {
    std::string out;
    for (scout::AlgorithmId id : scout::kAllAlgorithms) {
        if (!out.empty()) {
            out += ", ";
        }
        out += scout::algorithm_name(id);
    }
    return out;
}

std::vector<scout::AlgorithmId> parse_algorithm_list(const std::vector<std::string>& names) {
    std::vector<scout::AlgorithmId> ids;
    for (const std::string& name : names) {
        if (name == "all") {
            ids.assign(scout::kAllAlgorithms.begin(), scout::kAllAlgorithms.end());
            continue;
        }
        const auto id = scout::parse_algorithm(name);
        if (!id) {
            throw std::invalid_argument("unknown algorithm '" + name + "' (expected one of: " + algorithm_tokens() + ")");
        }
        ids.push_back(*id);
    }
    return ids;
}

bool write_output(const std::string& path, const std::string& document) {
    if (path.empty() || path == "-") {
        std::cout << document;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << document;
    out.close();
    return static_cast<bool>(out);
}

struct SearchOptions {
    std::string algorithm;
    std::string pattern;
    std::optional<std::string> text;
    std::optional<std::string> file;
    bool strip_newlines = false;
    bool metrics = false;
};

int run_search(const SearchOptions& opt) {
    const auto id = scout::parse_algorithm(opt.algorithm);
    if (!id) {
        std::cerr << "error: unknown algorithm '" << opt.algorithm << "' (expected one of: " << algorithm_tokens()
                  << ")\n";
        return kExitError;
    }
    std::string raw = opt.text ? *opt.text : scout::read_file(*opt.file);
    if (opt.strip_newlines) {
        raw = scout::join_lines(raw);
    }
    const scout::CodePointText target = scout::from_string(raw);
    const scout::CodePointText pattern = scout::from_string(opt.pattern);
    const scout::MatchResult result = scout::dispatch(*id, target, pattern);

    if (result.index) {
        std::cout << *result.index << '\n';
    } else {
        std::cout << "not found\n";
    }
    if (opt.metrics) {
        std::cout << "comparisons " << result.metrics.comparisons << '\n'
                  << "memory_lookups " << result.metrics.memory_lookups << '\n'
                  << "heavy_arith " << result.metrics.heavy_arith << '\n';
    }
    return result.index ? kExitOk : kExitFailure;
}

struct VerifyOptions {
    std::vector<std::string> algorithms{"all"};
    std::uint64_t seed = 42;
    std::size_t cases = 10'000;
    bool exhaustive = false;
    std::string json_path;
    std::string fault;
};

int run_verify(const VerifyOptions& opt) {
    const auto ids = parse_algorithm_list(opt.algorithms);
    const auto fuzz = scout::fuzz_cases(opt.seed, opt.cases);
    std::vector<scout::FuzzCase> exhaustive;
    if (opt.exhaustive) {
        exhaustive = scout::exhaustive_cases(U"ab", 10, 4);
    }

    scout::VerifyReport report;
    report.seed = opt.seed;
    report.fuzz_cases = fuzz.size();
    report.exhaustive_cases = exhaustive.size();
    for (scout::AlgorithmId id : ids) {
        scout::DifferentialReport r = scout::differential_check(id, fuzz);
        const scout::DifferentialReport ex = scout::differential_check(id, exhaustive);
        r.checked += ex.checked;
        r.gated += ex.gated;
        r.disagreements.insert(r.disagreements.end(), ex.disagreements.begin(), ex.disagreements.end());
        report.differential.push_back(std::move(r));
    }
    if (!opt.fault.empty()) {
        // Detector self-test: a searcher that ignores the final alignment.
        const auto id = parse_algorithm_list({opt.fault}).front();
        const scout::Searcher broken = [id](const scout::CodePointText& t, const scout::CodePointText& p) {
            const auto found = scout::find_unchecked(id, t.view(), p.view());
            if (found && *found + p.size() == t.size() && !p.empty()) {
                return std::optional<std::size_t>{};
            }
            return found;
        };
        report.differential.push_back(
            scout::differential_check("broken-" + std::string(scout::algorithm_name(id)), broken, fuzz));
    }
    report.slides = scout::slide_soundness_sweep(fuzz, ids);
    if (opt.exhaustive) {
        const scout::SlideSummary ex = scout::slide_soundness_sweep(exhaustive, ids);
        report.slides.checked += ex.checked;
        report.slides.events += ex.events;
        report.slides.twin_events += ex.twin_events;
        report.slides.failures.insert(report.slides.failures.end(), ex.failures.begin(), ex.failures.end());
    }

    std::cout << scout::render_text(report);
    if (!opt.json_path.empty() && !write_output(opt.json_path, scout::render_json(report))) {
        std::cerr << "error: cannot write " << opt.json_path << '\n';
        return kExitError;
    }
    return report.ok() ? kExitOk : kExitFailure;
}

struct BenchOptions {
    std::string testbed = "depth";
    std::string mode = "timed";
    std::vector<std::string> algorithms{"all"};
    std::optional<std::size_t> iterations;
    std::size_t warmup = scout::kDefaultWarmup;
    std::string output;
    std::string format = "csv";
    std::string corpus;
    std::string patterns;
};

std::optional<scout::CorpusSpec> corpus_override(const std::string& corpus, const std::string& patterns) {
    if (corpus.empty() && patterns.empty()) {
        return std::nullopt;
    }
    const scout::CorpusSpec fallback = scout::default_corpus_spec();
    const std::filesystem::path corpus_path = corpus.empty() ? fallback.corpus_path : std::filesystem::path(corpus);
    if (patterns.empty()) {
        return scout::CorpusSpec{corpus_path, fallback.patterns};
    }
    return scout::read_corpus_spec(corpus_path, patterns);
}

int run_bench(const BenchOptions& opt) {
    const auto testbed = scout::parse_testbed(opt.testbed);
    const auto mode = scout::parse_mode(opt.mode);
    const auto format = scout::parse_format(opt.format);
    if (!testbed || !mode || !format) {
        std::cerr << "error: expected --testbed depth|length|corpus, --mode timed|counted, --format csv|json\n";
        return kExitError;
    }
    scout::BenchConfig config;
    config.algorithms = parse_algorithm_list(opt.algorithms);
    config.testbed = *testbed;
    config.mode = *mode;
    config.iterations = opt.iterations ? *opt.iterations : scout::default_iterations();
    config.warmup_iterations = opt.warmup;
    if (config.iterations == 0) {
        std::cerr << "error: --iterations must be at least 1\n";
        return kExitError;
    }

    // Probe the output path before spending time on measurements.
    if (!opt.output.empty() && opt.output != "-") {
        std::ofstream probe(opt.output, std::ios::binary);
        if (!probe) {
            std::cerr << "error: cannot write " << opt.output << '\n';
            return kExitError;
        }
    }

    const auto cases = scout::testbed_cases(*testbed, corpus_override(opt.corpus, opt.patterns));
    const scout::BenchResult result = scout::run_bench(config, cases);
    const std::string document = scout::emit_report(result.records, *format);

    if (opt.output.empty() || opt.output == "-") {
        std::cout << document;
        std::cerr << scout::render_summary(result, *mode);
    } else {
        if (!write_output(opt.output, document)) {
            std::cerr << "error: cannot write " << opt.output << '\n';
            return kExitError;
        }
        std::cout << scout::render_summary(result, *mode);
        std::cout << result.records.size() << " records written to " << opt.output << '\n';
    }
    return kExitOk;
}

int run_testbed(const std::string& name, const std::string& corpus, const std::string& patterns) {
    const auto testbed = scout::parse_testbed(name);
    if (!testbed) {
        std::cerr << "error: expected depth, length or corpus\n";
        return kExitError;
    }
    for (const scout::TestCase& tc : scout::testbed_cases(*testbed, corpus_override(corpus, patterns))) {
        char depth[32];
        std::snprintf(depth, sizeof depth, "%.2f", tc.depth_percent.value_or(0.0));
        std::cout << tc.label << '\t' << tc.target.size() << '\t' << tc.pattern.size() << '\t'
                  << (tc.expected_index ? std::to_string(*tc.expected_index) : std::string("none")) << '\t' << depth
                  << '\t' << tc.pattern.to_utf8() << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact substring search with instrumented Scout-family and classic algorithms"};
    app.footer("Algorithms: " + algorithm_tokens() +
               "\nExit status: 0 success or found, 1 verification failure or not found, 2 usage or environment "
               "error.\nEnvironment: " +
               std::string(scout::kIterationsEnvVar) + " overrides the default bench iteration count (" +
               std::to_string(scout::kDefaultIterations) + ").");
    app.require_subcommand(1);

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search", "Find the first occurrence of a pattern");
    search_cmd->add_option("algorithm", search.algorithm, "Algorithm token: " + algorithm_tokens())->required();
    search_cmd->add_option("--pattern,-p", search.pattern, "Pattern (UTF-8)")->required();
    auto* text_opt = search_cmd->add_option("--text,-t", search.text, "Inline target text");
    auto* file_opt = search_cmd->add_option("--file,-f", search.file, "Read the target from a file");
    text_opt->excludes(file_opt);
    search_cmd->add_flag("--strip-newlines", search.strip_newlines, "Replace each line break in the target with a space");
    search_cmd->add_flag("--metrics", search.metrics, "Also print comparisons, memory lookups and heavy arithmetic");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Differential and slide-soundness checks against the oracle");
    verify_cmd->add_flag("--all", "Check all algorithms (the default)");
    verify_cmd->add_option("--algorithms,-a", verify.algorithms, "Comma-separated algorithm tokens or 'all'")
        ->delimiter(',');
    verify_cmd->add_option("--seed", verify.seed, "Fuzz seed")->capture_default_str();
    verify_cmd->add_option("--cases", verify.cases, "Number of fuzz cases")->capture_default_str();
    verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Also sweep every pair over {a,b}, n <= 10, m <= 4");
    verify_cmd->add_option("--json", verify.json_path, "Write a JSON report to this path");
    verify_cmd->add_option("--inject-fault", verify.fault)->group("");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Timed or counted runs over a testbed grid");
    bench_cmd->add_option("--testbed", bench.testbed, "depth, length or corpus")->capture_default_str();
    bench_cmd->add_option("--mode", bench.mode, "timed or counted")->capture_default_str();
    bench_cmd->add_option("--algorithms,-a", bench.algorithms, "Comma-separated algorithm tokens or 'all'")
        ->delimiter(',');
    bench_cmd->add_option("--iterations", bench.iterations, "Timed iterations per cell");
    bench_cmd->add_option("--warmup", bench.warmup, "Untimed warmup iterations per cell")->capture_default_str();
    bench_cmd->add_option("--output,-o", bench.output, "Report path ('-' or omitted for standard output)");
    bench_cmd->add_option("--format", bench.format, "csv or json")->capture_default_str();
    bench_cmd->add_option("--corpus", bench.corpus, "Corpus text file for the corpus testbed");
    bench_cmd->add_option("--patterns", bench.patterns, "Pattern list for the corpus testbed");

    std::string testbed_name = "depth";
    std::string testbed_corpus;
    std::string testbed_patterns;
    auto* testbed_cmd = app.add_subcommand("testbed", "Print the cases of a testbed");
    testbed_cmd->add_option("name", testbed_name, "depth, length or corpus")->capture_default_str();
    testbed_cmd->add_option("--corpus", testbed_corpus, "Corpus text file");
    testbed_cmd->add_option("--patterns", testbed_patterns, "Pattern list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*search_cmd) {
            if (!search.text && !search.file) {
                std::cerr << "error: search needs --text or --file\n";
                return kExitError;
            }
            return run_search(search);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
        if (*bench_cmd) {
            return run_bench(bench);
        }
        return run_testbed(testbed_name, testbed_corpus, testbed_patterns);
    } catch (const scout::BenchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
