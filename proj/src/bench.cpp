#include "scout/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"

namespace scout {

namespace {

std::string format_number(double value) {
    char buf[64];
    if (value == static_cast<double>(static_cast<std::uint64_t>(value)) && value < 1e18) {
        std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(value));
    } else {
        std::snprintf(buf, sizeof buf, "%.3f", value);
    }
    return buf;
}

std::string format_depth(const std::optional<double>& depth) {
    if (!depth) {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *depth);
    return buf;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::pair<const char*, double>> metrics_of(const BenchRecord& r) {
    std::vector<std::pair<const char*, double>> out;
    if (r.mean_time_ns) {
        out.emplace_back("mean_time_ns", *r.mean_time_ns);
    }
    if (r.comparisons) {
        out.emplace_back("comparisons", *r.comparisons);
    }
    if (r.memory_lookups) {
        out.emplace_back("memory_lookups", *r.memory_lookups);
    }
    if (r.heavy_arith) {
        out.emplace_back("heavy_arith", *r.heavy_arith);
    }
    return out;
}

void expect_index(AlgorithmId id, const TestCase& tc, const std::optional<std::size_t>& got) {
    if (got != tc.expected_index) {
        throw BenchError(std::string(algorithm_name(id)) + " on " + tc.label + " returned " +
                         (got ? std::to_string(*got) : std::string("none")) + ", expected " +
                         (tc.expected_index ? std::to_string(*tc.expected_index) : std::string("none")));
    }
}

BenchRecord timed_cell(AlgorithmId id, const TestCase& tc, const BenchConfig& config, std::uint64_t& sink) {
    const std::u32string_view target = tc.target.view();
    const std::u32string_view pattern = tc.pattern.view();
    for (std::size_t i = 0; i < config.warmup_iterations; ++i) {
        const auto got = find_unchecked(id, target, pattern);
        expect_index(id, tc, got);
        sink += got.value_or(0) + 1;
    }
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < config.iterations; ++i) {
        const auto got = find_unchecked(id, target, pattern);
        expect_index(id, tc, got);
        sink += got.value_or(0) + 1;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double total_ns = std::chrono::duration<double, std::nano>(stop - start).count();

    BenchRecord rec;
    rec.algorithm = id;
    rec.case_label = tc.label;
    rec.depth_percent = tc.depth_percent;
    rec.mean_time_ns = total_ns / static_cast<double>(config.iterations);
    rec.iterations = config.iterations;
    return rec;
}

BenchRecord counted_cell(AlgorithmId id, const TestCase& tc) {
    const MatchResult result = dispatch(id, tc.target, tc.pattern);
    expect_index(id, tc, result.index);

    BenchRecord rec;
    rec.algorithm = id;
    rec.case_label = tc.label;
    rec.depth_percent = tc.depth_percent;
    rec.comparisons = static_cast<double>(result.metrics.comparisons);
    rec.memory_lookups = static_cast<double>(result.metrics.memory_lookups);
    rec.heavy_arith = static_cast<double>(result.metrics.heavy_arith);
    rec.iterations = 1;
    return rec;
}

} // namespace

std::vector<TestCase> testbed_cases(Testbed testbed, const std::optional<CorpusSpec>& corpus) {
    switch (testbed) {
    case Testbed::Depth:
        return depth_grid();
    case Testbed::Length:
        return length_grid();
    case Testbed::Corpus:
        return load_corpus(corpus ? *corpus : default_corpus_spec());
    }
    return {};
}

BenchResult run_bench(const BenchConfig& config, std::span<const TestCase> cases) {
    if (config.iterations == 0) {
        throw std::invalid_argument("iterations must be at least 1");
    }
    BenchResult result;
    for (AlgorithmId id : config.algorithms) {
        for (const TestCase& tc : cases) {
            try {
                check_charset(id, tc.target, tc.pattern);
            } catch (const UnsupportedCharsetError& e) {
                result.skips.push_back(BenchSkip{id, tc.label, e.what()});
                continue;
            }
            result.records.push_back(config.mode == BenchMode::Timed ? timed_cell(id, tc, config, result.sink)
                                                                     : counted_cell(id, tc));
        }
    }
    return result;
}

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = "algorithm,case,depth_percent,metric,value,iterations\n";
        for (const BenchRecord& r : records) {
            for (const auto& [metric, value] : metrics_of(r)) {
                out += std::string(algorithm_name(r.algorithm)) + ',' + csv_field(r.case_label) + ',' +
                       format_depth(r.depth_percent) + ',' + metric + ',' + format_number(value) + ',' +
                       std::to_string(r.iterations) + '\n';
            }
        }
        return out;
    }

    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const BenchRecord& r : records) {
        for (const auto& [metric, value] : metrics_of(r)) {
            nlohmann::ordered_json row;
            row["algorithm"] = algorithm_name(r.algorithm);
            row["case"] = r.case_label;
            row["depth_percent"] = r.depth_percent ? nlohmann::ordered_json(*r.depth_percent)
                                                   : nlohmann::ordered_json(nullptr);
            row["metric"] = metric;
            row["value"] = value;
            row["iterations"] = r.iterations;
            doc.push_back(std::move(row));
        }
    }
    return doc.dump(2) + "\n";
}

std::string emit_report(std::span<const BenchRecord> records, std::string_view format) {
    const auto parsed = parse_format(format);
    if (!parsed) {
        throw std::invalid_argument("unknown report format '" + std::string(format) + "' (expected csv or json)");
    }
    return emit_report(records, *parsed);
}

std::string render_summary(const BenchResult& result, BenchMode mode) {
    std::vector<AlgorithmId> algorithms;
    std::vector<std::string> labels;
    std::map<std::pair<std::string, AlgorithmId>, const BenchRecord*> cells;
    for (const BenchRecord& r : result.records) {
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
            algorithms.push_back(r.algorithm);
        }
        if (std::find(labels.begin(), labels.end(), r.case_label) == labels.end()) {
            labels.push_back(r.case_label);
        }
        cells[{r.case_label, r.algorithm}] = &r;
    }

    std::ostringstream out;
    char buf[64];
    out << (mode == BenchMode::Timed ? "mean ns per call" : "comparisons / lookups / heavy") << '\n';
    std::snprintf(buf, sizeof buf, "%-18s", "case");
    out << buf;
    for (AlgorithmId id : algorithms) {
        std::snprintf(buf, sizeof buf, " %20s", std::string(algorithm_name(id)).c_str());
        out << buf;
    }
    out << '\n';
    for (const std::string& label : labels) {
        std::snprintf(buf, sizeof buf, "%-18s", label.c_str());
        out << buf;
        for (AlgorithmId id : algorithms) {
            const auto it = cells.find({label, id});
            std::string cell = "-";
            if (it != cells.end()) {
                const BenchRecord& r = *it->second;
                if (r.mean_time_ns) {
                    std::snprintf(buf, sizeof buf, "%.1f", *r.mean_time_ns);
                    cell = buf;
                } else {
                    cell = format_number(r.comparisons.value_or(0)) + "/" + format_number(r.memory_lookups.value_or(0)) +
                           "/" + format_number(r.heavy_arith.value_or(0));
                }
            }
            std::snprintf(buf, sizeof buf, " %20s", cell.c_str());
            out << buf;
        }
        out << '\n';
    }
    for (const BenchSkip& s : result.skips) {
        out << "skipped " << algorithm_name(s.algorithm) << " on " << s.case_label << ": " << s.reason << '\n';
    }
    if (mode == BenchMode::Timed) {
        out << "checksum " << result.sink << '\n';
    }
    return out.str();
}

std::optional<Testbed> parse_testbed(std::string_view name) noexcept {
    if (name == "depth") {
        return Testbed::Depth;
    }
    if (name == "length") {
        return Testbed::Length;
    }
    if (name == "corpus") {
        return Testbed::Corpus;
    }
    return std::nullopt;
}

std::optional<BenchMode> parse_mode(std::string_view name) noexcept {
    if (name == "timed") {
        return BenchMode::Timed;
    }
    if (name == "counted") {
        return BenchMode::Counted;
    }
    return std::nullopt;
}

std::optional<ReportFormat> parse_format(std::string_view name) noexcept {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    return std::nullopt;
}

std::size_t default_iterations() {
    const char* raw = std::getenv(kIterationsEnvVar);
    if (raw == nullptr || *raw == '\0') {
        return kDefaultIterations;
    }
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw std::invalid_argument(std::string(kIterationsEnvVar) + " must be a positive integer, got '" +
                                    std::string(text) + "'");
    }
    return value;
}

} // namespace scout
