#include "scout/testbeds.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scout/oracle.hpp"

namespace scout {

namespace {

constexpr std::size_t kDepthSpan = 100;
constexpr std::size_t kLengthSoftCap = 10'000;

std::string format_depth(double depth) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", depth);
    return buf;
}

// Every generated case is re-checked against the oracle before it leaves here.
TestCase finish_case(CodePointText target, CodePointText pattern, std::size_t expected, std::string label) {
    const auto found = oracle_index_of(target.view(), pattern.view());
    if (found != expected) {
        throw std::logic_error("testbed " + label + ": oracle disagrees with the constructed position");
    }
    TestCase tc;
    tc.depth_percent = depth_percent_of(expected, target.size(), pattern.size());
    tc.target = std::move(target);
    tc.pattern = std::move(pattern);
    tc.expected_index = expected;
    tc.label = std::move(label);
    return tc;
}

CodePointText synthetic_target(std::size_t prefix, std::size_t suffix) {
    std::u32string points(prefix, kFiller);
    for (char c : kSyntheticPattern) {
        points.push_back(static_cast<char32_t>(c));
    }
    points.append(suffix, kFiller);
    return CodePointText(std::move(points));
}

std::string_view trim_cr(std::string_view line) {
    while (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

} // namespace

double depth_percent_of(std::size_t index, std::size_t target_len, std::size_t pattern_len) noexcept {
    if (target_len <= pattern_len) {
        return 0.0;
    }
    return 100.0 * static_cast<double>(index) / static_cast<double>(target_len - pattern_len);
}

TestCase gen_depth_testbed(double depth_percent) {
    if (!(depth_percent >= 0.0 && depth_percent <= 100.0)) {
        throw std::invalid_argument("depth must lie in [0, 100], got " + std::to_string(depth_percent));
    }
    const auto prefix = static_cast<std::size_t>(std::lround(depth_percent));
    return finish_case(synthetic_target(prefix, kDepthSpan - prefix), from_string(kSyntheticPattern), prefix,
                       "depth-" + std::to_string(prefix));
}

TestCase gen_length_testbed(std::size_t prefix_len) {
    if (prefix_len > kLengthSoftCap) {
        std::cerr << "warning: length testbed prefix " << prefix_len << " exceeds " << kLengthSoftCap << '\n';
    }
    return finish_case(synthetic_target(prefix_len, 0), from_string(kSyntheticPattern), prefix_len,
                       "length-" + std::to_string(prefix_len));
}

std::vector<TestCase> depth_grid() {
    std::vector<TestCase> cases;
    for (int d = 0; d <= 100; d += 10) {
        cases.push_back(gen_depth_testbed(d));
    }
    return cases;
}

std::vector<TestCase> length_grid() {
    std::vector<TestCase> cases;
    for (std::size_t p = 0; p <= kLengthSoftCap; p += 1000) {
        cases.push_back(gen_length_testbed(p));
    }
    return cases;
}

std::string join_lines(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
                ++i;
            }
            out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<PatternSpec> parse_pattern_list(std::string_view text) {
    std::vector<PatternSpec> specs;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim_cr(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw TestbedError("pattern list line " + std::to_string(line_no) + ": expected <depth><TAB><pattern>");
        }
        const std::string_view depth_text = line.substr(0, tab);
        double depth = 0.0;
        const auto [ptr, ec] = std::from_chars(depth_text.data(), depth_text.data() + depth_text.size(), depth);
        if (ec != std::errc{} || ptr != depth_text.data() + depth_text.size() || depth < 0.0 || depth > 100.0) {
            throw TestbedError("pattern list line " + std::to_string(line_no) + ": bad depth '" +
                               std::string(depth_text) + "'");
        }
        specs.push_back(PatternSpec{std::string(line.substr(tab + 1)), depth});
    }
    return specs;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TestbedError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CorpusSpec read_corpus_spec(const std::filesystem::path& corpus_path, const std::filesystem::path& patterns_path) {
    return CorpusSpec{corpus_path, parse_pattern_list(read_file(patterns_path))};
}

CorpusSpec default_corpus_spec() {
    const std::filesystem::path dir = SCOUT_DATA_DIR;
    return read_corpus_spec(dir / "hamlet.txt", dir / "hamlet_patterns.txt");
}

std::vector<TestCase> load_corpus(const CorpusSpec& spec) {
    CodePointText corpus;
    try {
        corpus = from_string(join_lines(read_file(spec.corpus_path)));
    } catch (const DecodeError& e) {
        throw TestbedError(spec.corpus_path.string() + ": " + e.what());
    }
    const std::string stem = spec.corpus_path.stem().string();

    std::vector<TestCase> cases;
    for (const PatternSpec& ps : spec.patterns) {
        CodePointText pattern = from_string(ps.pattern);
        const auto found = oracle_index_of(corpus.view(), pattern.view());
        if (!found) {
            throw TestbedError("pattern not found in corpus: \"" + ps.pattern + "\"");
        }
        if (!pattern.empty() &&
            oracle_index_of(corpus.view().substr(*found + 1), pattern.view()).has_value()) {
            throw TestbedError("pattern occurs more than once in corpus: \"" + ps.pattern + "\"");
        }
        const double measured = depth_percent_of(*found, corpus.size(), pattern.size());
        if (std::fabs(measured - ps.declared_depth) > kDepthTolerance) {
            throw TestbedError("pattern \"" + ps.pattern + "\" sits at depth " + format_depth(measured) +
                               "%, declared " + format_depth(ps.declared_depth) + "%");
        }
        cases.push_back(finish_case(corpus, std::move(pattern), *found, stem + "@" + format_depth(ps.declared_depth)));
    }
    return cases;
}

} // namespace scout
