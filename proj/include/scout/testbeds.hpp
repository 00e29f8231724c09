#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scout/text.hpp"

namespace scout {

struct TestCase {
    CodePointText target;
    CodePointText pattern;
    std::optional<std::size_t> expected_index;
    std::string label;
    std::optional<double> depth_percent; ///< 100 * expected_index / (n - m)
};

struct PatternSpec {
    std::string pattern;   ///< UTF-8, verbatim
    double declared_depth; ///< percent
};

struct CorpusSpec {
    std::filesystem::path corpus_path;
    std::vector<PatternSpec> patterns;
};

/// Raised when a corpus or pattern file cannot be used.
class TestbedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pattern of the synthetic testbeds and the filler around it.
inline constexpr std::string_view kSyntheticPattern = "aabca";
inline constexpr char32_t kFiller = U'x';

/// Largest declared-vs-measured depth difference accepted by load_corpus.
inline constexpr double kDepthTolerance = 0.5;

/// 'x' * p + "aabca" + 'x' * (100 - p) with p = round(depth_percent).
/// Throws std::invalid_argument outside [0, 100].
TestCase gen_depth_testbed(double depth_percent);

/// 'x' * prefix_len + "aabca". Lengths above 10,000 are accepted with a
/// warning on stderr.
TestCase gen_length_testbed(std::size_t prefix_len);

/// Depths 0, 10, ..., 100.
std::vector<TestCase> depth_grid();

/// Prefix lengths 0, 1000, 2000, ..., 10,000.
std::vector<TestCase> length_grid();

/// 100 * index / (n - m); 0 when n == m.
double depth_percent_of(std::size_t index, std::size_t target_len, std::size_t pattern_len) noexcept;

/// Replaces every line break (LF, CR or CRLF) with one space and drops
/// trailing line breaks.
std::string join_lines(std::string_view text);

/**
 * Parses a pattern list. Grammar, one record per line:
 *
 *     record  := depth TAB pattern
 *     depth   := decimal number (percent)
 *     pattern := everything after the first TAB, verbatim
 *
 * Blank lines and lines starting with '#' are ignored.
 */
std::vector<PatternSpec> parse_pattern_list(std::string_view text);

CorpusSpec read_corpus_spec(const std::filesystem::path& corpus_path,
                            const std::filesystem::path& patterns_path);

/// The bundled Hamlet soliloquy and its pattern list.
CorpusSpec default_corpus_spec();

/// One TestCase per listed pattern, in file order. Each pattern must occur
/// exactly once, within kDepthTolerance points of its declared depth;
/// otherwise, or when the corpus cannot be read, throws TestbedError.
std::vector<TestCase> load_corpus(const CorpusSpec& spec);

std::string read_file(const std::filesystem::path& path);

} // namespace scout
