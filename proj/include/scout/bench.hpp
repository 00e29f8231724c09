#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scout/algorithms.hpp"
#include "scout/testbeds.hpp"

namespace scout {

enum class Testbed : std::uint8_t { Depth, Length, Corpus };
enum class BenchMode : std::uint8_t { Timed, Counted };
enum class ReportFormat : std::uint8_t { Csv, Json };

inline constexpr std::size_t kDefaultIterations = 10'000;
inline constexpr std::size_t kDefaultWarmup = 1'000;

/// Environment variable that overrides the default timed iteration count.
inline constexpr const char* kIterationsEnvVar = "SCOUT_BENCH_ITERATIONS";

struct BenchConfig {
    std::vector<AlgorithmId> algorithms;
    Testbed testbed = Testbed::Depth;
    std::size_t iterations = kDefaultIterations;
    std::size_t warmup_iterations = kDefaultWarmup;
    BenchMode mode = BenchMode::Timed;
};

struct BenchRecord {
    AlgorithmId algorithm{};
    std::string case_label;
    std::optional<double> depth_percent;
    std::optional<double> mean_time_ns; ///< timed mode only
    std::optional<double> comparisons;  ///< counted mode only
    std::optional<double> memory_lookups;
    std::optional<double> heavy_arith;
    std::size_t iterations = 0;
};

struct BenchSkip {
    AlgorithmId algorithm{};
    std::string case_label;
    std::string reason;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<BenchSkip> skips;
    std::uint64_t sink = 0; ///< folded result indices of every timed call
};

/// Raised when a measured invocation returns the wrong index.
class BenchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cases for the named testbed; corpus uses `corpus` or the bundled Hamlet corpus.
std::vector<TestCase> testbed_cases(Testbed testbed, const std::optional<CorpusSpec>& corpus = std::nullopt);

/// One record per (algorithm, case), algorithm-major. Throws
/// std::invalid_argument when iterations is zero.
BenchResult run_bench(const BenchConfig& config, std::span<const TestCase> cases);

/// CSV or JSON rendering; identical records give identical bytes.
std::string emit_report(std::span<const BenchRecord> records, ReportFormat format);
std::string emit_report(std::span<const BenchRecord> records, std::string_view format);

/// Fixed-width table for terminals: one row per case, one column per algorithm.
std::string render_summary(const BenchResult& result, BenchMode mode);

std::optional<Testbed> parse_testbed(std::string_view name) noexcept;
std::optional<BenchMode> parse_mode(std::string_view name) noexcept;
std::optional<ReportFormat> parse_format(std::string_view name) noexcept;

/// kDefaultIterations unless kIterationsEnvVar holds a positive integer.
/// Throws std::invalid_argument on a malformed value.
std::size_t default_iterations();

} // namespace scout
