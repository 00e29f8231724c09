#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "scout/algorithms.hpp"
#include "scout/oracle.hpp"
#include "scout/text.hpp"

namespace scout {

struct FuzzCase {
    CodePointText target;
    CodePointText pattern;
    std::string family; ///< generator family that produced the case
};

/**
 * Seeded stream of (target, pattern) pairs.
 *
 * Alphabets of size 2, 4, 26 and 256 plus a small pool of multi-byte code
 * points; targets up to 2,000 code points and patterns up to 32. Besides
 * independent random pairs, the stream mixes in patterns cut from the target
 * (prefixes, suffixes, interior slices, mutated slices) and periodic or
 * single-character texts. The draw sequence depends only on the seed.
 */
class FuzzGenerator {
public:
    explicit FuzzGenerator(std::uint64_t seed) : rng_(seed) {}

    FuzzCase next();

private:
    std::uint64_t below(std::uint64_t bound);
    std::u32string random_text(std::size_t len, const std::u32string& alphabet);
    std::u32string pick_alphabet();
    std::size_t pick_target_length();

    std::mt19937_64 rng_;
};

std::vector<FuzzCase> fuzz_cases(std::uint64_t seed, std::size_t count);

/// Every (target, pattern) over `alphabet` with |target| <= max_target and
/// |pattern| <= max_pattern.
std::vector<FuzzCase> exhaustive_cases(std::u32string_view alphabet, std::size_t max_target,
                                       std::size_t max_pattern);

struct Disagreement {
    std::string target;  ///< UTF-8
    std::string pattern; ///< UTF-8
    std::optional<std::size_t> expected;
    std::optional<std::size_t> actual;
    std::string detail; ///< what went wrong, e.g. an exception message
};

struct DifferentialReport {
    std::string algorithm;
    std::size_t checked = 0;
    std::size_t gated = 0; ///< out-of-charset cases that correctly raised UnsupportedCharsetError
    std::vector<Disagreement> disagreements;

    bool ok() const noexcept { return disagreements.empty(); }
};

using Searcher = std::function<std::optional<std::size_t>(const CodePointText&, const CodePointText&)>;

/// Compares the counted and the uninstrumented path of `id` with the oracle
/// on every case. For byte-restricted algorithms, cases outside the byte
/// range must raise UnsupportedCharsetError instead.
DifferentialReport differential_check(AlgorithmId id, std::span<const FuzzCase> cases);

/// Same comparison for an arbitrary searcher (used to sanity-check the detector).
DifferentialReport differential_check(std::string name, const Searcher& searcher,
                                      std::span<const FuzzCase> cases);

struct SlideVerdict {
    bool pass = true;
    std::optional<std::size_t> index;
    std::size_t events = 0;
    std::size_t twin_events = 0;
    std::optional<SlideEvent> failing_event;
    std::optional<std::size_t> failing_alignment; ///< skipped alignment that actually matches
    std::string detail;
};

/// Algorithms that can log their slides.
bool logs_slides(AlgorithmId id) noexcept;

/// Runs a logging Scout-family search and brute-checks every alignment each
/// slide skipped. Also fails if the returned index disagrees with the oracle.
SlideVerdict slide_soundness_check(const CodePointText& target, const CodePointText& pattern,
                                   AlgorithmId id = AlgorithmId::Scout);

struct SlideCounterexample {
    std::string algorithm;
    std::string target;
    std::string pattern;
    SlideVerdict verdict;
};

struct SlideSummary {
    std::size_t checked = 0;
    std::size_t events = 0;
    std::size_t twin_events = 0;
    std::vector<SlideCounterexample> failures;

    bool ok() const noexcept { return failures.empty(); }
};

SlideSummary slide_soundness_sweep(std::span<const FuzzCase> cases, std::span<const AlgorithmId> algorithms);

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t fuzz_cases = 0;
    std::size_t exhaustive_cases = 0;
    std::vector<DifferentialReport> differential;
    SlideSummary slides;

    bool ok() const noexcept;
};

/// Line-oriented summary: one line per algorithm, then slide results and
/// up to `max_examples` counterexamples per algorithm.
std::string render_text(const VerifyReport& report, std::size_t max_examples = 5);

/// JSON document; the schema is documented in docs/formats.md.
std::string render_json(const VerifyReport& report);

} // namespace scout
