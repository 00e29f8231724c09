#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scout/metrics.hpp"
#include "scout/text.hpp"

namespace scout {

enum class AlgorithmId : std::uint8_t {
    BruteForce,
    Scout,
    ScoutSimple,
    ScoutTwin,
    ScoutVariant,
    ScoutSunday,
    RollingSum,
    RollingXor,
    KarpRabin,
    Kmp,
    BoyerMoore,
    Horspool,
    SundayQuick,
};

inline constexpr std::array<AlgorithmId, 13> kAllAlgorithms{
    AlgorithmId::BruteForce, AlgorithmId::Scout,      AlgorithmId::ScoutSimple,
    AlgorithmId::ScoutTwin,  AlgorithmId::ScoutVariant, AlgorithmId::ScoutSunday,
    AlgorithmId::RollingSum, AlgorithmId::RollingXor, AlgorithmId::KarpRabin,
    AlgorithmId::Kmp,        AlgorithmId::BoyerMoore, AlgorithmId::Horspool,
    AlgorithmId::SundayQuick,
};

/// Lowercase token used on the command line and in reports ("brute", "scout", ...).
std::string_view algorithm_name(AlgorithmId id) noexcept;
std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept;

/// Algorithms whose tables are keyed by byte value only accept code points < 256.
bool is_byte_restricted(AlgorithmId id) noexcept;

class UnsupportedCharsetError : public std::runtime_error {
public:
    UnsupportedCharsetError(AlgorithmId id, char32_t offending);

    AlgorithmId algorithm() const noexcept { return algorithm_; }
    char32_t code_point() const noexcept { return code_point_; }

private:
    AlgorithmId algorithm_;
    char32_t code_point_;
};

struct MatchResult {
    std::optional<std::size_t> index; ///< first occurrence, if any
    Metrics metrics;
};

enum class SlideKind : std::uint8_t { Scout, Twin };

/// One alignment jump taken by a Scout-family search. Every alignment strictly
/// between `from_alignment` and `to_alignment` was skipped without comparison.
struct SlideEvent {
    SlideKind kind;
    std::size_t from_alignment;
    std::size_t to_alignment;

    friend bool operator==(const SlideEvent&, const SlideEvent&) = default;
};

using SlideLog = std::vector<SlideEvent>;

/// first_occurrence[k] is the earliest w < k with pattern[w] == pattern[k].
struct TwinTable {
    std::vector<std::optional<std::size_t>> first_occurrence;
};

enum class ShiftRule : std::uint8_t { BoyerMoore, Horspool, Sunday };

inline constexpr std::size_t kAlphabetSize = 256;

struct BadCharTable {
    std::array<std::size_t, kAlphabetSize> shift{};
};

// Preprocessing. Every pattern read and table write is charged to `metrics`.
TwinTable compute_twin_table(const CodePointText& pattern, Metrics& metrics);
TwinTable compute_twin_table(const CodePointText& pattern);

/// Throws UnsupportedCharsetError for pattern code points >= 256.
BadCharTable compute_bad_char_table(const CodePointText& pattern, ShiftRule rule, Metrics& metrics);
BadCharTable compute_bad_char_table(const CodePointText& pattern, ShiftRule rule);

// Counted searches. All share one contract: the result holds the first index
// at which `pattern` occurs in `target` (0 for an empty pattern) plus the
// counters accumulated while finding it. Byte-restricted algorithms throw
// UnsupportedCharsetError when either input holds a code point >= 256.
MatchResult brute_force_search(const CodePointText& target, const CodePointText& pattern);
MatchResult scout_search(const CodePointText& target, const CodePointText& pattern,
                         SlideLog* slides = nullptr);
MatchResult scout_simple_search(const CodePointText& target, const CodePointText& pattern,
                                SlideLog* slides = nullptr);
MatchResult scout_twin_search(const CodePointText& target, const CodePointText& pattern,
                              SlideLog* slides = nullptr);
MatchResult scout_variant_search(const CodePointText& target, const CodePointText& pattern,
                                 SlideLog* slides = nullptr);
MatchResult scout_sunday_search(const CodePointText& target, const CodePointText& pattern);
MatchResult rolling_sum_search(const CodePointText& target, const CodePointText& pattern);
MatchResult rolling_xor_search(const CodePointText& target, const CodePointText& pattern);
MatchResult karp_rabin_search(const CodePointText& target, const CodePointText& pattern);
MatchResult kmp_search(const CodePointText& target, const CodePointText& pattern);
MatchResult boyer_moore_search(const CodePointText& target, const CodePointText& pattern);
MatchResult horspool_search(const CodePointText& target, const CodePointText& pattern);
MatchResult sunday_quick_search(const CodePointText& target, const CodePointText& pattern);

/// Counted search through the algorithm named by `id`.
MatchResult dispatch(AlgorithmId id, const CodePointText& target, const CodePointText& pattern);

/// Throws UnsupportedCharsetError if `id` is byte-restricted and either text
/// holds a code point >= 256.
void check_charset(AlgorithmId id, const CodePointText& target, const CodePointText& pattern);

/// Uninstrumented search for timing. Precondition: the inputs already passed
/// check_charset for `id`; this path performs no validation.
std::optional<std::size_t> find_unchecked(AlgorithmId id, std::u32string_view target,
                                          std::u32string_view pattern);

/// Karp-Rabin parameters: hashes are base-256 polynomials modulo a prime below 2^31.
inline constexpr std::uint64_t kKarpRabinBase = 256;
inline constexpr std::uint64_t kKarpRabinModulus = 2147483647;

} // namespace scout
