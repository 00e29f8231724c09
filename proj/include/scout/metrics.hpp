#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

namespace scout {

/// Per-invocation operation counters. Owned by the caller; never shared.
struct Metrics {
    std::uint64_t comparisons = 0;    ///< character-vs-character equality tests
    std::uint64_t memory_lookups = 0; ///< indexed reads/writes of text or auxiliary arrays
    std::uint64_t heavy_arith = 0;    ///< multiplications, divisions and modulo operations

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Counters saturate instead of wrapping.
inline void saturating_add(std::uint64_t& counter, std::uint64_t amount = 1) noexcept {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    counter = (max - counter < amount) ? max : counter + amount;
}

/**
 * Reads characters out of a text and charges one memory lookup per read.
 *
 * Out-of-range reads are programming errors in the calling algorithm and
 * throw std::out_of_range, which the fuzzer surfaces as a failure.
 */
class InstrumentedReader {
public:
    InstrumentedReader(std::u32string_view text, Metrics& metrics) noexcept
        : text_(text), metrics_(&metrics) {}

    char32_t read(std::size_t i) const;

    std::size_t size() const noexcept { return text_.size(); }

private:
    std::u32string_view text_;
    Metrics* metrics_;
};

/// Returns a == b and charges one comparison.
inline bool count_comparison(Metrics& metrics, char32_t a, char32_t b) noexcept {
    saturating_add(metrics.comparisons);
    return a == b;
}

inline void count_heavy(Metrics& metrics, std::uint64_t ops = 1) noexcept {
    saturating_add(metrics.heavy_arith, ops);
}

/// Charges auxiliary-array accesses (shift tables, failure functions, twin tables).
inline void count_lookup(Metrics& metrics, std::uint64_t accesses = 1) noexcept {
    saturating_add(metrics.memory_lookups, accesses);
}

} // namespace scout
