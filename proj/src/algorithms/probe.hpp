#pragma once

// Access policies shared by the search templates. Each algorithm is written
// once against the probe interface and instantiated twice: with CountingProbe
// for counted runs and with FastProbe for timed runs, where every hook
// compiles down to a plain access.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "scout/algorithms.hpp"
#include "scout/metrics.hpp"

namespace scout::detail {

class CountingProbe {
public:
    explicit CountingProbe(Metrics& metrics, SlideLog* slides = nullptr) noexcept
        : metrics_(metrics), slides_(slides) {}

    char32_t read(std::u32string_view text, std::size_t i) const {
        return InstrumentedReader(text, metrics_).read(i);
    }
    bool eq(char32_t a, char32_t b) const noexcept { return count_comparison(metrics_, a, b); }
    void touch(std::uint64_t accesses = 1) const noexcept { count_lookup(metrics_, accesses); }
    void heavy(std::uint64_t ops = 1) const noexcept { count_heavy(metrics_, ops); }

    void slide(SlideKind kind, std::size_t from, std::size_t to) const {
        if (slides_ != nullptr) {
            slides_->push_back(SlideEvent{kind, from, to});
        }
    }

private:
    Metrics& metrics_;
    SlideLog* slides_;
};

struct FastProbe {
    char32_t read(std::u32string_view text, std::size_t i) const noexcept { return text[i]; }
    bool eq(char32_t a, char32_t b) const noexcept { return a == b; }
    void touch(std::uint64_t = 1) const noexcept {}
    void heavy(std::uint64_t = 1) const noexcept {}
    void slide(SlideKind, std::size_t, std::size_t) const noexcept {}
};

using Index = std::optional<std::size_t>;

// Uninstrumented entry points, one per algorithm (defined next to each
// counted implementation).
Index brute_force_fast(std::u32string_view target, std::u32string_view pattern);
Index scout_fast(std::u32string_view target, std::u32string_view pattern);
Index scout_simple_fast(std::u32string_view target, std::u32string_view pattern);
Index scout_twin_fast(std::u32string_view target, std::u32string_view pattern);
Index scout_variant_fast(std::u32string_view target, std::u32string_view pattern);
Index scout_sunday_fast(std::u32string_view target, std::u32string_view pattern);
Index rolling_sum_fast(std::u32string_view target, std::u32string_view pattern);
Index rolling_xor_fast(std::u32string_view target, std::u32string_view pattern);
Index karp_rabin_fast(std::u32string_view target, std::u32string_view pattern);
Index kmp_fast(std::u32string_view target, std::u32string_view pattern);
Index boyer_moore_fast(std::u32string_view target, std::u32string_view pattern);
Index horspool_fast(std::u32string_view target, std::u32string_view pattern);
Index sunday_quick_fast(std::u32string_view target, std::u32string_view pattern);

// Sunday bad-character table over a byte-range pattern, shared by Sunday
// Quick Search and Scout Sunday. 256 initialization writes plus one pattern
// read and one table write per pattern character.
template <class Probe>
void build_sunday_table(std::u32string_view pattern, BadCharTable& table, const Probe& probe) {
    const std::size_t m = pattern.size();
    for (auto& s : table.shift) {
        s = m + 1;
    }
    probe.touch(kAlphabetSize);
    for (std::size_t i = 0; i < m; ++i) {
        const char32_t c = probe.read(pattern, i);
        table.shift[c] = m - i;
        probe.touch();
    }
}

} // namespace scout::detail
