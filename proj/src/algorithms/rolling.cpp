#include "probe.hpp"
#include "scout/rolling.hpp"

// Signature-filtered searches: Rolling Sum, Rolling XOR and Karp-Rabin. All
// three fall back to a left-to-right character check when the window
// signature equals the pattern signature. Signature equality itself is an
// integer test and is not counted as a character comparison.
namespace scout {
namespace detail {
namespace {

template <class Probe>
bool verify_window(std::u32string_view target, std::u32string_view pattern, std::size_t at,
                   const Probe& probe) {
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        if (!probe.eq(probe.read(pattern, j), probe.read(target, at + j))) {
            return false;
        }
    }
    return true;
}

enum class Fold { Sum, Xor };

template <class Probe>
Index rolling(std::u32string_view target, std::u32string_view pattern, Fold fold, const Probe& probe) {
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }

    using rolling::Signature;
    Signature pattern_sig = 0;
    Signature window_sig = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const char32_t pc = probe.read(pattern, i);
        const char32_t tc = probe.read(target, i);
        if (fold == Fold::Sum) {
            pattern_sig += pc;
            window_sig += tc;
        } else {
            pattern_sig ^= pc;
            window_sig ^= tc;
        }
    }

    for (std::size_t i = 0; i + m <= n; ++i) {
        if (pattern_sig == window_sig && verify_window(target, pattern, i, probe)) {
            return i;
        }
        if (i + m < n) {
            const char32_t leaving = probe.read(target, i);
            const char32_t entering = probe.read(target, i + m);
            window_sig = fold == Fold::Sum ? rolling::roll_sum(window_sig, leaving, entering)
                                           : rolling::roll_xor(window_sig, leaving, entering);
        }
    }
    return std::nullopt;
}

template <class Probe>
Index karp_rabin(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    constexpr std::uint64_t base = kKarpRabinBase;
    constexpr std::uint64_t q = kKarpRabinModulus;
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }

    // base^(m-1) mod q, the weight of the character leaving the window.
    std::uint64_t lead_weight = 1;
    for (std::size_t i = 1; i < m; ++i) {
        lead_weight = (lead_weight * base) % q;
        probe.heavy(2);
    }

    std::uint64_t pattern_hash = 0;
    std::uint64_t window_hash = 0;
    for (std::size_t i = 0; i < m; ++i) {
        pattern_hash = (pattern_hash * base + probe.read(pattern, i)) % q;
        window_hash = (window_hash * base + probe.read(target, i)) % q;
        probe.heavy(4);
    }

    for (std::size_t i = 0; i + m <= n; ++i) {
        if (pattern_hash == window_hash && verify_window(target, pattern, i, probe)) {
            return i;
        }
        if (i + m < n) {
            const std::uint64_t leaving = probe.read(target, i);
            const std::uint64_t entering = probe.read(target, i + m);
            window_hash = ((window_hash + q - (leaving * lead_weight) % q) * base + entering) % q;
            probe.heavy(4);
        }
    }
    return std::nullopt;
}

} // namespace

Index rolling_sum_fast(std::u32string_view target, std::u32string_view pattern) {
    return rolling(target, pattern, Fold::Sum, FastProbe{});
}
Index rolling_xor_fast(std::u32string_view target, std::u32string_view pattern) {
    return rolling(target, pattern, Fold::Xor, FastProbe{});
}
Index karp_rabin_fast(std::u32string_view target, std::u32string_view pattern) {
    return karp_rabin(target, pattern, FastProbe{});
}

} // namespace detail

MatchResult rolling_sum_search(const CodePointText& target, const CodePointText& pattern) {
    MatchResult result;
    result.index = detail::rolling(target.view(), pattern.view(), detail::Fold::Sum,
                                   detail::CountingProbe(result.metrics));
    return result;
}

MatchResult rolling_xor_search(const CodePointText& target, const CodePointText& pattern) {
    MatchResult result;
    result.index = detail::rolling(target.view(), pattern.view(), detail::Fold::Xor,
                                   detail::CountingProbe(result.metrics));
    return result;
}

MatchResult karp_rabin_search(const CodePointText& target, const CodePointText& pattern) {
    check_charset(AlgorithmId::KarpRabin, target, pattern);
    MatchResult result;
    result.index = detail::karp_rabin(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

} // namespace scout
