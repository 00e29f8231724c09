#include "probe.hpp"

namespace scout {
namespace detail {
namespace {

template <class Probe>
Index brute_force(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();
    if (m > n) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i <= n - m; ++i) {
        std::size_t j = 0;
        while (j < m && probe.eq(probe.read(pattern, j), probe.read(target, i + j))) {
            ++j;
        }
        if (j == m) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace

Index brute_force_fast(std::u32string_view target, std::u32string_view pattern) {
    return brute_force(target, pattern, FastProbe{});
}

} // namespace detail

MatchResult brute_force_search(const CodePointText& target, const CodePointText& pattern) {
    MatchResult result;
    result.index = detail::brute_force(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

} // namespace scout
