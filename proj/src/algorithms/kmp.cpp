#include "probe.hpp"

#include <vector>

namespace scout {
namespace detail {
namespace {

using Pos = std::ptrdiff_t;

// Optimized failure function: next[i] skips positions whose character equals
// pattern[i], since they would fail again on the same target character.
template <class Probe>
std::vector<Pos> failure_function(std::u32string_view pattern, const Probe& probe) {
    const Pos m = static_cast<Pos>(pattern.size());
    std::vector<Pos> next(pattern.size() + 1);
    next[0] = -1;
    probe.touch();

    const auto at = [&](Pos k) { return probe.read(pattern, static_cast<std::size_t>(k)); };
    Pos i = 0;
    Pos j = -1;
    while (i < m) {
        while (j > -1 && !probe.eq(at(i), at(j))) {
            j = next[j];
            probe.touch();
        }
        ++i;
        ++j;
        if (i < m && probe.eq(at(i), at(j))) {
            next[i] = next[j];
            probe.touch(2);
        } else {
            next[i] = j;
            probe.touch();
        }
    }
    return next;
}

template <class Probe>
Index kmp(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    const std::vector<Pos> next = failure_function(pattern, probe);

    Pos i = 0;
    Pos j = 0;
    while (j < n) {
        while (i > -1 && !probe.eq(probe.read(pattern, static_cast<std::size_t>(i)),
                                   probe.read(target, static_cast<std::size_t>(j)))) {
            i = next[i];
            probe.touch();
        }
        ++i;
        ++j;
        if (i >= m) {
            return static_cast<std::size_t>(j - i);
        }
    }
    return std::nullopt;
}

} // namespace

Index kmp_fast(std::u32string_view target, std::u32string_view pattern) {
    return kmp(target, pattern, FastProbe{});
}

} // namespace detail

MatchResult kmp_search(const CodePointText& target, const CodePointText& pattern) {
    MatchResult result;
    result.index = detail::kmp(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

} // namespace scout
