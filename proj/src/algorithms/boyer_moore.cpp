#include "probe.hpp"

#include <algorithm>
#include <vector>

// Boyer-Moore, Horspool and Sunday Quick Search over byte-range text. Tables
// are indexed by code point value, so every caller must have passed the
// charset gate first.
namespace scout {
namespace detail {
namespace {

using Pos = std::ptrdiff_t;

// Bad-character shifts shared by Boyer-Moore and Horspool: the distance from
// the last occurrence of c in pattern[0 .. m-2] to the end of the pattern.
template <class Probe>
void build_last_occurrence_table(std::u32string_view pattern, BadCharTable& table, const Probe& probe) {
    const std::size_t m = pattern.size();
    for (auto& s : table.shift) {
        s = std::max<std::size_t>(m, 1);
    }
    probe.touch(kAlphabetSize);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const char32_t c = probe.read(pattern, i);
        table.shift[c] = m - i - 1;
        probe.touch();
    }
}

// suff[i] is the length of the longest common suffix of pattern[0..i] and
// the whole pattern.
template <class Probe>
std::vector<Pos> suffixes(std::u32string_view pattern, const Probe& probe) {
    const Pos m = static_cast<Pos>(pattern.size());
    std::vector<Pos> suff(pattern.size());
    suff[m - 1] = m;
    probe.touch();
    Pos g = m - 1;
    Pos f = 0;
    for (Pos i = m - 2; i >= 0; --i) {
        if (i > g) {
            probe.touch();
            if (suff[i + m - 1 - f] < i - g) {
                probe.touch(2);
                suff[i] = suff[i + m - 1 - f];
                continue;
            }
        }
        if (i < g) {
            g = i;
        }
        f = i;
        while (g >= 0 && probe.eq(probe.read(pattern, static_cast<std::size_t>(g)),
                                  probe.read(pattern, static_cast<std::size_t>(g + m - 1 - f)))) {
            --g;
        }
        suff[i] = f - g;
        probe.touch();
    }
    return suff;
}

template <class Probe>
std::vector<Pos> good_suffix_table(std::u32string_view pattern, const Probe& probe) {
    const Pos m = static_cast<Pos>(pattern.size());
    const std::vector<Pos> suff = suffixes(pattern, probe);
    std::vector<Pos> shift(pattern.size(), m);
    probe.touch(pattern.size());

    Pos j = 0;
    for (Pos i = m - 1; i >= 0; --i) {
        probe.touch();
        if (suff[i] == i + 1) {
            for (; j < m - 1 - i; ++j) {
                probe.touch();
                if (shift[j] == m) {
                    shift[j] = m - 1 - i;
                    probe.touch();
                }
            }
        }
    }
    for (Pos i = 0; i <= m - 2; ++i) {
        probe.touch(2);
        shift[m - 1 - suff[i]] = m - 1 - i;
    }
    return shift;
}

template <class Probe>
Index boyer_moore(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    BadCharTable bad_char;
    build_last_occurrence_table(pattern, bad_char, probe);
    const std::vector<Pos> good_suffix = good_suffix_table(pattern, probe);

    Pos j = 0;
    while (j <= n - m) {
        Pos i = m - 1;
        char32_t tc = 0;
        while (i >= 0) {
            const char32_t pc = probe.read(pattern, static_cast<std::size_t>(i));
            tc = probe.read(target, static_cast<std::size_t>(i + j));
            if (!probe.eq(pc, tc)) {
                break;
            }
            --i;
        }
        if (i < 0) {
            return static_cast<std::size_t>(j);
        }
        probe.touch(2);
        const Pos bc_shift = static_cast<Pos>(bad_char.shift[tc]) - m + 1 + i;
        j += std::max(good_suffix[i], bc_shift);
    }
    return std::nullopt;
}

template <class Probe>
Index horspool(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    BadCharTable table;
    build_last_occurrence_table(pattern, table, probe);

    std::size_t j = 0;
    while (j <= n - m) {
        const char32_t c = probe.read(target, j + m - 1);
        if (probe.eq(probe.read(pattern, m - 1), c)) {
            std::size_t i = 0;
            while (i + 1 < m && probe.eq(probe.read(pattern, i), probe.read(target, j + i))) {
                ++i;
            }
            if (i + 1 == m) {
                return j;
            }
        }
        probe.touch();
        j += table.shift[c];
    }
    return std::nullopt;
}

template <class Probe>
Index sunday_quick(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    BadCharTable table;
    build_sunday_table(pattern, table, probe);

    std::size_t j = 0;
    while (j <= n - m) {
        std::size_t i = 0;
        while (i < m && probe.eq(probe.read(pattern, i), probe.read(target, j + i))) {
            ++i;
        }
        if (i == m) {
            return j;
        }
        if (j + m >= n) {
            break;
        }
        const char32_t past = probe.read(target, j + m);
        probe.touch();
        j += table.shift[past];
    }
    return std::nullopt;
}

} // namespace

Index boyer_moore_fast(std::u32string_view target, std::u32string_view pattern) {
    return boyer_moore(target, pattern, FastProbe{});
}
Index horspool_fast(std::u32string_view target, std::u32string_view pattern) {
    return horspool(target, pattern, FastProbe{});
}
Index sunday_quick_fast(std::u32string_view target, std::u32string_view pattern) {
    return sunday_quick(target, pattern, FastProbe{});
}

} // namespace detail

BadCharTable compute_bad_char_table(const CodePointText& pattern, ShiftRule rule, Metrics& metrics) {
    for (char32_t c : pattern.view()) {
        if (c >= kAlphabetSize) {
            const AlgorithmId id = rule == ShiftRule::BoyerMoore ? AlgorithmId::BoyerMoore
                                   : rule == ShiftRule::Horspool ? AlgorithmId::Horspool
                                                                 : AlgorithmId::SundayQuick;
            throw UnsupportedCharsetError(id, c);
        }
    }
    BadCharTable table;
    const detail::CountingProbe probe(metrics);
    if (rule == ShiftRule::Sunday) {
        detail::build_sunday_table(pattern.view(), table, probe);
    } else {
        detail::build_last_occurrence_table(pattern.view(), table, probe);
    }
    return table;
}

BadCharTable compute_bad_char_table(const CodePointText& pattern, ShiftRule rule) {
    Metrics scratch;
    return compute_bad_char_table(pattern, rule, scratch);
}

MatchResult boyer_moore_search(const CodePointText& target, const CodePointText& pattern) {
    check_charset(AlgorithmId::BoyerMoore, target, pattern);
    MatchResult result;
    result.index = detail::boyer_moore(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

MatchResult horspool_search(const CodePointText& target, const CodePointText& pattern) {
    check_charset(AlgorithmId::Horspool, target, pattern);
    MatchResult result;
    result.index = detail::horspool(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

MatchResult sunday_quick_search(const CodePointText& target, const CodePointText& pattern) {
    check_charset(AlgorithmId::SundayQuick, target, pattern);
    MatchResult result;
    result.index = detail::sunday_quick(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

} // namespace scout
