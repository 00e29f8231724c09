#include "probe.hpp"

#include <cstddef>

// The Scout family. Alignments and positions are signed; -1 means "no scout yet".
namespace scout {
namespace detail {
namespace {

using Pos = std::ptrdiff_t;

template <class Probe>
char32_t read_at(std::u32string_view text, Pos i, const Probe& probe) {
    return probe.read(text, static_cast<std::size_t>(i));
}

// True when no target position strictly between `twin_pos` and `scout_origin`
// holds the scout character. Positions from scout_origin up to the scout's
// current position are already known not to hold it (the mismatch and the
// march established that), so a clear gap means every alignment skipped by
// moving the twin onto the scout position would mismatch at the twin.
template <class Probe>
bool twin_gap_clear(std::u32string_view target, Pos twin_pos, Pos scout_origin,
                    char32_t scout_char, const Probe& probe) {
    for (Pos x = twin_pos + 1; x < scout_origin; ++x) {
        if (probe.eq(scout_char, read_at(target, x, probe))) {
            return false;
        }
    }
    return true;
}

enum class TwinOrder { AfterTarget, BeforeTarget };

// Scout and Scout Variant. The two differ only in whether the twin test or
// the target comparison runs first during the sequential phase.
template <class Probe>
Index scout_core(std::u32string_view target, std::u32string_view pattern, TwinOrder order,
                 const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    const Pos last_alignment = n - m;

    Pos align = 0;
    char32_t scout_char = 0;
    Pos scout_pos = -1;    // where the scout last matched the target
    Pos scout_origin = -1; // where the mismatch that produced the scout happened

    while (align <= last_alignment) {
        Pos j = 0;
        bool slid = false;
        char32_t mismatched = 0;

        for (; j < m; ++j) {
            const char32_t pc = read_at(pattern, j, probe);
            // A twin only helps if moving it onto the scout position advances
            // the alignment by more than one.
            const bool twin_candidate = align < scout_pos - j - 1;

            bool twin = false;
            if (order == TwinOrder::AfterTarget) {
                if (!probe.eq(pc, read_at(target, align + j, probe))) {
                    mismatched = pc;
                    break;
                }
                twin = twin_candidate && probe.eq(pc, scout_char);
            } else {
                twin = twin_candidate && probe.eq(pc, scout_char);
                if (!probe.eq(pc, read_at(target, align + j, probe))) {
                    mismatched = pc;
                    break;
                }
            }

            if (twin && twin_gap_clear(target, align + j, scout_origin, scout_char, probe)) {
                const Pos next = scout_pos - j;
                probe.slide(SlideKind::Twin, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
                align = next;
                slid = true;
                break;
            }
        }

        if (slid) {
            continue;
        }
        if (j == m) {
            return static_cast<std::size_t>(align);
        }

        // The mismatched pattern character becomes the scout and marches
        // through the target until it finds itself.
        scout_char = mismatched;
        scout_origin = align + j;
        const Pos limit = last_alignment + j;
        Pos pos = scout_origin + 1;
        while (pos <= limit && !probe.eq(scout_char, read_at(target, pos, probe))) {
            ++pos;
        }
        if (pos > limit) {
            return std::nullopt;
        }
        scout_pos = pos;
        const Pos next = pos - j;
        probe.slide(SlideKind::Scout, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
        align = next;
    }
    return std::nullopt;
}

// Scout Simple: the scout is always the last pattern character and there are
// no twin checks.
template <class Probe>
Index scout_simple(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    const Pos last_alignment = n - m;

    std::optional<char32_t> last_char;
    Pos align = 0;
    while (align <= last_alignment) {
        Pos j = 0;
        while (j < m && probe.eq(read_at(pattern, j, probe), read_at(target, align + j, probe))) {
            ++j;
        }
        if (j == m) {
            return static_cast<std::size_t>(align);
        }

        if (!last_char) {
            last_char = read_at(pattern, m - 1, probe);
        }
        Pos pos = align + m;
        while (pos < n && !probe.eq(*last_char, read_at(target, pos, probe))) {
            ++pos;
        }
        if (pos >= n) {
            return std::nullopt;
        }
        const Pos next = pos - (m - 1);
        probe.slide(SlideKind::Scout, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
        align = next;
    }
    return std::nullopt;
}

// O(m^2) twin preprocessing: for each position, scan from the start of the
// pattern for the first equal character. Both characters are re-read on every
// step, and the table is initialized with m sentinel writes.
template <class Probe>
TwinTable twin_table(std::u32string_view pattern, const Probe& probe) {
    const std::size_t m = pattern.size();
    TwinTable table;
    table.first_occurrence.assign(m, std::nullopt);
    probe.touch(m);
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (probe.eq(probe.read(pattern, j), probe.read(pattern, k))) {
                table.first_occurrence[k] = j;
                probe.touch();
                break;
            }
        }
    }
    return table;
}

// Scout Twin: no twin checks while comparing; after each scout march the twin
// table says immediately whether the scout has a twin to move instead.
template <class Probe>
Index scout_twin(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    const TwinTable twins = twin_table(pattern, probe);
    const Pos last_alignment = n - m;

    Pos align = 0;
    while (align <= last_alignment) {
        Pos j = 0;
        char32_t mismatched = 0;
        for (; j < m; ++j) {
            const char32_t pc = read_at(pattern, j, probe);
            if (!probe.eq(pc, read_at(target, align + j, probe))) {
                mismatched = pc;
                break;
            }
        }
        if (j == m) {
            return static_cast<std::size_t>(align);
        }

        const char32_t scout_char = mismatched;
        const Pos scout_origin = align + j;
        const Pos limit = last_alignment + j;
        Pos pos = scout_origin + 1;
        while (pos <= limit && !probe.eq(scout_char, read_at(target, pos, probe))) {
            ++pos;
        }
        if (pos > limit) {
            return std::nullopt;
        }
        Pos next = pos - j;
        probe.slide(SlideKind::Scout, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
        align = next;

        if (j < 2) {
            continue;
        }
        probe.touch();
        const auto twin = twins.first_occurrence[static_cast<std::size_t>(j)];
        if (!twin || static_cast<Pos>(*twin) >= j - 1) {
            continue;
        }
        const Pos twin_idx = static_cast<Pos>(*twin);
        const Pos twin_pos = align + twin_idx;
        if (probe.eq(scout_char, read_at(target, twin_pos, probe)) &&
            twin_gap_clear(target, twin_pos, scout_origin, scout_char, probe)) {
            next = pos - twin_idx;
            probe.slide(SlideKind::Twin, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
            align = next;
        }
    }
    return std::nullopt;
}

// Scout Sunday: Scout Simple's control flow. On a mismatch, take the Sunday
// shift first, then march the last pattern character from its place in the
// shifted alignment.
template <class Probe>
Index scout_sunday(std::u32string_view target, std::u32string_view pattern, const Probe& probe) {
    const Pos n = static_cast<Pos>(target.size());
    const Pos m = static_cast<Pos>(pattern.size());
    if (m > n) {
        return std::nullopt;
    }
    if (m == 0) {
        return 0;
    }
    BadCharTable table;
    build_sunday_table(pattern, table, probe);
    const Pos last_alignment = n - m;

    std::optional<char32_t> last_char;
    Pos align = 0;
    while (align <= last_alignment) {
        Pos j = 0;
        while (j < m && probe.eq(read_at(pattern, j, probe), read_at(target, align + j, probe))) {
            ++j;
        }
        if (j == m) {
            return static_cast<std::size_t>(align);
        }
        if (align + m >= n) {
            return std::nullopt;
        }

        const char32_t past = read_at(target, align + m, probe);
        probe.touch();
        const Pos shifted = align + static_cast<Pos>(table.shift[past]);
        if (shifted > last_alignment) {
            return std::nullopt;
        }

        if (!last_char) {
            last_char = read_at(pattern, m - 1, probe);
        }
        Pos pos = shifted + m - 1;
        while (pos < n && !probe.eq(*last_char, read_at(target, pos, probe))) {
            ++pos;
        }
        if (pos >= n) {
            return std::nullopt;
        }
        const Pos next = pos - (m - 1);
        probe.slide(SlideKind::Scout, static_cast<std::size_t>(align), static_cast<std::size_t>(next));
        align = next;
    }
    return std::nullopt;
}

} // namespace

Index scout_fast(std::u32string_view target, std::u32string_view pattern) {
    return scout_core(target, pattern, TwinOrder::AfterTarget, FastProbe{});
}
Index scout_variant_fast(std::u32string_view target, std::u32string_view pattern) {
    return scout_core(target, pattern, TwinOrder::BeforeTarget, FastProbe{});
}
Index scout_simple_fast(std::u32string_view target, std::u32string_view pattern) {
    return scout_simple(target, pattern, FastProbe{});
}
Index scout_twin_fast(std::u32string_view target, std::u32string_view pattern) {
    return scout_twin(target, pattern, FastProbe{});
}
Index scout_sunday_fast(std::u32string_view target, std::u32string_view pattern) {
    return scout_sunday(target, pattern, FastProbe{});
}

} // namespace detail

TwinTable compute_twin_table(const CodePointText& pattern, Metrics& metrics) {
    return detail::twin_table(pattern.view(), detail::CountingProbe(metrics));
}

TwinTable compute_twin_table(const CodePointText& pattern) {
    Metrics scratch;
    return compute_twin_table(pattern, scratch);
}

MatchResult scout_search(const CodePointText& target, const CodePointText& pattern, SlideLog* slides) {
    MatchResult result;
    result.index = detail::scout_core(target.view(), pattern.view(), detail::TwinOrder::AfterTarget,
                                      detail::CountingProbe(result.metrics, slides));
    return result;
}

MatchResult scout_variant_search(const CodePointText& target, const CodePointText& pattern,
                                 SlideLog* slides) {
    MatchResult result;
    result.index = detail::scout_core(target.view(), pattern.view(), detail::TwinOrder::BeforeTarget,
                                      detail::CountingProbe(result.metrics, slides));
    return result;
}

MatchResult scout_simple_search(const CodePointText& target, const CodePointText& pattern,
                                SlideLog* slides) {
    MatchResult result;
    result.index =
        detail::scout_simple(target.view(), pattern.view(), detail::CountingProbe(result.metrics, slides));
    return result;
}

MatchResult scout_twin_search(const CodePointText& target, const CodePointText& pattern, SlideLog* slides) {
    MatchResult result;
    result.index =
        detail::scout_twin(target.view(), pattern.view(), detail::CountingProbe(result.metrics, slides));
    return result;
}

MatchResult scout_sunday_search(const CodePointText& target, const CodePointText& pattern) {
    check_charset(AlgorithmId::ScoutSunday, target, pattern);
    MatchResult result;
    result.index = detail::scout_sunday(target.view(), pattern.view(), detail::CountingProbe(result.metrics));
    return result;
}

} // namespace scout
