#include "probe.hpp"

#include <cstdio>

namespace scout {

namespace {

struct Entry {
    AlgorithmId id;
    std::string_view name;
    bool byte_restricted;
    MatchResult (*counted)(const CodePointText&, const CodePointText&);
    detail::Index (*fast)(std::u32string_view, std::u32string_view);
};

MatchResult scout_plain(const CodePointText& t, const CodePointText& p) { return scout_search(t, p); }
MatchResult scout_simple_plain(const CodePointText& t, const CodePointText& p) {
    return scout_simple_search(t, p);
}
MatchResult scout_twin_plain(const CodePointText& t, const CodePointText& p) { return scout_twin_search(t, p); }
MatchResult scout_variant_plain(const CodePointText& t, const CodePointText& p) {
    return scout_variant_search(t, p);
}

// Indexed by the enum value.
constexpr Entry kRegistry[] = {
    {AlgorithmId::BruteForce, "brute", false, brute_force_search, detail::brute_force_fast},
    {AlgorithmId::Scout, "scout", false, scout_plain, detail::scout_fast},
    {AlgorithmId::ScoutSimple, "scoutsimple", false, scout_simple_plain, detail::scout_simple_fast},
    {AlgorithmId::ScoutTwin, "scouttwin", false, scout_twin_plain, detail::scout_twin_fast},
    {AlgorithmId::ScoutVariant, "scoutvariant", false, scout_variant_plain, detail::scout_variant_fast},
    {AlgorithmId::ScoutSunday, "scoutsunday", true, scout_sunday_search, detail::scout_sunday_fast},
    {AlgorithmId::RollingSum, "rollingsum", false, rolling_sum_search, detail::rolling_sum_fast},
    {AlgorithmId::RollingXor, "rollingxor", false, rolling_xor_search, detail::rolling_xor_fast},
    {AlgorithmId::KarpRabin, "karprabin", true, karp_rabin_search, detail::karp_rabin_fast},
    {AlgorithmId::Kmp, "kmp", false, kmp_search, detail::kmp_fast},
    {AlgorithmId::BoyerMoore, "boyermoore", true, boyer_moore_search, detail::boyer_moore_fast},
    {AlgorithmId::Horspool, "horspool", true, horspool_search, detail::horspool_fast},
    {AlgorithmId::SundayQuick, "sunday", true, sunday_quick_search, detail::sunday_quick_fast},
};

static_assert(std::size(kRegistry) == kAllAlgorithms.size());

const Entry& entry(AlgorithmId id) noexcept {
    return kRegistry[static_cast<std::size_t>(id)];
}

std::string charset_message(AlgorithmId id, char32_t cp) {
    char hex[16];
    std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
    return "unsupported character set: " + std::string(algorithm_name(id)) +
           " only handles code points below 256, found " + hex;
}

} // namespace

UnsupportedCharsetError::UnsupportedCharsetError(AlgorithmId id, char32_t offending)
    : std::runtime_error(charset_message(id, offending)), algorithm_(id), code_point_(offending) {}

std::string_view algorithm_name(AlgorithmId id) noexcept {
    return entry(id).name;
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept {
    for (const Entry& e : kRegistry) {
        if (e.name == name) {
            return e.id;
        }
    }
    return std::nullopt;
}

bool is_byte_restricted(AlgorithmId id) noexcept {
    return entry(id).byte_restricted;
}

void check_charset(AlgorithmId id, const CodePointText& target, const CodePointText& pattern) {
    if (!is_byte_restricted(id)) {
        return;
    }
    for (const CodePointText* text : {&pattern, &target}) {
        for (char32_t c : text->view()) {
            if (c >= kAlphabetSize) {
                throw UnsupportedCharsetError(id, c);
            }
        }
    }
}

MatchResult dispatch(AlgorithmId id, const CodePointText& target, const CodePointText& pattern) {
    return entry(id).counted(target, pattern);
}

std::optional<std::size_t> find_unchecked(AlgorithmId id, std::u32string_view target,
                                          std::u32string_view pattern) {
    return entry(id).fast(target, pattern);
}

} // namespace scout
