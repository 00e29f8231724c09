#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <string>

#include "scout/algorithms.hpp"
#include "scout/oracle.hpp"
#include "scout/rolling.hpp"
#include "scout/testbeds.hpp"

using namespace scout;

namespace {

// Independent reference: the standard library's substring search.
std::optional<std::size_t> std_find(std::u32string_view t, std::u32string_view p) {
    const auto at = t.find(p);
    return at == std::u32string_view::npos ? std::nullopt : std::optional<std::size_t>(at);
}

CodePointText T(const char* utf8) {
    return from_string(utf8);
}

const std::string kTwinExample = "aaacbabaaaabcbaabcaabacab";
const std::string kHamletFirst = "To be, or not to be, that is the question";

const TestCase& hamlet_first() {
    static const std::vector<TestCase> cases = load_corpus(default_corpus_spec());
    return cases.front();
}

MatchResult run(AlgorithmId id, const std::string& t, const std::string& p) {
    return dispatch(id, from_string(t), from_string(p));
}

} // namespace

TEST_CASE("algorithm tokens round-trip") {
    const char* tokens[] = {"brute", "scout", "scoutsimple", "scouttwin", "scoutvariant", "scoutsunday", "rollingsum",
                            "rollingxor", "karprabin", "kmp", "boyermoore", "horspool", "sunday"};
    REQUIRE(std::size(tokens) == kAllAlgorithms.size());
    for (std::size_t i = 0; i < kAllAlgorithms.size(); ++i) {
        CHECK(algorithm_name(kAllAlgorithms[i]) == tokens[i]);
        CHECK(parse_algorithm(tokens[i]) == kAllAlgorithms[i]);
    }
    CHECK_FALSE(parse_algorithm("Scout").has_value());
    CHECK_FALSE(parse_algorithm("").has_value());
}

TEST_CASE("brute force counts one comparison and two lookups per character test") {
    const std::string target = "xxxxxaabca" + std::string(95, 'x');
    const MatchResult r = run(AlgorithmId::BruteForce, target, "aabca");
    CHECK(r.index == 5u);
    CHECK(r.metrics.comparisons == 10);
    CHECK(r.metrics.memory_lookups == 20);
    CHECK(r.metrics.heavy_arith == 0);

    CHECK_FALSE(run(AlgorithmId::BruteForce, "abc", "abcd").index.has_value());
}

TEST_CASE("every algorithm finds the twin-slide example occurrence") {
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(algorithm_name(id));
        CHECK(run(id, kTwinExample, "aaba").index == 18u);
    }
}

TEST_CASE("every algorithm agrees on the shared small examples") {
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(algorithm_name(id));
        CHECK(run(id, "xxxxxaabca", "aabca").index == 5u);
        CHECK(run(id, "abc", "b").index == 1u);
        CHECK(run(id, "abc", "").index == 0u);
        CHECK(run(id, "", "").index == 0u);
        CHECK(run(id, "abc", "abc").index == 0u);
        CHECK(run(id, "aaaa", "aaaa").index == 0u);
        CHECK(run(id, "a", "a").index == 0u);
        CHECK_FALSE(run(id, "", "a").index.has_value());
        CHECK_FALSE(run(id, "abc", "d").index.has_value());
        CHECK_FALSE(run(id, "abc", "abcd").index.has_value());
        CHECK_FALSE(run(id, "aaaa", "ab").index.has_value());
        CHECK_FALSE(run(id, "bbbb", "ac").index.has_value());
        CHECK(run(id, "abababc", "ababc").index == 2u);
        CHECK(run(id, "abcabc", "bc").index == 1u);
    }
}

TEST_CASE("Hamlet first row reproduces the reference counters") {
    const TestCase& tc = hamlet_first();
    REQUIRE(tc.pattern.to_utf8() == kHamletFirst);
    REQUIRE(tc.expected_index == 0u);

    struct Row {
        AlgorithmId id;
        std::uint64_t comparisons;
        std::uint64_t lookups;
    };
    const Row exact[] = {
        {AlgorithmId::BruteForce, 41, 82}, {AlgorithmId::Scout, 41, 82},       {AlgorithmId::RollingSum, 41, 164},
        {AlgorithmId::RollingXor, 41, 164}, {AlgorithmId::KarpRabin, 41, 164},
    };
    for (const Row& row : exact) {
        CAPTURE(algorithm_name(row.id));
        const MatchResult r = dispatch(row.id, tc.target, tc.pattern);
        CHECK(r.index == 0u);
        CHECK(r.metrics.comparisons == row.comparisons);
        CHECK(r.metrics.memory_lookups == row.lookups);
    }
    for (AlgorithmId id : {AlgorithmId::ScoutSimple, AlgorithmId::ScoutVariant, AlgorithmId::Horspool,
                           AlgorithmId::SundayQuick}) {
        CAPTURE(algorithm_name(id));
        CHECK(dispatch(id, tc.target, tc.pattern).metrics.comparisons == 41);
    }

    const MatchResult sunday = dispatch(AlgorithmId::SundayQuick, tc.target, tc.pattern);
    CHECK(static_cast<double>(sunday.metrics.memory_lookups) == doctest::Approx(419).epsilon(0.02));

    const MatchResult kmp = dispatch(AlgorithmId::Kmp, tc.target, tc.pattern);
    CHECK(kmp.metrics.comparisons <= 3 * 41);
    CHECK(static_cast<double>(kmp.metrics.comparisons) == doctest::Approx(121).epsilon(0.15));

    const MatchResult twin = dispatch(AlgorithmId::ScoutTwin, tc.target, tc.pattern);
    CHECK(twin.index == 0u);
    CHECK(static_cast<double>(twin.metrics.comparisons) == doctest::Approx(462).epsilon(0.10));
}

TEST_CASE("twin table records the earliest equal predecessor") {
    CHECK(compute_twin_table(T("")).first_occurrence.empty());

    const TwinTable abc = compute_twin_table(T("abc"));
    REQUIRE(abc.first_occurrence.size() == 3);
    for (const auto& e : abc.first_occurrence) {
        CHECK_FALSE(e.has_value());
    }

    const TwinTable aaba = compute_twin_table(T("aaba"));
    REQUIRE(aaba.first_occurrence.size() == 4);
    CHECK_FALSE(aaba.first_occurrence[0].has_value());
    CHECK(aaba.first_occurrence[1] == 0u);
    CHECK_FALSE(aaba.first_occurrence[2].has_value());
    CHECK(aaba.first_occurrence[3] == 0u);

    // Definition scan on random patterns.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::u32string p;
        const std::size_t m = rng() % 12;
        for (std::size_t i = 0; i < m; ++i) {
            p.push_back(U'a' + rng() % 3);
        }
        const TwinTable table = compute_twin_table(CodePointText(p));
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t w = p.find(p[k]);
            CHECK(table.first_occurrence[k] == (w < k ? std::optional<std::size_t>(w) : std::nullopt));
        }
    }
}

TEST_CASE("bad character tables follow each variant's rule") {
    const BadCharTable sunday = compute_bad_char_table(T("aabca"), ShiftRule::Sunday);
    CHECK(sunday.shift['x'] == 6);
    CHECK(sunday.shift['a'] == 1);
    CHECK(sunday.shift['b'] == 3);
    CHECK(sunday.shift['c'] == 2);

    const BadCharTable horspool = compute_bad_char_table(T("ab"), ShiftRule::Horspool);
    CHECK(horspool.shift['a'] == 1);
    CHECK(horspool.shift['b'] == 2);
    CHECK(horspool.shift['z'] == 2);

    CHECK_THROWS_AS(compute_bad_char_table(T("\xCE\xB1"), ShiftRule::Sunday), UnsupportedCharsetError);
}

TEST_CASE("Sunday preprocessing charges 256 initial writes plus per-character work") {
    Metrics m;
    (void)compute_bad_char_table(T("aabca"), ShiftRule::Sunday, m);
    CHECK(m.memory_lookups >= 256 + 5);
    CHECK(m.comparisons == 0);
}

TEST_CASE("byte-restricted algorithms gate code points at or above 256") {
    const std::string alpha = "\xCE\xB1"; // U+03B1
    const std::string e_acute = "\xC3\xA9"; // U+00E9
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(algorithm_name(id));
        if (is_byte_restricted(id)) {
            CHECK_THROWS_AS(run(id, "x" + alpha, "x"), UnsupportedCharsetError);
            CHECK_THROWS_AS(run(id, "x", alpha), UnsupportedCharsetError);
            try {
                run(id, "abc", alpha);
            } catch (const UnsupportedCharsetError& e) {
                CHECK(e.code_point() == 0x3B1);
                CHECK(e.algorithm() == id);
                CHECK(std::string(e.what()).find("unsupported character set") != std::string::npos);
            }
        } else {
            CHECK(run(id, "x" + alpha + "y", alpha + "y").index == 1u);
        }
        CHECK_NOTHROW(run(id, "x" + e_acute, e_acute));
        CHECK(run(id, "x" + e_acute, e_acute).index == 1u);
    }
    const AlgorithmId restricted[] = {AlgorithmId::KarpRabin, AlgorithmId::BoyerMoore, AlgorithmId::Horspool,
                                      AlgorithmId::SundayQuick, AlgorithmId::ScoutSunday};
    for (AlgorithmId id : restricted) {
        CHECK(is_byte_restricted(id));
    }
}

TEST_CASE("rolling sum falls back on the classic collision and XOR does not") {
    const MatchResult sum = run(AlgorithmId::RollingSum, "bbbbbbbb", "ac");
    CHECK_FALSE(sum.index.has_value());
    CHECK(sum.metrics.comparisons == 7);
    CHECK(sum.metrics.heavy_arith == 0);

    const MatchResult x = run(AlgorithmId::RollingXor, "bbbbbbbb", "ac");
    CHECK_FALSE(x.index.has_value());
    CHECK(x.metrics.comparisons == 0);
    CHECK(x.metrics.heavy_arith == 0);
}

TEST_CASE("rolled signatures equal from-scratch signatures, with wrapping") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t w = 1 + rng() % 40;
        std::u32string text;
        for (std::size_t i = 0; i < w + 1 + rng() % 60; ++i) {
            text.push_back(static_cast<char32_t>(rng() % 0x110000 & ~char32_t{0}));
        }
        std::u32string_view view(text);
        rolling::Signature sum = rolling::sum_of(view.substr(0, w));
        rolling::Signature x = rolling::xor_of(view.substr(0, w));
        for (std::size_t i = 1; i + w <= view.size(); ++i) {
            sum = rolling::roll_sum(sum, view[i - 1], view[i + w - 1]);
            x = rolling::roll_xor(x, view[i - 1], view[i + w - 1]);
            REQUIRE(sum == rolling::sum_of(view.substr(i, w)));
            REQUIRE(x == rolling::xor_of(view.substr(i, w)));
        }
    }
    // Subtracting past zero wraps and still restores the true sum.
    const rolling::Signature wrapped = rolling::roll_sum(1, 0x10FFFF, 5);
    CHECK(rolling::roll_sum(wrapped, 5, 0x10FFFF) == 1);
}

TEST_CASE("only Karp-Rabin performs heavy arithmetic") {
    const std::string samples[][2] = {{"xxxxxaabca", "aabca"}, {"abc", "d"}, {"aaaa", "aa"}, {"", "a"}};
    for (AlgorithmId id : kAllAlgorithms) {
        for (const auto& s : samples) {
            const MatchResult r = run(id, s[0], s[1]);
            const bool hashes = !s[1].empty() && s[1].size() <= s[0].size();
            if (id == AlgorithmId::KarpRabin && hashes) {
                CHECK(r.metrics.heavy_arith > 0);
            } else {
                CHECK(r.metrics.heavy_arith == 0);
            }
        }
    }
}

TEST_CASE("Karp-Rabin heavy arithmetic grows by a constant per roll step") {
    // Two targets differing only in length: the extra rolls account for the difference.
    const MatchResult shorter = run(AlgorithmId::KarpRabin, "zzzzzzzzzz", "ab");
    const MatchResult longer = run(AlgorithmId::KarpRabin, "zzzzzzzzzzzz", "ab");
    const MatchResult longest = run(AlgorithmId::KarpRabin, "zzzzzzzzzzzzzz", "ab");
    const auto step = longer.metrics.heavy_arith - shorter.metrics.heavy_arith;
    CHECK(step > 0);
    CHECK(longest.metrics.heavy_arith - longer.metrics.heavy_arith == step);
}

TEST_CASE("counted and uninstrumented paths agree with std::u32string_view::find") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        std::u32string t;
        std::u32string p;
        const std::size_t sigma = 1 + rng() % 4;
        const std::size_t n = rng() % 60;
        for (std::size_t i = 0; i < n; ++i) {
            t.push_back(U'a' + rng() % sigma);
        }
        if (n > 0 && rng() % 2 == 0) {
            const std::size_t at = rng() % n;
            p = t.substr(at, rng() % 8);
        } else {
            for (std::size_t i = 0, m = rng() % 6; i < m; ++i) {
                p.push_back(U'a' + rng() % sigma);
            }
        }
        const auto expected = std_find(t, p);
        const CodePointText tt(t);
        const CodePointText pp(p);
        REQUIRE(oracle_index_of(t, p) == expected);
        for (AlgorithmId id : kAllAlgorithms) {
            CAPTURE(algorithm_name(id));
            const MatchResult r = dispatch(id, tt, pp);
            REQUIRE(r.index == expected);
            REQUIRE(find_unchecked(id, t, p) == expected);
            if (!p.empty()) {
                CHECK(r.metrics.memory_lookups >= r.metrics.comparisons);
            }
        }
    }
}

TEST_CASE("Scout keeps lookups between one and two per comparison") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        std::u32string t;
        std::u32string p;
        for (std::size_t i = 0, n = rng() % 80; i < n; ++i) {
            t.push_back(U'a' + rng() % 3);
        }
        for (std::size_t i = 0, m = 1 + rng() % 6; i < m; ++i) {
            p.push_back(U'a' + rng() % 3);
        }
        const Metrics m = scout_search(CodePointText(t), CodePointText(p)).metrics;
        CHECK(m.comparisons <= m.memory_lookups);
        CHECK(m.memory_lookups <= 2 * m.comparisons);
    }
}

TEST_CASE("Scout handles the counterexample that defeats a gap-blind twin slide") {
    const std::string t = "bbbabaaabaabaaa";
    const std::string p = "aabaaa";
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(algorithm_name(id));
        CHECK(run(id, t, p).index == 9u);
    }
}

TEST_CASE("Scout logs a twin slide on the twin-slide example") {
    SlideLog log;
    const MatchResult r = scout_search(from_string(kTwinExample), T("aaba"), &log);
    CHECK(r.index == 18u);
    std::size_t twins = 0;
    for (const SlideEvent& e : log) {
        CHECK(e.to_alignment > e.from_alignment);
        twins += e.kind == SlideKind::Twin;
    }
    CHECK(twins >= 1);
}

TEST_CASE("Unicode targets are searched by code point") {
    const std::string t = "\xE4\xB8\xAD\xE6\x96\x87\xF0\x9F\x98\x80\xE4\xB8\xAD\xE6\x96\x87!";
    const std::string p = "\xE6\x96\x87!";
    for (AlgorithmId id : kAllAlgorithms) {
        if (is_byte_restricted(id)) {
            continue;
        }
        CAPTURE(algorithm_name(id));
        CHECK(run(id, t, p).index == 4u);
    }
}
