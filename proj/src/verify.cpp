#include "scout/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace scout {

namespace {

// Multi-byte code points: Latin-1 supplement, Greek, CJK, and astral symbols.
constexpr char32_t kUnicodePool[] = {U'a', U'b', U'é', U'α', U'β', U'中',
                                     U'文', U'\U0001F600', U'\U0001F30D', U'\U00010348'};

constexpr std::size_t kMaxTarget = 2000;
constexpr std::size_t kMaxPattern = 32;

std::u32string alphabet_of(std::size_t size) {
    std::u32string out;
    if (size == 26) {
        for (char32_t c = U'a'; c <= U'z'; ++c) {
            out.push_back(c);
        }
        return out;
    }
    for (std::size_t i = 0; i < size; ++i) {
        out.push_back(size == 256 ? static_cast<char32_t>(i) : static_cast<char32_t>(U'a' + i));
    }
    return out;
}

std::string show_index(const std::optional<std::size_t>& index) {
    return index ? std::to_string(*index) : std::string("none");
}

nlohmann::json index_json(const std::optional<std::size_t>& index) {
    return index ? nlohmann::json(*index) : nlohmann::json(nullptr);
}

const char* kind_name(SlideKind kind) {
    return kind == SlideKind::Twin ? "twin" : "scout";
}

} // namespace

std::uint64_t FuzzGenerator::below(std::uint64_t bound) {
    return bound == 0 ? 0 : rng_() % bound;
}

std::u32string FuzzGenerator::random_text(std::size_t len, const std::u32string& alphabet) {
    std::u32string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(alphabet[below(alphabet.size())]);
    }
    return out;
}

std::u32string FuzzGenerator::pick_alphabet() {
    switch (below(5)) {
    case 0:
        return alphabet_of(2);
    case 1:
        return alphabet_of(4);
    case 2:
        return alphabet_of(26);
    case 3:
        return alphabet_of(256);
    default:
        return std::u32string(std::begin(kUnicodePool), std::end(kUnicodePool));
    }
}

std::size_t FuzzGenerator::pick_target_length() {
    switch (below(4)) {
    case 0:
        return below(16 + 1);
    case 1:
        return below(64 + 1);
    case 2:
        return below(256 + 1);
    default:
        return below(kMaxTarget + 1);
    }
}

FuzzCase FuzzGenerator::next() {
    const std::u32string alphabet = pick_alphabet();
    const std::size_t n = pick_target_length();
    std::size_t m = below(kMaxPattern + 1);

    std::u32string target;
    std::u32string pattern;
    std::string family;

    switch (below(7)) {
    case 0:
        family = "random";
        target = random_text(n, alphabet);
        pattern = random_text(m, alphabet);
        break;
    case 1:
    case 2: {
        family = "substring";
        target = random_text(n, alphabet);
        m = std::min(m, n);
        const std::size_t at = below(n - m + 1);
        pattern = target.substr(at, m);
        if (!pattern.empty() && below(2) == 0) {
            family = "mutated-substring";
            pattern[below(m)] = alphabet[below(alphabet.size())];
        }
        break;
    }
    case 3:
        family = "prefix";
        target = random_text(n, alphabet);
        pattern = target.substr(0, std::min(m, n));
        break;
    case 4:
        family = "suffix";
        target = random_text(n, alphabet);
        m = std::min(m, n);
        pattern = target.substr(n - m);
        break;
    case 5: {
        family = "periodic";
        const std::u32string period = random_text(1 + below(4), alphabet);
        for (std::size_t i = 0; i < n; ++i) {
            target.push_back(period[i % period.size()]);
        }
        for (std::size_t i = 0; i < m; ++i) {
            pattern.push_back(period[(i + below(2)) % period.size()]);
        }
        if (!target.empty() && below(2) == 0) {
            target[below(n)] = alphabet[below(alphabet.size())];
        }
        break;
    }
    default: {
        family = "single-char";
        const char32_t c = alphabet[below(alphabet.size())];
        target.assign(n, c);
        pattern.assign(m, c);
        if (!pattern.empty() && below(2) == 0) {
            pattern[below(m)] = alphabet[below(alphabet.size())];
        }
        break;
    }
    }
    return FuzzCase{CodePointText(std::move(target)), CodePointText(std::move(pattern)), std::move(family)};
}

std::vector<FuzzCase> fuzz_cases(std::uint64_t seed, std::size_t count) {
    FuzzGenerator gen(seed);
    std::vector<FuzzCase> cases;
    cases.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        cases.push_back(gen.next());
    }
    return cases;
}

namespace {

void all_strings(std::u32string_view alphabet, std::size_t max_len, std::vector<std::u32string>& out) {
    out.emplace_back();
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (char32_t c : alphabet) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
}

} // namespace

std::vector<FuzzCase> exhaustive_cases(std::u32string_view alphabet, std::size_t max_target,
                                       std::size_t max_pattern) {
    std::vector<std::u32string> targets;
    std::vector<std::u32string> patterns;
    all_strings(alphabet, max_target, targets);
    all_strings(alphabet, max_pattern, patterns);

    std::vector<FuzzCase> cases;
    cases.reserve(targets.size() * patterns.size());
    for (const auto& t : targets) {
        for (const auto& p : patterns) {
            cases.push_back(FuzzCase{CodePointText(t), CodePointText(p), "exhaustive"});
        }
    }
    return cases;
}

DifferentialReport differential_check(AlgorithmId id, std::span<const FuzzCase> cases) {
    DifferentialReport report;
    report.algorithm = std::string(algorithm_name(id));
    const bool restricted = is_byte_restricted(id);

    for (const FuzzCase& c : cases) {
        const auto expected = oracle_index_of(c.target.view(), c.pattern.view());
        auto record = [&](std::optional<std::size_t> actual, std::string detail) {
            report.disagreements.push_back(
                Disagreement{c.target.to_utf8(), c.pattern.to_utf8(), expected, actual, std::move(detail)});
        };

        if (restricted && !(c.target.is_byte_range() && c.pattern.is_byte_range())) {
            try {
                (void)dispatch(id, c.target, c.pattern);
                record(std::nullopt, "expected UnsupportedCharsetError for input above U+00FF");
            } catch (const UnsupportedCharsetError&) {
                ++report.gated;
            } catch (const std::exception& e) {
                record(std::nullopt, std::string("wrong exception: ") + e.what());
            }
            continue;
        }

        ++report.checked;
        try {
            const MatchResult counted = dispatch(id, c.target, c.pattern);
            if (counted.index != expected) {
                record(counted.index, "counted path");
                continue;
            }
            const auto fast = find_unchecked(id, c.target.view(), c.pattern.view());
            if (fast != expected) {
                record(fast, "uninstrumented path");
            }
        } catch (const std::exception& e) {
            record(std::nullopt, std::string("exception: ") + e.what());
        }
    }
    return report;
}

DifferentialReport differential_check(std::string name, const Searcher& searcher,
                                      std::span<const FuzzCase> cases) {
    DifferentialReport report;
    report.algorithm = std::move(name);
    for (const FuzzCase& c : cases) {
        ++report.checked;
        const auto expected = oracle_index_of(c.target.view(), c.pattern.view());
        try {
            const auto actual = searcher(c.target, c.pattern);
            if (actual != expected) {
                report.disagreements.push_back(
                    Disagreement{c.target.to_utf8(), c.pattern.to_utf8(), expected, actual, "searcher"});
            }
        } catch (const std::exception& e) {
            report.disagreements.push_back(Disagreement{c.target.to_utf8(), c.pattern.to_utf8(), expected,
                                                        std::nullopt, std::string("exception: ") + e.what()});
        }
    }
    return report;
}

bool logs_slides(AlgorithmId id) noexcept {
    switch (id) {
    case AlgorithmId::Scout:
    case AlgorithmId::ScoutSimple:
    case AlgorithmId::ScoutTwin:
    case AlgorithmId::ScoutVariant:
        return true;
    default:
        return false;
    }
}

SlideVerdict slide_soundness_check(const CodePointText& target, const CodePointText& pattern, AlgorithmId id) {
    SlideVerdict verdict;
    SlideLog log;
    MatchResult result;
    switch (id) {
    case AlgorithmId::Scout:
        result = scout_search(target, pattern, &log);
        break;
    case AlgorithmId::ScoutSimple:
        result = scout_simple_search(target, pattern, &log);
        break;
    case AlgorithmId::ScoutTwin:
        result = scout_twin_search(target, pattern, &log);
        break;
    case AlgorithmId::ScoutVariant:
        result = scout_variant_search(target, pattern, &log);
        break;
    default:
        throw std::invalid_argument(std::string(algorithm_name(id)) + " does not log slides");
    }
    verdict.index = result.index;
    verdict.events = log.size();

    for (const SlideEvent& ev : log) {
        if (ev.kind == SlideKind::Twin) {
            ++verdict.twin_events;
        }
        if (ev.to_alignment <= ev.from_alignment) {
            verdict.pass = false;
            verdict.failing_event = ev;
            verdict.detail = "slide does not move forward";
            return verdict;
        }
        for (std::size_t a = ev.from_alignment + 1; a < ev.to_alignment; ++a) {
            if (matches_at(target.view(), pattern.view(), a)) {
                verdict.pass = false;
                verdict.failing_event = ev;
                verdict.failing_alignment = a;
                verdict.detail = std::string(kind_name(ev.kind)) + " slide skipped a matching alignment";
                return verdict;
            }
        }
    }

    const auto expected = oracle_index_of(target.view(), pattern.view());
    if (result.index != expected) {
        verdict.pass = false;
        verdict.detail = "returned " + show_index(result.index) + ", oracle " + show_index(expected);
    }
    return verdict;
}

SlideSummary slide_soundness_sweep(std::span<const FuzzCase> cases, std::span<const AlgorithmId> algorithms) {
    SlideSummary summary;
    for (AlgorithmId id : algorithms) {
        if (!logs_slides(id)) {
            continue;
        }
        for (const FuzzCase& c : cases) {
            SlideVerdict v = slide_soundness_check(c.target, c.pattern, id);
            ++summary.checked;
            summary.events += v.events;
            summary.twin_events += v.twin_events;
            if (!v.pass) {
                summary.failures.push_back(
                    SlideCounterexample{std::string(algorithm_name(id)), c.target.to_utf8(), c.pattern.to_utf8(),
                                        std::move(v)});
            }
        }
    }
    return summary;
}

bool VerifyReport::ok() const noexcept {
    return slides.ok() &&
           std::all_of(differential.begin(), differential.end(), [](const auto& r) { return r.ok(); });
}

std::string render_text(const VerifyReport& report, std::size_t max_examples) {
    std::ostringstream out;
    out << "seed " << report.seed << ", " << report.fuzz_cases << " fuzz cases, " << report.exhaustive_cases
        << " exhaustive cases\n";
    for (const DifferentialReport& r : report.differential) {
        char line[160];
        std::snprintf(line, sizeof line, "%-13s %-4s checked %zu, gated %zu, disagreements %zu\n",
                      r.algorithm.c_str(), r.ok() ? "ok" : "FAIL", r.checked, r.gated, r.disagreements.size());
        out << line;
        for (std::size_t i = 0; i < std::min(max_examples, r.disagreements.size()); ++i) {
            const Disagreement& d = r.disagreements[i];
            out << "    target=\"" << d.target << "\" pattern=\"" << d.pattern << "\" expected "
                << show_index(d.expected) << ", got " << show_index(d.actual) << " (" << d.detail << ")\n";
        }
    }
    out << "slides " << (report.slides.ok() ? "ok" : "FAIL") << ": " << report.slides.checked << " runs, "
        << report.slides.events << " slides (" << report.slides.twin_events << " twin), "
        << report.slides.failures.size() << " unsound\n";
    for (std::size_t i = 0; i < std::min(max_examples, report.slides.failures.size()); ++i) {
        const SlideCounterexample& f = report.slides.failures[i];
        out << "    " << f.algorithm << " target=\"" << f.target << "\" pattern=\"" << f.pattern << "\": "
            << f.verdict.detail << '\n';
    }
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string render_json(const VerifyReport& report) {
    nlohmann::json doc;
    doc["seed"] = report.seed;
    doc["fuzz_cases"] = report.fuzz_cases;
    doc["exhaustive_cases"] = report.exhaustive_cases;
    doc["ok"] = report.ok();
    doc["algorithms"] = nlohmann::json::array();
    for (const DifferentialReport& r : report.differential) {
        nlohmann::json entry{{"algorithm", r.algorithm},
                             {"checked", r.checked},
                             {"gated", r.gated},
                             {"ok", r.ok()},
                             {"disagreements", nlohmann::json::array()}};
        for (const Disagreement& d : r.disagreements) {
            entry["disagreements"].push_back({{"target", d.target},
                                              {"pattern", d.pattern},
                                              {"expected", index_json(d.expected)},
                                              {"actual", index_json(d.actual)},
                                              {"detail", d.detail}});
        }
        doc["algorithms"].push_back(std::move(entry));
    }
    nlohmann::json slides{{"runs", report.slides.checked},
                          {"events", report.slides.events},
                          {"twin_events", report.slides.twin_events},
                          {"ok", report.slides.ok()},
                          {"failures", nlohmann::json::array()}};
    for (const SlideCounterexample& f : report.slides.failures) {
        nlohmann::json item{{"algorithm", f.algorithm},
                            {"target", f.target},
                            {"pattern", f.pattern},
                            {"detail", f.verdict.detail}};
        if (f.verdict.failing_event) {
            item["from_alignment"] = f.verdict.failing_event->from_alignment;
            item["to_alignment"] = f.verdict.failing_event->to_alignment;
            item["kind"] = kind_name(f.verdict.failing_event->kind);
        }
        if (f.verdict.failing_alignment) {
            item["skipped_match"] = *f.verdict.failing_alignment;
        }
        slides["failures"].push_back(std::move(item));
    }
    doc["slides"] = std::move(slides);
    return doc.dump(2) + "\n";
}

} // namespace scout
