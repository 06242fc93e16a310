#pragma once

// The strict style: two simultaneous voice pairs in integer pitch space, the
// preliminary rules that bound them, the progression rules that sort them into
// inadmissible / bad / good, and the enumeration of all representatives modulo
// translation.

#include <counterpoint/scale.hpp>

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace counterpoint {

/// A progression of two contrapuntal intervals in pitch space Z:
/// cantus c to discantus d, then c' to d'.
struct StrictProgression {
    int c = 0;
    int d = 0;
    int cp = 0;
    int dp = 0;

    int k() const { return d - c; }    // first interval
    int kp() const { return dp - cp; } // second interval

    friend bool operator==(const StrictProgression& a, const StrictProgression& b) {
        return a.c == b.c && a.d == b.d && a.cp == b.cp && a.dp == b.dp;
    }
    friend bool operator<(const StrictProgression& a, const StrictProgression& b) {
        if (a.c != b.c) return a.c < b.c;
        if (a.d != b.d) return a.d < b.d;
        if (a.cp != b.cp) return a.cp < b.cp;
        return a.dp < b.dp;
    }
};

/// Consonances up to the tenth: the admissible values of k and k'.
inline const std::vector<int>& tenth_consonances() {
    static const std::vector<int> ks{0, 3, 4, 7, 8, 9, 12, 15, 16};
    return ks;
}

inline bool is_tenth_consonance(int k) {
    for (int v : tenth_consonances())
        if (v == k) return true;
    return false;
}

/// True iff some translation t in Z_12 puts all four pitch classes inside the
/// scale. This existential reading makes the predicate translation-invariant.
inline bool diatonically_embeddable(const StrictProgression& p,
                                    const Scale& scale = Scale::diatonic()) {
    const int n = scale.modulus();
    for (int t = 0; t < n; ++t)
        if (scale.contains(p.c + t) && scale.contains(p.d + t) && scale.contains(p.cp + t) &&
            scale.contains(p.dp + t))
            return true;
    return false;
}

enum class StrictCategory { inadmissible, bad, good };

enum class StrictKind {
    unison_repetition,
    parallel_fifth,
    parallel_octave,  // parallel eights and unisons
    hidden_fifth,
    hidden_octave,  // hidden eights and unisons
    tritone,
    too_large_skip,
    imperfect_similar_skips,
    hidden_tritone,
    none,
};

inline const char* category_name(StrictCategory c) {
    switch (c) {
        case StrictCategory::inadmissible: return "inadmissible";
        case StrictCategory::bad: return "bad";
        case StrictCategory::good: return "good";
    }
    return "?";
}

inline const char* kind_name(StrictKind k) {
    switch (k) {
        case StrictKind::unison_repetition: return "unison-repetition";
        case StrictKind::parallel_fifth: return "parallel-perfect-5th";
        case StrictKind::parallel_octave: return "parallel-perfect-8/1";
        case StrictKind::hidden_fifth: return "hidden-5th";
        case StrictKind::hidden_octave: return "hidden-8/1";
        case StrictKind::tritone: return "tritone";
        case StrictKind::too_large_skip: return "too-large-skip";
        case StrictKind::imperfect_similar_skips: return "imp-cons-similar-skips";
        case StrictKind::hidden_tritone: return "hidden-tritone";
        case StrictKind::none: return "none";
    }
    return "?";
}

struct RuleLabel {
    StrictCategory category = StrictCategory::good;
    StrictKind kind = StrictKind::none;
};

/// Every progression-rule clause evaluated independently. Clauses overlap (a
/// tritone leap can also be a hidden fifth); the row label resolves overlaps
/// by precedence while the summary counts each clause.
struct StrictRuleFlags {
    bool unison_repetition = false;
    bool parallel_fifth = false;
    bool parallel_octave = false;
    bool hidden_fifth = false;
    bool hidden_octave = false;
    bool tritone = false;
    bool too_large_skip = false;
    bool imperfect_similar_skips = false;
    bool hidden_tritone = false;

    bool any_inadmissible() const {
        return unison_repetition || parallel_fifth || parallel_octave || hidden_fifth ||
               hidden_octave || tritone || too_large_skip;
    }
    bool any_bad() const { return imperfect_similar_skips || hidden_tritone; }
};

inline StrictRuleFlags strict_rule_flags(const StrictProgression& p) {
    const int k = p.k(), kp = p.kp();
    const int mc = p.cp - p.c;        // cantus move
    const int md = p.dp - p.d;        // discantus move
    const bool similar = md * mc > 0; // both voices move, same direction
    const auto imperfect = [](int i) {
        return i == 3 || i == 4 || i == 8 || i == 9 || i == 15 || i == 16;
    };
    const auto mod12_is = [](int v, int want) { return ((v % 12) + 12) % 12 == want; };

    StrictRuleFlags f;
    f.unison_repetition = k == 0 && kp == 0 && p.c == p.cp;
    f.parallel_fifth = k == kp && k == 7 && p.c != p.cp;
    f.parallel_octave = k == kp && (k == 0 || k == 12) && p.c != p.cp;
    f.hidden_fifth = kp == 7 && k != kp && similar;
    f.hidden_octave = (kp == 0 || kp == 12) && k != kp && similar;
    f.tritone = std::abs(mc) == 6 || std::abs(md) == 6;
    // The octave leap counts as a sort of repetition, hence the < 12.
    f.too_large_skip = (7 < std::abs(mc) && std::abs(mc) < 12) ||
                       (7 < std::abs(md) && std::abs(md) < 12);
    f.imperfect_similar_skips = imperfect(kp) && similar && std::abs(mc) > 2 &&
                                std::abs(md) > 2 &&
                                ((5 < std::abs(mc) && std::abs(mc) < 12) ||
                                 (5 < std::abs(md) && std::abs(md) < 12));
    f.hidden_tritone = mod12_is(p.dp - p.c, 6) || mod12_is(p.d - p.cp, 6);
    return f;
}

/// Checks the preliminary rules; throws naming the violated rule.
inline void validate_strict(const StrictProgression& p, const Scale& scale = Scale::diatonic()) {
    if (!is_tenth_consonance(p.k()))
        throw std::invalid_argument("preliminary rule violated: first interval " +
                                    std::to_string(p.k()) +
                                    " is not a consonance up to the tenth");
    if (!is_tenth_consonance(p.kp()))
        throw std::invalid_argument("preliminary rule violated: second interval " +
                                    std::to_string(p.kp()) +
                                    " is not a consonance up to the tenth");
    if (std::abs(p.cp - p.c) > 12)
        throw std::invalid_argument(
            "preliminary rule violated: cantus firmus moves by more than an octave");
    if (std::abs(p.dp - p.d) > 12)
        throw std::invalid_argument(
            "preliminary rule violated: discantus moves by more than an octave");
    if (!diatonically_embeddable(p, scale))
        throw std::invalid_argument(
            "preliminary rule violated: progression is not diatonically embeddable");
}

/// Row label: category by clause groups, kind by first matching clause in
/// table row order (the unison repetition folds into the parallel-8/1 bucket
/// for counting, but keeps its own row label).
inline RuleLabel classify_strict(const StrictProgression& p,
                                 const Scale& scale = Scale::diatonic()) {
    validate_strict(p, scale);
    const StrictRuleFlags f = strict_rule_flags(p);
    if (f.any_inadmissible()) {
        StrictKind kind = f.parallel_fifth         ? StrictKind::parallel_fifth
                          : f.parallel_octave      ? StrictKind::parallel_octave
                          : f.unison_repetition    ? StrictKind::unison_repetition
                          : f.hidden_fifth         ? StrictKind::hidden_fifth
                          : f.hidden_octave        ? StrictKind::hidden_octave
                          : f.tritone              ? StrictKind::tritone
                                                   : StrictKind::too_large_skip;
        return {StrictCategory::inadmissible, kind};
    }
    if (f.any_bad())
        return {StrictCategory::bad, f.imperfect_similar_skips
                                         ? StrictKind::imperfect_similar_skips
                                         : StrictKind::hidden_tritone};
    return {StrictCategory::good, StrictKind::none};
}

/// All representatives modulo translation: c = 0, intervals up to the tenth,
/// voice moves bounded by an octave, diatonically embeddable.
inline std::vector<std::pair<StrictProgression, RuleLabel>> enumerate_strict_representatives(
    const Scale& scale = Scale::diatonic()) {
    std::vector<std::pair<StrictProgression, RuleLabel>> out;
    for (int k : tenth_consonances())
        for (int cp = -12; cp <= 12; ++cp)
            for (int kp : tenth_consonances()) {
                StrictProgression p{0, k, cp, cp + kp};
                if (std::abs(p.dp - p.d) > 12) continue;
                if (!diatonically_embeddable(p, scale)) continue;
                out.emplace_back(p, classify_strict(p, scale));
            }
    return out;
}

/// Aggregate counts over the representative enumeration. Kind counts tally
/// each clause within its category, so a progression may appear under several
/// kinds; the unison repetition is folded into parallel_octaves.
struct StrictSummary {
    int total = 0;
    int inadmissible = 0;
    int bad = 0;
    int good = 0;
    int parallel_fifths = 0;
    int parallel_octaves = 0;
    int hidden_fifths = 0;
    int hidden_octaves = 0;
    int tritones = 0;
    int too_large_skips = 0;
    int imperfect_similar_skips = 0;
    int hidden_tritones = 0;
    bool unison_repetition_folded = true;
};

inline StrictSummary summarize_strict(
    const std::vector<std::pair<StrictProgression, RuleLabel>>& rows) {
    StrictSummary s;
    s.total = static_cast<int>(rows.size());
    for (const auto& [p, label] : rows) {
        const StrictRuleFlags f = strict_rule_flags(p);
        switch (label.category) {
            case StrictCategory::inadmissible:
                ++s.inadmissible;
                s.parallel_fifths += f.parallel_fifth;
                s.parallel_octaves += f.parallel_octave || f.unison_repetition;
                s.hidden_fifths += f.hidden_fifth;
                s.hidden_octaves += f.hidden_octave;
                s.tritones += f.tritone;
                s.too_large_skips += f.too_large_skip;
                break;
            case StrictCategory::bad:
                ++s.bad;
                s.imperfect_similar_skips += f.imperfect_similar_skips;
                s.hidden_tritones += f.hidden_tritone;
                break;
            case StrictCategory::good:
                ++s.good;
                break;
        }
    }
    return s;
}

}  // namespace counterpoint
