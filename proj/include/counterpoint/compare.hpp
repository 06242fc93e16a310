#pragma once

// Cross-tabulation of reduced-style labels against model verdicts, the
// match/mismatch metrics, the per-kind verdict splits, and the recovery of
// rule statements from verdicts alone.

#include <counterpoint/model.hpp>
#include <counterpoint/reduction.hpp>

#include <array>
#include <string>
#include <vector>

namespace counterpoint {

enum class Semantics { original, refined, starred };

inline const char* semantics_name(Semantics s) {
    switch (s) {
        case Semantics::original: return "original";
        case Semantics::refined: return "refined";
        case Semantics::starred: return "starred";
    }
    return "?";
}

inline Semantics parse_semantics(const std::string& s) {
    if (s == "original") return Semantics::original;
    if (s == "refined") return Semantics::refined;
    if (s == "starred") return Semantics::starred;
    throw std::invalid_argument("unknown semantics: " + s);
}

/// Verdicts for every progression of the reduced style, in enumeration order.
struct VerdictTable {
    Variant variant = Variant::classical;
    std::vector<std::pair<ReducedProgression, Verdict>> rows;

    const Verdict& verdict_for(const ReducedProgression& r) const {
        for (const auto& [p, v] : rows)
            if (p.k() == r.k() && p.cp() == r.cp() && p.kp() == r.kp()) return v;
        throw std::invalid_argument("progression not in verdict table");
    }
};

inline VerdictTable compute_verdicts(const ModelEngine& engine, const ReducedStyle& style,
                                     Variant variant) {
    const VariantModel model = build_model(engine, variant);
    VerdictTable out;
    out.variant = variant;
    const Flavor flavor = flavor_of(variant);
    for (const ReducedProgression& r : style.progressions()) {
        DualNumber xi(r.first.base(), r.first.delta(), flavor);
        DualNumber eta(r.second.base(), r.second.delta(), flavor);
        out.rows.emplace_back(r, verdict_with_model(engine, model, xi, eta));
    }
    return out;
}

/// The column label of a progression under a comparison semantics. Starred
/// semantics keeps only the generality-preserving prohibitions (parallel
/// fifths and tritones) as inadmissible*; the remaining inadmissible
/// progressions are re-bucketed into good*.
inline std::string semantic_label(const ReducedStyle& style, const ReducedProgression& r,
                                  Semantics semantics) {
    const ReducedLabel& l = style.label(r);
    switch (semantics) {
        case Semantics::original:
            return category_name(l.category);
        case Semantics::starred: {
            if (l.category == ReducedCategory::bad) return "bad";
            if (l.category == ReducedCategory::inadmissible) {
                const ReducedKindFlags f = style.kind_flags(r);
                if (f.parallel_fifth || f.tritone) return "inadmissible*";
            }
            return "good*";
        }
        case Semantics::refined:
            if (l.category == ReducedCategory::good) return refined_name(l.refined);
            return category_name(l.category);
    }
    return "?";
}

inline const std::vector<std::string>& semantic_columns(Semantics s) {
    static const std::vector<std::string> original{"inadmissible", "bad", "good"};
    static const std::vector<std::string> starred{"inadmissible*", "bad", "good*"};
    static const std::vector<std::string> refined{"inadmissible", "bad", "good-good",
                                                  "good-bad", "ambiguous"};
    switch (s) {
        case Semantics::original: return original;
        case Semantics::starred: return starred;
        case Semantics::refined: return refined;
    }
    return original;
}

inline const std::array<VerdictValue, 3>& verdict_rows() {
    static const std::array<VerdictValue, 3> rows{VerdictValue::allowed, VerdictValue::forbidden,
                                                  VerdictValue::non_polarized};
    return rows;
}

struct CrossTable {
    Variant variant = Variant::classical;
    Semantics semantics = Semantics::original;
    std::vector<std::string> columns;
    std::vector<std::vector<int>> counts;  // [verdict row][column]

    int at(VerdictValue v, const std::string& column) const {
        for (std::size_t row = 0; row < verdict_rows().size(); ++row)
            if (verdict_rows()[row] == v)
                for (std::size_t col = 0; col < columns.size(); ++col)
                    if (columns[col] == column)
                        return counts[row][col];
        throw std::invalid_argument("no cross-table cell (" + std::string(verdict_name(v)) +
                                    ", " + column + ")");
    }
    int row_total(std::size_t row) const {
        int t = 0;
        for (int v : counts[row]) t += v;
        return t;
    }
    int column_total(std::size_t col) const {
        int t = 0;
        for (const auto& row : counts) t += row[col];
        return t;
    }
    int total() const {
        int t = 0;
        for (std::size_t r = 0; r < counts.size(); ++r) t += row_total(r);
        return t;
    }
};

inline CrossTable cross_table(const ReducedStyle& style, const VerdictTable& verdicts,
                              Semantics semantics) {
    CrossTable t;
    t.variant = verdicts.variant;
    t.semantics = semantics;
    t.columns = semantic_columns(semantics);
    t.counts.assign(verdict_rows().size(), std::vector<int>(t.columns.size(), 0));
    for (const auto& [r, verdict] : verdicts.rows) {
        const std::string label = semantic_label(style, r, semantics);
        std::size_t row = 0;
        while (verdict_rows()[row] != verdict.value) ++row;
        for (std::size_t col = 0; col < t.columns.size(); ++col)
            if (t.columns[col] == label) {
                ++t.counts[row][col];
                break;
            }
    }
    return t;
}

struct MatchMetrics {
    int matches = 0;
    int mismatches = 0;
};

/// Matches: forbidden-inadmissible, forbidden-bad, allowed-good(ish).
/// Mismatches: forbidden-good(ish), allowed-inadmissible. "Goodish" follows
/// the semantics: good, good*, or good-good. Pure function of the table.
inline MatchMetrics match_metrics(const CrossTable& t) {
    const std::string inad = t.columns.front();
    const std::string goodish = t.semantics == Semantics::original  ? "good"
                                : t.semantics == Semantics::starred ? "good*"
                                                                    : "good-good";
    MatchMetrics m;
    m.matches = t.at(VerdictValue::forbidden, inad) + t.at(VerdictValue::forbidden, "bad") +
                t.at(VerdictValue::allowed, goodish);
    m.mismatches =
        t.at(VerdictValue::forbidden, goodish) + t.at(VerdictValue::allowed, inad);
    return m;
}

/// Same metrics computed directly from the join, bypassing the table.
inline MatchMetrics match_metrics_direct(const ReducedStyle& style, const VerdictTable& verdicts,
                                         Semantics semantics) {
    MatchMetrics m;
    for (const auto& [r, verdict] : verdicts.rows) {
        const std::string label = semantic_label(style, r, semantics);
        const bool inad = label == "inadmissible" || label == "inadmissible*";
        const bool goodish = semantics == Semantics::original  ? label == "good"
                             : semantics == Semantics::starred ? label == "good*"
                                                               : label == "good-good";
        if (verdict.value == VerdictValue::forbidden && (inad || label == "bad")) ++m.matches;
        if (verdict.value == VerdictValue::allowed && goodish) ++m.matches;
        if (verdict.value == VerdictValue::forbidden && goodish) ++m.mismatches;
        if (verdict.value == VerdictValue::allowed && inad) ++m.mismatches;
    }
    return m;
}

struct KindTableRow {
    std::string kind;
    int allowed = 0;
    int forbidden = 0;
    int non_polarized = 0;
};

/// Per-kind verdict splits over the inadmissible and bad progressions. Rows
/// use the overlapping kind clauses; the lone projected-imperfect progression
/// is reported as its own row.
struct KindTable {
    Variant variant = Variant::classical;
    std::vector<KindTableRow> rows;

    const KindTableRow& row(const std::string& kind) const {
        for (const KindTableRow& r : rows)
            if (r.kind == kind) return r;
        throw std::invalid_argument("no kind row: " + kind);
    }
};

inline KindTable kind_table(const ReducedStyle& style, const VerdictTable& verdicts) {
    KindTable t;
    t.variant = verdicts.variant;
    t.rows = {{kind_name(ReducedKind::parallel_fifth)},
              {kind_name(ReducedKind::parallel_unison)},
              {kind_name(ReducedKind::hidden_fifth_from_sixth)},
              {kind_name(ReducedKind::tritone)},
              {kind_name(ReducedKind::projected_imperfect_similar)},
              {kind_name(ReducedKind::hidden_tritone)}};
    const auto bump = [](KindTableRow& row, VerdictValue v) {
        if (v == VerdictValue::allowed) ++row.allowed;
        else if (v == VerdictValue::forbidden) ++row.forbidden;
        else ++row.non_polarized;
    };
    for (const auto& [r, verdict] : verdicts.rows) {
        const ReducedKindFlags f = style.kind_flags(r);
        if (f.parallel_fifth) bump(t.rows[0], verdict.value);
        if (f.parallel_unison) bump(t.rows[1], verdict.value);
        if (f.hidden_fifth_from_sixth) bump(t.rows[2], verdict.value);
        if (f.tritone) bump(t.rows[3], verdict.value);
        if (f.projected_imperfect_similar) bump(t.rows[4], verdict.value);
        if (f.hidden_tritone) bump(t.rows[5], verdict.value);
    }
    return t;
}

/// Rule statements recovered from verdicts alone: the intervals whose
/// parallels are prohibited without exception, and the distinguished skips
/// that make a parallel unison forbidden (or non-polarized).
struct RuleRecovery {
    Variant variant = Variant::classical;
    std::vector<int> parallel_prohibited_intervals;
    std::vector<int> forbidden_unison_skips;
    std::vector<int> non_polarized_unison_skips;
};

inline RuleRecovery rule_recovery(const ModelEngine& engine, const VerdictTable& verdicts) {
    RuleRecovery rec;
    rec.variant = verdicts.variant;
    for (int k : engine.dichotomy().consonances()) {
        if (k == 0) continue;  // the unison belongs to every dichotomy
        bool has_parallel = false, all_prohibited = true;
        for (const auto& [r, verdict] : verdicts.rows) {
            if (r.k() != k || r.kp() != k || r.cp() == 0) continue;
            has_parallel = true;
            if (verdict.value == VerdictValue::allowed) all_prohibited = false;
        }
        if (has_parallel && all_prohibited) rec.parallel_prohibited_intervals.push_back(k);
    }
    for (const auto& [r, verdict] : verdicts.rows) {
        if (r.k() != 0 || r.kp() != 0 || r.cp() == 0) continue;
        if (verdict.value == VerdictValue::forbidden)
            rec.forbidden_unison_skips.push_back(r.cp());
        else if (verdict.value == VerdictValue::non_polarized)
            rec.non_polarized_unison_skips.push_back(r.cp());
    }
    return rec;
}

}  // namespace counterpoint
