#pragma once

// Report emission: CSV with fixed header order, JSON documents / JSON lines
// with stable key order, and markdown tables laid out for visual diffing.
// Also the golden-file comparison used by --golden.

#include <counterpoint/compare.hpp>
#include <counterpoint/config.hpp>
#include <counterpoint/model.hpp>
#include <counterpoint/reduction.hpp>
#include <counterpoint/strict.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace counterpoint {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// strict style
// ---------------------------------------------------------------------------

inline Json strict_row_json(const StrictProgression& p, const RuleLabel& l) {
    return Json{{"c", p.c},           {"d", p.d},
                {"cp", p.cp},         {"dp", p.dp},
                {"k", p.k()},         {"kp", p.kp()},
                {"category", category_name(l.category)}, {"kind", kind_name(l.kind)}};
}

inline std::string render_strict_rows(
    const std::vector<std::pair<StrictProgression, RuleLabel>>& rows, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "c,d,cp,dp,k,kp,category,kind\n";
            for (const auto& [p, l] : rows)
                os << p.c << ',' << p.d << ',' << p.cp << ',' << p.dp << ',' << p.k() << ','
                   << p.kp() << ',' << category_name(l.category) << ',' << kind_name(l.kind)
                   << '\n';
            break;
        case Format::json:
            for (const auto& [p, l] : rows) os << strict_row_json(p, l).dump() << '\n';
            break;
        case Format::md:
            os << "| c | d | c' | d' | k | k' | category | kind |\n";
            os << "|---|---|----|----|---|----|----------|------|\n";
            for (const auto& [p, l] : rows)
                os << "| " << p.c << " | " << p.d << " | " << p.cp << " | " << p.dp << " | "
                   << p.k() << " | " << p.kp() << " | " << category_name(l.category) << " | "
                   << kind_name(l.kind) << " |\n";
            break;
    }
    return os.str();
}

inline Json strict_summary_json(const StrictSummary& s) {
    return Json{
        {"total", s.total},
        {"categories",
         Json{{"inadmissible", s.inadmissible}, {"bad", s.bad}, {"good", s.good}}},
        {"kinds", Json{{"parallel-perfect-5th", s.parallel_fifths},
                       {"parallel-perfect-8/1", s.parallel_octaves},
                       {"hidden-5th", s.hidden_fifths},
                       {"hidden-8/1", s.hidden_octaves},
                       {"tritone", s.tritones},
                       {"too-large-skip", s.too_large_skips},
                       {"imp-cons-similar-skips", s.imperfect_similar_skips},
                       {"hidden-tritone", s.hidden_tritones}}},
        {"metadata",
         Json{{"unison-repetition-folded-into-parallel-8/1", s.unison_repetition_folded}}}};
}

inline std::string render_strict_summary(const StrictSummary& s, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "key,value\n"
               << "total," << s.total << "\ninadmissible," << s.inadmissible << "\nbad," << s.bad
               << "\ngood," << s.good << "\nparallel-perfect-5th," << s.parallel_fifths
               << "\nparallel-perfect-8/1," << s.parallel_octaves << "\nhidden-5th,"
               << s.hidden_fifths << "\nhidden-8/1," << s.hidden_octaves << "\ntritone,"
               << s.tritones << "\ntoo-large-skip," << s.too_large_skips
               << "\nimp-cons-similar-skips," << s.imperfect_similar_skips << "\nhidden-tritone,"
               << s.hidden_tritones << "\nunison-repetition-folded,"
               << (s.unison_repetition_folded ? "true" : "false") << '\n';
            break;
        case Format::json:
            os << strict_summary_json(s).dump(2) << '\n';
            break;
        case Format::md:
            os << "| category | kind | count |\n|----------|------|-------|\n";
            os << "| inadmissible (" << s.inadmissible << ") | parallel-perfect-5th | "
               << s.parallel_fifths << " |\n";
            os << "| | parallel-perfect-8/1 | " << s.parallel_octaves << " |\n";
            os << "| | hidden-5th | " << s.hidden_fifths << " |\n";
            os << "| | hidden-8/1 | " << s.hidden_octaves << " |\n";
            os << "| | tritone | " << s.tritones << " |\n";
            os << "| | too-large-skip | " << s.too_large_skips << " |\n";
            os << "| bad (" << s.bad << ") | imp-cons-similar-skips | "
               << s.imperfect_similar_skips << " |\n";
            os << "| | hidden-tritone | " << s.hidden_tritones << " |\n";
            os << "| good (" << s.good << ") | | |\n";
            os << "| total | | " << s.total << " |\n";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// reduced style
// ---------------------------------------------------------------------------

inline std::string render_reduced_rows(const ReducedStyle& style, Format format) {
    std::ostringstream os;
    const auto& rows = style.progressions();
    switch (format) {
        case Format::csv:
            os << "k,cp,kp,category,kind,refined\n";
            for (const ReducedProgression& r : rows) {
                const ReducedLabel& l = style.label(r);
                os << r.k() << ',' << r.cp() << ',' << r.kp() << ','
                   << category_name(l.category) << ',' << kind_name(l.kind) << ','
                   << refined_name(l.refined) << '\n';
            }
            break;
        case Format::json:
            for (const ReducedProgression& r : rows) {
                const ReducedLabel& l = style.label(r);
                os << Json{{"k", r.k()},
                           {"cp", r.cp()},
                           {"kp", r.kp()},
                           {"category", category_name(l.category)},
                           {"kind", kind_name(l.kind)},
                           {"refined", refined_name(l.refined)}}
                          .dump()
                   << '\n';
            }
            break;
        case Format::md:
            os << "| k | c' | k' | category | kind | refined |\n";
            os << "|---|----|----|----------|------|---------|\n";
            for (const ReducedProgression& r : rows) {
                const ReducedLabel& l = style.label(r);
                os << "| " << r.k() << " | " << r.cp() << " | " << r.kp() << " | "
                   << category_name(l.category) << " | " << kind_name(l.kind) << " | "
                   << refined_name(l.refined) << " |\n";
            }
            break;
    }
    return os.str();
}

inline Json reduced_summary_json(const ReducedSummary& s) {
    return Json{{"total", s.total},
                {"categories",
                 Json{{"inadmissible", s.inadmissible}, {"bad", s.bad}, {"good", s.good}}},
                {"kinds", Json{{"parallel-5th", s.parallel_fifths},
                               {"parallel-unison", s.parallel_unisons},
                               {"hidden-5th-from-6th", s.hidden_fifths_from_sixth},
                               {"tritone", s.tritones},
                               {"proj-imp-cons", s.projected_imperfect_similar},
                               {"hidden-tritone", s.hidden_tritones}}},
                {"refined", Json{{"good-good", s.good_good},
                                 {"good-bad", s.good_bad},
                                 {"ambiguous", s.ambiguous}}}};
}

inline std::string render_reduced_summary(const ReducedSummary& s, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "key,value\n"
               << "total," << s.total << "\ninadmissible," << s.inadmissible << "\nbad," << s.bad
               << "\ngood," << s.good << "\nparallel-5th," << s.parallel_fifths
               << "\nparallel-unison," << s.parallel_unisons << "\nhidden-5th-from-6th,"
               << s.hidden_fifths_from_sixth << "\ntritone," << s.tritones << "\nproj-imp-cons,"
               << s.projected_imperfect_similar << "\nhidden-tritone," << s.hidden_tritones
               << "\ngood-good," << s.good_good << "\ngood-bad," << s.good_bad << "\nambiguous,"
               << s.ambiguous << '\n';
            break;
        case Format::json:
            os << reduced_summary_json(s).dump(2) << '\n';
            break;
        case Format::md:
            os << "| category | kind | count |\n|----------|------|-------|\n";
            os << "| inadmissible (" << s.inadmissible << ") | parallel-5th* | "
               << s.parallel_fifths << " |\n";
            os << "| | parallel-unison | " << s.parallel_unisons << " |\n";
            os << "| | hidden-5th-from-6th | " << s.hidden_fifths_from_sixth << " |\n";
            os << "| | tritone* | " << s.tritones << " |\n";
            os << "| bad (" << s.bad << ") | proj-imp-cons | " << s.projected_imperfect_similar
               << " |\n";
            os << "| | hidden-tritone | " << s.hidden_tritones << " |\n";
            os << "| good (" << s.good << ") | good-good | " << s.good_good << " |\n";
            os << "| | good-bad | " << s.good_bad << " |\n";
            os << "| | ambiguous | " << s.ambiguous << " |\n";
            os << "| total | | " << s.total << " |\n";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// model output
// ---------------------------------------------------------------------------

inline Json dual_symmetry_json(const DualSymmetry& h) {
    return Json{{"u", h.u().value()}, {"v", h.v().value()},      {"c", h.c().value()},
                {"d", h.d().value()}, {"text", h.to_string()},   {"flavor", flavor_name(h.flavor())}};
}

inline Json model_document(const VariantModel& m, int n) {
    Json entries = Json::array();
    for (const ContrapuntalEntry& e : m.entries) {
        Json syms = Json::array();
        for (const DualSymmetry& h : e.symmetries) syms.push_back(dual_symmetry_json(h));
        Json succ = Json::array();
        e.successors.for_each([&](int base, int delta) { succ.push_back(Json{base, delta}); });
        entries.push_back(Json{{"k", e.k},
                               {"symmetries", syms},
                               {"max-cardinality", e.max_cardinality},
                               {"successor-count", e.successors.size()},
                               {"successors", succ}});
    }
    return Json{{"variant", variant_name(m.variant)}, {"n", n}, {"entries", entries}};
}

inline std::string render_model(const VariantModel& m, int n, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "k,u,v,c,d,symmetry,intersection_size,successor_count\n";
            for (const ContrapuntalEntry& e : m.entries)
                for (const DualSymmetry& h : e.symmetries)
                    os << e.k << ',' << h.u().value() << ',' << h.v().value() << ','
                       << h.c().value() << ',' << h.d().value() << ',' << h.to_string() << ','
                       << e.max_cardinality << ',' << e.successors.size() << '\n';
            break;
        case Format::json:
            os << model_document(m, n).dump(2) << '\n';
            break;
        case Format::md:
            os << "## " << variant_name(m.variant) << " contrapuntal symmetries\n\n";
            os << "| k | symmetries | intersection | successors |\n";
            os << "|---|------------|--------------|------------|\n";
            for (const ContrapuntalEntry& e : m.entries) {
                os << "| " << e.k << " | ";
                for (std::size_t i = 0; i < e.symmetries.size(); ++i)
                    os << (i ? ", " : "") << e.symmetries[i].to_string();
                os << " | " << e.max_cardinality << " | " << e.successors.size() << " |\n";
            }
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

inline std::string render_verdicts(const VerdictTable& vt, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "k,cp,kp,verdict,witnesses\n";
            for (const auto& [r, v] : vt.rows)
                os << r.k() << ',' << r.cp() << ',' << r.kp() << ',' << verdict_name(v.value)
                   << ',' << v.witnesses.size() << '\n';
            break;
        case Format::json:
            for (const auto& [r, v] : vt.rows) {
                Json ws = Json::array();
                for (const DualSymmetry& h : v.witnesses) ws.push_back(h.to_string());
                os << Json{{"k", r.k()},
                           {"cp", r.cp()},
                           {"kp", r.kp()},
                           {"verdict", verdict_name(v.value)},
                           {"witnesses", ws}}
                          .dump()
                   << '\n';
            }
            break;
        case Format::md:
            os << "| k | c' | k' | verdict | witnesses |\n|---|----|----|---------|-----------|\n";
            for (const auto& [r, v] : vt.rows) {
                os << "| " << r.k() << " | " << r.cp() << " | " << r.kp() << " | "
                   << verdict_name(v.value) << " | ";
                for (std::size_t i = 0; i < v.witnesses.size(); ++i)
                    os << (i ? ", " : "") << v.witnesses[i].to_string();
                os << " |\n";
            }
            break;
    }
    return os.str();
}

inline Json verdict_summary_json(const VerdictTable& vt) {
    int allowed = 0, forbidden = 0, non_polarized = 0;
    for (const auto& [r, v] : vt.rows) {
        allowed += v.value == VerdictValue::allowed;
        forbidden += v.value == VerdictValue::forbidden;
        non_polarized += v.value == VerdictValue::non_polarized;
    }
    return Json{{"variant", variant_name(vt.variant)},
                {"total", static_cast<int>(vt.rows.size())},
                {"allowed", allowed},
                {"forbidden", forbidden},
                {"non-polarized", non_polarized}};
}

// ---------------------------------------------------------------------------
// comparison
// ---------------------------------------------------------------------------

inline Json cross_table_json(const CrossTable& t) {
    Json rows = Json::object();
    for (std::size_t row = 0; row < verdict_rows().size(); ++row) {
        Json cells = Json::object();
        for (std::size_t col = 0; col < t.columns.size(); ++col)
            cells[t.columns[col]] = t.counts[row][col];
        rows[verdict_name(verdict_rows()[row])] = cells;
    }
    return Json{{"variant", variant_name(t.variant)},
                {"semantics", semantics_name(t.semantics)},
                {"columns", t.columns},
                {"rows", rows}};
}

inline Json kind_table_json(const KindTable& t) {
    Json rows = Json::array();
    for (const KindTableRow& r : t.rows)
        rows.push_back(Json{{"kind", r.kind},
                            {"allowed", r.allowed},
                            {"forbidden", r.forbidden},
                            {"non-polarized", r.non_polarized}});
    return Json{{"variant", variant_name(t.variant)}, {"rows", rows}};
}

inline Json rule_recovery_json(const RuleRecovery& r) {
    return Json{{"variant", variant_name(r.variant)},
                {"parallel-prohibited-intervals", r.parallel_prohibited_intervals},
                {"forbidden-unison-skips", r.forbidden_unison_skips},
                {"non-polarized-unison-skips", r.non_polarized_unison_skips}};
}

inline Json compare_document(const CrossTable& table, const MatchMetrics& metrics,
                             const KindTable& kinds, const RuleRecovery& recovery) {
    return Json{{"variant", variant_name(table.variant)},
                {"semantics", semantics_name(table.semantics)},
                {"cross-table", cross_table_json(table)},
                {"metrics",
                 Json{{"matches", metrics.matches}, {"mismatches", metrics.mismatches}}},
                {"kind-table", kind_table_json(kinds)},
                {"rule-recovery", rule_recovery_json(recovery)}};
}

inline std::string render_compare(const CrossTable& table, const MatchMetrics& metrics,
                                  const KindTable& kinds, const RuleRecovery& recovery,
                                  Format format, bool summary_only) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            if (!summary_only) {
                os << "verdict,label,count\n";
                for (std::size_t row = 0; row < verdict_rows().size(); ++row)
                    for (std::size_t col = 0; col < table.columns.size(); ++col)
                        os << verdict_name(verdict_rows()[row]) << ',' << table.columns[col]
                           << ',' << table.counts[row][col] << '\n';
            }
            os << "matches," << metrics.matches << "\nmismatches," << metrics.mismatches << '\n';
            break;
        case Format::json:
            os << compare_document(table, metrics, kinds, recovery).dump(2) << '\n';
            break;
        case Format::md: {
            os << "## " << variant_name(table.variant) << " vs reduced strict style ("
               << semantics_name(table.semantics) << ")\n\n|  |";
            for (const std::string& c : table.columns) os << ' ' << c << " |";
            os << "\n|---|";
            for (std::size_t c = 0; c < table.columns.size(); ++c) os << "---|";
            os << '\n';
            for (std::size_t row = 0; row < verdict_rows().size(); ++row) {
                os << "| " << verdict_name(verdict_rows()[row]) << " |";
                for (std::size_t col = 0; col < table.columns.size(); ++col)
                    os << ' ' << table.counts[row][col] << " |";
                os << '\n';
            }
            os << "\n| kind | allowed | forbidden | non-polarized |\n|------|---------|-----------|---------------|\n";
            for (const KindTableRow& r : kinds.rows)
                os << "| " << r.kind << " | " << r.allowed << " | " << r.forbidden << " | "
                   << r.non_polarized << " |\n";
            os << "\nmatches=" << metrics.matches << " mismatches=" << metrics.mismatches
               << '\n';
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// golden comparison
// ---------------------------------------------------------------------------

struct GoldenDiff {
    bool matches = true;
    std::vector<std::string> drifts;
};

/// Structural comparison of a computed document against a stored golden file.
inline GoldenDiff golden_compare(const Json& computed, const std::string& golden_path) {
    GoldenDiff diff;
    std::ifstream in(golden_path);
    if (!in) {
        diff.matches = false;
        diff.drifts.push_back("missing golden file: " + golden_path);
        return diff;
    }
    Json stored;
    try {
        in >> stored;
    } catch (const std::exception& e) {
        diff.matches = false;
        diff.drifts.push_back("unparseable golden file " + golden_path + ": " + e.what());
        return diff;
    }
    if (stored != computed) {
        diff.matches = false;
        const Json patch = Json::diff(stored, computed);
        for (const auto& op : patch)
            diff.drifts.push_back(golden_path + ": " + op.dump());
    }
    return diff;
}

/// Writes to the configured sink (file or stdout).
inline void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

}  // namespace counterpoint
