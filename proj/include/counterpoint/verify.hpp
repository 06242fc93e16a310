#pragma once

// The full verification suite: every published aggregate, the uniqueness
// theorems, the formula/oracle equivalences, and the variation equivalences,
// each as an independently recomputed check with its expected values pinned
// here. The CLI `verify` subcommand and the acceptance test binary both run
// this suite.

#include <counterpoint/compare.hpp>
#include <counterpoint/dichotomy.hpp>
#include <counterpoint/model.hpp>
#include <counterpoint/parallel.hpp>
#include <counterpoint/reduction.hpp>
#include <counterpoint/strict.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace counterpoint {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace verify_detail {

struct Expected {
    // strict style
    static constexpr int strict_total = 1057;
    static constexpr int strict_inadmissible = 671;
    static constexpr int strict_bad = 64;
    static constexpr int strict_good = 322;
    static constexpr int strict_kinds[8] = {22, 49, 88, 128, 170, 434, 38, 26};
    // reduced style
    static constexpr int reduced_total = 287;
    static constexpr int reduced_categories[3] = {74, 23, 190};
    static constexpr int reduced_kinds[6] = {10, 9, 13, 45, 1, 22};
    static constexpr int reduced_refined[3] = {4, 16, 170};
    // verdict totals: allowed / forbidden / non-polarized
    static constexpr int classical_verdicts[3] = {250, 31, 6};
    static constexpr int idempotent_verdicts[3] = {240, 40, 7};
    static constexpr int local_global_verdicts[3] = {235, 46, 6};
};

inline std::string triple(int a, int b, int c) {
    return std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
}

struct Workspace {
    Workspace()
        : style(ReducedStyle::build()),
          engine(Dichotomy::standard()),
          strict_rows(enumerate_strict_representatives()) {
        for (Variant v : all_variants()) verdicts.emplace(v, compute_verdicts(engine, style, v));
    }
    ReducedStyle style;
    ModelEngine engine;
    std::vector<std::pair<StrictProgression, RuleLabel>> strict_rows;
    std::map<Variant, VerdictTable> verdicts;

    std::array<int, 3> verdict_totals(Variant v) const {
        std::array<int, 3> t{0, 0, 0};
        for (const auto& [r, verdict] : verdicts.at(v).rows) {
            if (verdict.value == VerdictValue::allowed) ++t[0];
            else if (verdict.value == VerdictValue::forbidden) ++t[1];
            else ++t[2];
        }
        return t;
    }
};

inline CheckResult check_table1(const Workspace& ws) {
    const StrictSummary s = summarize_strict(ws.strict_rows);
    const int kinds[8] = {s.parallel_fifths,  s.parallel_octaves, s.hidden_fifths,
                          s.hidden_octaves,   s.tritones,         s.too_large_skips,
                          s.imperfect_similar_skips, s.hidden_tritones};
    bool ok = s.total == Expected::strict_total &&
              s.inadmissible == Expected::strict_inadmissible && s.bad == Expected::strict_bad &&
              s.good == Expected::strict_good;
    for (int i = 0; i < 8; ++i) ok = ok && kinds[i] == Expected::strict_kinds[i];
    std::ostringstream d;
    d << "total=" << s.total << " categories=" << triple(s.inadmissible, s.bad, s.good)
      << " kinds=";
    for (int i = 0; i < 8; ++i) d << (i ? "," : "") << kinds[i];
    return {1, "strict enumeration reproduces the published counts", ok, d.str()};
}

inline CheckResult check_table2(const Workspace& ws) {
    const ReducedSummary s = ws.style.summary();
    const int cats[3] = {s.inadmissible, s.bad, s.good};
    const int kinds[6] = {s.parallel_fifths,          s.parallel_unisons,
                          s.hidden_fifths_from_sixth, s.tritones,
                          s.projected_imperfect_similar, s.hidden_tritones};
    const int refined[3] = {s.good_good, s.good_bad, s.ambiguous};
    bool ok = s.total == Expected::reduced_total;
    for (int i = 0; i < 3; ++i) ok = ok && cats[i] == Expected::reduced_categories[i];
    for (int i = 0; i < 6; ++i) ok = ok && kinds[i] == Expected::reduced_kinds[i];
    for (int i = 0; i < 3; ++i) ok = ok && refined[i] == Expected::reduced_refined[i];
    std::ostringstream d;
    d << "total=" << s.total << " categories=" << triple(cats[0], cats[1], cats[2]) << " kinds=";
    for (int i = 0; i < 6; ++i) d << (i ? "," : "") << kinds[i];
    d << " refined=" << triple(refined[0], refined[1], refined[2]);
    return {2, "reduced classification reproduces the published counts", ok, d.str()};
}

inline CheckResult check_polarity_uniqueness(const Workspace& ws) {
    const std::vector<AffineSymmetry> ps = polarity_search(ws.engine.dichotomy());
    const AffineSymmetry expected(Residue(2, 12), Residue(5, 12));
    const bool ok = ps.size() == 1 && ps.front() == expected;
    std::ostringstream d;
    d << ps.size() << " polarity symmetries found:";
    for (const AffineSymmetry& p : ps) d << ' ' << p.to_string();
    return {3, "the consonance/dissonance partition has the unique polarity e^2 5", ok, d.str()};
}

inline CheckResult check_local_characterization(const Workspace& ws, int jobs) {
    std::vector<std::string> problems(24);
    parallel_for(0, 24, jobs, [&](int i) {
        const int z = i % 12;
        const Flavor flavor = i < 12 ? Flavor::nilpotent : Flavor::idempotent;
        const auto found =
            fiber_polarity_search(ws.engine.dichotomy(), Residue(z, 12), flavor);
        if (found.size() != 1) {
            problems[static_cast<std::size_t>(i)] =
                std::string(flavor_token(flavor)) + " z=" + std::to_string(z) + " count=" +
                std::to_string(found.size());
            return;
        }
        const DualSymmetry expected(Residue(8 * z, 12), Residue(2, 12), Residue(5, 12),
                                    Residue(0, 12), flavor);
        if (found.front() != expected)
            problems[static_cast<std::size_t>(i)] =
                std::string(flavor_token(flavor)) + " z=" + std::to_string(z) + " got " +
                found.front().to_string();
    });
    std::string bad;
    for (const std::string& p : problems)
        if (!p.empty()) bad += (bad.empty() ? "" : "; ") + p;
    return {4, "each fiber has the unique local polarity e^{8z+2t}5 (both flavors)", bad.empty(),
            bad.empty() ? "24 exhaustive fiber searches" : bad};
}

inline CheckResult check_polarization(const Workspace& ws) {
    // expected non-polarized sets among the diatonic progressions
    std::vector<std::string> wrong;
    for (Flavor flavor : {Flavor::nilpotent, Flavor::idempotent}) {
        int non_polarized = 0;
        for (const ReducedProgression& r : ws.style.progressions()) {
            DualNumber xi(Residue(0, 12), Residue(r.k(), 12), flavor);
            DualNumber eta(Residue(r.cp(), 12), Residue(r.kp(), 12), flavor);
            const bool pol = is_polarized(ws.engine.dichotomy(), xi, eta).polarized;
            const bool repetition = r.cp() == 0 && r.kp() == r.k();
            const bool tritone_parallel = r.cp() == 6 && r.kp() == r.k();
            const bool want_pol = flavor == Flavor::nilpotent
                                      ? !repetition
                                      : !(repetition || tritone_parallel);
            if (!pol) ++non_polarized;
            if (pol != want_pol)
                wrong.push_back(std::string(flavor_token(flavor)) + "(" +
                                std::to_string(r.k()) + "," + std::to_string(r.cp()) + "," +
                                std::to_string(r.kp()) + ")");
        }
        const int want = flavor == Flavor::nilpotent ? 6 : 7;
        if (non_polarized != want)
            wrong.push_back(std::string(flavor_token(flavor)) + " non-polarized=" +
                            std::to_string(non_polarized));
    }
    std::string bad;
    for (const std::string& w : wrong) bad += (bad.empty() ? "" : "; ") + w;
    return {5, "non-polarized = repetitions (nilpotent) / + tritone parallelism (idempotent)",
            wrong.empty(), wrong.empty() ? "6 and 7 over the 287" : bad};
}

inline CheckResult check_successor_formula(const Workspace& ws, int jobs) {
    const ModelEngine& engine = ws.engine;
    int checked = 0;
    std::vector<std::string> problems;
    for (Flavor flavor : {Flavor::nilpotent, Flavor::idempotent}) {
        const auto members = enumerate_dual_symmetries(12, flavor, true);
        const DualSet cons = engine.dichotomy().lifted(true);
        std::vector<std::string> local(members.size());
        parallel_for(0, static_cast<int>(members.size()), jobs, [&](int i) {
            const DualSymmetry& h = members[static_cast<std::size_t>(i)];
            const DualSet direct = image(h, cons) & cons;
            if (engine.successor_set(h) != direct)
                local[static_cast<std::size_t>(i)] = "set " + h.to_string();
            else if (engine.successor_cardinality(h) != direct.size())
                local[static_cast<std::size_t>(i)] = "cardinality " + h.to_string();
        });
        checked += static_cast<int>(members.size());
        for (const std::string& p : local)
            if (!p.empty()) problems.push_back(p);
    }
    std::string bad;
    for (const std::string& p : problems) bad += (bad.empty() ? "" : "; ") + p;
    return {6, "successor formula and cardinality match direct images over all of H",
            problems.empty(), problems.empty() ? std::to_string(checked) + " members checked" : bad};
}

inline CheckResult check_verdict_totals(const Workspace& ws) {
    const auto c = ws.verdict_totals(Variant::classical);
    const auto i = ws.verdict_totals(Variant::idempotent);
    const auto l = ws.verdict_totals(Variant::local_global_nilpotent);
    const auto want_c = Expected::classical_verdicts;
    const auto want_i = Expected::idempotent_verdicts;
    const auto want_l = Expected::local_global_verdicts;
    const bool ok = c[0] == want_c[0] && c[1] == want_c[1] && c[2] == want_c[2] &&
                    i[0] == want_i[0] && i[1] == want_i[1] && i[2] == want_i[2] &&
                    l[0] == want_l[0] && l[1] == want_l[1] && l[2] == want_l[2];
    return {7, "verdict totals per variant", ok,
            "classical=" + triple(c[0], c[1], c[2]) + " idempotent=" + triple(i[0], i[1], i[2]) +
                " local-global=" + triple(l[0], l[1], l[2])};
}

inline CheckResult check_variation_equivalence(const Workspace& ws) {
    std::vector<std::string> problems;
    // fiberwise-filtered oracle (second variation) vs the 5d=d route (third)
    for (Variant v : {Variant::local_global_nilpotent, Variant::local_global_idempotent}) {
        const Flavor flavor = flavor_of(v);
        for (int k : ws.engine.dichotomy().consonances()) {
            const auto oracle = ws.engine.oracle_successors(Residue(k, 12), v);
            DualSet main(12);
            for (const DualSymmetry& h :
                 ws.engine.contrapuntal_symmetries(Residue(k, 12), v))
                main |= ws.engine.successor_set(h);
            if (!(oracle.successors == main))
                problems.push_back(std::string(variant_name(v)) + " k=" + std::to_string(k));
        }
        (void)flavor;
    }
    // the two local-global flavors agree except on the tritone-skip parallel unison
    const VerdictTable& nil = ws.verdicts.at(Variant::local_global_nilpotent);
    const VerdictTable& idem = ws.verdicts.at(Variant::local_global_idempotent);
    for (std::size_t i = 0; i < nil.rows.size(); ++i) {
        const ReducedProgression& r = nil.rows[i].first;
        const VerdictValue a = nil.rows[i].second.value;
        const VerdictValue b = idem.rows[i].second.value;
        const bool is_tritone_parallel_unison = r.k() == 0 && r.cp() == 6 && r.kp() == 0;
        if (is_tritone_parallel_unison) {
            if (!(a == VerdictValue::forbidden && b == VerdictValue::non_polarized))
                problems.push_back("(0,6,0) got " + std::string(verdict_name(a)) + "/" +
                                   verdict_name(b));
        } else if (a != b) {
            problems.push_back("(" + std::to_string(r.k()) + "," + std::to_string(r.cp()) + "," +
                               std::to_string(r.kp()) + ") differs");
        }
    }
    std::string bad;
    for (const std::string& p : problems) bad += (bad.empty() ? "" : "; ") + p;
    return {8, "second = third variation; flavors differ only on the tritone-skip unison",
            problems.empty(), problems.empty() ? "all successor sets and verdicts agree" : bad};
}

inline CheckResult check_comparison_tables(const Workspace& ws) {
    struct Cells {
        Variant variant;
        Semantics semantics;
        // allowed / forbidden / non-polarized rows, in column order
        std::vector<std::vector<int>> want;
    };
    const std::vector<Cells> table_cases = {
        {Variant::classical, Semantics::original, {{55, 17, 178}, {19, 6, 6}, {0, 0, 6}}},
        {Variant::classical, Semantics::starred, {{36, 17, 197}, {19, 6, 6}, {0, 0, 6}}},
        {Variant::classical,
         Semantics::refined,
         {{55, 17, 0, 16, 162}, {19, 6, 0, 0, 6}, {0, 0, 4, 0, 2}}},
        {Variant::idempotent, Semantics::original, {{52, 17, 171}, {21, 6, 13}, {1, 0, 6}}},
        {Variant::idempotent,
         Semantics::refined,
         {{52, 17, 0, 15, 156}, {21, 6, 0, 1, 12}, {1, 0, 4, 0, 2}}},
        {Variant::local_global_nilpotent,
         Semantics::original,
         {{53, 15, 167}, {21, 8, 17}, {0, 0, 6}}},
        {Variant::local_global_nilpotent,
         Semantics::refined,
         {{53, 15, 0, 12, 155}, {21, 8, 0, 4, 13}, {0, 0, 4, 0, 2}}},
    };
    struct Kinds {
        Variant variant;
        // allowed/forbidden/non-polarized per row: par5, parU, hid56, tritone, lone, hidtrit
        int want[6][3];
    };
    const std::vector<Kinds> kind_cases = {
        {Variant::classical,
         {{0, 10, 0}, {8, 1, 0}, {13, 0, 0}, {36, 9, 0}, {1, 0, 0}, {16, 6, 0}}},
        {Variant::idempotent,
         {{0, 10, 0}, {8, 0, 1}, {10, 3, 0}, {36, 8, 1}, {1, 0, 0}, {16, 6, 0}}},
        {Variant::local_global_nilpotent,
         {{0, 10, 0}, {4, 5, 0}, {13, 0, 0}, {38, 7, 0}, {1, 0, 0}, {14, 8, 0}}},
    };
    struct Pins {
        Variant variant;
        Semantics semantics;
        int matches, mismatches;
    };
    const std::vector<Pins> metric_cases = {
        {Variant::classical, Semantics::original, 203, 61},
        {Variant::classical, Semantics::starred, 222, 42},
        {Variant::classical, Semantics::refined, 25, 55},
        {Variant::idempotent, Semantics::original, 198, 65},
        {Variant::idempotent, Semantics::refined, 27, 52},
        {Variant::local_global_nilpotent, Semantics::original, 196, 70},
        {Variant::local_global_nilpotent, Semantics::refined, 29, 53},
    };

    std::vector<std::string> problems;
    for (const Cells& tc : table_cases) {
        const CrossTable t = cross_table(ws.style, ws.verdicts.at(tc.variant), tc.semantics);
        if (t.counts != tc.want)
            problems.push_back(std::string(variant_name(tc.variant)) + "/" +
                               semantics_name(tc.semantics) + " cross table drift");
    }
    for (const Kinds& kc : kind_cases) {
        const KindTable t = kind_table(ws.style, ws.verdicts.at(kc.variant));
        for (int row = 0; row < 6; ++row) {
            if (t.rows[static_cast<std::size_t>(row)].allowed != kc.want[row][0] ||
                t.rows[static_cast<std::size_t>(row)].forbidden != kc.want[row][1] ||
                t.rows[static_cast<std::size_t>(row)].non_polarized != kc.want[row][2])
                problems.push_back(std::string(variant_name(kc.variant)) + " kind row " +
                                   t.rows[static_cast<std::size_t>(row)].kind);
        }
    }
    for (const Pins& mc : metric_cases) {
        const CrossTable t = cross_table(ws.style, ws.verdicts.at(mc.variant), mc.semantics);
        const MatchMetrics m = match_metrics(t);
        const MatchMetrics md = match_metrics_direct(ws.style, ws.verdicts.at(mc.variant),
                                                     mc.semantics);
        if (m.matches != mc.matches || m.mismatches != mc.mismatches ||
            md.matches != mc.matches || md.mismatches != mc.mismatches)
            problems.push_back(std::string(variant_name(mc.variant)) + "/" +
                               semantics_name(mc.semantics) + " metrics (" +
                               std::to_string(m.matches) + "," + std::to_string(m.mismatches) +
                               ")");
    }
    std::string bad;
    for (const std::string& p : problems) bad += (bad.empty() ? "" : "; ") + p;
    return {9, "comparison tables and match metrics", problems.empty(),
            problems.empty() ? "7 tables, 3 kind tables, 7 metric pairs" : bad};
}

inline CheckResult check_rule_recovery(const Workspace& ws) {
    const RuleRecovery classical =
        rule_recovery(ws.engine, ws.verdicts.at(Variant::classical));
    const RuleRecovery idem = rule_recovery(ws.engine, ws.verdicts.at(Variant::idempotent));
    const bool classical_fifth =
        classical.parallel_prohibited_intervals == std::vector<int>{7};
    const bool classical_skip = classical.forbidden_unison_skips == std::vector<int>{6};
    const bool idem_skip = idem.non_polarized_unison_skips == std::vector<int>{6};
    std::ostringstream d;
    d << "classical prohibits parallels of {";
    for (int k : classical.parallel_prohibited_intervals) d << ' ' << k;
    d << " }, forbidden unison skips {";
    for (int s : classical.forbidden_unison_skips) d << ' ' << s;
    d << " }; idempotent non-polarized skips {";
    for (int s : idem.non_polarized_unison_skips) d << ' ' << s;
    d << " }";
    return {10, "rule recovery: the fifth's parallels and the tritone skip",
            classical_fifth && classical_skip && idem_skip, d.str()};
}

inline CheckResult check_kind_deltas(const Workspace& ws) {
    const StrictSummary s = summarize_strict(ws.strict_rows);
    const bool hard = s.total == Expected::strict_total &&
                      s.inadmissible == Expected::strict_inadmissible &&
                      s.bad == Expected::strict_bad && s.good == Expected::strict_good;
    const int kinds[8] = {s.parallel_fifths,  s.parallel_octaves, s.hidden_fifths,
                          s.hidden_octaves,   s.tritones,         s.too_large_skips,
                          s.imperfect_similar_skips, s.hidden_tritones};
    std::ostringstream d;
    d << "per-kind deltas:";
    int worst = 0;
    for (int i = 0; i < 8; ++i) {
        const int delta = kinds[i] - Expected::strict_kinds[i];
        worst = std::max(worst, delta < 0 ? -delta : delta);
        d << ' ' << delta;
    }
    d << " (category-clause precedence, clause-count kind semantics)";
    return {11, "category totals hard; per-kind deltas reported", hard, d.str()};
}

}  // namespace verify_detail

/// Runs every acceptance check; results come back in criterion order.
inline std::vector<CheckResult> run_verification(int jobs = 1) {
    verify_detail::Workspace ws;
    std::vector<CheckResult> out;
    out.push_back(verify_detail::check_table1(ws));
    out.push_back(verify_detail::check_table2(ws));
    out.push_back(verify_detail::check_polarity_uniqueness(ws));
    out.push_back(verify_detail::check_local_characterization(ws, jobs));
    out.push_back(verify_detail::check_polarization(ws));
    out.push_back(verify_detail::check_successor_formula(ws, jobs));
    out.push_back(verify_detail::check_verdict_totals(ws));
    out.push_back(verify_detail::check_variation_equivalence(ws));
    out.push_back(verify_detail::check_comparison_tables(ws));
    out.push_back(verify_detail::check_rule_recovery(ws));
    out.push_back(verify_detail::check_kind_deltas(ws));
    return out;
}

}  // namespace counterpoint
