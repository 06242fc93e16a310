#include <counterpoint/report.hpp>
#include <counterpoint/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

using namespace counterpoint;

namespace {

struct Fixture {
    Fixture() : style(ReducedStyle::build()), engine(Dichotomy::standard()) {
        strict_rows = enumerate_strict_representatives();
    }
    ReducedStyle style;
    ModelEngine engine;
    std::vector<std::pair<StrictProgression, RuleLabel>> strict_rows;
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("rendering is deterministic") {
    CHECK(render_strict_rows(fixture().strict_rows, Format::csv) ==
          render_strict_rows(fixture().strict_rows, Format::csv));
    CHECK(render_reduced_rows(fixture().style, Format::json) ==
          render_reduced_rows(fixture().style, Format::json));
    const VariantModel m = build_model(fixture().engine, Variant::classical);
    CHECK(model_document(m, 12) == model_document(build_model(fixture().engine, Variant::classical), 12));
}

TEST_CASE("csv headers are fixed") {
    CHECK(render_strict_rows(fixture().strict_rows, Format::csv)
              .starts_with("c,d,cp,dp,k,kp,category,kind\n"));
    CHECK(render_reduced_rows(fixture().style, Format::csv)
              .starts_with("k,cp,kp,category,kind,refined\n"));
}

TEST_CASE("json lines round-trip to the aggregate summary") {
    // strict rows
    {
        std::istringstream lines(render_strict_rows(fixture().strict_rows, Format::json));
        std::map<std::string, int> categories;
        int total = 0;
        std::string line;
        while (std::getline(lines, line)) {
            const Json row = Json::parse(line);
            ++categories[row["category"].get<std::string>()];
            ++total;
        }
        const StrictSummary s = summarize_strict(fixture().strict_rows);
        CHECK(total == s.total);
        CHECK(categories["inadmissible"] == s.inadmissible);
        CHECK(categories["bad"] == s.bad);
        CHECK(categories["good"] == s.good);
    }
    // reduced rows
    {
        std::istringstream lines(render_reduced_rows(fixture().style, Format::json));
        std::map<std::string, int> categories, refined;
        int total = 0;
        std::string line;
        while (std::getline(lines, line)) {
            const Json row = Json::parse(line);
            ++categories[row["category"].get<std::string>()];
            ++refined[row["refined"].get<std::string>()];
            ++total;
        }
        const ReducedSummary s = fixture().style.summary();
        CHECK(total == s.total);
        CHECK(categories["inadmissible"] == s.inadmissible);
        CHECK(categories["bad"] == s.bad);
        CHECK(categories["good"] == s.good);
        CHECK(refined["good-good"] == s.good_good);
        CHECK(refined["good-bad"] == s.good_bad);
        CHECK(refined["ambiguous"] == s.ambiguous);
    }
}

TEST_CASE("markdown mirrors the table layout") {
    const std::string md = render_strict_summary(summarize_strict(fixture().strict_rows), Format::md);
    CHECK(md.find("| inadmissible (671) | parallel-perfect-5th | 22 |") != std::string::npos);
    CHECK(md.find("| total | | 1057 |") != std::string::npos);

    const VerdictTable vt = compute_verdicts(fixture().engine, fixture().style, Variant::classical);
    const CrossTable t = cross_table(fixture().style, vt, Semantics::original);
    const std::string cmp = render_compare(t, match_metrics(t), kind_table(fixture().style, vt),
                                           rule_recovery(fixture().engine, vt), Format::md, false);
    CHECK(cmp.find("matches=203 mismatches=61") != std::string::npos);
    CHECK(cmp.find("| allowed | 55 | 17 | 178 |") != std::string::npos);
}

TEST_CASE("golden comparison flags drift and missing files") {
    const Json doc{{"a", 1}, {"b", Json::array({1, 2, 3})}};
    {
        std::ofstream out("/tmp/golden_ok.json");
        out << doc.dump(2);
    }
    CHECK(golden_compare(doc, "/tmp/golden_ok.json").matches);

    Json tampered = doc;
    tampered["b"][1] = 99;
    {
        std::ofstream out("/tmp/golden_tampered.json");
        out << tampered.dump(2);
    }
    const GoldenDiff drift = golden_compare(doc, "/tmp/golden_tampered.json");
    CHECK(!drift.matches);
    CHECK(!drift.drifts.empty());

    CHECK(!golden_compare(doc, "/tmp/no_such_golden.json").matches);
}

TEST_CASE("stored golden files match the computation") {
    const std::string dir = GOLDEN_DIR;
    for (Variant v : all_variants()) {
        const VariantModel m = build_model(fixture().engine, v);
        const GoldenDiff diff = golden_compare(
            model_document(m, 12), dir + "/model_" + variant_name(v) + ".json");
        INFO("variant " << variant_name(v));
        for (const std::string& d : diff.drifts) INFO(d);
        CHECK(diff.matches);
    }
    CHECK(golden_compare(strict_summary_json(summarize_strict(fixture().strict_rows)),
                         dir + "/table1.json")
              .matches);
    CHECK(golden_compare(reduced_summary_json(fixture().style.summary()), dir + "/table2.json")
              .matches);
    for (Variant v : all_variants()) {
        const VerdictTable vt = compute_verdicts(fixture().engine, fixture().style, v);
        for (Semantics s : {Semantics::original, Semantics::refined, Semantics::starred}) {
            const CrossTable t = cross_table(fixture().style, vt, s);
            const Json doc = compare_document(t, match_metrics(t),
                                              kind_table(fixture().style, vt),
                                              rule_recovery(fixture().engine, vt));
            const GoldenDiff diff = golden_compare(
                doc, dir + "/compare_" + std::string(variant_name(v)) + "_" +
                         semantics_name(s) + ".json");
            INFO("compare " << variant_name(v) << "/" << semantics_name(s));
            CHECK(diff.matches);
        }
    }
}

TEST_CASE("verification suite passes end to end") {
    for (const CheckResult& r : run_verification(2)) {
        INFO("criterion " << r.criterion << ": " << r.name << " — " << r.detail);
        CHECK(r.passed);
    }
}
