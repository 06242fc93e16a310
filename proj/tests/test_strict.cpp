#include <counterpoint/strict.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace counterpoint;

namespace {

// independent embeddability oracle: try every rotation of the scale pattern
bool embeddable_oracle(const StrictProgression& p) {
    static const bool in_x[12] = {true, false, true,  false, true, true,
                                  false, true, false, true,  false, true};
    for (int t = 0; t < 12; ++t) {
        const auto fits = [&](int pitch) { return in_x[(((pitch + t) % 12) + 12) % 12]; };
        if (fits(p.c) && fits(p.d) && fits(p.cp) && fits(p.dp)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("diatonic embeddability") {
    CHECK(diatonically_embeddable({0, 7, 2, 9}));   // already in X at t = 0
    CHECK(!diatonically_embeddable({0, 4, 1, 5}));  // two semitone pairs a third apart
    // the scale has exactly one tritone pair, so {0,6} embeds (onto it)
    CHECK(diatonically_embeddable({0, 6, 0, 6}));

    bool agree = true;
    for (int d = 0; d <= 16; ++d)
        for (int cp = -12; cp <= 12; ++cp)
            for (int dp = cp - 3; dp <= cp + 16; ++dp) {
                const StrictProgression p{0, d, cp, dp};
                if (diatonically_embeddable(p) != embeddable_oracle(p)) agree = false;
            }
    CHECK(agree);
}

TEST_CASE("classification of the given progressions") {
    const RuleLabel par5 = classify_strict({0, 7, 2, 9});
    CHECK(par5.category == StrictCategory::inadmissible);
    CHECK(par5.kind == StrictKind::parallel_fifth);

    const RuleLabel rep = classify_strict({0, 4, 0, 4});
    CHECK(rep.category == StrictCategory::good);
    CHECK(rep.kind == StrictKind::none);

    const RuleLabel imp = classify_strict({0, 7, 5, 14});
    CHECK(imp.category == StrictCategory::bad);
    CHECK(imp.kind == StrictKind::imperfect_similar_skips);

    const RuleLabel unison_rep = classify_strict({0, 0, 0, 0});
    CHECK(unison_rep.category == StrictCategory::inadmissible);
    CHECK(unison_rep.kind == StrictKind::unison_repetition);

    // the octave repetition is a sort of repetition and is accepted
    const RuleLabel octave_rep = classify_strict({0, 12, 0, 12});
    CHECK(octave_rep.category == StrictCategory::good);
}

TEST_CASE("preliminary-rule violations are named") {
    CHECK_THROWS_WITH(classify_strict({0, 6, 0, 7}),
                      Catch::Matchers::ContainsSubstring("consonance up to the tenth"));
    CHECK_THROWS_WITH(classify_strict({0, 7, 13, 20}),
                      Catch::Matchers::ContainsSubstring("cantus firmus moves"));
    CHECK_THROWS_WITH(classify_strict({0, 0, 0, 13}),
                      Catch::Matchers::ContainsSubstring("discantus moves"));
    CHECK_THROWS_WITH(classify_strict({0, 4, 1, 5}),
                      Catch::Matchers::ContainsSubstring("diatonically"));
}

TEST_CASE("classification is translation invariant") {
    const auto rows = enumerate_strict_representatives();
    for (std::size_t i = 0; i < rows.size(); i += 13) {
        const StrictProgression& p = rows[i].first;
        for (int t : {-24, -7, 5, 12}) {
            const StrictProgression q{p.c + t, p.d + t, p.cp + t, p.dp + t};
            const RuleLabel moved = classify_strict(q);
            CHECK(moved.category == rows[i].second.category);
            CHECK(moved.kind == rows[i].second.kind);
        }
    }
}

TEST_CASE("representative enumeration") {
    const auto rows = enumerate_strict_representatives();
    REQUIRE(rows.size() == 1057);
    for (const auto& [p, label] : rows) {
        CHECK(p.c == 0);  // canonical form: translated so the cantus starts at 0
        CHECK((label.kind == StrictKind::none) == (label.category == StrictCategory::good));
    }

    const StrictSummary s = summarize_strict(rows);
    CHECK(s.inadmissible == 671);
    CHECK(s.bad == 64);
    CHECK(s.good == 322);
    CHECK(s.inadmissible + s.bad + s.good == s.total);

    CHECK(s.parallel_fifths == 22);
    CHECK(s.parallel_octaves == 49);  // includes the lone unison repetition
    CHECK(s.hidden_fifths == 88);
    CHECK(s.hidden_octaves == 128);
    CHECK(s.tritones == 170);
    CHECK(s.too_large_skips == 434);
    CHECK(s.imperfect_similar_skips == 38);
    CHECK(s.hidden_tritones == 26);
    CHECK(s.unison_repetition_folded);
}

TEST_CASE("rule clauses evaluate independently of the row label") {
    // a progression may satisfy several clauses; the label picks the first in
    // row order, the flags keep them all
    const StrictProgression p{0, 9, 6, 18};  // tritone cantus skip into a hidden octave
    const StrictRuleFlags f = strict_rule_flags(p);
    CHECK(f.tritone);
    CHECK(f.hidden_octave);
    const RuleLabel label = classify_strict(p);
    CHECK(label.kind == StrictKind::hidden_octave);
}
