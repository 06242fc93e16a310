#include <counterpoint/reduction.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace counterpoint;

TEST_CASE("projection") {
    CHECK(project({0, 12, 0, 12}) == make_reduced(0, 0, 0));  // octave -> unison
    CHECK(project({0, 7, 2, 9}) == make_reduced(7, 2, 7));
    CHECK(project({0, 16, -3, 12}) == make_reduced(4, 9, 3));
}

TEST_CASE("projection naturality under octave translation") {
    const auto rows = enumerate_strict_representatives();
    for (std::size_t i = 0; i < rows.size(); i += 11) {
        const StrictProgression& p = rows[i].first;
        const StrictProgression q{p.c + 12, p.d + 12, p.cp + 12, p.dp + 12};
        CHECK(project(p) == project(q));
    }
}

TEST_CASE("the diatonically occurring reduced progressions") {
    const auto all = enumerate_reduced();
    REQUIRE(all.size() == 287);
    CHECK(std::is_sorted(all.begin(), all.end()));

    int repetitions = 0;
    for (const ReducedProgression& r : all)
        if (r.cp() == 0 && r.kp() == r.k()) ++repetitions;
    CHECK(repetitions == 6);

    // the tritone-skip parallel unison occurs (the scale has a tritone pair)
    CHECK(std::count(all.begin(), all.end(), make_reduced(0, 6, 0)) == 1);
}

TEST_CASE("preimage classification reproduces the published table") {
    const ReducedStyle style = ReducedStyle::build();
    const ReducedSummary s = style.summary();
    CHECK(s.total == 287);
    CHECK(s.inadmissible == 74);
    CHECK(s.bad == 23);
    CHECK(s.good == 190);
    CHECK(s.parallel_fifths == 10);
    CHECK(s.parallel_unisons == 9);
    CHECK(s.hidden_fifths_from_sixth == 13);
    CHECK(s.tritones == 45);
    CHECK(s.projected_imperfect_similar == 1);
    CHECK(s.hidden_tritones == 22);
    CHECK(s.good_good == 4);
    CHECK(s.good_bad == 16);
    CHECK(s.ambiguous == 170);
    CHECK(s.good_good + s.good_bad + s.ambiguous == s.good);
}

TEST_CASE("named progressions") {
    const ReducedStyle style = ReducedStyle::build();

    const ReducedLabel& lone = style.label(7, 5, 9);
    CHECK(lone.category == ReducedCategory::bad);
    CHECK(lone.kind == ReducedKind::projected_imperfect_similar);

    // good-good = exactly the four imperfect consonance repetitions
    std::set<std::tuple<int, int, int>> good_good;
    for (const ReducedProgression& r : style.progressions())
        if (style.label(r).refined == Refined::good_good)
            good_good.insert({r.k(), r.cp(), r.kp()});
    CHECK(good_good == std::set<std::tuple<int, int, int>>{
                           {3, 0, 3}, {4, 0, 4}, {8, 0, 8}, {9, 0, 9}});

    // the projected unison repetition is good (it has octave-leap preimages)
    // but ambiguous, since the strict unison repetition is inadmissible
    const ReducedLabel& unison_rep = style.label(0, 0, 0);
    CHECK(unison_rep.category == ReducedCategory::good);
    CHECK(unison_rep.refined == Refined::ambiguous);

    CHECK_THROWS_WITH(style.label(3, 6, 3),
                      Catch::Matchers::ContainsSubstring("does not occur"));
}

TEST_CASE("refined labels only decorate good progressions") {
    const ReducedStyle style = ReducedStyle::build();
    for (const ReducedProgression& r : style.progressions()) {
        const ReducedLabel& l = style.label(r);
        CHECK((l.refined != Refined::not_applicable) == (l.category == ReducedCategory::good));
    }
}

TEST_CASE("derived rule crosscheck") {
    const ReducedStyle style = ReducedStyle::build();
    const CrosscheckReport rep = style.crosscheck();
    CHECK(rep.all_agree());
    CHECK(rep.disagreements.empty());

    // spot checks of the closed clauses
    CHECK(style.label(0, 3, 0).category == ReducedCategory::inadmissible);
    CHECK(style.label(0, 5, 0).category == ReducedCategory::good);
    CHECK(style.label(0, 7, 0).category == ReducedCategory::good);
    CHECK(style.label(0, 6, 0).category == ReducedCategory::inadmissible);

    bool tritones_inadmissible = true;
    for (const ReducedProgression& r : style.progressions()) {
        const bool tritone = r.cp() == 6 || ((r.cp() + r.kp() - r.k()) % 12 + 12) % 12 == 6;
        if (tritone && style.label(r).category != ReducedCategory::inadmissible)
            tritones_inadmissible = false;
    }
    CHECK(tritones_inadmissible);
}

TEST_CASE("kind clauses overlap on exactly three progressions") {
    const ReducedStyle style = ReducedStyle::build();
    std::set<std::tuple<int, int, int>> doubled;
    for (const ReducedProgression& r : style.progressions()) {
        const ReducedKindFlags f = style.kind_flags(r);
        const int hits = f.parallel_fifth + f.parallel_unison + f.hidden_fifth_from_sixth +
                         f.tritone;
        if (hits > 1) doubled.insert({r.k(), r.cp(), r.kp()});
    }
    CHECK(doubled == std::set<std::tuple<int, int, int>>{{0, 6, 0}, {8, 6, 7}, {8, 7, 7}});
}

TEST_CASE("every reduced progression has a strict preimage") {
    // surjectivity: build() would throw otherwise; also check the counts add up
    const ReducedStyle style = ReducedStyle::build();
    std::set<std::tuple<int, int, int>> projected;
    for (const auto& [p, label] : enumerate_strict_representatives()) {
        const ReducedProgression r = project(p);
        projected.insert({r.k(), r.cp(), r.kp()});
    }
    for (const ReducedProgression& r : style.progressions())
        CHECK(projected.count({r.k(), r.cp(), r.kp()}) == 1);
}
