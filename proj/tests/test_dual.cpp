#include <counterpoint/dual.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace counterpoint;

namespace {

DualNumber dn(int base, int delta, Flavor f) {
    return {Residue(base, 12), Residue(delta, 12), f};
}
DualSymmetry ds(int u, int v, int c, int d, Flavor f) {
    return {Residue(u, 12), Residue(v, 12), Residue(c, 12), Residue(d, 12), f};
}

}  // namespace

TEST_CASE("dual products") {
    CHECK(dn(0, 3, Flavor::nilpotent) * dn(0, 4, Flavor::nilpotent) ==
          dn(0, 0, Flavor::nilpotent));
    CHECK(dn(0, 3, Flavor::idempotent) * dn(0, 4, Flavor::idempotent) ==
          dn(0, 0, Flavor::idempotent));
    // (1+x)^2 = 1 + 3x when x^2 = x
    CHECK(dn(1, 1, Flavor::idempotent) * dn(1, 1, Flavor::idempotent) ==
          dn(1, 3, Flavor::idempotent));
    CHECK(dn(1, 1, Flavor::nilpotent) * dn(1, 1, Flavor::nilpotent) ==
          dn(1, 2, Flavor::nilpotent));
    CHECK_THROWS_AS(dn(0, 0, Flavor::nilpotent) * dn(0, 0, Flavor::idempotent),
                    std::invalid_argument);
}

TEST_CASE("ring axioms, exhaustively over Z_12[t]") {
    for (Flavor f : {Flavor::nilpotent, Flavor::idempotent}) {
        bool assoc = true, distrib = true, comm = true;
        for (int i = 0; i < 144; ++i)
            for (int j = 0; j < 144; ++j) {
                const DualNumber a = dn(i / 12, i % 12, f), b = dn(j / 12, j % 12, f);
                if (!(a * b == b * a)) comm = false;
                for (int l = 0; l < 144; ++l) {
                    const DualNumber c = dn(l / 12, l % 12, f);
                    if (!((a * b) * c == a * (b * c))) assoc = false;
                    if (!(a * (b + c) == a * b + a * c)) distrib = false;
                }
            }
        CHECK(assoc);
        CHECK(distrib);
        CHECK(comm);
    }
}

TEST_CASE("the idempotent ring is the componentwise product in disguise") {
    // transport (x, y) -> x + (y-x)t carries componentwise pair products to
    // the idempotent product
    const auto transport = [](int x, int y) { return dn(x, (y - x + 12) % 12, Flavor::idempotent); };
    bool ok = true;
    for (int x1 = 0; x1 < 12; ++x1)
        for (int y1 = 0; y1 < 12; ++y1)
            for (int x2 = 0; x2 < 12; ++x2)
                for (int y2 = 0; y2 < 12; ++y2)
                    if (!(transport(x1, y1) * transport(x2, y2) ==
                          transport((x1 * x2) % 12, (y1 * y2) % 12)))
                        ok = false;
    CHECK(ok);
}

TEST_CASE("symmetry application") {
    // e^{2e}5 acts on the interval part as e^2 5
    const DualSymmetry g = ds(0, 2, 5, 0, Flavor::nilpotent);
    CHECK(g.apply(dn(0, 7, Flavor::nilpotent)) == dn(0, 1, Flavor::nilpotent));
    const AffineSymmetry p(Residue(2, 12), Residue(5, 12));
    for (int k = 0; k < 12; ++k)
        CHECK(g.apply(dn(0, k, Flavor::nilpotent)).delta() == p.apply(Residue(k, 12)));

    const DualSymmetry id = DualSymmetry::identity(12, Flavor::nilpotent);
    CHECK(id.apply(dn(5, 9, Flavor::nilpotent)) == dn(5, 9, Flavor::nilpotent));

    // idempotent: e^0(1+4x) fixes 0+3x since (1+4x)(3x) = (3+12)x = 3x
    const DualSymmetry h = ds(0, 0, 1, 4, Flavor::idempotent);
    CHECK(h.apply(dn(0, 3, Flavor::idempotent)) == dn(0, 3, Flavor::idempotent));
}

TEST_CASE("symmetry construction enforces the unit constraints") {
    CHECK_THROWS_AS(ds(0, 0, 4, 0, Flavor::nilpotent), std::invalid_argument);
    CHECK_THROWS_AS(ds(0, 0, 5, 1, Flavor::idempotent), std::invalid_argument);  // c+d = 6
    CHECK_NOTHROW(ds(0, 0, 5, 1, Flavor::nilpotent));
    CHECK_NOTHROW(ds(0, 0, 5, 2, Flavor::idempotent));  // c+d = 7
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_dual_symmetries(12, Flavor::nilpotent).size() == 6912);
    CHECK(enumerate_dual_symmetries(12, Flavor::nilpotent, true).size() == 576);
    CHECK(enumerate_dual_symmetries(12, Flavor::idempotent, true).size() == 192);
    CHECK(enumerate_dual_symmetries(12, Flavor::idempotent).size() == 2304);
    const auto h = enumerate_dual_symmetries(12, Flavor::nilpotent, true);
    CHECK(std::is_sorted(h.begin(), h.end()));
    for (const DualSymmetry& g : h) CHECK(g.u().value() == 0);
}

TEST_CASE("composition, inversion, and the conjugation formula") {
    for (Flavor f : {Flavor::nilpotent, Flavor::idempotent}) {
        const DualSymmetry id = DualSymmetry::identity(12, f);
        bool inverses = true;
        for (const DualSymmetry& g : enumerate_dual_symmetries(12, f))
            if (!(g.compose(g.inverse()) == id && g.inverse().compose(g) == id))
                inverses = false;
        CHECK(inverses);
    }

    // e^z o e^{2e}5 o e^{-z} = e^{8z+2e}5
    const DualSymmetry core = ds(0, 2, 5, 0, Flavor::nilpotent);
    CHECK(core.compose(core) == DualSymmetry::identity(12, Flavor::nilpotent));
    for (int z = 0; z < 12; ++z) {
        const DualSymmetry ez = DualSymmetry::translation(Residue(z, 12), Flavor::nilpotent);
        CHECK(ez.compose(core).compose(ez.inverse()) ==
              ds((8 * z) % 12, 2, 5, 0, Flavor::nilpotent));
    }
}

TEST_CASE("symmetries are bijections of Z_12[t]") {
    DualSet full(12);
    for (int b = 0; b < 12; ++b)
        for (int d = 0; d < 12; ++d) full.insert(b, d);
    for (Flavor f : {Flavor::nilpotent, Flavor::idempotent}) {
        const auto syms = enumerate_dual_symmetries(12, f);
        for (std::size_t i = 0; i < syms.size(); i += 97)
            CHECK(image(syms[i], full).size() == 144);
    }
}

TEST_CASE("dual set operations") {
    DualSet a(12), b(12);
    a.insert(0, 3);
    a.insert(5, 7);
    b.insert(5, 7);
    CHECK(a.size() == 2);
    CHECK((a & b).size() == 1);
    CHECK((a | b).size() == 2);
    CHECK(a.contains(5, 7));
    CHECK(!a.contains(7, 5));
    std::vector<std::pair<int, int>> visited;
    a.for_each([&](int base, int delta) { visited.emplace_back(base, delta); });
    CHECK(visited == std::vector<std::pair<int, int>>{{0, 3}, {5, 7}});
}

TEST_CASE("rendering") {
    CHECK(ds(8, 2, 5, 0, Flavor::nilpotent).to_string() == "e^{8+2e}(5+0e)");
    CHECK(ds(0, 2, 5, 0, Flavor::idempotent).to_string() == "e^{0+2x}(5+0x)");
    CHECK(dn(3, 4, Flavor::nilpotent).to_string() == "3+4e");
}
