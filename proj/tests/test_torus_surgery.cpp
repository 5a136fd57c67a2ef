#include <doctest.h>

#include "seifnet/torus_surgery.hpp"

using namespace seifnet;

TEST_CASE("torus knot validation") {
    CHECK_NOTHROW(TorusKnot(-3, 2));
    CHECK_NOTHROW(TorusKnot(5, 3));
    CHECK_THROWS_AS(TorusKnot(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(TorusKnot(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(TorusKnot(2, 3), std::invalid_argument);
    CHECK(trefoil().to_string() == "T(-3,2)");
}

TEST_CASE("moser classification on the trefoil") {
    MoserResult conn = moser_classify(trefoil(), Fraction(-6));
    CHECK(conn.triple == OrbifoldTriple(2, 3, 0));
    CHECK(conn.cls.kind == SfsKind::ConnSumLens);

    MoserResult lens = moser_classify(trefoil(), Fraction(-5));
    CHECK(lens.triple == OrbifoldTriple(2, 3, 1));
    CHECK(lens.cls.kind == SfsKind::Lens);

    for (long long n0 = -20; n0 <= 20; ++n0) {
        if (n0 == 0) continue;
        MoserResult r = moser_classify(trefoil(), Fraction(-1, n0));
        CHECK(r.triple == OrbifoldTriple(2, 3, abs(Int(6 * n0 - 1))));
    }

    CHECK_THROWS_AS(moser_classify(trefoil(), Fraction::infinity()), std::invalid_argument);
}

TEST_CASE("trefoil surgeries: lens/reducible windows over the integer line") {
    for (long long m = -100; m <= 100; ++m) {
        SfsClass cls = moser_classify(trefoil(), Fraction(m)).cls;
        CHECK((cls.kind == SfsKind::Lens && !cls.lens_p.has_value()) == (m == -5 || m == -7));
        CHECK((cls.kind == SfsKind::ConnSumLens) == (m == -6));
        // third index equals the meridian seiferter's fiber index
        OrbifoldTriple t = moser_classify(trefoil(), Fraction(m)).triple;
        CHECK(t == OrbifoldTriple(2, 3, basic_fiber_index(trefoil(), BasicSeiferterKind::CMu, m)));
    }
}

TEST_CASE("basic seiferter data for the trefoil") {
    CHECK(basic_lk(trefoil(), BasicSeiferterKind::SP) == Int(2));
    CHECK(basic_lk(trefoil(), BasicSeiferterKind::SQ) == Int(3));
    CHECK(basic_lk(trefoil(), BasicSeiferterKind::CMu) == Int(1));
    CHECK(basic_fiber_index(trefoil(), BasicSeiferterKind::SP, -2) == Int(3));
    CHECK(basic_fiber_index(trefoil(), BasicSeiferterKind::SQ, -2) == Int(2));
    CHECK(basic_fiber_index(trefoil(), BasicSeiferterKind::CMu, -2) == Int(4));
    CHECK(basic_fiber_class(trefoil(), BasicSeiferterKind::SP) == CurveClass{-3, 2});
    CHECK(basic_fiber_class(trefoil(), BasicSeiferterKind::SQ) == CurveClass{2, -3});
    CHECK_THROWS_AS(basic_fiber_class(trefoil(), BasicSeiferterKind::CMu), std::domain_error);
    CHECK(basic_seiferter_name(trefoil(), BasicSeiferterKind::SP) == "s_-3");
    CHECK(basic_seiferter_name(trefoil(), BasicSeiferterKind::SQ) == "s_2");
}

TEST_CASE("the knot-boundary fiber class is a curve meeting the meridian once") {
    for (auto [p, q] : {std::pair<long long, long long>{-3, 2}, {5, 2}, {-7, 3}, {4, 3}}) {
        TorusKnot k(p, q);
        CurveClass fiber = knot_boundary_fiber_class(k);
        CHECK(fiber.is_curve());
        CHECK(abs(intersection(fiber, {0, 1})) == Int(1));
    }
}

TEST_CASE("the three basic annular pairs and their linking triples") {
    auto pairs = basic_annular_pairs(trefoil());
    CHECK(pairs.size() == 3);
    CHECK(pairs[0].lk_triple == std::array<Int, 3>{2, 3, 1});
    CHECK(pairs[1].lk_triple == std::array<Int, 3>{2, 1, 0});
    CHECK(pairs[2].lk_triple == std::array<Int, 3>{3, 1, 0});
    CHECK(pairs[0].a == BasicSeiferterKind::SP);
    CHECK(pairs[0].b == BasicSeiferterKind::SQ);
}
