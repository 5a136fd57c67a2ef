#include <doctest.h>

#include "seifnet/classify.hpp"

using namespace seifnet;

TEST_CASE("knm report: the pretzel row") {
    KnmReport r = knm_report(-6, 1);
    CHECK(r.slopes == std::array<Int, 3>{19, 18, 17});
    CHECK(r.triples[0] == OrbifoldTriple(2, 3, 1));
    CHECK(r.triples[1] == OrbifoldTriple(2, 1, 8));
    CHECK(r.triples[2] == OrbifoldTriple(3, 2, 5));
    CHECK(r.hyperbolic);
    CHECK(r.name == NamedKnot::pretzel_m237());
    // the 19-surgery is a lens space by shape, so the three-small-SFS check
    // fails and the nonzero-index certificate carries the argument
    CHECK_FALSE(three_successive_check(r));
    CHECK(all_fiber_indices_nonzero(r));
}

TEST_CASE("knm report at n = 0 recovers trefoil surgeries") {
    for (long long m = -12; m <= 12; ++m) {
        KnmReport r = knm_report(m, 0);
        CHECK(r.triples[0] == OrbifoldTriple(2, 3, abs(Int(m + 6))));
        CHECK(r.triples[1] == OrbifoldTriple(2, abs(Int(m + 5)), 3));
        CHECK(r.triples[2] == OrbifoldTriple(3, abs(Int(m + 4)), 2));
        for (int i = 0; i < 3; ++i)
            CHECK(r.triples[i] == moser_classify(trefoil(), Fraction(r.slopes[i])).triple);
        CHECK_FALSE(r.hyperbolic);
    }
}

TEST_CASE("knm report: twist-knot row via the rational surgery oracle") {
    // K_n^-1 is Tw(n+1); its surgeries sit at -1, -2, -3 and the -1 slope
    // matches the trefoil -1/(n+1) surgery
    for (long long n = -8; n <= 8; ++n) {
        if (n == 0) continue;
        KnmReport r = knm_report(-1, n);
        CHECK(r.slopes == std::array<Int, 3>{-1, -2, -3});
        CHECK(r.name == NamedKnot::twist_knot(Int(n + 1)));
        if (n != -1)
            CHECK(r.triples[0] == moser_classify(trefoil(), Fraction(-1, n + 1)).triple);
    }
    // frozen row recomputed through both engine paths and the oracle above
    KnmReport r = knm_report(-1, 2);
    CHECK(r.triples[0] == OrbifoldTriple(2, 3, 17));
    CHECK(r.triples[1] == OrbifoldTriple(2, 4, 11));
    CHECK(r.triples[2] == OrbifoldTriple(3, 3, 8));
}

TEST_CASE("knm hyperbolicity predicate") {
    CHECK(knm_hyperbolic(-6, 1));
    CHECK_FALSE(knm_hyperbolic(3, 0));
    CHECK_FALSE(knm_hyperbolic(-1, -1));
    CHECK_FALSE(knm_hyperbolic(-5, 2));
    CHECK_FALSE(knm_hyperbolic(-2, 7));
    CHECK(knm_hyperbolic(-7, -1));
    for (long long m = -30; m <= 30; ++m)
        for (long long n = -30; n <= 30; ++n) {
            bool expect = !(m >= -5 && m <= -2) && n != 0 && !(m == -1 && n == -1);
            CHECK(knm_hyperbolic(m, n) == expect);
            // hyperbolic implies three small SFS except on the m = -6 line
            if (knm_hyperbolic(m, n) && m != -6) CHECK(small_sfs_triple_check(m, n));
            if (knm_hyperbolic(m, n) && m == -6)
                CHECK(all_fiber_indices_nonzero(knm_report(m, n)));
        }
}

TEST_CASE("small SFS triple check") {
    CHECK(small_sfs_triple_check(0, 1));
    CHECK(small_sfs_triple_check(0, -1));
    CHECK_FALSE(small_sfs_triple_check(-1, -1));
    CHECK_FALSE(small_sfs_triple_check(-3, 4));
    CHECK_FALSE(small_sfs_triple_check(-6, 1)); // |m+5| = 1
    for (long long n = -20; n <= 20; ++n)
        if (n != 0) CHECK(small_sfs_triple_check(0, n));
}

TEST_CASE("three successive small surgeries certificate") {
    CHECK(three_successive_check(knm_report(0, 3)));
    CHECK_FALSE(three_successive_check(knm_report(-1, -1)));
    CHECK_FALSE(three_successive_check(knm_report(-6, 1)));
    // agreement between the class-level and index-level characterizations
    for (long long m = -10; m <= 10; ++m)
        for (long long n = -10; n <= 10; ++n)
            CHECK(three_successive_check(knm_report(m, n)) == small_sfs_triple_check(m, n));
}

TEST_CASE("mirror consistency of the successive-triple construction") {
    KnmReport r = knm_report(0, 2);
    CHECK(r.slopes == std::array<Int, 3>{2, 1, 0});
    std::array<Int, 3> mirrored{-r.slopes[0], -r.slopes[1], -r.slopes[2]};
    CHECK(mirrored == std::array<Int, 3>{-2, -1, 0});
}

TEST_CASE("torus knot exclusion oracle") {
    CHECK_THROWS_AS(torus_knot_exclusion(knm_report(0, 2).triples, 3, 1),
                    std::invalid_argument);
    CHECK_FALSE(torus_knot_exclusion(knm_report(0, 2).triples, 3, 100).has_value());
    CHECK_FALSE(torus_knot_exclusion(knm_report(-6, 1).triples, 20, 100).has_value());
    auto witness = torus_knot_exclusion(knm_report(0, 0).triples, 1, 100);
    REQUIRE(witness.has_value());
    CHECK(witness->first == Int(-3));
    CHECK(witness->second == Int(2));
    for (long long m = -15; m <= 15; ++m)
        for (long long n = -15; n <= 15; ++n) {
            if (!knm_hyperbolic(m, n)) continue;
            Int d = Int(m) + Int(1) + Int(n) * Int(m + 1) * Int(m + 1);
            CHECK_FALSE(torus_knot_exclusion(knm_report(m, n).triples, d, 100).has_value());
        }
}

TEST_CASE("name resolution") {
    KnotDesc t(trefoil());
    auto resolved = [&](const std::string& s, long long n) {
        return resolve_name(SurgeryVertex{KnotDesc::twisted(t, s, n), Fraction(-1)});
    };
    CHECK(resolved("c^-6", 1) == NamedKnot::pretzel_m237());
    CHECK(resolved("c^-1", -1) == NamedKnot::trivial());
    CHECK(resolved("c^-1", -2) == NamedKnot::figure_eight());
    CHECK(resolved("c^-1", 2) == NamedKnot::twist_knot(3));
    CHECK(resolved("c", -1) == NamedKnot::pretzel_333());
    CHECK_FALSE(resolved("c^-6", 2).has_value());
    CHECK_FALSE(resolved("c", 1).has_value());
    CHECK_FALSE(resolve_name(SurgeryVertex{t, Fraction(-1)}).has_value());
}

TEST_CASE("the genus-one family") {
    KpReport r1 = kp_report(-1);
    CHECK(r1.vertex.knot == KnotDesc(NamedKnot::pretzel_333()));
    CHECK(r1.vertex.slope == Fraction(-1));
    CHECK(r1.triple == OrbifoldTriple(2, 7, 5));
    CHECK(r1.hyperbolic);
    CHECK(r1.genus_one);

    KpReport r0 = kp_report(0);
    CHECK(r0.vertex.knot == KnotDesc(trefoil()));
    CHECK(r0.triple == OrbifoldTriple(2, 3, 5));
    CHECK_FALSE(r0.hyperbolic);

    CHECK(kp_report(2).triple == OrbifoldTriple(2, 23, 5));
    for (long long p = -50; p <= 50; ++p) {
        KpReport r = kp_report(p);
        CHECK(r.triple == OrbifoldTriple(2, abs(Int(10 * p + 3)), 5));
        CHECK(r.hyperbolic == (p != 0));
        CHECK(r.vertex.slope == Fraction(-1));
    }
}

TEST_CASE("primitive/Seifert-fibered obstruction") {
    CHECK_FALSE(ps_construction_excluded(0));
    CHECK(ps_construction_excluded(-1));
    CHECK(ps_construction_excluded(5));
    for (long long p = -100; p <= 100; ++p)
        CHECK(ps_construction_excluded(p) == (p != 0));
}
