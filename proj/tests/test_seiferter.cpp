#include <doctest.h>

#include "seifnet/seiferter.hpp"

using namespace seifnet;

TEST_CASE("knot descriptors canonicalize") {
    KnotDesc t(trefoil());
    CHECK(KnotDesc::twisted(t, "c^-6", 0) == t);
    KnotDesc once = KnotDesc::twisted(t, "c^-6", 1);
    CHECK(KnotDesc::twisted(once, "c^-6", -1) == t);
    CHECK(KnotDesc::twisted(once, "c^-6", 2) == KnotDesc::twisted(t, "c^-6", 3));
    CHECK(once.to_string() == "twist(T(-3,2); c^-6; 1)");
    CHECK(KnotDesc(NamedKnot::twist_knot(0)) == KnotDesc(NamedKnot::trivial()));
    CHECK(KnotDesc(NamedKnot::twist_knot(-1)) == KnotDesc(NamedKnot::figure_eight()));
    CHECK(NamedKnot::twist_knot(3).to_string() == "Tw(3)");
}

TEST_CASE("twist: slope rule m + n lk^2") {
    SurgeryVertex v6{KnotDesc(trefoil()), Fraction(-6)};
    SurgeryVertex w = twist(v6, cm_family(-6), 1); // lk 5
    CHECK(w.slope == Fraction(19));

    SurgeryVertex v1{KnotDesc(trefoil()), Fraction(-1)};
    for (long long n = -4; n <= 4; ++n)
        CHECK(twist(v1, cm_family(-1), n).slope == Fraction(-1)); // lk 0

    CHECK(twist(v6, cm_family(-6), 0) == v6);
    CHECK_THROWS_AS(twist(SurgeryVertex{KnotDesc(trefoil()), Fraction(1, 2)}, cm_family(-6), 1),
                    std::invalid_argument);
}

TEST_CASE("twist is a group action in slope and descriptor") {
    SeiferterDesc s = cm_family(-6);
    SurgeryVertex v{KnotDesc(trefoil()), Fraction(-6)};
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b)
            CHECK(twist(twist(v, s, a), s, b) == twist(v, s, a + b));
}

TEST_CASE("twisting along the meridian moves the slope only") {
    SeiferterDesc cmu = basic_seiferter_data(trefoil(), BasicSeiferterKind::CMu);
    SurgeryVertex v{KnotDesc(trefoil()), Fraction(-1)};
    SurgeryVertex w = twist(v, cmu, 3);
    CHECK(w.knot == KnotDesc(trefoil()));
    CHECK(w.slope == Fraction(2));
}

TEST_CASE("c^m family data") {
    CHECK(cm_family(-6).lk_with_knot == Int(5));
    CHECK(cm_family(-1).lk_with_knot == Int(0));
    for (long long m = -50; m <= 50; ++m) {
        SeiferterDesc cm = cm_family(m);
        CHECK(cm.lk_with_knot == abs(Int(m + 1)));
        CHECK(cm.role_at(m).has_value());
        CHECK(cm.role_at(m - 1).has_value());
        CHECK(cm.role_at(m - 2).has_value());
        CHECK_FALSE(cm.role_at(m + 1).has_value());
        CHECK(cm.role_at(m)->kind == FiberRole::Kind::Meridian);
        CHECK(cm.role_at(m - 1)->index == Int(3));
        CHECK(cm.role_at(m - 1)->framing_shift == Int(m + 3));
        CHECK(cm.role_at(m - 2)->index == Int(2));
        CHECK(cm.role_at(m - 2)->framing_shift == Int(m + 4));
        // chain-of-moves invariant for the framing shifts
        CHECK(cm.role_at(m - 1)->framing_shift == framing_after_m_move(0, 2, m - 1));
        CHECK(cm.role_at(m - 2)->framing_shift == framing_after_m_move(0, 3, m - 2));
    }
}

TEST_CASE("seiferter status table") {
    CHECK(seiferter_status(1) == SeiferterStatus::hyperbolic());
    CHECK(seiferter_status(-5) ==
          SeiferterStatus::cable(BasicSeiferterKind::SP, Fraction(-1, 2)));
    CHECK(seiferter_status(-4) == SeiferterStatus::basic_kind(BasicSeiferterKind::SQ));
    CHECK(seiferter_status(-3) == SeiferterStatus::basic_kind(BasicSeiferterKind::SP));
    CHECK(seiferter_status(-2) == SeiferterStatus::basic_kind(BasicSeiferterKind::CMu));
    for (long long m = -40; m <= 40; ++m)
        CHECK((seiferter_status(m) == SeiferterStatus::hyperbolic()) == (m < -5 || m > -2));
}

TEST_CASE("index after twist: fixed values") {
    // role c_2 of c^-6, ambient slope -7, one twist
    CHECK(index_after_twist(cm_family(-6), -7, 1) == Int(8));
    // zero twist recovers the original index
    for (long long m = -10; m <= 10; ++m) {
        CHECK(index_after_twist(cm_family(m), m, 0) == abs(Int(m + 6)));
        CHECK(index_after_twist(cm_family(m), m - 1, 0) == Int(3));
        CHECK(index_after_twist(cm_family(m), m - 2, 0) == Int(2));
    }
    CHECK_THROWS_AS(index_after_twist(cm_family(-6), 5, 1), std::domain_error);
}

TEST_CASE("index after twist agrees with the closed forms on the grid") {
    for (long long m = -50; m <= 50; ++m) {
        SeiferterDesc cm = cm_family(m);
        for (long long n = -50; n <= 50; ++n) {
            Int a = abs(Int(n) * Int(m + 2) * Int(m + 6) + Int(m) + Int(n) + Int(6));
            Int b = abs(Int(3) * Int(n) * Int(m + 3) - Int(2) * Int(n) + Int(3));
            Int c = abs(Int(2) * Int(n) * Int(m + 4) - Int(3) * Int(n) + Int(2));
            CHECK(index_after_twist(cm, m, n) == a);
            CHECK(index_after_twist(cm, m - 1, n) == b);
            CHECK(index_after_twist(cm, m - 2, n) == c);
        }
    }
}

TEST_CASE("the seiferter c") {
    SeiferterDesc c = seiferter_c();
    CHECK(c.lk_with_knot == Int(0));
    CHECK(c.status == SeiferterStatus::hyperbolic());
    CHECK(c.role_at(-1).has_value());
    CHECK(c.role_at(-1)->framing_shift == Int(4));
    CHECK_FALSE(c.role_at(0).has_value());
    CHECK(index_after_twist(c, -1, -1) == Int(7));
    CHECK(index_after_twist(c, -1, 0) == Int(3));
    CHECK(index_after_twist(c, -1, 1) == Int(13));
    for (long long p = -30; p <= 30; ++p)
        CHECK(index_after_twist(c, -1, p) == abs(Int(10 * p + 3)));
    CHECK(triple_after_twist(c, -1, -1) == OrbifoldTriple(2, 7, 5));
}

TEST_CASE("the linking table is consistent with the c^m family") {
    // |lk(T, c_i^m)| = |m+i| equals the lk of c^{m+i-1} in all three roles
    for (long long m = -20; m <= 20; ++m) {
        CHECK(abs(pair_lk(m, PairCurve::T, PairCurve::C1)) == cm_family(m).lk_with_knot);
        CHECK(abs(pair_lk(m, PairCurve::T, PairCurve::C2)) == cm_family(m + 1).lk_with_knot);
        CHECK(abs(pair_lk(m, PairCurve::T, PairCurve::C3)) == cm_family(m + 2).lk_with_knot);
    }
}

TEST_CASE("pairwise linking table") {
    for (long long m = -8; m <= 8; ++m) {
        CHECK(pair_lk(m, PairCurve::C1, PairCurve::S2) == Int(3));
        CHECK(pair_lk(m, PairCurve::C2, PairCurve::C1) == Int(m + 3));
        CHECK(pair_lk(m, PairCurve::C3, PairCurve::CMu) == Int(1));
        CHECK(pair_lk(m, PairCurve::C3, PairCurve::C1) == Int(m + 4));
        CHECK(pair_lk(m, PairCurve::C3, PairCurve::C2) == Int(m + 4));
        CHECK(pair_lk(m, PairCurve::T, PairCurve::C2) == Int(m + 2));
        CHECK(pair_lk(m, PairCurve::T, PairCurve::SM3) == Int(2));
        CHECK_THROWS_AS(pair_lk(m, PairCurve::CMu, PairCurve::C1), excluded_pair_error);
        CHECK_THROWS_AS(pair_lk(m, PairCurve::SM3, PairCurve::C2), excluded_pair_error);
        CHECK_THROWS_AS(pair_lk(m, PairCurve::S2, PairCurve::C3), excluded_pair_error);
        CHECK_THROWS_AS(pair_lk(m, PairCurve::CMu, PairCurve::SM3), std::invalid_argument);
    }
}

TEST_CASE("equal-linking-number filter") {
    using F = PairFamily;
    auto expect = [](Int m, std::vector<F> want) {
        std::vector<F> got = same_lk_filter(m);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    };
    expect(-5, {F::SM3C3, F::S2C2});
    expect(-4, {F::CMuC3, F::S2C1});
    expect(-3, {F::CMuC2, F::SM3C1});
    expect(-2, {F::CMuC3});
    expect(-1, {F::CMuC2, F::SM3C3});
    expect(0, {});
    expect(1, {F::SM3C1, F::S2C2});
    expect(2, {F::S2C1});
    for (long long m = 3; m <= 50; ++m) expect(m, {});
    for (long long m = -50; m <= -6; ++m) expect(m, {});
}

TEST_CASE("basic annular candidates") {
    using F = PairFamily;
    auto names = [](Int m) {
        std::vector<std::pair<F, bool>> out;
        for (const AnnularCandidate& c : basic_annular_candidates(m))
            out.emplace_back(c.family, c.rejected);
        return out;
    };
    CHECK(names(-3) == std::vector<std::pair<F, bool>>{{F::C1C2, false}});
    CHECK(names(-4) == std::vector<std::pair<F, bool>>{
                           {F::C1C2, false}, {F::C1C3, false}, {F::C2C3, false}});
    CHECK(names(-5) == std::vector<std::pair<F, bool>>{{F::C2C3, false}});
    CHECK(names(-6) == std::vector<std::pair<F, bool>>{{F::SM3C3, false}});
    CHECK(names(0) == std::vector<std::pair<F, bool>>{{F::SM3C3, true}});
    CHECK(names(5).empty());
    CHECK(names(-20).empty());
    // candidates only come from families defined at m and never from an
    // excluded table combination
    for (long long m = -30; m <= 30; ++m)
        for (const AnnularCandidate& c : basic_annular_candidates(m)) {
            CHECK(family_defined_at(c.family, m));
            CHECK_NOTHROW(pair_lk(m, family_first(c.family), family_second(c.family)));
        }
}

TEST_CASE("annular pair status rule") {
    using F = PairFamily;
    CHECK(annular_pair_status(F::SM3C3, -5) == AnnularPairStatus::Irrelevant);
    CHECK(annular_pair_status(F::S2C2, -5) == AnnularPairStatus::Irrelevant);
    CHECK(annular_pair_status(F::C1C2, -3) == AnnularPairStatus::Basic);
    CHECK(annular_pair_status(F::C1C2, -4) == AnnularPairStatus::Basic);
    CHECK(annular_pair_status(F::C2C3, -5) == AnnularPairStatus::Basic);
    CHECK(annular_pair_status(F::SM3C3, -6) == AnnularPairStatus::Basic);
    CHECK(annular_pair_status(F::CMuC2, -4) == AnnularPairStatus::Hyperbolic);
    CHECK(annular_pair_status(F::SM3C3, 0) == AnnularPairStatus::Hyperbolic); // rejected candidate
    CHECK(annular_pair_status(F::C1C2, -6) == AnnularPairStatus::Unknown);
    // nine hyperbolic pairs for m <= -8 or m >= -1
    for (long long m : {-8, -15, -1, 0, 12}) {
        int hyperbolic = 0;
        for (PairFamily f : all_pair_families)
            if (annular_pair_status(f, m) == AnnularPairStatus::Hyperbolic) ++hyperbolic;
        CHECK(hyperbolic == 9);
    }
    // six hyperbolic annular pairs at m = -4 (the c_i/c_j ones are basic)
    int hyperbolic4 = 0;
    for (PairFamily f : all_pair_families)
        if (annular_pair_status(f, -4) == AnnularPairStatus::Hyperbolic) ++hyperbolic4;
    CHECK(hyperbolic4 == 6);
    CHECK_FALSE(has_hyperbolic_seiferter(-4).has_value());
    CHECK(has_hyperbolic_seiferter(-5) == true);
    CHECK(has_hyperbolic_seiferter(3) == true);
}

TEST_CASE("lens-slope pair two-bridge fractions") {
    CHECK(pair_two_bridge_sm3_c2(0) == Fraction(4, 1));
    CHECK(pair_two_bridge_sm3_c2(1) == Fraction(10, 3));
    CHECK(pair_two_bridge_sm3_c2(-1) == Fraction(2, 1)); // -2/-1, the Hopf link
    CHECK(pair_two_bridge_s2_c3(-1) == Fraction(4, 1));
    CHECK(pair_two_bridge_s2_c3(-2) == Fraction(2, 1));
}

TEST_CASE("the {c_mu, c_1^m} pair at the lens slopes") {
    CHECK(cmu_c1_pair_annular(-5) == true);
    CHECK(cmu_c1_pair_annular(-7) == false);
    CHECK_FALSE(cmu_c1_pair_annular(-6).has_value());
    CHECK_FALSE(cmu_c1_pair_annular(0).has_value());
}
