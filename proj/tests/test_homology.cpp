#include <doctest.h>

#include <random>

#include "seifnet/homology.hpp"

using namespace seifnet;

TEST_CASE("checked integers refuse to wrap") {
    Int big = INT64_MAX;
    CHECK_THROWS_AS(big + Int(1), std::overflow_error);
    CHECK_THROWS_AS(big * Int(2), std::overflow_error);
    CHECK(Int(-7) + Int(7) == Int(0));
    CHECK(abs(Int(-9)) == Int(9));
    CHECK(floor_div(Int(-7), Int(2)) == Int(-4));
    CHECK(floor_div(Int(7), Int(2)) == Int(3));
}

TEST_CASE("fractions normalize to reduced form with positive denominator") {
    CHECK(Fraction(6, -4) == Fraction(-3, 2));
    CHECK(Fraction(0, 5) == Fraction(0));
    CHECK(Fraction(-2, -1) == Fraction(2));
    CHECK(Fraction(-1, 0) == Fraction::infinity());
    CHECK(Fraction(5, 0).is_infinite());
    CHECK_THROWS_AS(Fraction(0, 0), std::domain_error);
    CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
    CHECK(Fraction(1, 2) * Fraction(2, 3) == Fraction(1, 3));
    CHECK(Fraction(1, 2) / Fraction(1, 4) == Fraction(2));
    CHECK(Fraction(1, 2).to_string() == "1/2");
    CHECK(Fraction(-3).to_string() == "-3");
}

TEST_CASE("intersection pairing: fixed examples") {
    CHECK(intersection({1, 0}, {1, 0}) == Int(0));
    // meridian against longitude is +1 by the module convention
    CHECK(intersection({0, 1}, {1, 0}) == Int(1));
    // |(-1,-1)·(-3,2)| agrees with |3n(m+3)-2n+3| at (m,n)=(-5,1)
    CHECK(abs(intersection({-1, -1}, {-3, 2})) == Int(5));
    CHECK(abs(Int(3) * 1 * Int(-5 + 3) - Int(2) + Int(3)) == Int(5));
}

TEST_CASE("intersection pairing: antisymmetry and bilinearity") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> coeff(-500, 500);
    for (int i = 0; i < 10000; ++i) {
        CurveClass x{coeff(rng), coeff(rng)};
        CurveClass y{coeff(rng), coeff(rng)};
        CurveClass z{coeff(rng), coeff(rng)};
        CHECK(intersection(x, y) == -intersection(y, x));
        CHECK(intersection(x + z, y) == intersection(x, y) + intersection(z, y));
    }
}

TEST_CASE("framing change under m-moves") {
    CHECK(framing_after_m_move(0, 2, -1) == Int(3));
    CHECK(framing_after_m_move(3, 1, -1) == Int(4));
    CHECK(framing_after_m_move(17, 0, 0) == Int(17));
    // affine in each argument; two moves compose additively
    for (long long lk = -5; lk <= 5; ++lk)
        for (long long m = -5; m <= 5; ++m) {
            CHECK(framing_after_m_move(1, lk, m) - framing_after_m_move(0, lk, m) == Int(1));
            CHECK(framing_after_m_move(0, lk + 1, m) - framing_after_m_move(0, lk, m) == Int(2));
        }
    CHECK(framing_after_m_move(framing_after_m_move(0, 2, -1), 1, -1) == Int(4));
}

TEST_CASE("linking number after an m-move is one of lk ± m") {
    CHECK(lk_after_m_move(1, -1) == std::make_pair(Int(0), Int(2)));
    CHECK(lk_after_m_move(7, 0) == std::make_pair(Int(7), Int(7)));
    CHECK(lk_after_m_move(2, -5) == std::make_pair(Int(-3), Int(7)));
    // |-3| = |m+2| at m = -5, consistent with the c_2 linking row
    CHECK(abs(Int(-3)) == abs(Int(-5 + 2)));
}

TEST_CASE("band-sum boundary slope") {
    CHECK(band_sum_boundary_slope(-1, -5, 2) == Int(-2));
    CHECK(band_sum_boundary_slope(-2, -5, 3) == Int(-1));
    CHECK(band_sum_boundary_slope(0, 0, 0) == Int(0));
}

TEST_CASE("slope image, exceptional-fiber case") {
    CHECK(slope_image_fiber_case(-6 + 3, 1) == CurveClass{-1, -2});
    CHECK(slope_image_fiber_case(123, 0) == CurveClass{0, 1});
    for (long long p = -6; p <= 6; ++p)
        CHECK(slope_image_fiber_case(4, p) == CurveClass{-p, 4 * p + 1});
}

TEST_CASE("slope image, meridian case") {
    for (long long m = -10; m <= 10; ++m)
        CHECK(slope_image_meridian_case(m, 0) == CurveClass{1, m});
    // (-3, 19): its pairing with the trefoil fiber class has absolute value
    // |n(m+2)(m+6)+m+n+6| = 1 at (m,n) = (-6,1)
    CHECK(slope_image_meridian_case(-6, 1) == CurveClass{-3, 19});
    CHECK(abs(intersection(slope_image_meridian_case(-6, 1), {1, -6})) == Int(1));
    CHECK(slope_image_meridian_case(0, 1) == CurveClass{3, 1});
    CHECK(abs(intersection(slope_image_meridian_case(0, 1), {1, -6})) == Int(19));
}

TEST_CASE("slope images are always curve classes") {
    for (long long k = -20; k <= 20; ++k)
        for (long long n = -20; n <= 20; ++n) {
            CHECK(slope_image_fiber_case(k, n).is_curve());
            CHECK(slope_image_meridian_case(k, n).is_curve());
        }
}

TEST_CASE("fiber-case pairing agrees with its symbolic expansion") {
    for (long long k = -12; k <= 12; ++k)
        for (long long n = -12; n <= 12; ++n)
            for (long long a = -4; a <= 4; ++a)
                for (long long b = -4; b <= 4; ++b) {
                    Int lhs = abs(intersection(slope_image_fiber_case(k, n), {a, b}));
                    Int rhs = abs(-Int(n) * b - (Int(n) * k + Int(1)) * a);
                    CHECK(lhs == rhs);
                }
}
