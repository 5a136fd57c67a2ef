/**
 * @file homology.hpp
 * @brief Exact arithmetic on first-homology classes of torus boundaries.
 *
 * Everything here is a value type and every function is pure. Integers are
 * 64-bit with overflow checking; an overflow throws instead of wrapping, so
 * grid sweeps over large parameter ranges cannot silently corrupt results.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace seifnet {

/// Overflow-checked 64-bit integer. Arithmetic throws std::overflow_error
/// instead of wrapping.
class Int {
public:
    constexpr Int() noexcept = default;
    constexpr Int(long long v) noexcept : v_(v) {}
    constexpr Int(long v) noexcept : v_(v) {}
    constexpr Int(int v) noexcept : v_(v) {}

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return v_; }

    friend Int operator+(Int a, Int b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: add overflow");
        return Int(r);
    }
    friend Int operator-(Int a, Int b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: sub overflow");
        return Int(r);
    }
    friend Int operator*(Int a, Int b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: mul overflow");
        return Int(r);
    }
    friend Int operator-(Int a) { return Int(0) - a; }

    Int& operator+=(Int b) { *this = *this + b; return *this; }
    Int& operator-=(Int b) { *this = *this - b; return *this; }
    Int& operator*=(Int b) { *this = *this * b; return *this; }

    friend constexpr bool operator==(Int a, Int b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Int a, Int b) noexcept { return a.v_ != b.v_; }
    friend constexpr bool operator<(Int a, Int b) noexcept { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Int a, Int b) noexcept { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Int a, Int b) noexcept { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Int a, Int b) noexcept { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Int v);

private:
    std::int64_t v_ = 0;
};

Int abs(Int a);
Int gcd(Int a, Int b);

/// Floor division (rounds toward -inf); b must be nonzero.
Int floor_div(Int a, Int b);

std::string to_string(Int v);

/// Reduced rational with den >= 0. den = 0 is permitted only for the
/// infinity slope, stored canonically as 1/0.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int num) : num_(num), den_(1) {}
    Fraction(int num) : num_(num), den_(1) {}
    Fraction(long long num) : num_(num), den_(1) {}
    Fraction(Int num, Int den);

    static Fraction infinity() { return Fraction(1, 0); }

    [[nodiscard]] Int num() const { return num_; }
    [[nodiscard]] Int den() const { return den_; }
    [[nodiscard]] bool is_infinite() const { return den_ == Int(0); }
    [[nodiscard]] bool is_integer() const { return den_ == Int(1); }
    [[nodiscard]] bool is_zero() const { return num_ == Int(0) && !is_infinite(); }

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a);

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b);

    [[nodiscard]] std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f);

private:
    void normalize();
    Int num_, den_;
};

Fraction abs(const Fraction& f);

/// Integer homology class a[lambda] + b[mu] on a boundary torus with a fixed
/// preferred meridian-longitude basis.
struct CurveClass {
    Int lambda_coeff;
    Int mu_coeff;

    friend CurveClass operator+(const CurveClass& x, const CurveClass& y) {
        return {x.lambda_coeff + y.lambda_coeff, x.mu_coeff + y.mu_coeff};
    }
    friend CurveClass operator-(const CurveClass& x) { return {-x.lambda_coeff, -x.mu_coeff}; }
    friend CurveClass operator*(Int k, const CurveClass& x) {
        return {k * x.lambda_coeff, k * x.mu_coeff};
    }
    friend bool operator==(const CurveClass& x, const CurveClass& y) {
        return x.lambda_coeff == y.lambda_coeff && x.mu_coeff == y.mu_coeff;
    }
    friend bool operator!=(const CurveClass& x, const CurveClass& y) { return !(x == y); }

    /// A simple closed curve has coprime coefficients (or is the zero class).
    [[nodiscard]] bool is_curve() const;

    [[nodiscard]] std::string to_string() const;
};

/// Throws std::logic_error when a class promised to be a curve is not one.
CurveClass require_curve(const CurveClass& c);

/// Algebraic intersection number. Sign convention is fixed module-wide by
/// [mu]·[lambda] = +1 on every boundary torus.
Int intersection(const CurveClass& x, const CurveClass& y);

/// Framing change under a single m-move: n -> n + 2·lk + m.
Int framing_after_m_move(Int framing, Int lk, Int m);

/// Possible linking numbers after a single m-move: {lk + m, lk - m},
/// returned sorted ascending.
std::pair<Int, Int> lk_after_m_move(Int lk, Int m);

/// Boundary slope of the planar surface on the band-summed component:
/// m + p + 2·lk.
Int band_sum_boundary_slope(Int p, Int m, Int lk);

/// Image of the (-1/n)-surgery slope on a seiferter that is an exceptional
/// fiber, under the identification f([mu_c]) = [mu], f([lambda_c]) =
/// [lambda] - shift·[mu]. Returns (-n)[lambda] + (n·shift + 1)[mu].
CurveClass slope_image_fiber_case(Int framing_shift, Int n);

/// Image of the (-1/n)-surgery slope when the seiferter is isotopic to the
/// core of the filled solid torus, in the knot-boundary basis:
/// (n(m+2)+1)[lambda'] + (mn(m+2)+m+n)[mu'].
CurveClass slope_image_meridian_case(Int m, Int n);

} // namespace seifnet

template <>
struct std::hash<seifnet::Int> {
    std::size_t operator()(seifnet::Int v) const noexcept {
        return std::hash<std::int64_t>{}(v.value());
    }
};
