#include "seifnet/homology.hpp"

#include <numeric>
#include <ostream>

namespace seifnet {

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.value(); }

Int abs(Int a) {
    if (a.value() == INT64_MIN) throw std::overflow_error("Int: abs overflow");
    return a.value() < 0 ? -a : a;
}

Int gcd(Int a, Int b) { return Int(std::gcd(abs(a).value(), abs(b).value())); }

Int floor_div(Int a, Int b) {
    if (b == Int(0)) throw std::domain_error("floor_div: zero divisor");
    std::int64_t q = a.value() / b.value();
    std::int64_t r = a.value() % b.value();
    if (r != 0 && ((r < 0) != (b.value() < 0))) --q;
    return Int(q);
}

std::string to_string(Int v) { return std::to_string(v.value()); }

Fraction::Fraction(Int num, Int den) : num_(num), den_(den) {
    if (num_ == Int(0) && den_ == Int(0)) throw std::domain_error("Fraction: 0/0");
    normalize();
}

void Fraction::normalize() {
    if (den_ == Int(0)) {
        num_ = 1; // unoriented infinity slope
        return;
    }
    if (den_ < Int(0)) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == Int(0)) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_, den_);
    num_ = Int(num_.value() / g.value());
    den_ = Int(den_.value() / g.value());
}

static void require_finite(const Fraction& a, const Fraction& b) {
    if (a.is_infinite() || b.is_infinite())
        throw std::domain_error("Fraction: arithmetic on infinity");
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    require_finite(a, b);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    require_finite(a, b);
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    require_finite(a, b);
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    require_finite(a, b);
    if (b.num_ == Int(0)) throw std::domain_error("Fraction: division by zero");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Fraction operator-(const Fraction& a) {
    if (a.is_infinite()) return a;
    return Fraction(-a.num_, a.den_);
}

bool operator<(const Fraction& a, const Fraction& b) {
    require_finite(a, b);
    return a.num_ * b.den_ < b.num_ * a.den_;
}

Fraction abs(const Fraction& f) {
    if (f.is_infinite()) return f;
    return Fraction(abs(f.num()), f.den());
}

std::string Fraction::to_string() const {
    if (is_infinite()) return "1/0";
    if (is_integer()) return seifnet::to_string(num_);
    return seifnet::to_string(num_) + "/" + seifnet::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

bool CurveClass::is_curve() const {
    if (lambda_coeff == Int(0) && mu_coeff == Int(0)) return true; // zero class
    return gcd(lambda_coeff, mu_coeff) == Int(1);
}

std::string CurveClass::to_string() const {
    return "(" + seifnet::to_string(lambda_coeff) + "," + seifnet::to_string(mu_coeff) + ")";
}

CurveClass require_curve(const CurveClass& c) {
    if (!c.is_curve())
        throw std::logic_error("expected a curve class, got " + c.to_string());
    return c;
}

Int intersection(const CurveClass& x, const CurveClass& y) {
    // (a[l]+b[m])·(c[l]+d[m]) = bc - ad, so that [mu]·[lambda] = +1.
    return x.mu_coeff * y.lambda_coeff - x.lambda_coeff * y.mu_coeff;
}

Int framing_after_m_move(Int framing, Int lk, Int m) { return framing + Int(2) * lk + m; }

std::pair<Int, Int> lk_after_m_move(Int lk, Int m) {
    Int a = lk + m;
    Int b = lk - m;
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Int band_sum_boundary_slope(Int p, Int m, Int lk) { return m + p + Int(2) * lk; }

CurveClass slope_image_fiber_case(Int framing_shift, Int n) {
    return require_curve({-n, n * framing_shift + Int(1)});
}

CurveClass slope_image_meridian_case(Int m, Int n) {
    Int s = m + Int(2); // framing shift picked up by the meridian under the m-move
    return require_curve({n * s + Int(1), m * n * s + m + n});
}

} // namespace seifnet
