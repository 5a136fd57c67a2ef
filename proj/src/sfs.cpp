#include "seifnet/sfs.hpp"

#include <algorithm>

namespace seifnet {

static void check_non_negative(const std::vector<Int>& v) {
    for (Int i : v)
        if (i < Int(0)) throw std::invalid_argument("orbifold index must be non-negative");
}

OrbifoldTriple::OrbifoldTriple(Int a, Int b, Int c) : indices_{a, b, c} {
    check_non_negative(indices_);
    std::sort(indices_.begin(), indices_.end());
}

OrbifoldTriple::OrbifoldTriple(std::vector<Int> indices) : indices_(std::move(indices)) {
    check_non_negative(indices_);
    std::sort(indices_.begin(), indices_.end());
}

OrbifoldTriple OrbifoldTriple::normalized() const {
    std::vector<Int> kept;
    for (Int i : indices_)
        if (i != Int(1)) kept.push_back(i);
    return OrbifoldTriple(std::move(kept));
}

std::string OrbifoldTriple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) s += ",";
        s += seifnet::to_string(indices_[i]);
    }
    return s + ")";
}

SfsClass SfsClass::lens(Int p, std::optional<Int> q) {
    if (p < Int(0)) p = -p;
    if (p == Int(0)) return s1xs2();
    if (p == Int(1)) return sphere();
    SfsClass c;
    c.kind = SfsKind::Lens;
    c.lens_p = p;
    c.lens_q = q;
    return c;
}

SfsClass SfsClass::lens_shape_only() {
    SfsClass c;
    c.kind = SfsKind::Lens;
    c.lens_by_shape = true;
    return c;
}

SfsClass SfsClass::small_sfs_over(OrbifoldTriple t) {
    SfsClass c;
    c.kind = SfsKind::SmallSfs;
    c.small_sfs = std::move(t);
    return c;
}

SfsClass SfsClass::sfs_over_disk(Int a, Int b) {
    SfsClass c;
    c.kind = SfsKind::SfsOverDisk;
    c.disk_pair = {a, b};
    return c;
}

bool operator==(const SfsClass& a, const SfsClass& b) {
    return a.kind == b.kind && a.lens_p == b.lens_p && a.lens_q == b.lens_q &&
           a.lens_by_shape == b.lens_by_shape && a.small_sfs == b.small_sfs &&
           a.disk_pair == b.disk_pair;
}

std::string SfsClass::to_string() const {
    switch (kind) {
    case SfsKind::Sphere: return "S3";
    case SfsKind::S1xS2: return "S1xS2";
    case SfsKind::Lens:
        if (lens_p) {
            std::string q = lens_q ? seifnet::to_string(*lens_q) : "?";
            return "L(" + seifnet::to_string(*lens_p) + "," + q + ")";
        }
        return "lens";
    case SfsKind::ConnSumLens: return "lens # lens";
    case SfsKind::SmallSfs: return "SFS" + small_sfs.to_string();
    case SfsKind::SfsOverDisk:
        return "SFS_D2(" + seifnet::to_string(disk_pair[0]) + "," +
               seifnet::to_string(disk_pair[1]) + ")";
    case SfsKind::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string SfsClass::tag() const {
    switch (kind) {
    case SfsKind::Sphere: return "sphere";
    case SfsKind::S1xS2: return "s1xs2";
    case SfsKind::Lens: return "lens";
    case SfsKind::ConnSumLens: return "conn-sum-lens";
    case SfsKind::SmallSfs: return "small-sfs";
    case SfsKind::SfsOverDisk: return "sfs-over-disk";
    case SfsKind::Indeterminate: return "indeterminate";
    }
    return "?";
}

SfsClass classify_triple(const OrbifoldTriple& t) {
    OrbifoldTriple n = t.normalized();
    if (n.size() > 3) throw std::invalid_argument("more than 3 exceptional fibers: " + t.to_string());

    bool degenerate = false;
    std::vector<Int> genuine; // indices >= 2
    for (Int i : n.indices()) {
        if (i == Int(0))
            degenerate = true;
        else
            genuine.push_back(i);
    }

    if (degenerate) {
        // A degenerate fibration gives a lens space or a connected sum of
        // two lens spaces, depending on how many genuine fibers remain.
        if (genuine.size() >= 2) return SfsClass::conn_sum_lens();
        if (genuine.size() == 1) return SfsClass::lens(genuine[0], std::nullopt);
        return SfsClass::indeterminate();
    }

    if (genuine.size() == 3) return SfsClass::small_sfs_over(n);
    if (genuine.size() == 2) return SfsClass::lens_shape_only();
    return SfsClass::indeterminate();
}

static Int pos_mod(Int a, Int p) {
    // representative of a mod p in [0, p)
    Int r = a - floor_div(a, p) * p;
    return r;
}

static Int mod_inverse(Int q, Int p) {
    // p >= 2, gcd(q, p) = 1; extended euclid
    std::int64_t a = pos_mod(q, p).value(), m = p.value();
    std::int64_t x0 = 0, x1 = 1, r0 = m, r1 = a;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        std::int64_t r2 = r0 - k * r1;
        std::int64_t x2 = x0 - k * x1;
        r0 = r1; r1 = r2; x0 = x1; x1 = x2;
    }
    if (r0 != 1) throw std::domain_error("lens q not coprime to p");
    return pos_mod(Int((long long)x0), p);
}

bool lens_equivalent(const SfsClass& a, const SfsClass& b, bool oriented) {
    if (a.kind != SfsKind::Lens || b.kind != SfsKind::Lens)
        throw std::invalid_argument("lens_equivalent: not lens descriptors");
    if (!a.lens_p || !b.lens_p || !a.lens_q || !b.lens_q) throw incomparable_lens_error();
    Int p = *a.lens_p;
    if (p != *b.lens_p) return false;
    Int q = pos_mod(*a.lens_q, p);
    Int q2 = pos_mod(*b.lens_q, p);
    Int qi = mod_inverse(q, p);
    if (q2 == q || q2 == qi) return true;
    if (!oriented && (q2 == pos_mod(-q, p) || q2 == pos_mod(-qi, p))) return true;
    return false;
}

Fraction euler_number(const std::vector<Fraction>& fractions) {
    Fraction sum(0);
    for (const Fraction& f : fractions) sum = sum + f;
    return sum;
}

TwoBridge::TwoBridge(Fraction f) {
    if (f.is_infinite()) throw std::domain_error("TwoBridge: infinite fraction");
    Int p = f.num(), q = f.den();
    if (p == Int(0)) throw std::domain_error("TwoBridge: zero bridge number");
    if (p < Int(0)) {
        p = -p;
        q = -q;
    }
    // truncation remainder lands in (-p, p)
    q = p == Int(1) ? Int(0) : Int(q.value() % p.value());
    p_ = p;
    q_ = q;
}

std::string TwoBridge::to_string() const {
    return seifnet::to_string(p_) + "/" + seifnet::to_string(q_);
}

bool two_bridge_is_torus_link(const TwoBridge& t) {
    Int p = t.p();
    if (p == Int(1)) return true; // unknot
    Int q = pos_mod(t.q(), p);
    return q == Int(1) || q == pos_mod(Int(-1), p);
}

std::vector<Int> continued_fraction(Fraction f) {
    if (f.is_infinite()) throw std::domain_error("continued_fraction: infinite fraction");
    std::vector<Int> terms;
    for (;;) {
        Int a = floor_div(f.num(), f.den());
        terms.push_back(a);
        Fraction rem = f - Fraction(a);
        if (rem.is_zero()) break;
        f = Fraction(1) / rem;
    }
    return terms;
}

Montesinos::Montesinos(Fraction t1, Fraction t2, Fraction t3) : tangles_{t1, t2, t3} {
    for (const Fraction& t : tangles_)
        if (t.is_infinite()) throw std::domain_error("Montesinos: tangle with zero denominator");
}

std::array<Fraction, 3> Montesinos::normalized_tangles() const {
    std::array<Fraction, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const Fraction& t = tangles_[i];
        // integer k with t - k in (-1/2, 1/2]: k = ceil((2num - den) / (2den))
        Int num2 = Int(2) * t.num() - t.den();
        Int den2 = Int(2) * t.den();
        Int k = -floor_div(-num2, den2); // ceiling division
        out[i] = t - Fraction(k);
    }
    return out;
}

Montesinos Montesinos::mirror() const {
    return Montesinos(-tangles_[0], -tangles_[1], -tangles_[2]);
}

std::string Montesinos::to_string() const {
    return "M(" + tangles_[0].to_string() + "," + tangles_[1].to_string() + "," +
           tangles_[2].to_string() + ")";
}

static std::vector<Int> denominator_multiset(const Montesinos& m) {
    std::vector<Int> dens;
    for (const Fraction& t : m.normalized_tangles()) dens.push_back(t.den());
    std::sort(dens.begin(), dens.end());
    return dens;
}

bool montesinos_equivalent(const Montesinos& a, const Montesinos& b, bool allow_mirror) {
    Fraction ea = euler_number({a.tangles()[0], a.tangles()[1], a.tangles()[2]});
    Fraction eb = euler_number({b.tangles()[0], b.tangles()[1], b.tangles()[2]});
    if (denominator_multiset(a) != denominator_multiset(b)) return false;
    if (ea == eb) return true;
    return allow_mirror && ea == -eb;
}

MontesinosStatus montesinos_status(const Montesinos& m) {
    for (const Fraction& t : m.normalized_tangles())
        if (t.den() <= Int(1)) throw not_three_tangles_error();
    const Montesinos toroidal(Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 6));
    if (montesinos_equivalent(m, toroidal, /*allow_mirror=*/true))
        return MontesinosStatus::ExceptionalToroidal;
    return MontesinosStatus::Hyperbolic;
}

std::string to_string(MontesinosStatus s) {
    switch (s) {
    case MontesinosStatus::SeifertLink: return "seifert-link";
    case MontesinosStatus::ExceptionalToroidal: return "exceptional-toroidal";
    case MontesinosStatus::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::pair<OrbifoldTriple, Fraction> double_branched_cover(const Montesinos& m) {
    auto dens = denominator_multiset(m);
    Fraction e = euler_number({m.tangles()[0], m.tangles()[1], m.tangles()[2]});
    return {OrbifoldTriple(dens[0], dens[1], dens[2]), e};
}

} // namespace seifnet
