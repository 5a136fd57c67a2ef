#include "seifnet/seiferter.hpp"

#include <algorithm>

namespace seifnet {

NamedKnot NamedKnot::twist_knot(Int n) {
    if (n == Int(0)) return trivial();
    if (n == Int(-1)) return figure_eight();
    return {Kind::TwistKnot, n};
}

std::string NamedKnot::to_string() const {
    switch (kind) {
    case Kind::Trivial: return "unknot";
    case Kind::TwistKnot: return "Tw(" + seifnet::to_string(n) + ")";
    case Kind::PretzelM237: return "P(-2,3,7)";
    case Kind::Pretzel333: return "P(3,-3,-3)";
    case Kind::FigureEight: return "fig8";
    }
    return "?";
}

KnotDesc KnotDesc::twisted(const KnotDesc& base, const std::string& seiferter, Int n) {
    if (n == Int(0)) return base;
    if (const Twisted* t = base.as_twisted(); t && t->seiferter == seiferter)
        return twisted(*t->base, seiferter, t->n + n);
    KnotDesc d;
    d.v_ = Twisted{std::make_shared<const KnotDesc>(base), seiferter, n};
    return d;
}

std::string KnotDesc::to_string() const {
    if (const TorusKnot* k = as_torus()) return k->to_string();
    if (const NamedKnot* k = as_named()) return k->to_string();
    const Twisted& t = *as_twisted();
    return "twist(" + t.base->to_string() + "; " + t.seiferter + "; " +
           seifnet::to_string(t.n) + ")";
}

std::string SurgeryVertex::to_string() const {
    return "(" + knot.to_string() + ", " + slope.to_string() + ")";
}

bool operator==(const SeiferterStatus& a, const SeiferterStatus& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case SeiferterStatus::Kind::Basic: return a.basic == b.basic;
    case SeiferterStatus::Kind::Cable:
        return a.cable_of == b.cable_of && a.cable_slope == b.cable_slope;
    default: return true;
    }
}

std::string SeiferterStatus::to_string() const {
    switch (kind) {
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Basic: return "basic(" + seifnet::to_string(basic) + ")";
    case Kind::Cable:
        return "(" + seifnet::to_string(cable_slope.num()) + "," +
               seifnet::to_string(cable_slope.den()) + ")-cable(" +
               seifnet::to_string(cable_of) + ")";
    case Kind::Unknown: return "unknown";
    }
    return "?";
}

std::optional<FiberRole> SeiferterDesc::role_at(Int ambient_slope) const {
    if (valid_at_all_slopes) return any_slope_role;
    for (const auto& [slope, role] : roles)
        if (slope == ambient_slope) return role;
    return std::nullopt;
}

bool SeiferterDesc::valid_at(const SurgeryVertex& v) const {
    if (!v.slope.is_integer()) return false;
    const TorusKnot* k = v.knot.as_torus();
    if (!k || *k != knot) return false;
    return role_at(v.slope.num()).has_value();
}

SeiferterDesc basic_seiferter_data(const TorusKnot& k, BasicSeiferterKind which) {
    SeiferterDesc d;
    d.name = basic_seiferter_name(k, which);
    d.lk_with_knot = basic_lk(k, which);
    d.status = SeiferterStatus::basic_kind(which);
    d.knot = k;
    d.valid_at_all_slopes = true;
    if (which == BasicSeiferterKind::CMu) {
        d.preserves_knot = true;
        d.any_slope_role = FiberRole{FiberRole::Kind::Meridian, false, 0, {0, 0}, 0};
    } else {
        d.any_slope_role = FiberRole{FiberRole::Kind::Exceptional, false,
                                     basic_fiber_index(k, which, 0),
                                     basic_fiber_class(k, which), 0};
    }
    return d;
}

SeiferterStatus seiferter_status(Int m) {
    if (m == Int(-5))
        return SeiferterStatus::cable(BasicSeiferterKind::SP, Fraction(-1, 2));
    if (m == Int(-4)) return SeiferterStatus::basic_kind(BasicSeiferterKind::SQ);
    if (m == Int(-3)) return SeiferterStatus::basic_kind(BasicSeiferterKind::SP);
    if (m == Int(-2)) return SeiferterStatus::basic_kind(BasicSeiferterKind::CMu);
    return SeiferterStatus::hyperbolic();
}

SeiferterDesc cm_family(Int m) {
    SeiferterDesc d;
    d.name = "c^" + to_string(m);
    d.lk_with_knot = abs(m + Int(1));
    d.status = seiferter_status(m);
    d.knot = trefoil();
    d.roles = {
        {m, FiberRole{FiberRole::Kind::Meridian, true, 0, {0, 0}, 0}},
        {m - Int(1),
         FiberRole{FiberRole::Kind::Exceptional, true, 3, {-3, 2},
                   framing_after_m_move(0, 2, m - Int(1))}},
        {m - Int(2),
         FiberRole{FiberRole::Kind::Exceptional, true, 2, {2, -3},
                   framing_after_m_move(0, 3, m - Int(2))}},
    };
    return d;
}

SeiferterDesc seiferter_c() {
    SeiferterDesc d;
    d.name = "c";
    d.lk_with_knot = 0;
    d.status = SeiferterStatus::hyperbolic();
    d.knot = trefoil();
    // two (-1)-moves from s_-3: framing 0 -> 3 -> 4
    Int shift = framing_after_m_move(framing_after_m_move(0, 2, -1), 1, -1);
    d.roles = {{Int(-1), FiberRole{FiberRole::Kind::Exceptional, true, 3, {-3, 2}, shift}}};
    return d;
}

SurgeryVertex twist(const SurgeryVertex& v, const SeiferterDesc& s, Int n) {
    if (!v.slope.is_integer())
        throw std::invalid_argument("twist: vertex slope must be integral");
    Int slope = v.slope.num() + n * s.lk_with_knot * s.lk_with_knot;
    KnotDesc knot = s.preserves_knot ? v.knot : KnotDesc::twisted(v.knot, s.name, n);
    return {knot, Fraction(slope)};
}

Int index_after_twist(const SeiferterDesc& s, Int ambient_slope, Int n) {
    std::optional<FiberRole> role = s.role_at(ambient_slope);
    if (!role)
        throw std::domain_error(s.name + " is not a seiferter at slope " +
                                to_string(ambient_slope));
    CurveClass image{0, 0};
    CurveClass fiber{0, 0};
    if (role->kind == FiberRole::Kind::Meridian) {
        image = role->from_m_move ? slope_image_meridian_case(ambient_slope, n)
                                  : require_curve({Int(1), ambient_slope + n});
        fiber = knot_boundary_fiber_class(s.knot);
    } else {
        image = slope_image_fiber_case(role->framing_shift, n);
        fiber = role->fiber_class;
    }
    return abs(intersection(image, fiber));
}

OrbifoldTriple triple_after_twist(const SeiferterDesc& s, Int ambient_slope, Int n) {
    std::optional<FiberRole> role = s.role_at(ambient_slope);
    if (!role)
        throw std::domain_error(s.name + " is not a seiferter at slope " +
                                to_string(ambient_slope));
    Int replaced = role->kind == FiberRole::Kind::Meridian
                       ? abs(s.knot.pq() - ambient_slope)
                       : role->index;
    std::vector<Int> indices = moser_classify(s.knot, Fraction(ambient_slope)).triple.indices();
    auto it = std::find(indices.begin(), indices.end(), replaced);
    if (it == indices.end())
        throw std::logic_error("ambient fibration has no fiber of index " + to_string(replaced));
    *it = index_after_twist(s, ambient_slope, n);
    return OrbifoldTriple(std::move(indices));
}

// ---------------------------------------------------------------------------
// Pair tables
// ---------------------------------------------------------------------------

std::string to_string(PairCurve c) {
    switch (c) {
    case PairCurve::T: return "T";
    case PairCurve::CMu: return "c_mu";
    case PairCurve::SM3: return "s_-3";
    case PairCurve::S2: return "s_2";
    case PairCurve::C1: return "c_1";
    case PairCurve::C2: return "c_2";
    case PairCurve::C3: return "c_3";
    }
    return "?";
}

namespace {

// Table entries: 0 = untabulated, 1 = value, 2 = starred (excluded).
struct LkEntry {
    int state;
    Int value;
};

LkEntry lk_entry(Int m, PairCurve a, PairCurve b) {
    if (a == b) return {0, 0};
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    using P = PairCurve;
    if (a == P::T) {
        switch (b) {
        case P::CMu: return {1, 1};
        case P::SM3: return {1, 2};
        case P::S2: return {1, 3};
        case P::C1: return {1, m + Int(1)};
        case P::C2: return {1, m + Int(2)};
        case P::C3: return {1, m + Int(3)};
        default: break;
        }
    }
    if (a == P::CMu && b == P::C1) return {2, 0};
    if (a == P::CMu && b == P::C2) return {1, 1};
    if (a == P::CMu && b == P::C3) return {1, 1};
    if (a == P::SM3 && b == P::C1) return {1, 2};
    if (a == P::SM3 && b == P::C2) return {2, 0};
    if (a == P::SM3 && b == P::C3) return {1, 1};
    if (a == P::S2 && b == P::C1) return {1, 3};
    if (a == P::S2 && b == P::C2) return {1, 2};
    if (a == P::S2 && b == P::C3) return {2, 0};
    if (a == P::C1 && b == P::C2) return {1, m + Int(3)};
    if (a == P::C1 && b == P::C3) return {1, m + Int(4)};
    if (a == P::C2 && b == P::C3) return {1, m + Int(4)};
    return {0, 0};
}

} // namespace

Int pair_lk(Int m, PairCurve a, PairCurve b) {
    LkEntry e = lk_entry(m, a, b);
    if (e.state == 2) throw excluded_pair_error();
    if (e.state == 0)
        throw std::invalid_argument("linking number of {" + to_string(a) + ", " + to_string(b) +
                                    "} is not tabulated");
    return e.value;
}

PairCurve family_first(PairFamily f) {
    switch (f) {
    case PairFamily::CMuC2:
    case PairFamily::CMuC3: return PairCurve::CMu;
    case PairFamily::SM3C1:
    case PairFamily::SM3C3: return PairCurve::SM3;
    case PairFamily::S2C1:
    case PairFamily::S2C2: return PairCurve::S2;
    case PairFamily::C1C2:
    case PairFamily::C1C3: return PairCurve::C1;
    case PairFamily::C2C3: return PairCurve::C2;
    }
    throw std::logic_error("family_first");
}

PairCurve family_second(PairFamily f) {
    switch (f) {
    case PairFamily::SM3C1:
    case PairFamily::S2C1: return PairCurve::C1;
    case PairFamily::CMuC2:
    case PairFamily::S2C2:
    case PairFamily::C1C2: return PairCurve::C2;
    case PairFamily::CMuC3:
    case PairFamily::SM3C3:
    case PairFamily::C1C3:
    case PairFamily::C2C3: return PairCurve::C3;
    }
    throw std::logic_error("family_second");
}

bool family_one_band(PairFamily f) {
    switch (f) {
    case PairFamily::C1C2:
    case PairFamily::C1C3:
    case PairFamily::C2C3: return false;
    default: return true;
    }
}

bool family_defined_at(PairFamily f, Int m) {
    if (m == Int(-5) && (f == PairFamily::SM3C3 || f == PairFamily::S2C2)) return false;
    return true;
}

static std::string curve_display(PairCurve c, Int m) {
    switch (c) {
    case PairCurve::C1: return "c_1^" + to_string(m);
    case PairCurve::C2: return "c_2^" + to_string(m);
    case PairCurve::C3: return "c_3^" + to_string(m);
    default: return to_string(c);
    }
}

std::string family_name(PairFamily f, Int m) {
    return "{" + curve_display(family_first(f), m) + ", " + curve_display(family_second(f), m) +
           "}";
}

std::array<Int, 3> family_lk_triple(PairFamily f, Int m) {
    PairCurve a = family_first(f), b = family_second(f);
    return {abs(pair_lk(m, PairCurve::T, a)), abs(pair_lk(m, PairCurve::T, b)),
            abs(pair_lk(m, a, b))};
}

std::vector<PairFamily> same_lk_filter(Int m) {
    // Applies to the six one-band families, including the two pairs excluded
    // as annular pairs at m = -5 (equal linking numbers are exactly what
    // flags them).
    std::vector<PairFamily> out;
    for (PairFamily f : all_pair_families) {
        if (!family_one_band(f)) continue;
        auto t = family_lk_triple(f, m);
        if (t[0] == t[1]) out.push_back(f);
    }
    return out;
}

namespace {

// superscript of c^* equal to the given c_i^m
Int cm_superscript(PairCurve c, Int m) {
    switch (c) {
    case PairCurve::C1: return m;
    case PairCurve::C2: return m + Int(1);
    case PairCurve::C3: return m + Int(2);
    default: throw std::logic_error("cm_superscript: not a c_i curve");
    }
}

bool matches_basic_triple(const std::array<Int, 3>& t) {
    auto unordered = [&](Int x, Int y) {
        return (t[0] == x && t[1] == y) || (t[0] == y && t[1] == x);
    };
    if (unordered(1, 2) && t[2] == Int(0)) return true;
    if (unordered(1, 3) && t[2] == Int(0)) return true;
    if (unordered(2, 3) && t[2] == Int(1)) return true;
    return false;
}

} // namespace

std::vector<AnnularCandidate> basic_annular_candidates(Int m) {
    std::vector<AnnularCandidate> out;
    for (PairFamily f : all_pair_families) {
        if (!family_defined_at(f, m)) continue;
        if (!matches_basic_triple(family_lk_triple(f, m))) continue;
        AnnularCandidate cand{f, false, ""};
        for (PairCurve c : {family_first(f), family_second(f)}) {
            if (c != PairCurve::C1 && c != PairCurve::C2 && c != PairCurve::C3) continue;
            SeiferterStatus st = seiferter_status(cm_superscript(c, m));
            if (st.kind != SeiferterStatus::Kind::Basic) {
                cand.rejected = true;
                cand.reason = curve_display(c, m) + " is " + st.to_string() + ", not basic";
            }
        }
        out.push_back(cand);
    }
    return out;
}

std::string to_string(AnnularPairStatus s) {
    switch (s) {
    case AnnularPairStatus::Hyperbolic: return "hyperbolic";
    case AnnularPairStatus::Basic: return "basic";
    case AnnularPairStatus::Irrelevant: return "irrelevant";
    case AnnularPairStatus::Unknown: return "unknown";
    }
    return "?";
}

AnnularPairStatus annular_pair_status(PairFamily f, Int m) {
    if (!family_defined_at(f, m)) return AnnularPairStatus::Irrelevant;
    for (const AnnularCandidate& c : basic_annular_candidates(m))
        if (c.family == f && !c.rejected) return AnnularPairStatus::Basic;
    if (m == Int(-5) || m == Int(-6) || m == Int(-7)) return AnnularPairStatus::Unknown;
    return AnnularPairStatus::Hyperbolic;
}

std::optional<bool> has_hyperbolic_seiferter(Int m) {
    if (m == Int(-4)) return std::nullopt;
    return true;
}

Fraction pair_two_bridge_sm3_c2(Int p) {
    return Fraction(Int(6) * p + Int(4), Int(2) * p + Int(1));
}

Fraction pair_two_bridge_s2_c3(Int p) {
    return Fraction(Int(6) * p + Int(10), Int(2) * p + Int(3));
}

std::optional<bool> cmu_c1_pair_annular(Int m) {
    if (m == Int(-5)) return true;  // the curves form the (2,-4) torus link
    if (m == Int(-7)) return false; // the Whitehead link cobounds no annulus
    return std::nullopt;
}

} // namespace seifnet
