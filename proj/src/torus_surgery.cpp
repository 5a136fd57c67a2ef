#include "seifnet/torus_surgery.hpp"

namespace seifnet {

TorusKnot::TorusKnot(Int p_, Int q_) : p(p_), q(q_) {
    if (!(abs(p) > q && q >= Int(1)))
        throw std::invalid_argument("TorusKnot: need |p| > q >= 1");
    if (gcd(p, q) != Int(1)) throw std::invalid_argument("TorusKnot: p, q not coprime");
}

std::string TorusKnot::to_string() const {
    return "T(" + seifnet::to_string(p) + "," + seifnet::to_string(q) + ")";
}

std::string to_string(BasicSeiferterKind k) {
    switch (k) {
    case BasicSeiferterKind::SP: return "s_p";
    case BasicSeiferterKind::SQ: return "s_q";
    case BasicSeiferterKind::CMu: return "c_mu";
    }
    return "?";
}

std::string basic_seiferter_name(const TorusKnot& k, BasicSeiferterKind which) {
    switch (which) {
    case BasicSeiferterKind::SP: return "s_" + seifnet::to_string(k.p);
    case BasicSeiferterKind::SQ: return "s_" + seifnet::to_string(k.q);
    case BasicSeiferterKind::CMu: return "c_mu";
    }
    return "?";
}

MoserResult moser_classify(const TorusKnot& k, const Fraction& slope) {
    if (slope.is_infinite() || slope.den() < Int(1))
        throw std::invalid_argument("moser_classify: slope must be finite");
    Int third = abs(k.pq() * slope.den() - slope.num());
    OrbifoldTriple triple(abs(k.p), k.q, third);
    return {triple, classify_triple(triple)};
}

Int basic_lk(const TorusKnot& k, BasicSeiferterKind which) {
    switch (which) {
    case BasicSeiferterKind::SP: return k.q;
    case BasicSeiferterKind::SQ: return abs(k.p);
    case BasicSeiferterKind::CMu: return 1;
    }
    throw std::logic_error("basic_lk");
}

Int basic_fiber_index(const TorusKnot& k, BasicSeiferterKind which, Int m) {
    switch (which) {
    case BasicSeiferterKind::SP: return abs(k.p);
    case BasicSeiferterKind::SQ: return k.q;
    case BasicSeiferterKind::CMu: return abs(k.pq() - m);
    }
    throw std::logic_error("basic_fiber_index");
}

CurveClass basic_fiber_class(const TorusKnot& k, BasicSeiferterKind which) {
    switch (which) {
    case BasicSeiferterKind::SP: return require_curve({k.p, k.q});
    case BasicSeiferterKind::SQ: return require_curve({k.q, k.p});
    case BasicSeiferterKind::CMu:
        throw std::domain_error("meridian seiferter has no exceptional-fiber class");
    }
    throw std::logic_error("basic_fiber_class");
}

CurveClass knot_boundary_fiber_class(const TorusKnot& k) {
    return require_curve({Int(1), k.pq()});
}

std::array<BasicAnnularPair, 3> basic_annular_pairs(const TorusKnot& k) {
    Int lp = basic_lk(k, BasicSeiferterKind::SP); // q
    Int lq = basic_lk(k, BasicSeiferterKind::SQ); // |p|
    using K = BasicSeiferterKind;
    return {BasicAnnularPair{K::SP, K::SQ, {lp, lq, Int(1)}},
            BasicAnnularPair{K::SP, K::CMu, {lp, Int(1), Int(0)}},
            BasicAnnularPair{K::SQ, K::CMu, {lq, Int(1), Int(0)}}};
}

} // namespace seifnet
