/**
 * @file torus_surgery.hpp
 * @brief Surgery classification for torus knots and the basic seiferter /
 * basic annular pair data attached to them.
 */
#pragma once

#include <array>

#include "seifnet/sfs.hpp"

namespace seifnet {

/// Torus knot T_{p,q} with |p| > q >= 1 and gcd(|p|, q) = 1.
struct TorusKnot {
    TorusKnot(Int p, Int q);

    Int p, q;

    [[nodiscard]] Int pq() const { return p * q; }
    [[nodiscard]] bool is_trivial() const { return q == Int(1); }

    friend bool operator==(const TorusKnot& a, const TorusKnot& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const TorusKnot& a, const TorusKnot& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const; // "T(p,q)"
};

inline TorusKnot trefoil() { return TorusKnot(-3, 2); }

/// The three seiferters every integral torus-knot surgery has: the two
/// exceptional fibers of the knot exterior and a meridian.
enum class BasicSeiferterKind { SP, SQ, CMu };

std::string to_string(BasicSeiferterKind k);
/// Concrete name for a given torus knot, e.g. "s_-3", "s_2", "c_mu".
std::string basic_seiferter_name(const TorusKnot& k, BasicSeiferterKind which);

struct MoserResult {
    OrbifoldTriple triple;
    SfsClass cls;
};

/// r/s surgery on T_{p,q} yields a Seifert fiber space over
/// S^2(|p|, q, |pqs - r|): reducible when the third index is 0, a lens space
/// when it is 1, small otherwise. Requires s >= 1 (finite slope).
MoserResult moser_classify(const TorusKnot& k, const Fraction& slope);

/// |lk(T_{p,q}, ·)| of a basic seiferter: q, |p|, 1 for s_p, s_q, c_mu.
Int basic_lk(const TorusKnot& k, BasicSeiferterKind which);

/// Fiber index of a basic seiferter in T_{p,q}(m): |p|, q, |pq - m|.
Int basic_fiber_index(const TorusKnot& k, BasicSeiferterKind which, Int m);

/// Class of a regular fiber on the boundary torus of the basic seiferter's
/// neighborhood: p[lambda]+q[mu] on dN(s_p), q[lambda]+p[mu] on dN(s_q).
/// The meridian case has no such class (it is handled as the core of the
/// filled torus); requesting it throws.
CurveClass basic_fiber_class(const TorusKnot& k, BasicSeiferterKind which);

/// Class of a regular fiber on dN(T_{p,q}): [lambda'] + pq[mu'].
CurveClass knot_boundary_fiber_class(const TorusKnot& k);

/// An unordered basic pair with its linking-number triple
/// (|lk(T,a)|, |lk(T,b)|, |lk(a,b)|).
struct BasicAnnularPair {
    BasicSeiferterKind a, b;
    std::array<Int, 3> lk_triple;
};

/// The three basic annular pairs {s_p,s_q}, {s_p,c_mu}, {s_q,c_mu} with
/// triples (q,|p|,1), (q,1,0), (|p|,1,0).
std::array<BasicAnnularPair, 3> basic_annular_pairs(const TorusKnot& k);

} // namespace seifnet
