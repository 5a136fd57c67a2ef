/**
 * @file classify.hpp
 * @brief Decision procedures: orbifold data of the twisted-trefoil family,
 * hyperbolicity predicates, the bounded torus-knot exclusion oracle,
 * named-knot resolution, and the one-parameter genus-one family with its
 * construction obstruction.
 */
#pragma once

#include "seifnet/seiferter.hpp"

namespace seifnet {

/// Surgery data of the knot obtained from the trefoil by an n-twist along
/// c^m: the three successive slopes d-1, d-2, d-3 with d = m+1+n(m+1)^2,
/// their base-orbifold triples and classifications.
struct KnmReport {
    Int m, n;
    std::array<Int, 3> slopes;
    std::array<OrbifoldTriple, 3> triples;
    std::array<SfsClass, 3> classes;
    bool hyperbolic = false;
    std::optional<NamedKnot> name;
};

/// True iff m is outside {-5,-4,-3,-2}, n != 0 and (m,n) != (-1,-1).
bool knm_hyperbolic(Int m, Int n);

/// True iff all three orbifold triples at (m,n) have every index >= 2
/// (the small-Seifert-fibered certificate).
bool small_sfs_triple_check(Int m, Int n);

/// Builds the report at (m,n). The three triples are computed twice — by the
/// closed forms and by the generic homology path (slope image paired against
/// the fiber class) — and a disagreement throws std::logic_error.
KnmReport knm_report(Int m, Int n);

/// The closed-form third indices (2,3,a), (2,|m+5|,b), (3,|m+4|,c).
std::array<OrbifoldTriple, 3> knm_closed_form_triples(Int m, Int n);

/// All three classes are small Seifert fibered; together with the fact that
/// no satellite knot has three successive such surgeries this certifies the
/// knot is not a satellite.
bool three_successive_check(const KnmReport& r);

/// Weaker certificate used on the m = -6 line: every fiber index is nonzero,
/// so all three surgeries are Seifert fibered (not necessarily small).
bool all_fiber_indices_nonzero(const KnmReport& r);

/// Bounded search for a torus knot T_{p,q} (2 <= q < |p| <= bound, both
/// signs of p) whose surgeries at slopes d-1, d-2, d-3 would produce the
/// given triples. Returns a witness (p, q) or nullopt; a nullopt at
/// parameters where all indices are >= 2 certifies the knot is not a torus
/// knot up to the bound. Throws std::invalid_argument when bound < 2.
std::optional<std::pair<Int, Int>> torus_knot_exclusion(
    const std::array<OrbifoldTriple, 3>& triples, Int d, Int bound);

/// Names the knot a canonicalized twist descriptor over the trefoil denotes,
/// when one of the resolved families applies: the c^-1 line gives twist
/// knots (n-twist -> Tw(n+1), with Tw(0) the unknot and Tw(-1) the
/// figure-eight knot), the 1-twist along c^-6 gives P(-2,3,7), and the
/// (-1)-twist along c gives P(3,-3,-3).
std::optional<NamedKnot> resolve_name(const SurgeryVertex& v);

/// The knot K_p obtained from (T_{-3,2}, -1) by p twists along c, with its
/// (-1)-surgery orbifold (2, |10p+3|, 5). Hyperbolic iff p != 0; genus one
/// for every p.
struct KpReport {
    SurgeryVertex vertex;
    OrbifoldTriple triple;
    bool hyperbolic = false;
    bool genus_one = true;
};

KpReport kp_report(Int p);

/// Arithmetic obstruction for (K_p, -1): the surgery could arise from the
/// primitive/Seifert-fibered construction only if its orbifold matches a
/// twist-knot (-1)-surgery orbifold (2, 3, |6n0 - 1|) for some integer n0.
/// That forces |10p+3| = 3, i.e. p = 0. Returns true (excluded) iff no n0
/// exists.
bool ps_construction_excluded(Int p);

} // namespace seifnet
