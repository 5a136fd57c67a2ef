#include "seifnet/classify.hpp"

namespace seifnet {

bool knm_hyperbolic(Int m, Int n) {
    if (m >= Int(-5) && m <= Int(-2)) return false;
    if (n == Int(0)) return false;
    if (m == Int(-1) && n == Int(-1)) return false;
    return true;
}

std::array<OrbifoldTriple, 3> knm_closed_form_triples(Int m, Int n) {
    Int a = abs(n * (m + Int(2)) * (m + Int(6)) + m + n + Int(6));
    Int b = abs(Int(3) * n * (m + Int(3)) - Int(2) * n + Int(3));
    Int c = abs(Int(2) * n * (m + Int(4)) - Int(3) * n + Int(2));
    return {OrbifoldTriple(2, 3, a), OrbifoldTriple(2, abs(m + Int(5)), b),
            OrbifoldTriple(3, abs(m + Int(4)), c)};
}

bool small_sfs_triple_check(Int m, Int n) {
    for (const OrbifoldTriple& t : knm_closed_form_triples(m, n))
        for (Int i : t.indices())
            if (i < Int(2)) return false;
    return true;
}

KnmReport knm_report(Int m, Int n) {
    KnmReport r;
    r.m = m;
    r.n = n;
    Int shift = n * (m + Int(1)) * (m + Int(1));
    SeiferterDesc cm = cm_family(m);
    std::array<OrbifoldTriple, 3> closed = knm_closed_form_triples(m, n);
    for (int i = 1; i <= 3; ++i) {
        Int ambient = m + Int(1) - Int(i);
        r.slopes[i - 1] = ambient + shift;
        OrbifoldTriple generic = triple_after_twist(cm, ambient, n);
        if (generic != closed[i - 1])
            throw std::logic_error("orbifold formulas disagree at (m,n)=(" + to_string(m) + "," +
                                   to_string(n) + "): " + generic.to_string() + " vs " +
                                   closed[i - 1].to_string());
        r.triples[i - 1] = generic;
        r.classes[i - 1] = classify_triple(generic);
    }
    r.hyperbolic = knm_hyperbolic(m, n);
    SurgeryVertex v{KnotDesc::twisted(KnotDesc(trefoil()), cm.name, n), Fraction(r.slopes[0])};
    r.name = resolve_name(v);
    return r;
}

bool three_successive_check(const KnmReport& r) {
    for (const SfsClass& c : r.classes)
        if (c.kind != SfsKind::SmallSfs) return false;
    return true;
}

bool all_fiber_indices_nonzero(const KnmReport& r) {
    for (const OrbifoldTriple& t : r.triples)
        for (Int i : t.indices())
            if (i == Int(0)) return false;
    return true;
}

std::optional<std::pair<Int, Int>> torus_knot_exclusion(
    const std::array<OrbifoldTriple, 3>& triples, Int d, Int bound) {
    if (bound < Int(2)) throw std::invalid_argument("torus_knot_exclusion: bound < 2");
    for (Int q = 2; q <= bound; q += 1) {
        for (Int ap = q + Int(1); ap <= bound; ap += 1) {
            for (int sign : {+1, -1}) {
                Int p = Int(sign) * ap;
                bool ok = true;
                for (int i = 1; i <= 3 && ok; ++i)
                    ok = triples[i - 1] == OrbifoldTriple(ap, q, abs(p * q - d + Int(i)));
                if (ok) return std::make_pair(p, q);
            }
        }
    }
    return std::nullopt;
}

std::optional<NamedKnot> resolve_name(const SurgeryVertex& v) {
    const KnotDesc::Twisted* t = v.knot.as_twisted();
    if (!t) return std::nullopt;
    const TorusKnot* base = t->base->as_torus();
    if (!base || *base != trefoil()) return std::nullopt;
    if (t->seiferter == "c^-1") return NamedKnot::twist_knot(t->n + Int(1));
    if (t->seiferter == "c^-6" && t->n == Int(1)) return NamedKnot::pretzel_m237();
    if (t->seiferter == "c" && t->n == Int(-1)) return NamedKnot::pretzel_333();
    return std::nullopt;
}

KpReport kp_report(Int p) {
    KpReport r;
    SeiferterDesc c = seiferter_c();
    SurgeryVertex base{KnotDesc(trefoil()), Fraction(-1)};
    SurgeryVertex v = twist(base, c, p);
    if (std::optional<NamedKnot> name = resolve_name(v)) v.knot = KnotDesc(*name);
    r.vertex = v;
    r.triple = triple_after_twist(c, -1, p);
    r.hyperbolic = p != Int(0);
    r.genus_one = true;
    return r;
}

bool ps_construction_excluded(Int p) {
    OrbifoldTriple kp(2, abs(Int(10) * p + Int(3)), 5);
    Int largest = kp.indices().back();
    Int window = floor_div(largest, 6) + Int(2);
    for (Int n0 = -window; n0 <= window; n0 += 1)
        if (kp == OrbifoldTriple(2, 3, abs(Int(6) * n0 - Int(1)))) return false;
    return true;
}

} // namespace seifnet
