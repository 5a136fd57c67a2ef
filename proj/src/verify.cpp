#include "seifnet/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "seifnet/network.hpp"

namespace seifnet {

namespace {

struct Claim {
    std::string id;
    std::string description;
    std::function<void(ClaimResult&)> run;
};

std::string fmt_count(long long got, long long want) {
    return std::to_string(got) + "/" + std::to_string(want);
}

// 1. The three closed-form orbifold indices agree with the homology route
//    (slope image paired against the fiber class) on the whole grid.
void claim_orbifold_formulas(ClaimResult& r) {
    long long ok = 0, total = 0;
    for (long long m = -50; m <= 50; ++m)
        for (long long n = -50; n <= 50; ++n) {
            ++total;
            KnmReport rep = knm_report(m, n); // throws on internal disagreement
            if (rep.triples == knm_closed_form_triples(m, n)) ++ok;
        }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 2. The 1-twist along c^-6 gives P(-2,3,7) with surgeries 19, 18, 17 over
//    (2,3,1), (2,1,8), (3,2,5).
void claim_pretzel_milestone(ClaimResult& r) {
    KnmReport rep = knm_report(-6, 1);
    std::ostringstream got;
    got << to_string(rep.slopes[0]) << "," << to_string(rep.slopes[1]) << ","
        << to_string(rep.slopes[2]) << " " << rep.triples[0].to_string()
        << rep.triples[1].to_string() << rep.triples[2].to_string() << " "
        << (rep.name ? rep.name->to_string() : "?");
    r.computed = got.str();
    r.expected = "19,18,17 (1,2,3)(1,2,8)(2,3,5) P(-2,3,7)";
    r.pass = rep.slopes == std::array<Int, 3>{19, 18, 17} &&
             rep.triples[0] == OrbifoldTriple(2, 3, 1) &&
             rep.triples[1] == OrbifoldTriple(2, 1, 8) &&
             rep.triples[2] == OrbifoldTriple(3, 2, 5) && rep.name &&
             *rep.name == NamedKnot::pretzel_m237() && rep.hyperbolic;
}

// 3. The c^-1 line resolves to twist knots at constant slope -1, and the
//    (-1)-surgery on Tw(n0) has the (2, 3, |6n0-1|) orbifold via its
//    rational surgery description on the trefoil.
void claim_twist_knot_line(ClaimResult& r) {
    long long ok = 0, total = 0;
    SeiferterDesc cm1 = cm_family(-1);
    SurgeryVertex base{KnotDesc(trefoil()), Fraction(-1)};
    for (long long n = -20; n <= 20; ++n) {
        if (n == 0) continue;
        ++total;
        SurgeryVertex v = twist(base, cm1, n);
        std::optional<NamedKnot> name = resolve_name(v);
        if (name && *name == NamedKnot::twist_knot(Int(n) + Int(1)) && v.slope == Fraction(-1))
            ++ok;
    }
    for (long long n0 = -20; n0 <= 20; ++n0) {
        if (n0 == 0) continue;
        ++total;
        MoserResult res = moser_classify(trefoil(), Fraction(-1, n0));
        if (res.triple == OrbifoldTriple(2, 3, abs(Int(6) * Int(n0) - Int(1)))) ++ok;
    }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 4. The genus-one family: (2, |10p+3|, 5) orbifolds by both routes, and the
//    construction obstruction holds exactly away from p = 0.
void claim_kp_family(ClaimResult& r) {
    long long ok = 0, total = 0;
    for (long long p = -50; p <= 50; ++p) {
        ++total;
        KpReport rep = kp_report(p);
        if (rep.triple == OrbifoldTriple(2, abs(Int(10) * Int(p) + Int(3)), 5) &&
            rep.hyperbolic == (p != 0) && rep.genus_one)
            ++ok;
    }
    for (long long p = -100; p <= 100; ++p) {
        ++total;
        if (ps_construction_excluded(p) == (p != 0)) ++ok;
    }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 5. Status tables: the c^m status row, the twisted-knot hyperbolicity
//    predicate, and the bounded torus-knot exclusion on the hyperbolic grid.
void claim_hyperbolicity_tables(ClaimResult& r) {
    long long ok = 0, total = 0;
    using St = SeiferterStatus;
    const St h = St::hyperbolic();
    const St cab = St::cable(BasicSeiferterKind::SP, Fraction(-1, 2));
    const St s2 = St::basic_kind(BasicSeiferterKind::SQ);
    const St sm3 = St::basic_kind(BasicSeiferterKind::SP);
    const St cmu = St::basic_kind(BasicSeiferterKind::CMu);
    // printed columns, rows c^m / c^{m+1} / c^{m+2}; -8 and -1 stand in for
    // the unbounded columns, with two more representatives each
    const std::vector<std::pair<long long, std::array<St, 3>>> table = {
        {-30, {h, h, h}}, {-9, {h, h, h}},     {-8, {h, h, h}},    {-7, {h, h, cab}},
        {-6, {h, cab, s2}}, {-5, {cab, s2, sm3}}, {-4, {s2, sm3, cmu}}, {-3, {sm3, cmu, h}},
        {-2, {cmu, h, h}}, {-1, {h, h, h}},    {0, {h, h, h}},     {30, {h, h, h}},
    };
    for (const auto& [m, rows] : table)
        for (long long row = 0; row < 3; ++row) {
            ++total;
            long long sup = m + row;
            if (seiferter_status(sup) == rows[static_cast<std::size_t>(row)] &&
                cm_family(sup).status == rows[static_cast<std::size_t>(row)])
                ++ok;
        }
    for (long long m = -30; m <= 30; ++m)
        for (long long n = -30; n <= 30; ++n) {
            ++total;
            bool want = !(m >= -5 && m <= -2) && n != 0 && !(m == -1 && n == -1);
            if (knm_hyperbolic(m, n) == want) ++ok;
        }
    for (long long m = -15; m <= 15; ++m)
        for (long long n = -15; n <= 15; ++n) {
            if (!knm_hyperbolic(m, n)) continue;
            ++total;
            KnmReport rep = knm_report(m, n);
            Int d = Int(m) + Int(1) + Int(n) * (Int(m) + Int(1)) * (Int(m) + Int(1));
            if (!torus_knot_exclusion(rep.triples, d, 100)) ++ok;
        }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 6. Annular-pair filters: the basic-candidate list over the m window, the
//    equal-linking-number list, and the two-bridge torus-link windows.
void claim_annular_filters(ClaimResult& r) {
    long long ok = 0, total = 0;
    using F = PairFamily;
    std::map<long long, std::vector<std::pair<F, bool>>> expected_candidates = {
        {-3, {{F::C1C2, false}}},
        {-4, {{F::C1C2, false}, {F::C1C3, false}, {F::C2C3, false}}},
        {-5, {{F::C2C3, false}}},
        {-6, {{F::SM3C3, false}}},
        {0, {{F::SM3C3, true}}},
    };
    for (long long m = -30; m <= 30; ++m) {
        ++total;
        std::vector<std::pair<F, bool>> got;
        for (const AnnularCandidate& c : basic_annular_candidates(m))
            got.emplace_back(c.family, c.rejected);
        auto it = expected_candidates.find(m);
        std::vector<std::pair<F, bool>> want =
            it == expected_candidates.end() ? std::vector<std::pair<F, bool>>{} : it->second;
        if (got == want) ++ok;
    }
    std::map<long long, std::vector<F>> expected_same_lk = {
        {-5, {F::SM3C3, F::S2C2}}, {-4, {F::CMuC3, F::S2C1}}, {-3, {F::CMuC2, F::SM3C1}},
        {-2, {F::CMuC3}},          {-1, {F::CMuC2, F::SM3C3}}, {1, {F::SM3C1, F::S2C2}},
        {2, {F::S2C1}},
    };
    for (long long m = -30; m <= 30; ++m) {
        ++total;
        std::vector<F> got = same_lk_filter(m);
        std::sort(got.begin(), got.end());
        auto it = expected_same_lk.find(m);
        std::vector<F> want = it == expected_same_lk.end() ? std::vector<F>{} : it->second;
        std::sort(want.begin(), want.end());
        if (got == want) ++ok;
    }
    for (long long p = -50; p <= 50; ++p) {
        total += 2;
        if (two_bridge_is_torus_link(TwoBridge(pair_two_bridge_sm3_c2(p))) == (p == 0 || p == -1))
            ++ok;
        if (two_bridge_is_torus_link(TwoBridge(pair_two_bridge_s2_c3(p))) == (p == -1 || p == -2))
            ++ok;
    }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 7. Montesinos distinctions: branched-cover orbifolds, Euler numbers, and
//    the unique toroidal slope among the three-tangle cases.
void claim_montesinos(ClaimResult& r) {
    long long ok = 0, total = 0;
    auto link_of = [](long long m) {
        return Montesinos(Fraction(-1, 2), Fraction(2, 3), Fraction(1, 2 * m + 4));
    };
    auto [t1, e1] = double_branched_cover(link_of(1));
    auto [t3, e3] = double_branched_cover(link_of(-3));
    ++total;
    if (t1 == OrbifoldTriple(2, 3, 6) && e1 == Fraction(1, 3)) ++ok;
    ++total;
    if (t3 == OrbifoldTriple(2, 3, 2)) ++ok;
    ++total;
    if (euler_number({Fraction(1, 2), Fraction(-1, 3), Fraction(1, 6)}) == Fraction(1, 3) &&
        euler_number({Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 6)}) == Fraction(0))
        ++ok;
    for (long long m = -30; m <= 30; ++m) {
        if (m >= -4 && m <= -2) continue;
        ++total;
        MontesinosStatus st = montesinos_status(link_of(m));
        MontesinosStatus want =
            m == -5 ? MontesinosStatus::ExceptionalToroidal : MontesinosStatus::Hyperbolic;
        if (st == want) ++ok;
    }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 8. Network preset reaches the named vertices and the horizontal line, and
//    JSON export round-trips byte-identically.
void claim_network(ClaimResult& r) {
    NetworkGraph g = preset_trefoil_neighborhood(2);
    long long ok = 0, total = 0;
    const std::vector<std::pair<std::string, long long>> wanted = {
        {"unknot", -1}, {"fig8", -1}, {"P(-2,3,7)", 19}, {"P(3,-3,-3)", -1},
    };
    for (const auto& [knot, slope] : wanted) {
        ++total;
        if (g.find(knot, slope)) ++ok;
    }
    for (long long m = -3; m <= 1; ++m) {
        ++total;
        if (g.find("T(-3,2)", m)) ++ok;
    }
    for (long long m = -8; m <= -4; ++m) {
        ++total;
        if (g.find("T(-3,2)", m)) ++ok;
    }
    ++total;
    std::string once = export_json(g);
    if (export_json(load_json(once)) == once) ++ok;
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

// 9. Property suites: pairing antisymmetry and bilinearity on random
//    classes, the twist group action, build monotonicity in radius, and
//    permutation/unit invariance of triple classification.
void claim_properties(ClaimResult& r) {
    long long ok = 0, total = 0;
    std::mt19937_64 rng(20130927);
    std::uniform_int_distribution<long long> coeff(-1000, 1000);
    for (int i = 0; i < 10000; ++i) {
        CurveClass x{coeff(rng), coeff(rng)};
        CurveClass y{coeff(rng), coeff(rng)};
        CurveClass z{coeff(rng), coeff(rng)};
        ++total;
        if (intersection(x, y) == -intersection(y, x) &&
            intersection(x + z, y) == intersection(x, y) + intersection(z, y))
            ++ok;
    }
    std::uniform_int_distribution<long long> small(-8, 8);
    SeiferterDesc cm6 = cm_family(-6);
    for (int i = 0; i < 200; ++i) {
        SurgeryVertex v{KnotDesc(trefoil()), Fraction(-6)};
        Int a = small(rng), b = small(rng);
        ++total;
        if (twist(twist(v, cm6, a), cm6, b) == twist(v, cm6, a + b)) ++ok;
    }
    NetworkGraph g1 = preset_trefoil_neighborhood(1);
    NetworkGraph g2 = preset_trefoil_neighborhood(2);
    NetworkGraph g3 = preset_trefoil_neighborhood(3);
    auto subset = [](const NetworkGraph& a, const NetworkGraph& b) {
        for (const NetworkVertex& v : a.vertices)
            if (!b.find(v.knot, v.slope)) return false;
        return true;
    };
    ++total;
    if (subset(g1, g2) && subset(g2, g3)) ++ok;
    std::uniform_int_distribution<long long> idx(0, 9);
    for (int i = 0; i < 500; ++i) {
        Int a = idx(rng), b = idx(rng), c = idx(rng);
        ++total;
        bool same = classify_triple(OrbifoldTriple(a, b, c)) ==
                        classify_triple(OrbifoldTriple(c, a, b)) &&
                    classify_triple(OrbifoldTriple(a, b, c)) ==
                        classify_triple(OrbifoldTriple(b, c, a));
        // inserting/removing removable fibers does not change the class
        bool unit = classify_triple(OrbifoldTriple({a, b, c, Int(1)})) ==
                    classify_triple(OrbifoldTriple(a, b, c));
        if (same && unit) ++ok;
    }
    r.computed = fmt_count(ok, total);
    r.expected = fmt_count(total, total);
    r.pass = ok == total;
}

const std::vector<Claim>& claims() {
    static const std::vector<Claim> all = {
        {"orbifold-formulas",
         "closed-form orbifold indices match the homology route on [-50,50]^2",
         claim_orbifold_formulas},
        {"pretzel-milestone",
         "1-twist along c^-6 gives (P(-2,3,7), 19/18/17) over (2,3,1),(2,1,8),(3,2,5)",
         claim_pretzel_milestone},
        {"twist-knot-line",
         "c^-1 line resolves to twist knots at slope -1; Tw(n0)(-1) orbifold is (2,3,|6n0-1|)",
         claim_twist_knot_line},
        {"kp-family",
         "K_p(-1) orbifold is (2,|10p+3|,5); construction obstruction holds iff p != 0",
         claim_kp_family},
        {"hyperbolicity-tables",
         "c^m status table, twisted-knot hyperbolicity predicate, torus-knot exclusion sweep",
         claim_hyperbolicity_tables},
        {"annular-filters",
         "basic annular candidates, equal-linking filter, two-bridge torus-link windows",
         claim_annular_filters},
        {"montesinos",
         "branched covers (2,3,6) vs (2,3,2), Euler numbers 1/3 vs 0, unique toroidal slope",
         claim_montesinos},
        {"network",
         "preset reaches unknot/fig8/P(-2,3,7)/P(3,-3,-3) plus the meridian line; JSON round-trip",
         claim_network},
        {"properties",
         "pairing antisymmetry/bilinearity, twist group action, build monotonicity, "
         "classification invariance",
         claim_properties},
    };
    return all;
}

} // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const Claim& c : claims()) ids.push_back(c.id);
    return ids;
}

std::vector<ClaimResult> run_claims(const std::string& filter) {
    bool found = filter.empty();
    std::vector<ClaimResult> results;
    for (const Claim& c : claims()) {
        if (!filter.empty() && c.id != filter) continue;
        found = true;
        ClaimResult r;
        r.id = c.id;
        r.description = c.description;
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.computed = std::string("exception: ") + e.what();
            r.expected = "no exception";
        }
        results.push_back(std::move(r));
    }
    if (!found) throw std::invalid_argument("unknown claim id: " + filter);
    return results;
}

} // namespace seifnet
