/**
 * @file seiferter.hpp
 * @brief Algebraic seiferter descriptors, the twist operation on surgery
 * vertices, the c^m family, index-after-twist computation, and the annular
 * pair tables and filters for the trefoil.
 */
#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "seifnet/torus_surgery.hpp"

namespace seifnet {

/// Knots this artifact can name. TwistKnot(0) and TwistKnot(-1) canonicalize
/// to the trivial knot and the figure-eight knot on construction.
struct NamedKnot {
    enum class Kind { Trivial, TwistKnot, PretzelM237, Pretzel333, FigureEight };
    Kind kind = Kind::Trivial;
    Int n = 0; // TwistKnot only

    static NamedKnot trivial() { return {Kind::Trivial, 0}; }
    static NamedKnot twist_knot(Int n);
    static NamedKnot pretzel_m237() { return {Kind::PretzelM237, 0}; }
    static NamedKnot pretzel_333() { return {Kind::Pretzel333, 0}; }
    static NamedKnot figure_eight() { return {Kind::FigureEight, 0}; }

    friend bool operator==(const NamedKnot& a, const NamedKnot& b) {
        return a.kind == b.kind && a.n == b.n;
    }
    [[nodiscard]] std::string to_string() const;
};

/// Knot descriptor: a torus knot, a named knot, or the image of a base knot
/// under an integer twist along a named seiferter. Twisted with n = 0
/// canonicalizes to its base; consecutive twists along the same seiferter
/// merge.
class KnotDesc {
public:
    struct Twisted {
        std::shared_ptr<const KnotDesc> base;
        std::string seiferter;
        Int n;
    };

    KnotDesc() : v_(NamedKnot::trivial()) {}
    KnotDesc(TorusKnot k) : v_(k) {}
    KnotDesc(NamedKnot k) : v_(k) {}

    static KnotDesc twisted(const KnotDesc& base, const std::string& seiferter, Int n);

    [[nodiscard]] const TorusKnot* as_torus() const { return std::get_if<TorusKnot>(&v_); }
    [[nodiscard]] const NamedKnot* as_named() const { return std::get_if<NamedKnot>(&v_); }
    [[nodiscard]] const Twisted* as_twisted() const { return std::get_if<Twisted>(&v_); }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const KnotDesc& a, const KnotDesc& b) {
        return a.to_string() == b.to_string();
    }
    friend bool operator!=(const KnotDesc& a, const KnotDesc& b) { return !(a == b); }
    friend bool operator<(const KnotDesc& a, const KnotDesc& b) {
        return a.to_string() < b.to_string();
    }

private:
    std::variant<TorusKnot, NamedKnot, Twisted> v_;
};

/// A vertex of the surgery network: a knot together with a surgery slope
/// (integer for network vertices).
struct SurgeryVertex {
    KnotDesc knot;
    Fraction slope;

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const SurgeryVertex& a, const SurgeryVertex& b) {
        return a.knot == b.knot && a.slope == b.slope;
    }
    friend bool operator!=(const SurgeryVertex& a, const SurgeryVertex& b) { return !(a == b); }
};

struct SeiferterStatus {
    enum class Kind { Hyperbolic, Basic, Cable, Unknown };
    Kind kind = Kind::Unknown;
    BasicSeiferterKind basic = BasicSeiferterKind::CMu; // Basic: which one
    BasicSeiferterKind cable_of = BasicSeiferterKind::SP;
    Fraction cable_slope = Fraction(0);

    static SeiferterStatus hyperbolic() { return {Kind::Hyperbolic, {}, {}, Fraction(0)}; }
    static SeiferterStatus basic_kind(BasicSeiferterKind b) { return {Kind::Basic, b, {}, Fraction(0)}; }
    static SeiferterStatus cable(BasicSeiferterKind of, Fraction slope) {
        return {Kind::Cable, {}, of, slope};
    }
    static SeiferterStatus unknown() { return {}; }

    friend bool operator==(const SeiferterStatus& a, const SeiferterStatus& b);
    [[nodiscard]] std::string to_string() const;
};

/// What a seiferter is inside the ambient surgered manifold: isotopic to the
/// core of the filled solid torus (meridian case), or an exceptional fiber
/// with a known fiber class and accumulated framing shift.
struct FiberRole {
    enum class Kind { Meridian, Exceptional };
    Kind kind = Kind::Exceptional;
    bool from_m_move = false; // meridian case: band-summed with the surgery slope
    Int index = 0;            // exceptional case: original fiber index
    CurveClass fiber_class{0, 0};
    Int framing_shift = 0;
};

/// Algebraic shadow of a seiferter: name, linking number with the knot
/// (stored as an absolute value), fiber roles keyed by ambient slope, and
/// hyperbolicity status.
struct SeiferterDesc {
    std::string name;
    Int lk_with_knot = 0;
    SeiferterStatus status;
    TorusKnot knot = trefoil();
    bool preserves_knot = false;    // true only for the basic meridian
    bool valid_at_all_slopes = false;
    FiberRole any_slope_role;                     // when valid_at_all_slopes
    std::vector<std::pair<Int, FiberRole>> roles; // ambient slope -> role

    [[nodiscard]] std::optional<FiberRole> role_at(Int ambient_slope) const;
    [[nodiscard]] bool valid_at(const SurgeryVertex& v) const;
};

/// Descriptor of a basic seiferter for (T_{p,q}, m); valid at every integer
/// slope on the knot.
SeiferterDesc basic_seiferter_data(const TorusKnot& k, BasicSeiferterKind which);

/// Status of the trefoil seiferter c^m: hyperbolic away from
/// m in {-5,-4,-3,-2}; c^{-4}, c^{-3}, c^{-2} are the basic seiferters
/// s_2, s_{-3}, c_mu, and c^{-5} is the (-1,2) cable of s_{-3}.
SeiferterStatus seiferter_status(Int m);

/// The seiferter c^m for the trefoil, with its three roles: meridian-isotopic
/// at slope m, an index-3 fiber at slope m-1 (shift m+3), an index-2 fiber at
/// slope m-2 (shift m+4). lk with the knot is |m+1|.
SeiferterDesc cm_family(Int m);

/// The hyperbolic seiferter for (T_{-3,2}, -1) with lk 0 that carries the
/// one-parameter genus-one family: an index-3 fiber with framing shift 4.
SeiferterDesc seiferter_c();

/// n-fold twist along a seiferter: slope goes to m + n·lk^2 and the knot is
/// wrapped in a canonicalized Twisted descriptor (name resolution is the
/// classify module's job). Twisting along a plain meridian leaves the knot
/// unchanged.
SurgeryVertex twist(const SurgeryVertex& v, const SeiferterDesc& s, Int n);

/// Index of the fiber the seiferter becomes after an n-twist, via the image
/// of the (-1/n)-surgery slope paired against the regular-fiber class.
/// Throws std::domain_error when the seiferter has no role at the slope.
Int index_after_twist(const SeiferterDesc& s, Int ambient_slope, Int n);

/// Base-orbifold triple after an n-twist at the given ambient slope: the
/// ambient triple of T_{p,q}(slope) with the seiferter's fiber index replaced
/// by index_after_twist.
OrbifoldTriple triple_after_twist(const SeiferterDesc& s, Int ambient_slope, Int n);

// ---------------------------------------------------------------------------
// Pair tables and filters for (T_{-3,2}, m)
// ---------------------------------------------------------------------------

/// Curves appearing in the pairwise linking-number table.
enum class PairCurve { T, CMu, SM3, S2, C1, C2, C3 };

std::string to_string(PairCurve c);

struct excluded_pair_error : std::domain_error {
    excluded_pair_error() : std::domain_error("pair is excluded from the linking table") {}
};

/// Pairwise linking numbers of T_{-3,2}, the basic seiferters and c_1^m,
/// c_2^m, c_3^m, kept signed as tabulated. Starred (excluded) combinations
/// throw excluded_pair_error; combinations outside the table throw
/// std::invalid_argument.
Int pair_lk(Int m, PairCurve a, PairCurve b);

/// The nine pair families of seiferters for (T_{-3,2}, m).
enum class PairFamily { CMuC2, CMuC3, SM3C1, SM3C3, S2C1, S2C2, C1C2, C1C3, C2C3 };

inline constexpr std::array<PairFamily, 9> all_pair_families = {
    PairFamily::CMuC2, PairFamily::CMuC3, PairFamily::SM3C1,
    PairFamily::SM3C3, PairFamily::S2C1,  PairFamily::S2C2,
    PairFamily::C1C2,  PairFamily::C1C3,  PairFamily::C2C3,
};

PairCurve family_first(PairFamily f);
PairCurve family_second(PairFamily f);

/// True for the six families built with a single band (one component basic,
/// one c_i^m); the c_i/c_j families use two disjoint bands.
bool family_one_band(PairFamily f);

/// All nine families are annular pairs for every m, except {s_-3, c_3^m} and
/// {s_2, c_2^m} at m = -5, which cobound annuli off the knot and are
/// irrelevant.
bool family_defined_at(PairFamily f, Int m);

/// Display name with m substituted, e.g. "{s_-3, c_3^-6}".
std::string family_name(PairFamily f, Int m);

/// (|lk(T,a)|, |lk(T,b)|, |lk(a,b)|) for the family at m.
std::array<Int, 3> family_lk_triple(PairFamily f, Int m);

/// One-band families whose two components have equal |lk| with the knot;
/// such pairs need closer inspection before being accepted as annular.
std::vector<PairFamily> same_lk_filter(Int m);

struct AnnularCandidate {
    PairFamily family;
    bool rejected = false; // linking triple matches but a component is non-basic
    std::string reason;    // why rejected, when it is
};

/// Families whose linking triple matches a basic annular pair's triple. A
/// numeric match is rejected when a c_i component is not actually a basic
/// seiferter.
std::vector<AnnularCandidate> basic_annular_candidates(Int m);

enum class AnnularPairStatus { Hyperbolic, Basic, Irrelevant, Unknown };

std::string to_string(AnnularPairStatus s);

/// Rule table: excluded pairs are irrelevant; accepted basic candidates are
/// basic; away from m in {-5,-6,-7} everything else is hyperbolic; at those
/// three slopes non-basic pairs are left undecided.
AnnularPairStatus annular_pair_status(PairFamily f, Int m);

/// Whether (T_{-3,2}, m) is known to have a hyperbolic seiferter; unknown
/// (nullopt) exactly at m = -4.
std::optional<bool> has_hyperbolic_seiferter(Int m);

/// Two-bridge fractions of the lens-slope pair families parameterized by a
/// cable parameter p: {s_-3, c_2^m} gives (6p+4)/(2p+1), {s_2, c_3^m} gives
/// (6p+10)/(2p+3).
Fraction pair_two_bridge_sm3_c2(Int p);
Fraction pair_two_bridge_s2_c3(Int p);

/// Verdict for the pair {c_mu, c_1^m} at the lens slopes: the two curves
/// form the (2,-4) torus link at m = -5 (an annular pair) and the Whitehead
/// link at m = -7 (a pair of seiferters but not annular). nullopt away from
/// those slopes.
std::optional<bool> cmu_c1_pair_annular(Int m);

} // namespace seifnet
