/**
 * @file sfs.hpp
 * @brief Seifert-fibered-space and link-classification arithmetic: orbifold
 * index triples, lens recognition, Euler numbers, two-bridge fractions and
 * Montesinos tuples with their double branched covers.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "seifnet/homology.hpp"

namespace seifnet {

/// Multiset of exceptional-fiber indices of a base orbifold over S^2.
/// Index 0 marks a degenerate fiber, index 1 a removable (regular) one.
/// Stored sorted ascending; entries are non-negative.
class OrbifoldTriple {
public:
    OrbifoldTriple() = default;
    OrbifoldTriple(Int a, Int b, Int c);
    explicit OrbifoldTriple(std::vector<Int> indices);

    [[nodiscard]] const std::vector<Int>& indices() const { return indices_; }
    [[nodiscard]] std::size_t size() const { return indices_.size(); }

    /// Drops all entries equal to 1 (already sorted ascending).
    [[nodiscard]] OrbifoldTriple normalized() const;

    friend bool operator==(const OrbifoldTriple& a, const OrbifoldTriple& b) {
        return a.indices_ == b.indices_;
    }
    friend bool operator!=(const OrbifoldTriple& a, const OrbifoldTriple& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const; // "(a,b,c)"

private:
    std::vector<Int> indices_; // sorted ascending
};

enum class SfsKind {
    Sphere,
    S1xS2,
    Lens,
    ConnSumLens,
    SmallSfs,
    SfsOverDisk,
    Indeterminate,
};

/// Comparing lens descriptors without surgery coefficients is not possible;
/// lens_equivalent throws this when either side has no q.
struct incomparable_lens_error : std::domain_error {
    incomparable_lens_error() : std::domain_error("lens descriptors without q are incomparable") {}
};

/// Shape-level classification of a surgered manifold. Lens parameters are
/// optional: most pipelines determine only the orbifold shape, and
/// comparisons that need q fail loudly rather than guess.
struct SfsClass {
    SfsKind kind = SfsKind::Indeterminate;
    std::optional<Int> lens_p;      // known for degenerate-fibration lens outputs
    std::optional<Int> lens_q;
    bool lens_by_shape = false;     // lens recognized from fiber count alone
    OrbifoldTriple small_sfs;       // populated for SmallSfs
    std::array<Int, 2> disk_pair{}; // populated for SfsOverDisk

    /// Canonicalizing lens constructor: L(0,·) is S1xS2, L(1,·) is S^3.
    static SfsClass lens(Int p, std::optional<Int> q);
    static SfsClass lens_shape_only();
    static SfsClass sphere() { return {SfsKind::Sphere, {}, {}, false, {}, {}}; }
    static SfsClass s1xs2() { return {SfsKind::S1xS2, {}, {}, false, {}, {}}; }
    static SfsClass conn_sum_lens() { return {SfsKind::ConnSumLens, {}, {}, false, {}, {}}; }
    static SfsClass small_sfs_over(OrbifoldTriple t);
    static SfsClass sfs_over_disk(Int a, Int b);
    static SfsClass indeterminate() { return {}; }

    friend bool operator==(const SfsClass& a, const SfsClass& b);
    friend bool operator!=(const SfsClass& a, const SfsClass& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const;
    /// Stable short tag used by machine output ("lens", "small-sfs", ...).
    [[nodiscard]] std::string tag() const;
};

/// Decides what manifold a base-orbifold index multiset describes.
/// Throws std::invalid_argument when more than 3 indices survive
/// normalization.
SfsClass classify_triple(const OrbifoldTriple& t);

/// L(p,q) ~ L(p',q') iff p = p' and q' = q^{±1} (mod p); unoriented
/// comparison additionally allows q' = -q^{±1}. Requires q on both sides.
bool lens_equivalent(const SfsClass& a, const SfsClass& b, bool oriented);

/// Exact rational sum of Seifert invariants.
Fraction euler_number(const std::vector<Fraction>& fractions);

/// Two-bridge link descriptor p/q, normalized to p > 0, gcd(p,q) = 1,
/// q in (-p, p).
class TwoBridge {
public:
    explicit TwoBridge(Fraction f);
    [[nodiscard]] Int p() const { return p_; }
    [[nodiscard]] Int q() const { return q_; }
    [[nodiscard]] Fraction fraction() const { return Fraction(p_, q_); }
    [[nodiscard]] std::string to_string() const;

private:
    Int p_, q_;
};

/// q = ±1 (mod p), the torus-link criterion for two-bridge links.
bool two_bridge_is_torus_link(const TwoBridge& t);

/// Continued-fraction expansion [a0; a1, a2, ...] whose reassembly
/// a0 + 1/(a1 + 1/(...)) reproduces the fraction exactly.
std::vector<Int> continued_fraction(Fraction f);

struct not_three_tangles_error : std::domain_error {
    not_three_tangles_error()
        : std::domain_error("Montesinos tuple degenerates to fewer than three rational tangles") {}
};

/// Montesinos link M(r1, r2, r3). Tangle fractions must be finite.
class Montesinos {
public:
    Montesinos(Fraction t1, Fraction t2, Fraction t3);

    [[nodiscard]] const std::array<Fraction, 3>& tangles() const { return tangles_; }

    /// Tangles reduced to their fractional parts in (-1/2, 1/2]; the integer
    /// parts move into the Euler number, which the plain tangle sum already
    /// carries.
    [[nodiscard]] std::array<Fraction, 3> normalized_tangles() const;

    [[nodiscard]] Montesinos mirror() const;
    [[nodiscard]] std::string to_string() const;

private:
    std::array<Fraction, 3> tangles_;
};

/// Equality of the associated Seifert data: normalized tangle denominators
/// agree as multisets and the Euler numbers agree (up to global sign when
/// allow_mirror).
bool montesinos_equivalent(const Montesinos& a, const Montesinos& b, bool allow_mirror);

enum class MontesinosStatus { SeifertLink, ExceptionalToroidal, Hyperbolic };

/// Rule-table status of a 3-tangle Montesinos link: the single toroidal
/// exception is M(1/2, -1/3, -1/6) up to mirror; everything else with three
/// genuine rational tangles is hyperbolic. Throws not_three_tangles_error
/// when a tangle denominator is 0 or ±1 after normalization.
MontesinosStatus montesinos_status(const Montesinos& m);

std::string to_string(MontesinosStatus s);

/// Double branched cover data of a 3-tangle Montesinos link: base-orbifold
/// indices (the tangle denominators) and the Euler number of the cover's
/// Seifert fibration.
std::pair<OrbifoldTriple, Fraction> double_branched_cover(const Montesinos& m);

} // namespace seifnet
