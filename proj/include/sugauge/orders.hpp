#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sugauge/chern.hpp"
#include "sugauge/lattice.hpp"

namespace sugauge {

struct NotPrime : Error {
    using Error::Error;
};

/// A quantity computed two ways: by exact lattice arithmetic and by the
/// closed form it is supposed to equal.
struct OrderResult {
    int n = 0;
    Int computed;
    Int closed_form;
    bool agrees = false;
};

/// Raw (x, y, z) coordinates of the integral Chern map on every generator
/// of the family, one generator per row: 2(n-1) rows for ProjectiveSmash
/// (plain and primed, interleaved by index), four rows for the
/// top-quotient families. ParityMismatch if the family parity disagrees
/// with n.
IntegerMatrix integral_chern_rows(int n, Space family);

/// Image lattice of the integral Chern map over all generators of the
/// family, in raw (x, y, z) coordinates: the canonical form of
/// integral_chern_rows.
Lattice integral_chern_image(int n, Space family);

/// The same image for the ProjectiveSmash family in its reduced
/// three-generator form:
///   (n(n-1)/2, n, n(n+1)/2), (n(n-1), 0, 0), (0, 2n, 0).
/// integral_chern_image(n, ProjectiveSmash) must canonicalize to this.
Lattice reduced_chern_image(int n);

/// Order of the restriction of the boundary map to the generating
/// complex: the minimal multiplier of (1, 0, 1) against the Chern image.
/// Closed form n(n^2-1)/2 for n odd, n(n^2-1) for n even; this is a lower
/// bound on the order of the boundary map itself.
OrderResult restricted_boundary_order(int n);

/// The sublattice of coordinates realized by maps into the loop space:
/// n odd  -> { (x,y,z) : x + y = z mod 2 }, basis (1,0,1),(0,1,1),(0,0,2);
/// n even -> { (x,y,z) : y = 0 mod 2 },     basis (1,0,0),(0,2,0),(0,0,1).
Lattice parity_lattice(int n);

/// Coordinates of the lift of the i-th K-theory generator (i in {1,2})
/// under the degree-k boundary map:
/// n odd:  i=1 -> ((n-2)! k, 0, (n-1)! k / 2),  i=2 -> (0, 0, (n-1)! k);
/// n even: i=1 -> ((n-2)! k, 0, 0),             i=2 -> (0, 0, (n-1)! k).
/// Integrality of the halved entry is asserted, not assumed.
CohomVector boundary_lift(int n, const Int& k, int i);

/// Order of the subgroup generated by the two boundary lifts in the
/// cokernel of the Chern image, computed basis-free in Z^3 and compared
/// against the closed form
///   n odd:  (n(n^2-1)/2) / gcd(n(n^2-1)/2, k) * n / gcd(n, k),
///   n even: (n(n-1)/2) / gcd(n(n-1)/2, k) * n(n+1) / gcd(n(n+1), k),
/// where gcd(m, 0) = m so k = 0 degenerates correctly.
OrderResult boundary_image_order(int n, const Int& k);

/// Necessary condition for the bundle gauge groups of charges k and l
/// over the projective plane to be homotopy equivalent:
///   gcd(M, k) = gcd(M, l), with M = n(n^2-1)/2 for n odd and n(n^2-1)
/// for n even. A false answer certifies inequivalence.
bool necessary_equiv_condition(int n, const Int& k, const Int& l);

/// Sufficient condition (local equivalence) in terms of a known order m'
/// of the degree-one boundary map: gcd(m', k) = gcd(m', l).
bool sufficient_equiv_condition(const Int& m_prime, const Int& k, const Int& l);

/// Largest power of p dividing a, returned as that power (e.g. p=2, a=12
/// gives 4). Requires p prime (NotPrime) and a >= 1.
Int p_component(const Int& p, const Int& a);

/// For even n, the implication used to cancel the half-modulus factor:
///   nu_p(gcd(n/2,k)) * nu_p(gcd(n,k)) = nu_p(gcd(n/2,l)) * nu_p(gcd(n,l))
///     implies  nu_p(gcd(n,k)) = nu_p(gcd(n,l)).
/// Returns the truth value of the implication for the given instance.
bool p_component_implication(int n, const Int& k, const Int& l, const Int& p);

/// Known boundary-map orders for specific groups: m over the 4-sphere,
/// m' over the projective plane. Whenever both are known, m is m' or 2m'.
struct KnownOrderRecord {
    std::string group;
    std::optional<Int> order_s4;    // m
    std::optional<Int> order_cp2;   // m'
    std::string note;
};
const std::vector<KnownOrderRecord>& known_orders();

enum class Parity { Odd, Even };

/// Degree offset i - 2n into the homotopy table of SU(inf)/SU(n).
enum class DegreeOffset { AtMostZero = 0, One = 1, Two = 2, Three = 3 };

enum class AbelianGroup { Trivial, Z, Z2, ZPlusZ2 };
std::string to_string(AbelianGroup g);

/// pi_{2n + offset}(SU(inf)/SU(n)) in the range that justifies the
/// three-coordinate model.
AbelianGroup quotient_space_homotopy(Parity parity, DegreeOffset offset);

struct HomotopyTableEntry {
    Parity parity;
    DegreeOffset offset;
    AbelianGroup group;
};
const std::vector<HomotopyTableEntry>& quotient_homotopy_table();

}  // namespace sugauge
