#pragma once

#include <utility>
#include <vector>

#include "sugauge/matrix.hpp"

namespace sugauge {

struct ParityMismatch : Error {
    using Error::Error;
};
struct UnknownGenerator : Error {
    using Error::Error;
};
/// Raised when a scaled Chern coordinate fails to be an integer; the
/// scaling is integral for every genuine class, so this signals a bug.
struct NonIntegralResult : Error {
    using Error::Error;
};

/// The space whose cohomology the computation lives in, smashed with the
/// projective plane: the full projective space, or its top-two-cells
/// quotient (whose cell structure depends on the parity of n).
enum class Space {
    ProjectiveSmash,   // generators indexed 1..n-1, plain and primed
    TopQuotientOdd,    // four generators; requires n odd
    TopQuotientEven,   // four generators; requires n even
};

/// Rank parameter n >= 3 plus the ambient space. Construction validates
/// the parity constraint of the top-quotient spaces.
class RingContext {
public:
    RingContext(int n, Space space);

    int n() const { return n_; }
    Space space() const { return space_; }

    bool operator==(const RingContext&) const = default;

private:
    int n_;
    Space space_;
};

/// Element of the truncated bigraded ring with exact rational
/// coefficients. Monomials are u^a v^b with a in {1,2} and 1 <= b <= n-1;
/// u has degree 2 and the b-th v-slot degree 2b, so slot (a,b) has total
/// degree 2a+2b. In the top-quotient spaces only b in {n-2, n-1} exists
/// (the two surviving cells); all other slots are identically zero.
class GradedElement {
public:
    explicit GradedElement(RingContext ctx);

    const RingContext& context() const { return ctx_; }

    const Rat& coeff(int a, int b) const;
    void set_coeff(int a, int b, Rat c);
    bool is_zero() const;

    GradedElement& operator+=(const GradedElement& other);
    GradedElement& operator*=(const Int& scalar);

private:
    void check_slot(int a, int b) const;

    RingContext ctx_;
    RationalMatrix coeff_;  // (a-1, b-1), 2 x (n-1)
};

GradedElement operator+(GradedElement a, const GradedElement& b);
GradedElement operator*(const Int& s, GradedElement a);

/// Generator of the reduced K-group in a given context. In the
/// ProjectiveSmash family the u-part is u^2 for plain generators and
/// u + u^2/2 for primed ones, with index 1..n-1. The top-quotient
/// families have four plain generators.
enum class GeneratorKind { Plain, Primed };
struct Generator {
    GeneratorKind kind = GeneratorKind::Plain;
    int index = 1;
    bool operator==(const Generator&) const = default;
};

/// Integer combination of named K-theory generators; the Chern character
/// is carried symbolically and evaluated on demand.
class KClass {
public:
    explicit KClass(RingContext ctx) : ctx_(std::move(ctx)) {}

    const RingContext& context() const { return ctx_; }
    const std::vector<std::pair<Generator, Int>>& terms() const { return terms_; }

    /// Appends coeff * generator; validates the generator against the
    /// context (UnknownGenerator otherwise).
    KClass& add(Generator g, Int coeff);

private:
    RingContext ctx_;
    std::vector<std::pair<Generator, Int>> terms_;
};

/// Integer coordinates (x, y, z) of x*u^2 v^{n-2} + y*u v^{n-1} +
/// z*u^2 v^{n-1}, the two cohomology degrees the boundary-order
/// computations happen in.
struct CohomVector {
    Int x, y, z;

    /// Builds from rational data, asserting integrality of each entry.
    static CohomVector from_rational(const Rat& x, const Rat& y, const Rat& z);

    IntegerRow row() const {
        IntegerRow r(3);
        r << x, y, z;
        return r;
    }
    bool operator==(const CohomVector&) const = default;
};

/// Coefficients of v^0 .. v^max_degree in (e^v - 1)^i, computed by
/// truncated polynomial multiplication (i >= 1, max_degree >= 0).
std::vector<Rat> exp_power_series(int i, int max_degree);

/// The closed-form integer sums entering the Chern coordinates of the
/// i-th generators:
///
///   a = sum_{j=1..i} (-1)^{i+j} C(i,j) j^{n-2}
///   b = sum_{j=1..i} (-1)^{i+j} C(i,j) j^{n-1}
///
/// They equal (n-2)! resp. (n-1)! times the v^{n-2} / v^{n-1} series
/// coefficients of (e^v - 1)^i; the series route is the independent
/// cross-check.
struct GeneratorCoeffs {
    Int a;
    Int b;
};
GeneratorCoeffs generator_coeffs(int i, int n);

/// Truncated Chern character of a single generator.
///
/// ProjectiveSmash: ch(plain_i)  = u^2 (e^v - 1)^i,
///                  ch(primed_i) = (u + u^2/2)(e^v - 1)^i.
/// Top-quotient families use the four fixed characters in the two
/// surviving v-slots (see chern.cpp for the tables).
GradedElement chern_character(const RingContext& ctx, Generator g);

/// The integral Chern pair of a K-class: the degree-2n part of ch scaled
/// by n! and the degree-(2n+2) part scaled by (n+1)!, returned as (x,y,z)
/// coordinates. Degrees are computed from slot arithmetic, so the same
/// extraction serves all three spaces. Non-integral results raise
/// NonIntegralResult.
CohomVector integral_chern(const KClass& f);

}  // namespace sugauge
