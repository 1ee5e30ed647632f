#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sugauge {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// values routinely reach (n+1)! for n up to 40, so fixed-width types are
/// never used for mathematical data.
using Int = mpz_class;

/// Exact rational. Kept canonical (reduced, positive denominator) by
/// construction; see make_rat for building one from a numerator/denominator
/// pair.
using Rat = mpq_class;

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// gcd(a, 0) = |a|, gcd(0, 0) = 0; result is never negative.
inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient a/b for known-divisible operands; throws on inexact division.
inline Int exact_div(const Int& a, const Int& b) {
    if (!divides(b, a)) throw Error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor quotient; remainder lands in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Quotient rounded to the nearest integer (b > 0); remainder magnitude
/// is at most b/2, which keeps entries small during normal-form reduction.
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;
    if (2 * r > b) q += 1;
    return q;
}

/// Canonical rational num/den (den != 0).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Decimal rendering; the only sanctioned way to put an Int into text or
/// JSON (native JSON numbers lose precision at factorial magnitudes).
inline std::string dec(const Int& v) { return v.get_str(); }

}  // namespace sugauge

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50,
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100,
    };
};

}  // namespace Eigen
