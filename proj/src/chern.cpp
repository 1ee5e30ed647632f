#include "sugauge/chern.hpp"

namespace sugauge {

RingContext::RingContext(int n, Space space) : n_(n), space_(space) {
    if (n < 3) throw Error("RingContext: n must be at least 3");
    if (space == Space::TopQuotientOdd && n % 2 == 0)
        throw ParityMismatch("RingContext: odd top-quotient space needs odd n");
    if (space == Space::TopQuotientEven && n % 2 != 0)
        throw ParityMismatch("RingContext: even top-quotient space needs even n");
}

GradedElement::GradedElement(RingContext ctx)
    : ctx_(ctx), coeff_(RationalMatrix::Zero(2, ctx.n() - 1)) {}

void GradedElement::check_slot(int a, int b) const {
    if (a < 1 || a > 2 || b < 1 || b > ctx_.n() - 1)
        throw Error("GradedElement: monomial outside the truncated ring");
    if (ctx_.space() != Space::ProjectiveSmash && b != ctx_.n() - 2 && b != ctx_.n() - 1)
        throw Error("GradedElement: v-slot absent in the top-quotient space");
}

const Rat& GradedElement::coeff(int a, int b) const {
    check_slot(a, b);
    return coeff_(a - 1, b - 1);
}

void GradedElement::set_coeff(int a, int b, Rat c) {
    check_slot(a, b);
    coeff_(a - 1, b - 1) = std::move(c);
}

bool GradedElement::is_zero() const {
    for (Index i = 0; i < coeff_.rows(); ++i)
        for (Index j = 0; j < coeff_.cols(); ++j)
            if (coeff_(i, j) != 0) return false;
    return true;
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
    if (!(ctx_ == other.ctx_)) throw Error("GradedElement: context mismatch");
    coeff_ += other.coeff_;
    return *this;
}

GradedElement& GradedElement::operator*=(const Int& scalar) {
    coeff_ *= Rat(scalar);
    return *this;
}

GradedElement operator+(GradedElement a, const GradedElement& b) {
    a += b;
    return a;
}

GradedElement operator*(const Int& s, GradedElement a) {
    a *= s;
    return a;
}

std::vector<Rat> exp_power_series(int i, int max_degree) {
    if (i < 1) throw Error("exp_power_series: i must be at least 1");
    if (max_degree < 0) throw Error("exp_power_series: negative degree");
    const std::size_t len = static_cast<std::size_t>(max_degree) + 1;

    // e^v - 1 truncated to degree max_degree.
    std::vector<Rat> base(len);
    for (std::size_t m = 1; m < len; ++m)
        base[m] = make_rat(1, factorial(static_cast<unsigned long>(m)));

    std::vector<Rat> acc = base;
    for (int rep = 1; rep < i; ++rep) {
        std::vector<Rat> next(len);
        for (std::size_t a = 0; a < len; ++a) {
            if (acc[a] == 0) continue;
            for (std::size_t b = 0; a + b < len; ++b) {
                if (base[b] == 0) continue;
                next[a + b] += acc[a] * base[b];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

GeneratorCoeffs generator_coeffs(int i, int n) {
    if (n < 3) throw Error("generator_coeffs: n must be at least 3");
    if (i < 1 || i > n - 1) throw Error("generator_coeffs: index out of range");
    GeneratorCoeffs c{0, 0};
    for (int j = 1; j <= i; ++j) {
        const Int sign = (i + j) % 2 == 0 ? 1 : -1;
        const Int binom = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        c.a += sign * binom * pow_int(j, static_cast<unsigned long>(n - 2));
        c.b += sign * binom * pow_int(j, static_cast<unsigned long>(n - 1));
    }
    return c;
}

KClass& KClass::add(Generator g, Int coeff) {
    if (ctx_.space() == Space::ProjectiveSmash) {
        if (g.index < 1 || g.index > ctx_.n() - 1)
            throw UnknownGenerator("KClass: generator index out of range");
    } else {
        if (g.kind == GeneratorKind::Primed)
            throw UnknownGenerator("KClass: top-quotient families have no primed generators");
        if (g.index < 1 || g.index > 4)
            throw UnknownGenerator("KClass: generator index out of range");
    }
    terms_.emplace_back(g, std::move(coeff));
    return *this;
}

namespace {

GradedElement projective_character(const RingContext& ctx, Generator g) {
    const int n = ctx.n();
    const std::vector<Rat> series = exp_power_series(g.index, n - 1);
    GradedElement ch(ctx);
    const Rat half = make_rat(1, 2);
    for (int b = 1; b <= n - 1; ++b) {
        const Rat& s = series[static_cast<std::size_t>(b)];
        if (s == 0) continue;
        if (g.kind == GeneratorKind::Plain) {
            ch.set_coeff(2, b, s);  // u^2 * series
        } else {
            ch.set_coeff(1, b, s);  // (u + u^2/2) * series
            ch.set_coeff(2, b, half * s);
        }
    }
    return ch;
}

// The four characters on the top-quotient spaces, in the two surviving
// v-slots lo = n-2 and hi = n-1.
//
// n odd:  ch_1 = (u + u^2/2)(v_lo + v_hi/2)   n even: ch_1 = (u + u^2/2) v_lo
//         ch_2 = (u + u^2/2) v_hi                     ch_2 = u^2 v_lo
//         ch_3 = u^2 (v_lo + v_hi/2)                  ch_3 = (u + u^2/2) v_hi
//         ch_4 = u^2 v_hi                             ch_4 = u^2 v_hi
GradedElement top_quotient_character(const RingContext& ctx, Generator g) {
    const int lo = ctx.n() - 2;
    const int hi = ctx.n() - 1;
    GradedElement ch(ctx);
    const Rat half = make_rat(1, 2);
    const Rat quarter = make_rat(1, 4);
    if (ctx.space() == Space::TopQuotientOdd) {
        switch (g.index) {
            case 1:
                ch.set_coeff(1, lo, 1);
                ch.set_coeff(2, lo, half);
                ch.set_coeff(1, hi, half);
                ch.set_coeff(2, hi, quarter);
                break;
            case 2:
                ch.set_coeff(1, hi, 1);
                ch.set_coeff(2, hi, half);
                break;
            case 3:
                ch.set_coeff(2, lo, 1);
                ch.set_coeff(2, hi, half);
                break;
            case 4:
                ch.set_coeff(2, hi, 1);
                break;
            default:
                throw UnknownGenerator("chern_character: top-quotient index out of range");
        }
    } else {
        switch (g.index) {
            case 1:
                ch.set_coeff(1, lo, 1);
                ch.set_coeff(2, lo, half);
                break;
            case 2:
                ch.set_coeff(2, lo, 1);
                break;
            case 3:
                ch.set_coeff(1, hi, 1);
                ch.set_coeff(2, hi, half);
                break;
            case 4:
                ch.set_coeff(2, hi, 1);
                break;
            default:
                throw UnknownGenerator("chern_character: top-quotient index out of range");
        }
    }
    return ch;
}

}  // namespace

GradedElement chern_character(const RingContext& ctx, Generator g) {
    if (ctx.space() == Space::ProjectiveSmash) {
        if (g.index < 1 || g.index > ctx.n() - 1)
            throw UnknownGenerator("chern_character: generator index out of range");
        return projective_character(ctx, g);
    }
    if (g.kind == GeneratorKind::Primed)
        throw UnknownGenerator("chern_character: top-quotient families have no primed generators");
    return top_quotient_character(ctx, g);
}

CohomVector CohomVector::from_rational(const Rat& x, const Rat& y, const Rat& z) {
    if (!is_integer(x) || !is_integer(y) || !is_integer(z))
        throw NonIntegralResult("CohomVector: non-integral coordinate");
    return CohomVector{x.get_num(), y.get_num(), z.get_num()};
}

CohomVector integral_chern(const KClass& f) {
    const RingContext& ctx = f.context();
    const int n = ctx.n();

    GradedElement ch(ctx);
    for (const auto& [g, c] : f.terms()) ch += c * chern_character(ctx, g);

    const Int scale_low = factorial(static_cast<unsigned long>(n));
    const Int scale_high = factorial(static_cast<unsigned long>(n) + 1);

    // Pick out the total degrees 2n and 2n+2 by slot arithmetic: slot
    // (a, b) has degree 2a + 2b. Degree 2n lands on (2, n-2) and
    // (1, n-1); degree 2n+2 only on (2, n-1).
    Rat x = 0, y = 0, z = 0;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= n - 1; ++b) {
            if (ctx.space() != Space::ProjectiveSmash && b != n - 2 && b != n - 1) continue;
            const int degree = 2 * a + 2 * b;
            if (degree == 2 * n) {
                if (a == 2)
                    x = Rat(scale_low) * ch.coeff(a, b);
                else
                    y = Rat(scale_low) * ch.coeff(a, b);
            } else if (degree == 2 * n + 2) {
                z = Rat(scale_high) * ch.coeff(a, b);
            }
        }
    }
    return CohomVector::from_rational(x, y, z);
}

}  // namespace sugauge
