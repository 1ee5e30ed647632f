#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sugauge/chern.hpp"

using namespace sugauge;

namespace {

// Brute-force route: expand (e^v - 1)^i by plain polynomial products with
// no eager truncation, then read off the leading coefficients.
std::vector<Rat> naive_exp_power(int i, int max_degree) {
    const int full = i * max_degree + 1;
    std::vector<Rat> base(static_cast<std::size_t>(full) + 1);
    for (std::size_t m = 1; m < base.size(); ++m)
        base[m] = make_rat(1, factorial(static_cast<unsigned long>(m)));

    std::vector<Rat> acc = {Rat(1)};
    for (int rep = 0; rep < i; ++rep) {
        std::vector<Rat> next(acc.size() + base.size() - 1);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    acc.resize(static_cast<std::size_t>(max_degree) + 1);
    return acc;
}

// Closed per-coefficient formula; a second independent route.
Rat coefficient_formula(int i, int m) {
    Int sum = 0;
    for (int j = 1; j <= i; ++j) {
        const Int sign = (i + j) % 2 == 0 ? 1 : -1;
        sum += sign * binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)) *
               pow_int(j, static_cast<unsigned long>(m));
    }
    return make_rat(sum, factorial(static_cast<unsigned long>(m)));
}

CohomVector chern_of(const RingContext& ctx, Generator g) {
    KClass f(ctx);
    f.add(g, 1);
    return integral_chern(f);
}

}  // namespace

TEST_CASE("series expansion basics") {
    CHECK(exp_power_series(1, 2) == std::vector<Rat>{Rat(0), Rat(1), make_rat(1, 2)});
    CHECK(exp_power_series(2, 1) == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(exp_power_series(3, 3)[3] == Rat(1));
}

TEST_CASE("series expansion agrees with the untruncated product and the sum formula") {
    for (int i = 1; i <= 8; ++i) {
        const int deg = 10;
        const std::vector<Rat> lib = exp_power_series(i, deg);
        const std::vector<Rat> full = naive_exp_power(i, deg);
        REQUIRE(lib.size() == full.size());
        for (int m = 0; m <= deg; ++m) {
            CHECK(lib[static_cast<std::size_t>(m)] == full[static_cast<std::size_t>(m)]);
            if (m >= 1) CHECK(lib[static_cast<std::size_t>(m)] == coefficient_formula(i, m));
        }
    }
}

TEST_CASE("generator coefficient sums") {
    for (int n : {3, 5, 9, 20}) {
        const GeneratorCoeffs c1 = generator_coeffs(1, n);
        CHECK(c1.a == 1);
        CHECK(c1.b == 1);
    }
    const GeneratorCoeffs c25 = generator_coeffs(2, 5);
    CHECK(c25.a == 6);
    CHECK(c25.b == 14);

    for (int n = 3; n <= 40; ++n) {
        const GeneratorCoeffs c2 = generator_coeffs(2, n);
        CHECK(c2.a - c2.b == -pow_int(2, static_cast<unsigned long>(n) - 2));
        for (int i = 1; i <= n - 1; ++i) {
            const GeneratorCoeffs c = generator_coeffs(i, n);
            CHECK((c.a - c.b) % 2 == 0);
        }
    }
}

TEST_CASE("characters of the projective-smash generators") {
    const RingContext ctx(3, Space::ProjectiveSmash);
    const GradedElement primed = chern_character(ctx, {GeneratorKind::Primed, 1});
    // (u + u^2/2)(v + v^2/2) truncated at v^2.
    CHECK(primed.coeff(1, 1) == Rat(1));
    CHECK(primed.coeff(2, 1) == make_rat(1, 2));
    CHECK(primed.coeff(1, 2) == make_rat(1, 2));
    CHECK(primed.coeff(2, 2) == make_rat(1, 4));

    const GradedElement plain = chern_character(ctx, {GeneratorKind::Plain, 1});
    CHECK(plain.coeff(1, 1) == Rat(0));
    CHECK(plain.coeff(2, 1) == Rat(1));
    CHECK(plain.coeff(2, 2) == make_rat(1, 2));
}

TEST_CASE("characters of the top-quotient generators") {
    const RingContext odd(3, Space::TopQuotientOdd);
    const GradedElement l4 = chern_character(odd, {GeneratorKind::Plain, 4});
    CHECK(l4.coeff(2, 2) == Rat(1));
    CHECK(l4.coeff(2, 1) == Rat(0));
    CHECK(l4.coeff(1, 2) == Rat(0));

    const RingContext even(4, Space::TopQuotientEven);
    const GradedElement l1 = chern_character(even, {GeneratorKind::Plain, 1});
    CHECK(l1.coeff(1, 2) == Rat(1));
    CHECK(l1.coeff(2, 2) == make_rat(1, 2));
    CHECK(l1.coeff(1, 3) == Rat(0));
    CHECK(l1.coeff(2, 3) == Rat(0));
}

TEST_CASE("integral chern fixtures") {
    CHECK(chern_of(RingContext(3, Space::ProjectiveSmash), {GeneratorKind::Plain, 1}) ==
          CohomVector{6, 0, 12});
    CHECK(chern_of(RingContext(4, Space::ProjectiveSmash), {GeneratorKind::Primed, 1}) ==
          CohomVector{6, 4, 10});
    CHECK(chern_of(RingContext(3, Space::TopQuotientOdd), {GeneratorKind::Plain, 1}) ==
          CohomVector{3, 3, 6});

    const KClass zero{RingContext(5, Space::ProjectiveSmash)};
    CHECK(integral_chern(zero) == CohomVector{0, 0, 0});
}

TEST_CASE("integral chern recovers the coordinate formulas") {
    for (int n = 3; n <= 15; ++n) {
        const RingContext ctx(n, Space::ProjectiveSmash);
        const Int nn(n);
        for (int i = 1; i <= n - 1; ++i) {
            const GeneratorCoeffs c = generator_coeffs(i, n);
            const CohomVector plain = chern_of(ctx, {GeneratorKind::Plain, i});
            CHECK(plain == CohomVector{nn * (nn - 1) * c.a, 0, nn * (nn + 1) * c.b});
            const CohomVector primed = chern_of(ctx, {GeneratorKind::Primed, i});
            CHECK(primed == CohomVector{nn * (nn - 1) * c.a / 2, nn * c.b, nn * (nn + 1) * c.b / 2});
        }
    }
}

TEST_CASE("integral chern is additive") {
    std::vector<RingContext> contexts = {
        RingContext(3, Space::ProjectiveSmash), RingContext(4, Space::ProjectiveSmash),
        RingContext(7, Space::ProjectiveSmash), RingContext(9, Space::TopQuotientOdd),
        RingContext(8, Space::TopQuotientEven)};
    for (const RingContext& ctx : contexts) {
        const int n = ctx.n();
        const bool projective = ctx.space() == Space::ProjectiveSmash;
        long seed = 17;
        for (int trial = 0; trial < 25; ++trial) {
            auto next = [&seed] { return (seed = (seed * 1103515245 + 12345) % 2048) - 1024; };
            KClass a(ctx), b(ctx), both(ctx);
            const int max_index = projective ? n - 1 : 4;
            for (int i = 1; i <= max_index; ++i) {
                std::vector<GeneratorKind> kinds = {GeneratorKind::Plain};
                if (projective) kinds.push_back(GeneratorKind::Primed);
                for (GeneratorKind kind : kinds) {
                    const Int ca = next(), cb = next();
                    a.add({kind, i}, ca);
                    b.add({kind, i}, cb);
                    both.add({kind, i}, ca + cb);
                }
            }
            const CohomVector va = integral_chern(a);
            const CohomVector vb = integral_chern(b);
            const CohomVector vs = integral_chern(both);
            CHECK(vs == CohomVector{va.x + vb.x, va.y + vb.y, va.z + vb.z});
        }
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(RingContext(4, Space::TopQuotientOdd), ParityMismatch);
    CHECK_THROWS_AS(RingContext(5, Space::TopQuotientEven), ParityMismatch);
    CHECK_THROWS_AS(RingContext(2, Space::ProjectiveSmash), Error);

    const RingContext cpn(4, Space::ProjectiveSmash);
    KClass f(cpn);
    CHECK_THROWS_AS(f.add({GeneratorKind::Plain, 0}, 1), UnknownGenerator);
    CHECK_THROWS_AS(f.add({GeneratorKind::Plain, 4}, 1), UnknownGenerator);

    const RingContext odd(5, Space::TopQuotientOdd);
    KClass g(odd);
    CHECK_THROWS_AS(g.add({GeneratorKind::Primed, 1}, 1), UnknownGenerator);
    CHECK_THROWS_AS(g.add({GeneratorKind::Plain, 5}, 1), UnknownGenerator);

    GradedElement e{odd};
    CHECK_THROWS_AS(e.set_coeff(3, 4, Rat(1)), Error);
    CHECK_THROWS_AS(e.set_coeff(1, 1, Rat(1)), Error);  // slot absent in the top quotient

    CHECK_THROWS_AS(CohomVector::from_rational(make_rat(1, 2), Rat(0), Rat(0)), NonIntegralResult);
}
