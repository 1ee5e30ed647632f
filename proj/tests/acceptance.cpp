// Acceptance harness: one pass/fail line per criterion, nonzero exit on
// any failure. Ranges and tolerances are fixed here, not configurable;
// everything is exact arithmetic, so every comparison is equality.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sugauge/orders.hpp"

using namespace sugauge;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, long cases, double seconds,
            const std::string& detail = "") {
    std::printf("[%d/8] %-58s %s  (%ld cases, %.2fs)%s%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", cases, seconds, detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// 1. Restricted boundary order equals n(n^2-1)/2 (n odd) or n(n^2-1)
//    (n even) for 3 <= n <= 40.
void criterion_restricted_order() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 40; ++n) {
        ++cases;
        const OrderResult r = restricted_boundary_order(n);
        const Int nn(n);
        const Int expected = n % 2 == 1 ? Int(nn * (nn * nn - 1) / 2) : Int(nn * (nn * nn - 1));
        if (!(r.agrees && r.computed == expected)) {
            pass = false;
            detail = "n=" + std::to_string(n) + " computed " + dec(r.computed);
            break;
        }
    }
    report(1, "restricted boundary order, n=3..40", pass, cases, t.seconds(), detail);
}

// 2. The 2(n-1)-generator image canonicalizes to the three-generator
//    span for 3 <= n <= 40.
void criterion_image_reduction() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 40; ++n) {
        ++cases;
        if (!(integral_chern_image(n, Space::ProjectiveSmash) == reduced_chern_image(n))) {
            pass = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    report(2, "chern image equals the reduced three-generator span, n=3..40", pass, cases,
           t.seconds(), detail);
}

// 3. Basis-free boundary image order equals the closed form for
//    3 <= n <= 25 and 0 <= k <= 2n(n^2-1).
void criterion_boundary_orders() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 25 && pass; ++n) {
        const Int nn(n);
        const Int k_max = 2 * nn * (nn * nn - 1);
        for (Int k = 0; k <= k_max; ++k) {
            ++cases;
            const OrderResult r = boundary_image_order(n, k);
            if (!r.agrees) {
                pass = false;
                detail = "n=" + std::to_string(n) + " k=" + dec(k) + ": " + dec(r.computed) +
                         " != " + dec(r.closed_form);
                break;
            }
        }
    }
    report(3, "boundary image order vs closed form, n=3..25, k=0..2n(n^2-1)", pass, cases,
           t.seconds(), detail);
}

// 4. Invariant factors of the odd-parity cokernel are
//    (n!/2, n!/2, (n+1)!/2) for n in {3, 7, 11, 15}; (3, 3, 12) at n=3.
void criterion_invariant_factors() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n : {3, 7, 11, 15}) {
        ++cases;
        const QuotientReport q = quotient_invariants(integral_chern_rows(n, Space::TopQuotientOdd),
                                                     parity_lattice(n).basis());
        const Int half_n = factorial(static_cast<unsigned long>(n)) / 2;
        const Int half_n1 = factorial(static_cast<unsigned long>(n) + 1) / 2;
        const std::vector<Int> expected = {half_n, half_n, half_n1};
        bool ok = q.free_rank == 0 && q.invariant_factors == expected;
        if (n == 3) ok = ok && q.invariant_factors == std::vector<Int>{3, 3, 12};
        if (!ok) {
            pass = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    report(4, "odd cokernel invariant factors, n in {3,7,11,15}", pass, cases, t.seconds(), detail);
}

// 5. Closed-form coefficient sums equal the series coefficients for all
//    1 <= i <= n-1, 3 <= n <= 40; differences even; the i=2 difference
//    is -2^(n-2).
void criterion_coefficients() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 40 && pass; ++n) {
        const Int fact_low = factorial(static_cast<unsigned long>(n) - 2);
        const Int fact_high = factorial(static_cast<unsigned long>(n) - 1);
        for (int i = 1; i <= n - 1; ++i) {
            ++cases;
            const GeneratorCoeffs c = generator_coeffs(i, n);
            const std::vector<Rat> s = exp_power_series(i, n - 1);
            const bool series_ok = Rat(c.a) == Rat(fact_low) * s[static_cast<std::size_t>(n - 2)] &&
                                   Rat(c.b) == Rat(fact_high) * s[static_cast<std::size_t>(n - 1)];
            const bool parity_ok = (c.a - c.b) % 2 == 0;
            const bool second_ok =
                i != 2 || c.a - c.b == -pow_int(2, static_cast<unsigned long>(n) - 2);
            if (!(series_ok && parity_ok && second_ok)) {
                pass = false;
                detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
                break;
            }
        }
    }
    report(5, "coefficient sums vs series oracle, n=3..40", pass, cases, t.seconds(), detail);
}

// 6. Randomized linear-algebra properties: 500 SNF instances
//    (reconstruction, unimodularity, divisibility), 500 membership
//    instances against the Cramer decision and the box enumeration,
//    100 index chains.
void criterion_linear_algebra() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    std::mt19937 rng(0x5eed);

    std::uniform_int_distribution<Index> dim5(1, 5);
    for (int trial = 0; trial < 500 && pass; ++trial) {
        ++cases;
        const IntegerMatrix m = oracle::random_matrix(rng, dim5(rng), dim5(rng), 50);
        const SnfDecomposition s = snf(m);
        bool ok = IntegerMatrix(s.left * m * s.right) == s.diag &&
                  abs(oracle::laplace_det(s.left)) == 1 && abs(oracle::laplace_det(s.right)) == 1;
        for (Index i = 0; ok && i + 1 < s.rank; ++i) ok = divides(s.diag(i, i), s.diag(i + 1, i + 1));
        for (Index i = 0; ok && i < s.rank; ++i) ok = s.diag(i, i) > 0;
        if (!ok) {
            pass = false;
            detail = "snf trial " + std::to_string(trial);
        }
    }

    std::uniform_int_distribution<Index> dim3(1, 3);
    std::uniform_int_distribution<long> target(-20, 20);
    std::uniform_int_distribution<long> small_coeff(-3, 3);
    for (int trial = 0; trial < 500 && pass; ++trial) {
        ++cases;
        const Index dim = dim3(rng);
        std::uniform_int_distribution<Index> nrows(1, dim + 1);
        const IntegerMatrix gens = oracle::random_matrix(rng, nrows(rng), dim, 10);
        const Lattice l = hnf_rows(gens);

        IntegerRow v(dim);
        if (trial % 2 == 0) {
            for (Index j = 0; j < dim; ++j) v(j) = target(rng);
        } else {
            v = IntegerRow::Zero(dim);
            for (Index i = 0; i < gens.rows(); ++i) v += Int(small_coeff(rng)) * gens.row(i);
        }
        const bool got = lattice_contains(l, v);
        if (got != oracle::cramer_contains(l.basis(), v) ||
            (oracle::enumerate_contains(gens, v, 4) && !got)) {
            pass = false;
            detail = "membership trial " + std::to_string(trial);
        }
    }

    int chains = 0;
    while (chains < 100 && pass) {
        const Index dim = dim3(rng);
        const IntegerMatrix cg = oracle::random_matrix(rng, dim, dim, 6);
        const IntegerMatrix t1 = oracle::random_matrix(rng, dim, dim, 4);
        const IntegerMatrix t2 = oracle::random_matrix(rng, dim, dim, 4);
        if (determinant(cg) == 0 || determinant(t1) == 0 || determinant(t2) == 0) continue;
        ++chains;
        ++cases;
        const Lattice c = hnf_rows(cg);
        const Lattice b = hnf_rows(IntegerMatrix(t1 * c.basis()));
        const Lattice a = hnf_rows(IntegerMatrix(t2 * b.basis()));
        if (lattice_index(a, c).value() != lattice_index(b, c).value() * lattice_index(a, b).value()) {
            pass = false;
            detail = "chain " + std::to_string(chains);
        }
    }

    report(6, "randomized snf/membership/index properties", pass, cases, t.seconds(), detail);
}

// 7. The p-component implication holds for every even 4 <= n <= 64,
//    1 <= k, l <= 128, p in {2, 3, 5, 7}.
void criterion_p_component() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 64 && pass; n += 2) {
        for (long k = 1; k <= 128 && pass; ++k) {
            for (long l = 1; l <= 128; ++l) {
                for (long p : {2L, 3L, 5L, 7L}) {
                    ++cases;
                    if (!p_component_implication(n, k, l, p)) {
                        pass = false;
                        detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                 " l=" + std::to_string(l) + " p=" + std::to_string(p);
                        break;
                    }
                }
                if (!pass) break;
            }
        }
    }
    report(7, "p-component implication, even n=4..64, k,l=1..128", pass, cases, t.seconds(), detail);
}

// 8. Static order table: m in {m', 2m'} wherever both are known, and the
//    SU(3) bound attains the known order 12.
void criterion_static_data() {
    Timer t;
    long cases = 0;
    bool pass = true;
    std::string detail;
    for (const KnownOrderRecord& rec : known_orders()) {
        if (!rec.order_s4 || !rec.order_cp2) continue;
        ++cases;
        if (*rec.order_s4 != *rec.order_cp2 && *rec.order_s4 != 2 * *rec.order_cp2) {
            pass = false;
            detail = rec.group;
        }
    }
    ++cases;
    const OrderResult su3 = restricted_boundary_order(3);
    bool su3_ok = su3.computed == 12;
    for (const KnownOrderRecord& rec : known_orders())
        if (rec.group == "SU(3)") su3_ok = su3_ok && rec.order_cp2 && su3.computed == *rec.order_cp2;
    if (!su3_ok) {
        pass = false;
        detail = "SU(3) bound";
    }
    report(8, "static order table consistency", pass, cases, t.seconds(), detail);
}

}  // namespace

int main() {
    criterion_restricted_order();
    criterion_image_reduction();
    criterion_boundary_orders();
    criterion_invariant_factors();
    criterion_coefficients();
    criterion_linear_algebra();
    criterion_p_component();
    criterion_static_data();

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
