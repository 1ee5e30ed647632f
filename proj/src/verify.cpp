#include "sugauge/verify.hpp"

#include "sugauge/orders.hpp"

namespace sugauge {

namespace {

Int default_k_max(int n) {
    const Int nn(n);
    return 2 * nn * (nn * nn - 1);
}

void check_image_reduction(CheckResult& out, int n) {
    ++out.cases;
    if (!(integral_chern_image(n, Space::ProjectiveSmash) == reduced_chern_image(n)))
        out.failures.push_back({n, std::nullopt, "canonical bases differ"});
}

void check_restricted_order(CheckResult& out, int n) {
    ++out.cases;
    const OrderResult r = restricted_boundary_order(n);
    if (!r.agrees)
        out.failures.push_back(
            {n, std::nullopt, "computed " + dec(r.computed) + " != closed form " + dec(r.closed_form)});
}

void check_boundary_orders(CheckResult& out, int n, const Int& k_max) {
    for (Int k = 0; k <= k_max; ++k) {
        ++out.cases;
        const OrderResult r = boundary_image_order(n, k);
        if (!r.agrees) {
            out.failures.push_back(
                {n, k, "computed " + dec(r.computed) + " != closed form " + dec(r.closed_form)});
            if (out.failures.size() >= 8) return;  // enough evidence
        }
    }
}

void check_parity_containment(CheckResult& out, int n, const Int& k_max) {
    const Lattice parity = parity_lattice(n);
    const Space family = n % 2 == 1 ? Space::TopQuotientOdd : Space::TopQuotientEven;
    const Lattice image = integral_chern_image(n, family);
    for (Index i = 0; i < image.rank(); ++i) {
        ++out.cases;
        if (!lattice_contains(parity, image.basis().row(i)))
            out.failures.push_back({n, std::nullopt, "image basis row escapes the parity lattice"});
    }
    // Lift coordinates stay inside the parity lattice for every k; spot
    // check small k plus the sweep bound.
    std::vector<Int> ks = {0, 1, 2, 3, 5, 7, 11, k_max};
    for (const Int& k : ks) {
        for (int i = 1; i <= 2; ++i) {
            ++out.cases;
            if (!lattice_contains(parity, boundary_lift(n, k, i).row()))
                out.failures.push_back({n, k, "boundary lift escapes the parity lattice"});
        }
    }
}

void check_odd_invariant_factors(CheckResult& out, int n) {
    if (n % 4 != 3) return;
    ++out.cases;
    const IntegerMatrix rows = integral_chern_rows(n, Space::TopQuotientOdd);
    const QuotientReport q = quotient_invariants(rows, parity_lattice(n).basis());
    const Int half_fact_n = factorial(static_cast<unsigned long>(n)) / 2;
    const Int half_fact_n1 = factorial(static_cast<unsigned long>(n) + 1) / 2;
    const std::vector<Int> expected = {half_fact_n, half_fact_n, half_fact_n1};
    if (q.free_rank != 0 || q.invariant_factors != expected) {
        std::string got;
        for (const Int& f : q.invariant_factors) got += dec(f) + " ";
        out.failures.push_back({n, std::nullopt, "invariant factors " + got + "unexpected"});
    }
}

void check_coefficient_sums(CheckResult& out, int n) {
    const Int fact_low = factorial(static_cast<unsigned long>(n) - 2);
    const Int fact_high = factorial(static_cast<unsigned long>(n) - 1);
    for (int i = 1; i <= n - 1; ++i) {
        ++out.cases;
        const GeneratorCoeffs c = generator_coeffs(i, n);
        const std::vector<Rat> s = exp_power_series(i, n - 1);
        const Rat a_series = Rat(fact_low) * s[static_cast<std::size_t>(n - 2)];
        const Rat b_series = Rat(fact_high) * s[static_cast<std::size_t>(n - 1)];
        if (a_series != Rat(c.a) || b_series != Rat(c.b)) {
            out.failures.push_back({n, Int(i), "closed form disagrees with series coefficients"});
            continue;
        }
        if ((c.a - c.b) % 2 != 0)
            out.failures.push_back({n, Int(i), "coefficient difference is odd"});
        if (i == 2 && c.a - c.b != -pow_int(2, static_cast<unsigned long>(n) - 2))
            out.failures.push_back({n, Int(i), "second difference is not -2^(n-2)"});
    }
}

void check_p_component_implication(CheckResult& out, int n, const Int& k_max) {
    if (n % 2 != 0) return;
    long limit = 128;
    if (k_max < limit) limit = static_cast<long>(k_max.get_si());
    for (long k = 1; k <= limit; ++k) {
        for (long l = 1; l <= limit; ++l) {
            for (long p : {2L, 3L, 5L, 7L}) {
                ++out.cases;
                if (!p_component_implication(n, k, l, p))
                    out.failures.push_back({n, Int(k), "implication fails at l=" + std::to_string(l) +
                                                           ", p=" + std::to_string(p)});
            }
        }
    }
}

void check_static_orders(CheckResult& out) {
    for (const KnownOrderRecord& rec : known_orders()) {
        if (!rec.order_s4 || !rec.order_cp2) continue;
        ++out.cases;
        const Int& m = *rec.order_s4;
        const Int& mp = *rec.order_cp2;
        if (m != mp && m != 2 * mp)
            out.failures.push_back({0, std::nullopt, rec.group + ": m is neither m' nor 2m'"});
    }
    ++out.cases;
    const OrderResult su3 = restricted_boundary_order(3);
    for (const KnownOrderRecord& rec : known_orders()) {
        if (rec.group != "SU(3)") continue;
        if (!rec.order_cp2 || su3.computed != *rec.order_cp2)
            out.failures.push_back({3, std::nullopt, "SU(3) bound does not attain the known order"});
    }
}

}  // namespace

std::vector<CheckResult> run_verification(int n_min, int n_max, const std::optional<Int>& k_max) {
    if (n_min < 3 || n_max < n_min) throw Error("run_verification: need 3 <= n_min <= n_max");

    CheckResult reduction, restricted, boundary, parity, factors, sums, pcomp, statics;
    reduction.name = "chern image reduction to three generators";
    restricted.name = "restricted boundary order vs closed form";
    boundary.name = "boundary image order vs closed form";
    parity.name = "chern image and lifts inside parity lattice";
    factors.name = "invariant factors of the odd cokernel";
    sums.name = "series coefficients vs closed-form sums";
    pcomp.name = "p-component implication";
    statics.name = "static order table consistency";

    for (int n = n_min; n <= n_max; ++n) {
        const Int km = k_max ? *k_max : default_k_max(n);
        check_image_reduction(reduction, n);
        check_restricted_order(restricted, n);
        check_boundary_orders(boundary, n, km);
        check_parity_containment(parity, n, km);
        check_odd_invariant_factors(factors, n);
        check_coefficient_sums(sums, n);
        check_p_component_implication(pcomp, n, km);
    }
    check_static_orders(statics);

    return {reduction, restricted, boundary, parity, factors, sums, pcomp, statics};
}

}  // namespace sugauge
