#include "sugauge/orders.hpp"

namespace sugauge {

IntegerMatrix integral_chern_rows(int n, Space family) {
    const RingContext ctx(n, family);  // validates parity

    std::vector<Generator> gens;
    if (family == Space::ProjectiveSmash) {
        for (int i = 1; i <= n - 1; ++i) {
            gens.push_back({GeneratorKind::Plain, i});
            gens.push_back({GeneratorKind::Primed, i});
        }
    } else {
        for (int i = 1; i <= 4; ++i) gens.push_back({GeneratorKind::Plain, i});
    }

    IntegerMatrix rows(static_cast<Index>(gens.size()), 3);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        KClass f(ctx);
        f.add(gens[i], 1);
        rows.row(static_cast<Index>(i)) = integral_chern(f).row();
    }
    return rows;
}

Lattice integral_chern_image(int n, Space family) {
    return hnf_rows(integral_chern_rows(n, family));
}

Lattice reduced_chern_image(int n) {
    if (n < 3) throw Error("reduced_chern_image: n must be at least 3");
    const Int nn(n);
    IntegerMatrix rows(3, 3);
    rows << Int(nn * (nn - 1) / 2), nn, Int(nn * (nn + 1) / 2),
            Int(nn * (nn - 1)), Int(0), Int(0),
            Int(0), Int(2 * nn), Int(0);
    return hnf_rows(rows);
}

OrderResult restricted_boundary_order(int n) {
    if (n < 3) throw Error("restricted_boundary_order: n must be at least 3");
    const Lattice image = integral_chern_image(n, Space::ProjectiveSmash);
    const auto m = minimal_multiplier(image, make_row({1, 0, 1}));
    if (!m) throw Error("restricted_boundary_order: (1,0,1) escaped the rational span");

    const Int nn(n);
    const Int full = nn * (nn * nn - 1);
    const Int closed = n % 2 == 1 ? Int(full / 2) : full;
    return OrderResult{n, *m, closed, *m == closed};
}

Lattice parity_lattice(int n) {
    if (n < 3) throw Error("parity_lattice: n must be at least 3");
    if (n % 2 == 1) return hnf_rows(rows_matrix({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));
    return hnf_rows(rows_matrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
}

CohomVector boundary_lift(int n, const Int& k, int i) {
    if (n < 3) throw Error("boundary_lift: n must be at least 3");
    if (i != 1 && i != 2) throw Error("boundary_lift: generator index must be 1 or 2");

    const Int low = factorial(static_cast<unsigned long>(n) - 2);   // (n-2)!
    const Int high = factorial(static_cast<unsigned long>(n) - 1);  // (n-1)!
    if (i == 2) return CohomVector{0, 0, high * k};
    if (n % 2 == 0) return CohomVector{low * k, 0, 0};
    // (n-1)! is even for n >= 3, so the halved entry is integral.
    return CohomVector{low * k, 0, exact_div(high * k, 2)};
}

OrderResult boundary_image_order(int n, const Int& k) {
    if (n < 3) throw Error("boundary_image_order: n must be at least 3");
    const Space family = n % 2 == 1 ? Space::TopQuotientOdd : Space::TopQuotientEven;
    const Lattice image = integral_chern_image(n, family);

    IntegerMatrix gens(2, 3);
    gens.row(0) = boundary_lift(n, k, 1).row();
    gens.row(1) = boundary_lift(n, k, 2).row();

    const GroupOrder order = subgroup_order_in_quotient(image, gens);
    if (!order.is_finite()) throw Error("boundary_image_order: unexpectedly infinite");

    const Int nn(n);
    Int closed;
    if (n % 2 == 1) {
        const Int m1 = nn * (nn * nn - 1) / 2;
        closed = (m1 / gcd(m1, k)) * (nn / gcd(nn, k));
    } else {
        const Int m1 = nn * (nn - 1) / 2;
        const Int m2 = nn * (nn + 1);
        closed = (m1 / gcd(m1, k)) * (m2 / gcd(m2, k));
    }
    return OrderResult{n, order.value(), closed, order.value() == closed};
}

bool necessary_equiv_condition(int n, const Int& k, const Int& l) {
    if (n < 2) throw Error("necessary_equiv_condition: n must be at least 2");
    const Int nn(n);
    Int modulus = nn * (nn * nn - 1);
    if (n % 2 == 1) modulus /= 2;
    return gcd(modulus, k) == gcd(modulus, l);
}

bool sufficient_equiv_condition(const Int& m_prime, const Int& k, const Int& l) {
    if (m_prime < 1) throw Error("sufficient_equiv_condition: order must be positive");
    return gcd(m_prime, k) == gcd(m_prime, l);
}

Int p_component(const Int& p, const Int& a) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw NotPrime("p_component: " + dec(p) + " is not prime");
    if (a < 1) throw Error("p_component: argument must be positive");
    Int power = 1;
    Int rest = a;
    while (divides(p, rest)) {
        rest = exact_div(rest, p);
        power *= p;
    }
    return power;
}

bool p_component_implication(int n, const Int& k, const Int& l, const Int& p) {
    if (n < 2 || n % 2 != 0) throw Error("p_component_implication: n must be even");
    const Int nn(n);
    const Int half = nn / 2;
    const Int hk = p_component(p, gcd(half, k)) * p_component(p, gcd(nn, k));
    const Int hl = p_component(p, gcd(half, l)) * p_component(p, gcd(nn, l));
    if (hk != hl) return true;  // vacuous
    return p_component(p, gcd(nn, k)) == p_component(p, gcd(nn, l));
}

const std::vector<KnownOrderRecord>& known_orders() {
    static const std::vector<KnownOrderRecord> records = {
        {"SU(2)", Int(12), Int(6), "both orders known"},
        {"SU(3)", Int(24), Int(12), "both orders known"},
        {"SU(5)", Int(120), std::nullopt, "order over the projective plane open"},
        {"Sp(2)", Int(40), Int(40), "orders coincide"},
    };
    return records;
}

std::string to_string(AbelianGroup g) {
    switch (g) {
        case AbelianGroup::Trivial: return "0";
        case AbelianGroup::Z: return "Z";
        case AbelianGroup::Z2: return "Z/2";
        case AbelianGroup::ZPlusZ2: return "Z+Z/2";
    }
    throw Error("to_string: unknown group");
}

AbelianGroup quotient_space_homotopy(Parity parity, DegreeOffset offset) {
    switch (offset) {
        case DegreeOffset::AtMostZero: return AbelianGroup::Trivial;
        case DegreeOffset::One: return AbelianGroup::Z;
        case DegreeOffset::Two:
            return parity == Parity::Odd ? AbelianGroup::Trivial : AbelianGroup::Z2;
        case DegreeOffset::Three:
            return parity == Parity::Odd ? AbelianGroup::Z : AbelianGroup::ZPlusZ2;
    }
    throw Error("quotient_space_homotopy: unknown offset");
}

const std::vector<HomotopyTableEntry>& quotient_homotopy_table() {
    static const std::vector<HomotopyTableEntry> table = [] {
        std::vector<HomotopyTableEntry> t;
        for (Parity parity : {Parity::Odd, Parity::Even})
            for (DegreeOffset off : {DegreeOffset::AtMostZero, DegreeOffset::One,
                                     DegreeOffset::Two, DegreeOffset::Three})
                t.push_back({parity, off, quotient_space_homotopy(parity, off)});
        return t;
    }();
    return table;
}

}  // namespace sugauge
