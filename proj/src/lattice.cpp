#include "sugauge/lattice.hpp"

namespace sugauge {

namespace {

template <typename Row>
bool row_is_zero(const Row& r) {
    for (Index j = 0; j < r.cols(); ++j)
        if (r(j) != 0) return false;
    return true;
}

// Rational coefficients of v against the staircase basis, by
// back-substitution at the pivot columns. Returns the coefficient vector
// and the residual; v lies in the rational span iff the residual is zero.
struct BasisSolve {
    RationalRow coeffs;
    RationalRow residual;
    bool in_span = false;
};

BasisSolve solve_against_basis(const Lattice& l, const IntegerRow& v) {
    BasisSolve out;
    out.coeffs = RationalRow::Zero(l.rank());
    RationalRow w = v.cast<Rat>();
    for (Index i = 0; i < l.rank(); ++i) {
        const Index p = l.pivots()[static_cast<std::size_t>(i)];
        if (w(p) == 0) continue;
        Rat c = w(p) / Rat(l.basis()(i, p));
        w -= c * l.basis().row(i).cast<Rat>();
        out.coeffs(i) = c;
    }
    out.residual = w;
    out.in_span = row_is_zero(w);
    return out;
}

}  // namespace

Lattice hnf_rows(const IntegerMatrix& generators) {
    IntegerMatrix h = generators;
    const Index nrows = h.rows();
    const Index dim = h.cols();

    Index row = 0;
    std::vector<Index> pivots;
    for (Index col = 0; col < dim && row < nrows; ++col) {
        // Euclid in this column over rows >= row: repeatedly bring the
        // smallest nonzero entry to the front and reduce the others by
        // nearest quotients.
        for (;;) {
            Index p = -1;
            Int best_abs;
            for (Index i = row; i < nrows; ++i) {
                if (h(i, col) == 0) continue;
                Int a = abs(h(i, col));
                if (p < 0 || a < best_abs) {
                    p = i;
                    best_abs = a;
                }
            }
            if (p < 0) break;
            if (p != row) h.row(row).swap(h.row(p));
            if (h(row, col) < 0) h.row(row) = -h.row(row);
            bool clean = true;
            for (Index i = row + 1; i < nrows; ++i) {
                if (h(i, col) == 0) continue;
                Int q = round_div(h(i, col), h(row, col));
                h.row(i) -= q * h.row(row);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(row, col) == 0) continue;  // no pivot in this column

        // Canonical reduction: entries above the pivot into [0, pivot).
        for (Index i = 0; i < row; ++i) {
            if (h(i, col) == 0) continue;
            Int q = floor_div(h(i, col), h(row, col));
            if (q != 0) h.row(i) -= q * h.row(row);
        }
        pivots.push_back(col);
        ++row;
    }

    Lattice l;
    l.dim_ = dim;
    l.basis_ = h.topRows(row);
    l.pivots_ = std::move(pivots);
    return l;
}

bool lattice_contains(const Lattice& l, const IntegerRow& v) {
    if (v.cols() != l.ambient_dim()) throw Error("lattice_contains: dimension mismatch");
    IntegerRow w = v;
    for (Index i = 0; i < l.rank(); ++i) {
        const Index p = l.pivots()[static_cast<std::size_t>(i)];
        if (w(p) == 0) continue;
        if (!divides(l.basis()(i, p), w(p))) return false;
        Int q = exact_div(w(p), l.basis()(i, p));
        w -= q * l.basis().row(i);
    }
    return row_is_zero(w);
}

std::optional<Int> minimal_multiplier(const Lattice& l, const IntegerRow& v) {
    if (v.cols() != l.ambient_dim()) throw Error("minimal_multiplier: dimension mismatch");
    BasisSolve s = solve_against_basis(l, v);
    if (!s.in_span) return std::nullopt;
    // m*v lies in the lattice iff m times every rational coefficient is
    // integral, so the minimal m is the lcm of the denominators.
    Int m = 1;
    for (Index i = 0; i < s.coeffs.cols(); ++i) m = lcm(m, s.coeffs(i).get_den());
    return m;
}

namespace {

// Integer coordinates of each row in the lattice basis, or nullopt when
// some row is not an integer combination of the basis.
std::optional<IntegerMatrix> try_coordinates(const Lattice& l, const IntegerMatrix& rows) {
    IntegerMatrix coords(rows.rows(), l.rank());
    for (Index i = 0; i < rows.rows(); ++i) {
        BasisSolve s = solve_against_basis(l, rows.row(i));
        if (!s.in_span) return std::nullopt;
        for (Index j = 0; j < l.rank(); ++j) {
            if (!is_integer(s.coeffs(j))) return std::nullopt;
            coords(i, j) = s.coeffs(j).get_num();
        }
    }
    return coords;
}

}  // namespace

IntegerMatrix coordinates_in(const Lattice& l, const IntegerMatrix& rows) {
    if (rows.cols() != l.ambient_dim())
        throw RelationOutsideAmbient("coordinates_in: dimension mismatch");
    auto coords = try_coordinates(l, rows);
    if (!coords) throw RelationOutsideAmbient("coordinates_in: row outside the subgroup");
    return *coords;
}

GroupOrder lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_dim() != super.ambient_dim())
        throw NotASublattice("lattice_index: ambient dimensions differ");
    auto coords = try_coordinates(super, sub.basis());
    if (!coords) throw NotASublattice("lattice_index: sub is not contained in super");
    if (sub.rank() < super.rank()) return GroupOrder::infinite();
    return GroupOrder::finite(abs(determinant(*coords)));
}

namespace {

QuotientReport report_from_snf(SnfDecomposition snf_dec, Index ambient_rank) {
    QuotientReport r;
    r.free_rank = ambient_rank - snf_dec.rank;
    for (Index i = 0; i < snf_dec.rank; ++i) {
        const Int& d = snf_dec.diag(i, i);
        if (d > 1) r.invariant_factors.push_back(d);
    }
    r.witness = std::move(snf_dec);
    return r;
}

}  // namespace

QuotientReport quotient_invariants(const IntegerMatrix& relations) {
    return report_from_snf(snf(relations), relations.cols());
}

QuotientReport quotient_invariants(const IntegerMatrix& relations, const IntegerMatrix& ambient_basis) {
    const Lattice ambient = hnf_rows(ambient_basis);
    if (relations.cols() != ambient.ambient_dim())
        throw RelationOutsideAmbient("quotient_invariants: dimension mismatch");

    // Re-express each relation in ambient coordinates; invariant factors
    // are independent of which basis of the ambient subgroup is used.
    auto coords = try_coordinates(ambient, relations);
    if (!coords)
        throw RelationOutsideAmbient("quotient_invariants: relation not in the ambient subgroup");
    return report_from_snf(snf(*coords), ambient.rank());
}

GroupOrder subgroup_order_in_quotient(const Lattice& relations, const IntegerMatrix& generators) {
    if (generators.rows() > 0 && generators.cols() != relations.ambient_dim())
        throw Error("subgroup_order_in_quotient: dimension mismatch");
    const Lattice joined = hnf_rows(vstack(relations.basis(), generators));
    if (joined.rank() > relations.rank()) return GroupOrder::infinite();
    return lattice_index(relations, joined);
}

}  // namespace sugauge
