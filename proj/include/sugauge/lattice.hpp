#pragma once

#include <optional>
#include <vector>

#include "sugauge/normal_form.hpp"

namespace sugauge {

struct NotASublattice : Error {
    using Error::Error;
};
struct RelationOutsideAmbient : Error {
    using Error::Error;
};

/// A finitely generated subgroup of Z^d, stored as its canonical row
/// Hermite basis: a staircase matrix with positive pivots and the entries
/// above each pivot reduced into [0, pivot). Zero rows are removed, so
/// basis() has exactly rank() linearly independent rows. Canonicity makes
/// subgroup equality the same as entry-wise basis equality.
class Lattice {
public:
    Lattice() = default;

    Index ambient_dim() const { return dim_; }
    Index rank() const { return basis_.rows(); }
    const IntegerMatrix& basis() const { return basis_; }

    /// Pivot column of each basis row; strictly increasing.
    const std::vector<Index>& pivots() const { return pivots_; }

    bool operator==(const Lattice& other) const {
        return dim_ == other.dim_ && basis_.rows() == other.basis_.rows() && basis_ == other.basis_;
    }

private:
    friend Lattice hnf_rows(const IntegerMatrix&);
    IntegerMatrix basis_{0, 0};
    std::vector<Index> pivots_;
    Index dim_ = 0;
};

/// Canonicalizes the subgroup generated by the rows of `generators`.
/// Any two generating sets of the same subgroup yield identical bases.
Lattice hnf_rows(const IntegerMatrix& generators);

/// True iff v is an integer combination of the basis rows, decided by
/// exact back-substitution against the staircase.
bool lattice_contains(const Lattice& l, const IntegerRow& v);

/// Smallest m >= 1 with m*v in l, or nullopt when v is outside the
/// rational span (so no multiple ever lands in l).
std::optional<Int> minimal_multiplier(const Lattice& l, const IntegerRow& v);

/// Order of an element or subgroup; an empty value means infinite.
/// Infinite is a legitimate result, not an error: finiteness claims are
/// re-verified rather than assumed.
class GroupOrder {
public:
    static GroupOrder finite(Int v) {
        GroupOrder o;
        o.value_ = std::move(v);
        return o;
    }
    static GroupOrder infinite() { return GroupOrder{}; }

    bool is_finite() const { return value_.has_value(); }
    const Int& value() const {
        if (!value_) throw Error("GroupOrder: infinite order has no value");
        return *value_;
    }
    std::string str() const { return value_ ? dec(*value_) : "infinite"; }

    bool operator==(const GroupOrder&) const = default;

private:
    std::optional<Int> value_;
};

/// Integer coordinates of each row with respect to the lattice basis
/// (rows x rank); throws RelationOutsideAmbient when a row is not an
/// integer combination of the basis.
IntegerMatrix coordinates_in(const Lattice& l, const IntegerMatrix& rows);

/// Index [super : sub]. Requires every basis row of sub to lie in super
/// (NotASublattice otherwise); finite exactly when the ranks agree.
GroupOrder lattice_index(const Lattice& sub, const Lattice& super);

/// Isomorphism type of (ambient)/(relations): free rank plus the
/// invariant factors >= 2 in divisibility order (factors equal to 1 are
/// dropped). `witness` is the Smith decomposition of the relation matrix
/// expressed in ambient coordinates, i.e. the change-of-basis certificate.
struct QuotientReport {
    Index free_rank = 0;
    std::vector<Int> invariant_factors;
    SnfDecomposition witness;
};

/// Quotient of Z^d by the subgroup generated by the relation rows.
QuotientReport quotient_invariants(const IntegerMatrix& relations);

/// Quotient of the subgroup spanned by `ambient_basis` by the relation
/// rows. Relations are given in standard coordinates and re-expressed in
/// the ambient basis by exact rational solve; a relation outside the
/// ambient subgroup raises RelationOutsideAmbient.
QuotientReport quotient_invariants(const IntegerMatrix& relations, const IntegerMatrix& ambient_basis);

/// Order of the subgroup generated by the images of the generator rows in
/// Z^d / relations, computed as the index of `relations` inside
/// hnf_rows(relations U generators). Infinite when adjoining the
/// generators raises the rank.
GroupOrder subgroup_order_in_quotient(const Lattice& relations, const IntegerMatrix& generators);

}  // namespace sugauge
