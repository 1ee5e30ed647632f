#pragma once

#include "sugauge/matrix.hpp"

namespace sugauge {

/// Smith normal form of an integer matrix M:
///
///     left * M * right = diag
///
/// with left and right unimodular, diag diagonal of the same shape as M,
/// diagonal entries d_1 | d_2 | ... | d_r >= 1 followed by zeros, and
/// rank = r the number of nonzero diagonal entries.
struct SnfDecomposition {
    IntegerMatrix left;    // rows x rows
    IntegerMatrix diag;    // same shape as the input
    IntegerMatrix right;   // cols x cols
    Index rank = 0;

    /// The nonzero diagonal entries, in divisibility order.
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        d.reserve(static_cast<std::size_t>(rank));
        for (Index i = 0; i < rank; ++i) d.push_back(diag(i, i));
        return d;
    }
};

/// Computes the Smith normal form by alternating row and column gcd
/// reduction. The pivot is always the nonzero entry of minimal absolute
/// value in the working submatrix, which limits coefficient growth; the
/// divisibility chain is enforced by folding any non-multiple entry into
/// the pivot row and re-reducing. Accepts any shape, including empty and
/// all-zero matrices.
SnfDecomposition snf(const IntegerMatrix& m);

}  // namespace sugauge
