#include "sugauge/normal_form.hpp"

#include <optional>
#include <utility>

namespace sugauge {

namespace {

// Position of the nonzero entry of minimal |value| in d(t.., t..), or
// nullopt when the submatrix is zero.
std::optional<std::pair<Index, Index>> min_abs_pivot(const IntegerMatrix& d, Index t) {
    std::optional<std::pair<Index, Index>> best;
    Int best_abs;
    for (Index i = t; i < d.rows(); ++i) {
        for (Index j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

// Clears column t below the pivot with nearest-quotient row operations,
// re-picking the smallest remainder as the new pivot until the column is
// clean. Leaves d(t,t) > 0.
void reduce_column(IntegerMatrix& d, IntegerMatrix& left, Index t) {
    for (;;) {
        Index p = -1;
        Int best_abs;
        for (Index i = t; i < d.rows(); ++i) {
            if (d(i, t) == 0) continue;
            Int a = abs(d(i, t));
            if (p < 0 || a < best_abs) {
                p = i;
                best_abs = a;
            }
        }
        if (p < 0) return;
        if (p != t) {
            d.row(t).swap(d.row(p));
            left.row(t).swap(left.row(p));
        }
        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            left.row(t) = -left.row(t);
        }
        bool clean = true;
        for (Index i = t + 1; i < d.rows(); ++i) {
            if (d(i, t) == 0) continue;
            Int q = round_div(d(i, t), d(t, t));
            d.row(i) -= q * d.row(t);
            left.row(i) -= q * left.row(t);
            if (d(i, t) != 0) clean = false;
        }
        if (clean) return;
    }
}

// Column-operation mirror of reduce_column, acting on row t. Column
// swaps and subtractions never touch column t below the pivot, so a
// previously cleaned column stays clean.
void reduce_row(IntegerMatrix& d, IntegerMatrix& right, Index t) {
    for (;;) {
        Index p = -1;
        Int best_abs;
        for (Index j = t; j < d.cols(); ++j) {
            if (d(t, j) == 0) continue;
            Int a = abs(d(t, j));
            if (p < 0 || a < best_abs) {
                p = j;
                best_abs = a;
            }
        }
        if (p < 0) return;
        if (p != t) {
            d.col(t).swap(d.col(p));
            right.col(t).swap(right.col(p));
        }
        if (d(t, t) < 0) {
            d.col(t) = -d.col(t);
            right.col(t) = -right.col(t);
        }
        bool clean = true;
        for (Index j = t + 1; j < d.cols(); ++j) {
            if (d(t, j) == 0) continue;
            Int q = round_div(d(t, j), d(t, t));
            d.col(j) -= q * d.col(t);
            right.col(j) -= q * right.col(t);
            if (d(t, j) != 0) clean = false;
        }
        if (clean) return;
    }
}

}  // namespace

SnfDecomposition snf(const IntegerMatrix& m) {
    const Index rows = m.rows();
    const Index cols = m.cols();

    SnfDecomposition s;
    s.left = IntegerMatrix::Identity(rows, rows);
    s.right = IntegerMatrix::Identity(cols, cols);
    s.diag = m;

    IntegerMatrix& d = s.diag;
    const Index limit = std::min(rows, cols);
    Index t = 0;
    while (t < limit) {
        auto pivot = min_abs_pivot(d, t);
        if (!pivot) break;
        auto [pi, pj] = *pivot;
        if (pi != t) {
            d.row(t).swap(d.row(pi));
            s.left.row(t).swap(s.left.row(pi));
        }
        if (pj != t) {
            d.col(t).swap(d.col(pj));
            s.right.col(t).swap(s.right.col(pj));
        }

        for (;;) {
            reduce_column(d, s.left, t);
            reduce_row(d, s.right, t);
            // Row reduction may have re-dirtied the column; settle both.
            bool column_clean = true;
            for (Index i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) column_clean = false;
            if (!column_clean) continue;

            // Divisibility chain: fold a non-multiple of the pivot into
            // row t and reduce again; the pivot strictly shrinks.
            bool chain_ok = true;
            for (Index i = t + 1; i < rows && chain_ok; ++i) {
                for (Index j = t + 1; j < cols && chain_ok; ++j) {
                    if (!divides(d(t, t), d(i, j))) {
                        d.row(t) += d.row(i);
                        s.left.row(t) += s.left.row(i);
                        chain_ok = false;
                    }
                }
            }
            if (chain_ok) break;
        }
        ++t;
    }
    s.rank = t;
    return s;
}

}  // namespace sugauge
