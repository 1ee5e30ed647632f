#pragma once

#include <Eigen/Dense>

#include <initializer_list>

#include "sugauge/numeric.hpp"

namespace sugauge {

using Index = Eigen::Index;

using IntegerMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RationalMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerRow = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using RationalRow = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

/// Builds a matrix from rows of long literals; handy for fixtures and
/// small built-in data. An empty list yields a 0x0 matrix.
inline IntegerMatrix rows_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const Index m = static_cast<Index>(rows.size());
    const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    IntegerMatrix a(m, n);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != n)
            throw Error("rows_matrix: ragged initializer");
        Index j = 0;
        for (long v : row) a(i, j++) = v;
        ++i;
    }
    return a;
}

inline IntegerRow make_row(std::initializer_list<long> entries) {
    IntegerRow r(static_cast<Index>(entries.size()));
    Index j = 0;
    for (long v : entries) r(j++) = v;
    return r;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
    return a.cast<Rat>();
}

inline IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
    IntegerMatrix r(a.rows() + b.rows(), a.cols());
    r.topRows(a.rows()) = a;
    r.bottomRows(b.rows()) = b;
    return r;
}

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// in the recurrence is exact over the integers, so no rationals appear.
inline Int determinant(IntegerMatrix a) {
    if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
    const Index n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

inline bool is_unimodular(const IntegerMatrix& a) {
    const Int d = determinant(a);
    return d == 1 || d == -1;
}

}  // namespace sugauge
