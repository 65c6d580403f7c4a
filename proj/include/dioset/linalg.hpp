#pragma once

// Dense exact linear algebra over BigInteger / BigRational.
//
// Everything here is templated on the Eigen expression type, so blocks and
// maps can be passed without copies. The scalar must be exact: the Bareiss
// recurrence relies on every division being exact (integral domains) or
// error-free (fields).

#include "dioset/errors.hpp"
#include "dioset/scalar.hpp"

#include <string>

namespace dioset {

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant with row pivoting on zero pivots.
/// Every intermediate a(i,j) after step k is a (k+1)x(k+1) minor of the input,
/// so entries stay bounded by Hadamard's bound.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    detail::require_square(m, "det");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);

    Matrix<Scalar> a = m;
    Scalar prev(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Scalar(0);
            a.row(k).swap(a.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Scalar result = a(n - 1, n - 1);
    if (negate) result = -result;
    return result;
}

/// Laplace expansion along the first row. Exponential; meant as an
/// independent cross-check for sizes up to about 5.
template <typename Derived>
typename Derived::Scalar det_cofactor(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    detail::require_square(m, "det_cofactor");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return Scalar(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));

    Scalar sum(0);
    Matrix<Scalar> sub(n - 1, n - 1);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) sub(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * det_cofactor(sub);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

/// Copy of m with one row and one column removed.
template <typename Derived>
Matrix<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& m, Eigen::Index drop_row,
                                           Eigen::Index drop_col) {
    if (drop_row < 0 || drop_row >= m.rows() || drop_col < 0 || drop_col >= m.cols())
        throw IndexError("submatrix: index (" + std::to_string(drop_row) + "," + std::to_string(drop_col) +
                         ") out of range for " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    Matrix<typename Derived::Scalar> out(m.rows() - 1, m.cols() - 1);
    for (Eigen::Index r = 0, rr = 0; r < m.rows(); ++r) {
        if (r == drop_row) continue;
        for (Eigen::Index c = 0, cc = 0; c < m.cols(); ++c)
            if (c != drop_col) out(rr, cc++) = m(r, c);
        ++rr;
    }
    return out;
}

template <typename Derived>
typename Derived::Scalar minor(const Eigen::MatrixBase<Derived>& m, Eigen::Index drop_row, Eigen::Index drop_col) {
    detail::require_square(m, "minor");
    return det(submatrix(m, drop_row, drop_col));
}

/// Rows are the powers 0..rows-1 of the nodes: out(t, j) = nodes(j)^t.
template <typename Derived>
Matrix<typename Derived::Scalar> vandermonde(const Eigen::MatrixBase<Derived>& nodes, Eigen::Index rows) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> out(rows, nodes.size());
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
        Scalar p(1);
        for (Eigen::Index t = 0; t < rows; ++t) {
            out(t, j) = p;
            p *= nodes(j);
        }
    }
    return out;
}

/// Horner evaluation of an ascending coefficient vector.
template <typename Derived, typename Point>
Point evaluate(const Eigen::MatrixBase<Derived>& coeffs, const Point& x) {
    Point acc(0);
    for (Eigen::Index j = coeffs.size(); j-- > 0;) acc = acc * x + Point(coeffs(j));
    return acc;
}

/// Unique polynomial of degree <= max_degree through (xs(i), ys(i)), returned
/// as max_degree+1 ascending rational coefficients. Requires exactly
/// max_degree+1 nodes with pairwise distinct abscissae.
RatVector interpolate(const RatVector& xs, const RatVector& ys, Eigen::Index max_degree);

}  // namespace dioset
