#pragma once

// Point configurations and the two varieties attached to them.
//
// A PointConfig fixes distinct nodes x_0..x_n and a polynomial degree d < n.
//   V: coordinates (f_0..f_d, z_1..z_n) with z_i^2 = f(x_0) f(x_i).
//   W: coordinates (Y_0..Y_n) on the n-d diagonal quadrics
//        | 1 .. 1 ; x .. x ; ... ; x^d .. x^d ; Y_0^2 .. Y_d^2 Y_i^2 | = 0,
//      one per extra index i = d+1..n.

#include "dioset/scalar.hpp"

#include <vector>

namespace dioset {

/// Primitive integer vector with its first nonzero coordinate positive.
class ProjPoint {
public:
    /// Canonicalizes. Throws InputError for an empty or all-zero vector.
    explicit ProjPoint(IntVector coords);
    ProjPoint(std::initializer_list<long> coords);

    /// Clears denominators, then canonicalizes.
    static ProjPoint from_rationals(const RatVector& coords);

    const IntVector& coords() const { return coords_; }
    Eigen::Index size() const { return coords_.size(); }
    const BigInteger& operator[](Eigen::Index i) const { return coords_(i); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
    }

private:
    IntVector coords_;
};

/// One determinantal quadric, diagonal in the squares: sum_j coeffs(j) * Y_{support[j]}^2.
/// The last support entry is the extra index; its coefficient is positive and
/// the coefficients are primitive integers.
struct DiagonalQuadric {
    std::vector<Eigen::Index> support;
    IntVector coeffs;

    Eigen::Index extra_index() const { return support.back(); }

    /// sum_j coeffs(j) * values(support[j]) for a full-length vector.
    template <typename Derived>
    typename Derived::Scalar apply(const Eigen::MatrixBase<Derived>& values) const {
        using Scalar = typename Derived::Scalar;
        Scalar s(0);
        for (std::size_t j = 0; j < support.size(); ++j) s += Scalar(coeffs(static_cast<Eigen::Index>(j))) * values(support[j]);
        return s;
    }
};

class PointConfig {
public:
    /// nodes x_0..x_n pairwise distinct, 1 <= degree < n.
    PointConfig(RatVector nodes, Eigen::Index degree);
    static PointConfig from_integers(const std::vector<BigInteger>& nodes, Eigen::Index degree);

    const RatVector& nodes() const { return nodes_; }
    const BigRational& node(Eigen::Index i) const { return nodes_(i); }
    Eigen::Index degree() const { return degree_; }
    /// Largest node index; there are n()+1 nodes.
    Eigen::Index n() const { return nodes_.size() - 1; }

    /// Vandermonde determinant of x_0..x_d.
    const BigRational& vandermonde_det() const { return vandermonde_det_; }

    /// Quadrics for extra indices d+1..n, in order.
    const std::vector<DiagonalQuadric>& quadrics() const { return quadrics_; }

    /// The (d+2)x(d+2) bracket matrix over columns 0..d and extra_index with
    /// last row z. z has d+2 entries.
    RatMatrix bracket_matrix(const RatVector& z, Eigen::Index extra_index) const;

    /// True when every node is an integer.
    bool integral() const;

private:
    RatVector nodes_;
    Eigen::Index degree_;
    BigRational vandermonde_det_;
    std::vector<DiagonalQuadric> quadrics_;
};

/// Determinant of the bracket matrix.
BigRational bracket(const PointConfig& config, const RatVector& z, Eigen::Index extra_index);

/// Signed last-row cofactors of the bracket, made primitive with the extra
/// coefficient positive.
DiagonalQuadric quadric(const PointConfig& config, Eigen::Index extra_index);

/// Every quadric vanishes at the coordinate squares of y (n+1 coordinates).
bool on_W(const PointConfig& config, const ProjPoint& y);

/// z_i^2 = f(x_0) f(x_i) for i = 1..n; p is (f_0..f_d, z_1..z_n).
bool on_V(const PointConfig& config, const ProjPoint& p);

/// T_t = (x_0^t, ..., x_n^t).
RatVector power_point(const PointConfig& config, Eigen::Index t);

}  // namespace dioset
