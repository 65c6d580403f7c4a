#pragma once

// The birational correspondence V <-> W and two rational parametrizations of W.
//
//   phi:  (f, z)            -> (f(x_0), z_1, ..., z_n)
//   psi:  (Y_0, ..., Y_n)   -> (f_0..f_d, D Y_0 Y_1, ..., D Y_0 Y_n)
//         with (-1)^j f_j the minor of the squares bracket obtained by dropping
//         power row j and the last column; then f(x_i) = (-1)^d D Y_i^2 for all i.
//
// Quadric instance (n = d+1): lines through the base point P = (1, ..., 1).
// Plane instance (d = 2k, n = 3k+1): (k+1)-planes through the plane spanned by
// the power points T_0..T_k.

#include "dioset/variety.hpp"

namespace dioset {

/// A point of V together with its configuration. Construction checks on_V.
class VPoint {
public:
    VPoint(PointConfig config, ProjPoint coords);

    const PointConfig& config() const { return config_; }
    const ProjPoint& coords() const { return coords_; }

    /// f_0..f_d
    IntVector poly() const { return coords_.coords().head(config_.degree() + 1); }
    /// z_1..z_n
    IntVector certificate() const { return coords_.coords().tail(config_.n()); }
    BigRational f_at(Eigen::Index node_index) const;

    /// f(x_0) == 0: the point carries no usable certificate.
    bool degenerate() const { return f_at(0) == 0; }

private:
    PointConfig config_;
    ProjPoint coords_;
};

/// A point of W together with its configuration. Construction checks on_W.
class WPoint {
public:
    WPoint(PointConfig config, ProjPoint coords);

    const PointConfig& config() const { return config_; }
    const ProjPoint& coords() const { return coords_; }

    bool is_base_point() const;

private:
    PointConfig config_;
    ProjPoint coords_;
};

/// Uncanonicalized output of psi: exact rational f, z and the D used.
struct PsiImage {
    RatVector poly;         // f_0..f_d
    RatVector certificate;  // z_1..z_n
    BigRational vandermonde_det;
};

enum class ParamFlag { none, base_point, in_plane };

/// Image of a parametrization. multipliers are (mu, nu) for the quadric
/// instance and (mu_0, ..., mu_{k+1}) for the plane instance.
struct ParamResult {
    WPoint point;
    ParamFlag flag = ParamFlag::none;
    RatVector multipliers;
};

/// Throws IndeterminatePointError when f(x_0) and all z_i vanish.
WPoint phi_v_to_w(const VPoint& v);

PsiImage psi_image(const WPoint& w);
/// Canonicalized psi. Total on W; check VPoint::degenerate() for Y_0 = 0.
VPoint psi_w_to_v(const WPoint& w);

/// Requires config.n() == config.degree() + 1 and q of size d+1.
/// Throws DegenerateParameterError when mu = nu = 0.
ParamResult param_quadric(const PointConfig& config, const ProjPoint& q);
/// (Y_0 - Y_{d+1}, ..., Y_d - Y_{d+1}); IndeterminatePointError at P.
ProjPoint param_quadric_inv(const WPoint& w);

/// k for a plane instance (d = 2k, n = 3k+1); throws InputError otherwise.
Eigen::Index plane_rank(const PointConfig& config);

/// The power points T_0..T_k spanning the plane contained in W.
struct PlaneBasis {
    Eigen::Index k;
    std::vector<RatVector> points;
};
PlaneBasis plane_basis(const PointConfig& config);

/// The (k+1)x(k+2) linear system A mu = 0 cutting the plane through q.
/// Entries are raw brackets (no content removed).
RatMatrix build_A(const PointConfig& config, const ProjPoint& q);

/// mu_j = (-1)^j det(A without column j); Y = sum_t mu_t T_t + mu_{k+1} q_padded.
/// Throws DegenerateParameterError when every mu_j vanishes; flags in_plane
/// when mu_{k+1} = 0.
ParamResult param_plane(const PointConfig& config, const ProjPoint& q);

/// Subtracts the degree-k interpolant g through (x_m, Y_m), m = 2k+1..3k+1,
/// returning (Y_i - g(x_i))_{i <= 2k}. IndeterminatePointError on the plane.
ProjPoint param_plane_inv(const WPoint& w);

/// Squares of the canonical coordinates are proportional: equality of
/// projective points up to coordinate sign flips.
bool equal_up_to_signs(const ProjPoint& a, const ProjPoint& b);

}  // namespace dioset
