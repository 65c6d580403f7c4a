#include "dioset/rational_maps.hpp"

#include "dioset/errors.hpp"
#include "dioset/linalg.hpp"

#include <string>

namespace dioset {

namespace {

void require_size(const ProjPoint& p, Eigen::Index expected, const char* what) {
    if (p.size() != expected)
        throw DimensionError(std::string(what) + ": expected " + std::to_string(expected) + " coordinates, got " +
                             std::to_string(p.size()));
}

void require_quadric_instance(const PointConfig& config) {
    if (config.n() != config.degree() + 1)
        throw InputError("quadric parametrization needs n = d+1 (got n = " + std::to_string(config.n()) +
                         ", d = " + std::to_string(config.degree()) + ")");
}

}  // namespace

VPoint::VPoint(PointConfig config, ProjPoint coords) : config_(std::move(config)), coords_(std::move(coords)) {
    if (!on_V(config_, coords_)) throw InputError("point does not lie on V");
}

BigRational VPoint::f_at(Eigen::Index node_index) const {
    return evaluate(to_rational(poly()), config_.node(node_index));
}

WPoint::WPoint(PointConfig config, ProjPoint coords) : config_(std::move(config)), coords_(std::move(coords)) {
    if (!on_W(config_, coords_)) throw InputError("point does not lie on W");
}

bool WPoint::is_base_point() const {
    const IntVector& y = coords_.coords();
    return (y.array() == y(0)).all();
}

WPoint phi_v_to_w(const VPoint& v) {
    const PointConfig& config = v.config();
    RatVector y(config.n() + 1);
    y(0) = v.f_at(0);
    y.tail(config.n()) = to_rational(v.certificate());
    bool zero = true;
    for (Eigen::Index i = 0; i < y.size() && zero; ++i) zero = y(i) == 0;
    if (zero) throw IndeterminatePointError("phi is undefined where f(x_0) and every z_i vanish");
    return WPoint(config, ProjPoint::from_rationals(y));
}

PsiImage psi_image(const WPoint& w) {
    const PointConfig& config = w.config();
    const Eigen::Index d = config.degree();
    const IntVector& y = w.coords().coords();

    // (d+2) x (d+1): power rows 0..d over x_0..x_d, then the squares row.
    RatMatrix m(d + 2, d + 1);
    m.topRows(d + 1) = vandermonde(config.nodes().head(d + 1), d + 1);
    for (Eigen::Index j = 0; j <= d; ++j) m(d + 1, j) = BigRational(y(j) * y(j));

    PsiImage out;
    out.vandermonde_det = config.vandermonde_det();
    out.poly.resize(d + 1);
    RatMatrix sub(d + 1, d + 1);
    for (Eigen::Index j = 0; j <= d; ++j) {
        for (Eigen::Index r = 0, rr = 0; r < d + 2; ++r)
            if (r != j) sub.row(rr++) = m.row(r);
        out.poly(j) = det(sub);
        if (j % 2 != 0) out.poly(j) = -out.poly(j);
    }
    out.certificate.resize(config.n());
    for (Eigen::Index i = 1; i <= config.n(); ++i)
        out.certificate(i - 1) = out.vandermonde_det * BigRational(y(0) * y(i));
    return out;
}

VPoint psi_w_to_v(const WPoint& w) {
    const PsiImage image = psi_image(w);
    const PointConfig& config = w.config();
    RatVector coords(image.poly.size() + image.certificate.size());
    coords << image.poly, image.certificate;
    return VPoint(config, ProjPoint::from_rationals(coords));
}

ParamResult param_quadric(const PointConfig& config, const ProjPoint& q) {
    require_quadric_instance(config);
    const Eigen::Index d = config.degree();
    require_size(q, d + 1, "param_quadric");

    RatVector row_mu = RatVector::Zero(d + 2);
    RatVector row_nu = RatVector::Zero(d + 2);
    for (Eigen::Index i = 0; i <= d; ++i) {
        row_mu(i) = BigRational(q[i]);
        row_nu(i) = BigRational(q[i] * q[i]);
    }
    const BigRational mu = bracket(config, row_mu, d + 1);
    const BigRational nu = bracket(config, row_nu, d + 1);
    if (mu == 0 && nu == 0) throw DegenerateParameterError("mu = nu = 0: the line through P lies on W");

    RatVector y(d + 2);
    for (Eigen::Index i = 0; i <= d; ++i) y(i) = 2 * mu * row_mu(i) - nu;
    y(d + 1) = -nu;

    RatVector multipliers(2);
    multipliers << mu, nu;
    ParamResult result{WPoint(config, ProjPoint::from_rationals(y)), ParamFlag::none, multipliers};
    if (result.point.is_base_point()) result.flag = ParamFlag::base_point;
    return result;
}

ProjPoint param_quadric_inv(const WPoint& w) {
    require_quadric_instance(w.config());
    const Eigen::Index d = w.config().degree();
    const IntVector& y = w.coords().coords();
    IntVector diff(d + 1);
    for (Eigen::Index i = 0; i <= d; ++i) diff(i) = y(i) - y(d + 1);
    if (content(diff) == 0) throw IndeterminatePointError("inverse line map is undefined at the base point P");
    return ProjPoint(diff);
}

Eigen::Index plane_rank(const PointConfig& config) {
    const Eigen::Index d = config.degree();
    if (d % 2 != 0 || config.n() != 3 * (d / 2) + 1)
        throw InputError("plane parametrization needs d = 2k and n = 3k+1 (got d = " + std::to_string(d) +
                         ", n = " + std::to_string(config.n()) + ")");
    return d / 2;
}

PlaneBasis plane_basis(const PointConfig& config) {
    PlaneBasis basis{plane_rank(config), {}};
    for (Eigen::Index t = 0; t <= basis.k; ++t) basis.points.push_back(power_point(config, t));
    return basis;
}

RatMatrix build_A(const PointConfig& config, const ProjPoint& q) {
    const Eigen::Index k = plane_rank(config);
    const Eigen::Index d = 2 * k;
    require_size(q, d + 1, "build_A");

    RatMatrix a(k + 1, k + 2);
    RatVector row = RatVector::Zero(d + 2);
    for (Eigen::Index m = d + 1; m <= config.n(); ++m) {
        const Eigen::Index r = m - d - 1;
        for (Eigen::Index t = 0; t <= k; ++t) {
            for (Eigen::Index i = 0; i <= d; ++i) {
                BigRational p(q[i]);
                for (Eigen::Index e = 0; e < t; ++e) p *= config.node(i);
                row(i) = p;
            }
            a(r, t) = 2 * bracket(config, row, m);
        }
        for (Eigen::Index i = 0; i <= d; ++i) row(i) = BigRational(q[i] * q[i]);
        a(r, k + 1) = bracket(config, row, m);
    }
    return a;
}

ParamResult param_plane(const PointConfig& config, const ProjPoint& q) {
    const RatMatrix a = build_A(config, q);
    const Eigen::Index k = a.rows() - 1;
    const Eigen::Index d = 2 * k;

    RatVector mu(k + 2);
    bool all_zero = true;
    for (Eigen::Index j = 0; j < k + 2; ++j) {
        RatMatrix aj(k + 1, k + 1);
        for (Eigen::Index c = 0, cc = 0; c < k + 2; ++c)
            if (c != j) aj.col(cc++) = a.col(c);
        mu(j) = det(aj);
        if (j % 2 != 0) mu(j) = -mu(j);
        all_zero = all_zero && mu(j) == 0;
    }
    if (all_zero) throw DegenerateParameterError("A is rank deficient: every maximal minor vanishes");

    const PlaneBasis basis = plane_basis(config);
    RatVector y = RatVector::Zero(config.n() + 1);
    for (Eigen::Index t = 0; t <= k; ++t) y += mu(t) * basis.points[static_cast<std::size_t>(t)];
    for (Eigen::Index i = 0; i <= d; ++i) y(i) += mu(k + 1) * BigRational(q[i]);

    ParamResult result{WPoint(config, ProjPoint::from_rationals(y)), ParamFlag::none, mu};
    if (mu(k + 1) == 0) result.flag = ParamFlag::in_plane;
    return result;
}

ProjPoint param_plane_inv(const WPoint& w) {
    const PointConfig& config = w.config();
    const Eigen::Index k = plane_rank(config);
    const Eigen::Index d = 2 * k;
    const RatVector y = to_rational(w.coords().coords());

    const RatVector g = interpolate(config.nodes().tail(k + 1), y.tail(k + 1), k);
    RatVector diff(d + 1);
    for (Eigen::Index i = 0; i <= d; ++i) diff(i) = y(i) - evaluate(g, config.node(i));
    bool zero = true;
    for (Eigen::Index i = 0; i <= d && zero; ++i) zero = diff(i) == 0;
    if (zero) throw IndeterminatePointError("projection from the plane is undefined on the plane itself");
    return ProjPoint::from_rationals(diff);
}

bool equal_up_to_signs(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) return false;
    return (a.coords().array().abs() == b.coords().array().abs()).all();
}

}  // namespace dioset
