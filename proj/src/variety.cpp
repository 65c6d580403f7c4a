#include "dioset/variety.hpp"

#include "dioset/errors.hpp"
#include "dioset/linalg.hpp"

#include <string>

namespace dioset {

namespace {

IntVector canonical(IntVector v) {
    if (v.size() == 0) throw InputError("projective point needs at least one coordinate");
    const BigInteger g = content(v);
    if (g == 0) throw InputError("projective point cannot be the zero vector");
    Eigen::Index first = 0;
    while (v(first) == 0) ++first;
    const bool flip = v(first) < 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (g != 1) mpz_divexact(v(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
        if (flip) v(i) = -v(i);
    }
    return v;
}

void check_extra(const PointConfig& config, Eigen::Index extra_index) {
    if (extra_index <= config.degree() || extra_index > config.n())
        throw IndexError("extra index " + std::to_string(extra_index) + " outside " +
                         std::to_string(config.degree() + 1) + ".." + std::to_string(config.n()));
}

}  // namespace

ProjPoint::ProjPoint(IntVector coords) : coords_(canonical(std::move(coords))) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords) {
    IntVector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (long c : coords) v(i++) = c;
    coords_ = canonical(std::move(v));
}

ProjPoint ProjPoint::from_rationals(const RatVector& coords) { return ProjPoint(clear_denominators(coords)); }

PointConfig::PointConfig(RatVector nodes, Eigen::Index degree) : nodes_(std::move(nodes)), degree_(degree) {
    if (degree_ < 1) throw InputError("degree must be at least 1");
    if (nodes_.size() < degree_ + 2)
        throw InputError("degree " + std::to_string(degree_) + " needs at least " + std::to_string(degree_ + 2) +
                         " nodes, got " + std::to_string(nodes_.size()));
    for (Eigen::Index i = 0; i < nodes_.size(); ++i)
        for (Eigen::Index j = i + 1; j < nodes_.size(); ++j)
            if (nodes_(i) == nodes_(j)) throw InputError("duplicate node " + to_string(nodes_(i)));

    vandermonde_det_ = det(vandermonde(nodes_.head(degree_ + 1), degree_ + 1));
    for (Eigen::Index m = degree_ + 1; m <= n(); ++m) quadrics_.push_back(quadric(*this, m));
}

PointConfig PointConfig::from_integers(const std::vector<BigInteger>& nodes, Eigen::Index degree) {
    return PointConfig(to_rational(to_int_vector(nodes)), degree);
}

bool PointConfig::integral() const {
    for (Eigen::Index i = 0; i < nodes_.size(); ++i)
        if (nodes_(i).get_den() != 1) return false;
    return true;
}

RatMatrix PointConfig::bracket_matrix(const RatVector& z, Eigen::Index extra_index) const {
    check_extra(*this, extra_index);
    const Eigen::Index size = degree_ + 2;
    if (z.size() != size)
        throw DimensionError("bracket row has " + std::to_string(z.size()) + " entries, expected " +
                             std::to_string(size));
    RatVector columns(size);
    columns.head(degree_ + 1) = nodes_.head(degree_ + 1);
    columns(degree_ + 1) = nodes_(extra_index);
    RatMatrix m(size, size);
    m.topRows(degree_ + 1) = vandermonde(columns, degree_ + 1);
    m.row(degree_ + 1) = z.transpose();
    return m;
}

BigRational bracket(const PointConfig& config, const RatVector& z, Eigen::Index extra_index) {
    return det(config.bracket_matrix(z, extra_index));
}

DiagonalQuadric quadric(const PointConfig& config, Eigen::Index extra_index) {
    const Eigen::Index d = config.degree();
    const RatMatrix m = config.bracket_matrix(RatVector::Zero(d + 2), extra_index);
    RatVector cofactors(d + 2);
    for (Eigen::Index j = 0; j < d + 2; ++j) {
        cofactors(j) = minor(m, d + 1, j);
        if ((d + 1 + j) % 2 != 0) cofactors(j) = -cofactors(j);
    }
    DiagonalQuadric q;
    q.coeffs = clear_denominators(cofactors);
    if (q.coeffs(d + 1) < 0) q.coeffs = -q.coeffs;
    for (Eigen::Index j = 0; j <= d; ++j) q.support.push_back(j);
    q.support.push_back(extra_index);
    return q;
}

bool on_W(const PointConfig& config, const ProjPoint& y) {
    if (y.size() != config.n() + 1)
        throw DimensionError("W point needs " + std::to_string(config.n() + 1) + " coordinates, got " +
                             std::to_string(y.size()));
    const IntVector squares = y.coords().array().square();
    for (const auto& q : config.quadrics())
        if (q.apply(squares) != 0) return false;
    return true;
}

bool on_V(const PointConfig& config, const ProjPoint& p) {
    const Eigen::Index d = config.degree();
    const Eigen::Index n = config.n();
    if (p.size() != d + 1 + n)
        throw DimensionError("V point needs " + std::to_string(d + 1 + n) + " coordinates, got " +
                             std::to_string(p.size()));
    const RatVector f = to_rational(p.coords().head(d + 1));
    const BigRational f0 = evaluate(f, config.node(0));
    for (Eigen::Index i = 1; i <= n; ++i) {
        const BigRational zi(p[d + i]);
        if (zi * zi != f0 * evaluate(f, config.node(i))) return false;
    }
    return true;
}

RatVector power_point(const PointConfig& config, Eigen::Index t) {
    if (t < 0) throw IndexError("negative power");
    RatVector out(config.nodes().size());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        BigRational p(1);
        for (Eigen::Index e = 0; e < t; ++e) p *= config.node(i);
        out(i) = p;
    }
    return out;
}

}  // namespace dioset
