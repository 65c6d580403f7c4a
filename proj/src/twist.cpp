#include "dioset/twist.hpp"

#include "dioset/errors.hpp"
#include "dioset/linalg.hpp"

namespace dioset {

namespace {

Eigen::Index degree_of(const IntVector& poly) {
    Eigen::Index e = poly.size() - 1;
    while (e > 0 && poly(e) == 0) --e;
    return e;
}

void check_points(const TwistPointSet& set) {
    for (const auto& p : set.points)
        if (!on_curve(set.curve, p))
            throw std::logic_error("twist point (" + to_string(p.x) + ", " + to_string(p.y) + ") is off the curve");
}

}  // namespace

bool on_curve(const TwistCurve& curve, const TwistPoint& point) {
    return curve.twist_scalar * point.y * point.y == evaluate(curve.poly, point.x);
}

std::string genus_note(Eigen::Index degree) {
    if (degree <= 2) return "deg f <= 2: genus 0, not hyperelliptic";
    const Eigen::Index genus = (degree - 1) / 2;
    if (genus == 1) return "deg f = " + std::to_string(degree) + ": genus at most 1 (elliptic when f is squarefree)";
    return "deg f = " + std::to_string(degree) + ": genus at most " + std::to_string(genus) +
           " (hyperelliptic when f is squarefree)";
}

TwistPointSet twist_points(const VPoint& v) {
    const BigRational f0 = v.f_at(0);
    if (f0 == 0) throw DegenerateTwistError("f(x_0) = 0: the twist by f(x_0) is undefined");
    TwistPointSet out{{f0, v.poly()}, {}, ""};
    out.genus_note = genus_note(degree_of(out.curve.poly));
    const PointConfig& config = v.config();
    out.points.push_back({config.node(0), BigRational(1)});
    const IntVector z = v.certificate();
    for (Eigen::Index i = 1; i <= config.n(); ++i) out.points.push_back({config.node(i), BigRational(z(i - 1)) / f0});
    check_points(out);
    return out;
}

TwistPointSet twist_points(const Witness& w) {
    const BigRational f0(w.poly(w.set.front()));
    if (f0 == 0) throw DegenerateTwistError("f(x_0) = 0: the twist by f(x_0) is undefined");
    TwistPointSet out{{f0, w.poly.coeffs()}, {}, genus_note(w.poly.degree())};
    out.points.push_back({BigRational(w.set.front()), BigRational(1)});
    for (std::size_t i = 1; i < w.set.size(); ++i) {
        const auto root = w.pair_roots.find({0, i});
        if (root == w.pair_roots.end()) throw InputError("witness is missing the certificate for pair (0, " + std::to_string(i) + ")");
        out.points.push_back({BigRational(w.set[i]), BigRational(root->second) / f0});
    }
    check_points(out);
    return out;
}

}  // namespace dioset
