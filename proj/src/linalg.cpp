#include "dioset/linalg.hpp"

namespace dioset {

// Newton divided differences, then expansion of the Newton form into the
// monomial basis.
RatVector interpolate(const RatVector& xs, const RatVector& ys, Eigen::Index max_degree) {
    if (max_degree < 0) throw InputError("interpolate: negative degree");
    if (xs.size() != ys.size())
        throw DimensionError("interpolate: " + std::to_string(xs.size()) + " abscissae but " +
                             std::to_string(ys.size()) + " ordinates");
    if (xs.size() != max_degree + 1)
        throw DimensionError("interpolate: need " + std::to_string(max_degree + 1) + " nodes, got " +
                             std::to_string(xs.size()));
    const Eigen::Index n = xs.size();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (xs(i) == xs(j)) throw InputError("interpolate: duplicate abscissa " + to_string(xs(i)));

    RatVector dd = ys;
    for (Eigen::Index level = 1; level < n; ++level)
        for (Eigen::Index i = n - 1; i >= level; --i) dd(i) = (dd(i) - dd(i - 1)) / (xs(i) - xs(i - level));

    // p = dd(n-1); p = p*(x - xs(i)) + dd(i) for i = n-2..0
    RatVector coeffs = RatVector::Constant(n, BigRational(0));
    coeffs(0) = dd(n - 1);
    for (Eigen::Index i = n - 1; i-- > 0;) {
        for (Eigen::Index j = n - 1; j > 0; --j) coeffs(j) = coeffs(j - 1) - xs(i) * coeffs(j);
        coeffs(0) = dd(i) - xs(i) * coeffs(0);
    }
    return coeffs;
}

}  // namespace dioset
