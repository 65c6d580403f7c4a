#pragma once

// Rational points on the quadratic twist f(x_0) y^2 = f(x) carried by a point of V.

#include "dioset/forge.hpp"
#include "dioset/rational_maps.hpp"

#include <string>
#include <vector>

namespace dioset {

struct TwistCurve {
    BigRational twist_scalar;  // f(x_0), nonzero
    IntVector poly;            // f as carried by the source data
};

struct TwistPoint {
    BigRational x;
    BigRational y;
};

struct TwistPointSet {
    TwistCurve curve;
    std::vector<TwistPoint> points;
    std::string genus_note;
};

bool on_curve(const TwistCurve& curve, const TwistPoint& point);

/// P_0 = (x_0, 1), P_i = (x_i, z_i / f(x_0)). Uses the integer data of v as is.
/// Throws DegenerateTwistError when f(x_0) = 0.
TwistPointSet twist_points(const VPoint& v);

/// The same construction over the witness set, with z_i the certificate root
/// of the pair (x_0, x_i).
TwistPointSet twist_points(const Witness& w);

std::string genus_note(Eigen::Index degree);

}  // namespace dioset
