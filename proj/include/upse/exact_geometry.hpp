#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "upse/point_set.hpp"

namespace upse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct IntegerPoint {
  BigInt x;
  BigInt y;
};

/// Exact decimal parse: [-+]digits[.digits][e[-+]digits].
Rational parse_decimal(std::string_view text);

/// Sign of the cross product (b - a) x (c - a): +1 counter-clockwise, -1 clockwise.
int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

/// True iff the open segments ab and cd share a point. Segments with a common
/// endpoint only touch there and are reported as not crossing.
bool segments_cross(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                    const RationalPoint& d);

/// Places the points on the unit circle using the rational parametrisation
/// ((1-u^2)/(1+u^2), 2u/(1+u^2)), one strictly increasing u per y-rank; left
/// points get x < 0, right points x > 0. Index i of the result is point i.
std::vector<RationalPoint> realize_coordinates(const ConvexPointSet& s);

/// Multiplies all coordinates by the lcm of their denominators.
std::vector<IntegerPoint> scale_to_integers(const std::vector<RationalPoint>& pts);

/// Convex hull vertices in clockwise order starting at the lowest point.
/// Collinear boundary points are dropped.
std::vector<int> convex_hull_clockwise(const std::vector<RationalPoint>& pts);

struct ConcreteConversion {
  ConvexPointSet set;
  /// rank_of[i] = y-rank (point id) of input point i.
  std::vector<PointId> rank_of;
};

/// Converts concrete coordinates into the side-tag model. b(S) and t(S) are
/// tagged L. Throws InputError on equal y, three collinear points, or points
/// not in convex position.
ConcreteConversion from_coordinates(const std::vector<RationalPoint>& pts);

}  // namespace upse
