#pragma once

#include <cmath>
#include <stdexcept>

#include "twave/common.hpp"

namespace twave {

// Incidence geometry of planar circles on the cylinder.
//
// A point (t,x) of R^{1,2} labels the planar circle
//   C_{(t,x)} = { (theta, v) : v = t + <omega, x> },  omega = (cos theta, sin theta),
// and the circle divides the cylinder into Omega^+ (below the graph) and
// Omega^- (above it).

inline double circle_height(const SpacetimePoint& c, double theta) {
  return c.t + c.x1 * std::cos(theta) + c.x2 * std::sin(theta);
}

// Signed side: positive in Omega^+, negative in Omega^-, zero on the circle.
inline double side_of_circle(const SpacetimePoint& c, const CylinderPoint& p) {
  return circle_height(c, p.theta) - p.v;
}

enum class ConeRelation { kFuture, kPast, kNeither, kEqual };

// Closed-cone relation: kFuture iff C_{c2} lies in Omega^+_{c1} (and c2 != c1),
// equivalently t - t' >= |x - x'|. Tangent circles count as contained.
inline ConeRelation cone_relation(const SpacetimePoint& c, const SpacetimePoint& c2) {
  const double dt = c.t - c2.t;
  const double dx = std::hypot(c.x1 - c2.x1, c.x2 - c2.x2);
  if (dt == 0.0 && dx == 0.0) return ConeRelation::kEqual;
  if (dt >= dx) return ConeRelation::kFuture;
  if (-dt >= dx) return ConeRelation::kPast;
  return ConeRelation::kNeither;
}

enum class CausalKind { kSpacelike, kNull, kTimelike };

struct DirectionClass {
  CausalKind by_metric;
  CausalKind by_axis;
  double axis_distance;  // distance from the unit circle's center to the axis line; inf if the line is empty
};

// Classifies a direction twice: by the sign of q = -tau^2 + |xi|^2, and by how
// the plane-pencil axis line { omega : tau + <omega, xi> = 0 } meets the unit
// circle (two crossings / tangent / disjoint). Null detection uses a relative
// tolerance on tau^2 - |xi|^2 scaled by max(tau^2, |xi|^2, 1).
inline DirectionClass classify_direction(const MinkowskiVector& d, double rel_tol = 1e-9) {
  if (d.is_zero()) throw std::invalid_argument("classify_direction: zero vector");

  const double tau2 = d.tau * d.tau;
  const double xi2 = d.xi1 * d.xi1 + d.xi2 * d.xi2;
  const double scale = std::max({tau2, xi2, 1.0});
  const double gap = xi2 - tau2;  // sign of the quadratic form

  CausalKind by_metric;
  if (std::abs(gap) <= rel_tol * scale) {
    by_metric = CausalKind::kNull;
  } else {
    by_metric = gap > 0.0 ? CausalKind::kSpacelike : CausalKind::kTimelike;
  }

  CausalKind by_axis;
  double dist;
  if (xi2 == 0.0) {
    // Horizontal pencil: the axis line is empty, the circles foliate the cylinder.
    by_axis = CausalKind::kTimelike;
    dist = kInf;
  } else {
    dist = std::abs(d.tau) / std::sqrt(xi2);
    // |dist - 1| <= tol  <=>  |tau^2 - xi^2| <= tol' * scale, same detection rule.
    if (std::abs(gap) <= rel_tol * scale) {
      by_axis = CausalKind::kNull;
    } else if (dist < 1.0) {
      by_axis = CausalKind::kSpacelike;  // axis crosses the cylinder twice
    } else {
      by_axis = CausalKind::kTimelike;  // axis clear of the cylinder
    }
  }
  return {by_metric, by_axis, dist};
}

}  // namespace twave
