#include <catch2/catch_amalgamated.hpp>

#include "twave/geometry.hpp"
#include "twave/rng.hpp"

using namespace twave;

TEST_CASE("circle_height matches v = t + <omega,x>") {
  SpacetimePoint origin{0.0, 0.0, 0.0};
  CHECK(circle_height(origin, 0.0) == 0.0);
  CHECK(circle_height(origin, 1.7) == 0.0);

  SpacetimePoint c{1.0, 1.0, 0.0};
  CHECK(circle_height(c, 0.0) == Catch::Approx(2.0));
  CHECK(circle_height(c, kPi) == Catch::Approx(0.0).margin(1e-15));

  SpacetimePoint d{0.5, 0.3, -0.4};
  CHECK(circle_height(d, kPi / 2) == Catch::Approx(0.1).margin(1e-15));
}

TEST_CASE("side_of_circle signs and incidence") {
  CHECK(side_of_circle({0, 0, 0}, {0.0, 0.0}) == 0.0);
  CHECK(side_of_circle({1, 0, 0}, {kPi, 0.0}) == Catch::Approx(1.0));
  CHECK(side_of_circle({0, 1, 0}, {kPi / 3, 1.0}) == Catch::Approx(-0.5));

  // Points on the graph of circle_height lie on the circle exactly.
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    SpacetimePoint c{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double theta = rng.uniform(0, kTwoPi);
    CHECK(side_of_circle(c, {theta, circle_height(c, theta)}) == 0.0);
  }
}

namespace {

// Brute-force cone relation: sign of side_of_circle over a dense theta sweep.
ConeRelation brute_cone(const SpacetimePoint& c, const SpacetimePoint& c2, int n_theta,
                        double* margin) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = kTwoPi * i / n_theta;
    const double s = side_of_circle(c, {theta, circle_height(c2, theta)});
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  *margin = std::min(std::abs(lo), std::abs(hi));
  if (lo == 0.0 && hi == 0.0) return ConeRelation::kEqual;
  if (lo >= 0.0) return ConeRelation::kFuture;
  if (hi <= 0.0) return ConeRelation::kPast;
  return ConeRelation::kNeither;
}

}  // namespace

TEST_CASE("cone_relation examples and antisymmetry") {
  CHECK(cone_relation({1, 0, 0}, {0, 0, 0}) == ConeRelation::kFuture);
  CHECK(cone_relation({0, 0, 0}, {1, 0, 0}) == ConeRelation::kPast);
  CHECK(cone_relation({0, 0, 0}, {0.5, 1, 0}) == ConeRelation::kNeither);
  CHECK(cone_relation({0.5, 1, 0}, {0.5, 1, 0}) == ConeRelation::kEqual);

  // Tangent circles are inside the closed cone.
  CHECK(cone_relation({1, 1, 0}, {0, 0, 0}) == ConeRelation::kFuture);

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    SpacetimePoint a{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    SpacetimePoint b{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const ConeRelation ab = cone_relation(a, b);
    const ConeRelation ba = cone_relation(b, a);
    if (ab == ConeRelation::kFuture) CHECK(ba == ConeRelation::kPast);
    if (ab == ConeRelation::kPast) CHECK(ba == ConeRelation::kFuture);
    if (ab == ConeRelation::kNeither) CHECK(ba == ConeRelation::kNeither);
  }
}

TEST_CASE("cone_relation agrees with circle-containment brute force") {
  Rng rng(42);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    SpacetimePoint a{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    SpacetimePoint b{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    double margin = 0.0;
    const ConeRelation brute = brute_cone(a, b, 2048, &margin);
    if (margin < 1e-9) continue;  // boundary cases excluded from strict comparison
    CHECK(cone_relation(a, b) == brute);
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("classify_direction examples") {
  const auto sp = classify_direction({0, 1, 0});
  CHECK(sp.by_metric == CausalKind::kSpacelike);
  CHECK(sp.by_axis == CausalKind::kSpacelike);
  CHECK(sp.axis_distance == Catch::Approx(0.0).margin(1e-15));

  const auto nl = classify_direction({1, 1, 0});
  CHECK(nl.by_metric == CausalKind::kNull);
  CHECK(nl.by_axis == CausalKind::kNull);
  CHECK(nl.axis_distance == Catch::Approx(1.0));

  const auto tl = classify_direction({2, 1, 1});
  CHECK(tl.by_metric == CausalKind::kTimelike);
  CHECK(tl.by_axis == CausalKind::kTimelike);
  CHECK(tl.axis_distance == Catch::Approx(std::sqrt(2.0)));

  // Pure time direction: the axis line is empty.
  const auto vert = classify_direction({1, 0, 0});
  CHECK(vert.by_metric == CausalKind::kTimelike);
  CHECK(vert.by_axis == CausalKind::kTimelike);
  CHECK(std::isinf(vert.axis_distance));

  CHECK_THROWS_AS(classify_direction({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("metric and axis classification agree on random directions") {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    MinkowskiVector d{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (d.is_zero()) continue;
    const auto r = classify_direction(d);
    CHECK(r.by_metric == r.by_axis);
  }
  // Analytically null directions are detected as null by both routes.
  Rng rng2(43);
  for (int i = 0; i < 200; ++i) {
    const double a = rng2.uniform(0, kTwoPi);
    const double tau = rng2.uniform(0.1, 3.0);
    const auto r = classify_direction({tau, tau * std::cos(a), tau * std::sin(a)});
    CHECK(r.by_metric == CausalKind::kNull);
    CHECK(r.by_axis == CausalKind::kNull);
  }
}

TEST_CASE("null planes: the incidence normal is null") {
  // The plane {side = 0} in (t,x1,x2) has normal (1, cos theta, sin theta).
  // Exact assertions on exactly-representable directions (Pythagorean scalings
  // of the normal); random angles carry only the rounding of cos/sin.
  for (auto n : {MinkowskiVector{1, 1, 0}, {1, 0, 1}, {1, -1, 0}, {1, 0, -1},
                 {5, 3, 4}, {13, 5, 12}, {25, 7, 24}}) {
    CHECK(n.quadratic_form() == 0.0);
  }
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double theta = rng.uniform(0, kTwoPi);
    MinkowskiVector n{1.0, std::cos(theta), std::sin(theta)};
    CHECK(std::abs(n.quadratic_form()) <= 1e-15);
  }
}

TEST_CASE("cylinder point normalizes theta") {
  CylinderPoint p(kTwoPi + 0.5, 1.0);
  CHECK(p.theta == Catch::Approx(0.5));
  CylinderPoint q(-0.5, 1.0);
  CHECK(q.theta == Catch::Approx(kTwoPi - 0.5));
  CHECK(q.theta < kTwoPi);
  CHECK(CylinderPoint(kTwoPi, 0.0).theta == 0.0);
}
