#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace twave {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Angles are stored in radians, normalized to [0, 2pi).
inline double normalize_angle(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;  // fmod may land exactly on 2pi after the shift
  return a;
}

// Point (theta, v) on the cylinder C = S^1 x R, with omega = e^{i theta}.
struct CylinderPoint {
  double theta = 0.0;
  double v = 0.0;

  CylinderPoint() = default;
  CylinderPoint(double theta_, double v_) : theta(normalize_angle(theta_)), v(v_) {}

  double omega1() const { return std::cos(theta); }
  double omega2() const { return std::sin(theta); }
  Complex omega() const { return {std::cos(theta), std::sin(theta)}; }
};

// Point (t, x1, x2) of the flat Lorentz space R^{1,2}; z = x1 + i x2.
struct SpacetimePoint {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  Complex z() const { return {x1, x2}; }
};

// Tangent direction (tau, xi1, xi2) on R^{1,2}.
struct MinkowskiVector {
  double tau = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;

  // q = -tau^2 + |xi|^2 for the metric -dt^2 + dx1^2 + dx2^2.
  double quadratic_form() const { return -tau * tau + xi1 * xi1 + xi2 * xi2; }
  double xi_norm() const { return std::hypot(xi1, xi2); }
  bool is_zero() const { return tau == 0.0 && xi1 == 0.0 && xi2 == 0.0; }
};

// Point (s, t, x1, x2) of the 4-space R x R^{1,2}.
struct Point4 {
  double s = 0.0;
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  SpacetimePoint base() const { return {t, x1, x2}; }
  double operator[](int i) const {
    switch (i) {
      case 0: return s;
      case 1: return t;
      case 2: return x1;
      default: return x2;
    }
  }
  double& operator[](int i) {
    switch (i) {
      case 0: return s;
      case 1: return t;
      case 2: return x1;
      default: return x2;
    }
  }
};

// Multi-index (n_t, n_x1, n_x2) for partial derivatives on R^{1,2}.
struct DerivOrder {
  int t = 0;
  int x1 = 0;
  int x2 = 0;

  int total() const { return t + x1 + x2; }
  DerivOrder bump_t() const { return {t + 1, x1, x2}; }
  DerivOrder bump_x1() const { return {t, x1 + 1, x2}; }
  DerivOrder bump_x2() const { return {t, x1, x2 + 1}; }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace twave
