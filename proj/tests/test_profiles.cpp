#include <catch2/catch_amalgamated.hpp>

#include "twave/cylinder_function.hpp"
#include "twave/profiles.hpp"
#include "twave/rng.hpp"

using namespace twave;

namespace {

// Richardson-extrapolated central difference, an oracle for the closed-form
// profile derivatives.
double fd_derivative(const VProfile& p, double v, int order) {
  auto diff = [&](double h) {
    switch (order) {
      case 1: return (p.eval(v + h) - p.eval(v - h)) / (2 * h);
      case 2: return (p.eval(v + h) - 2 * p.eval(v) + p.eval(v - h)) / (h * h);
      case 3:
        return (p.eval(v + 2 * h) - 2 * p.eval(v + h) + 2 * p.eval(v - h) -
                p.eval(v - 2 * h)) / (2 * h * h * h);
      default:
        return (p.eval(v + 2 * h) - 4 * p.eval(v + h) + 6 * p.eval(v) -
                4 * p.eval(v - h) + p.eval(v - 2 * h)) / (h * h * h * h);
    }
  };
  // Larger steps for high orders: the h^-n rounding noise dominates otherwise.
  const double h = order <= 2 ? 1e-3 : 1e-2;
  return (4.0 * diff(h) - diff(2 * h)) / 3.0;
}

}  // namespace

TEST_CASE("gaussian profile closed-form derivatives match finite differences") {
  Rng rng(3);
  const VProfile p = VProfile::gaussian_poly({0.7, -0.3, 0.2}, 0.4, 1.3);
  for (int i = 0; i < 30; ++i) {
    const double v = rng.uniform(-3, 3);
    for (int n = 1; n <= 4; ++n) {
      const double exact = p.eval(v, n);
      const double fd = fd_derivative(p, v, n);
      CHECK(exact == Catch::Approx(fd).margin(5e-5 * std::max(1.0, std::abs(exact))));
    }
  }
}

TEST_CASE("sech profile closed-form derivatives match finite differences") {
  Rng rng(4);
  const VProfile p = VProfile::sech_pow(0.8, -0.2, 0.9, 3);
  for (int i = 0; i < 30; ++i) {
    const double v = rng.uniform(-3, 3);
    for (int n = 1; n <= 4; ++n) {
      const double exact = p.eval(v, n);
      const double fd = fd_derivative(p, v, n);
      CHECK(exact == Catch::Approx(fd).margin(5e-5 * std::max(1.0, std::abs(exact))));
    }
  }
}

TEST_CASE("profile eval_jet agrees with eval") {
  const VProfile g = VProfile::gaussian_poly({1.0, 0.5}, -0.3, 0.8);
  const VProfile s = VProfile::sech_pow(0.5, 0.1, 1.1, 2);
  double jet[5];
  for (double v : {-1.7, 0.0, 0.33, 2.4}) {
    g.eval_jet(v, 4, jet);
    for (int n = 0; n <= 4; ++n) CHECK(jet[n] == g.eval(v, n));
    s.eval_jet(v, 4, jet);
    for (int n = 0; n <= 4; ++n) CHECK(jet[n] == s.eval(v, n));
  }
}

TEST_CASE("profile validation and decay flags") {
  CHECK_THROWS_AS(VProfile::gaussian_poly({}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(VProfile::gaussian_poly({1.0}, 0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(VProfile::sech_pow(1, 0, 1, 0), std::invalid_argument);

  CHECK(VProfile::gaussian(1.0).rapidly_decreasing());
  CHECK(VProfile::sech_pow(1, 0, 1, 2).rapidly_decreasing());
  CHECK(VProfile::zero().rapidly_decreasing());
  CHECK_FALSE(VProfile::constant(1.0).rapidly_decreasing());
}

TEST_CASE("profile derivative order is capped at 4") {
  const VProfile p = VProfile::gaussian(1.0);
  CHECK_THROWS_AS(p.eval(0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(p.eval(0.0, -1), std::invalid_argument);
}

TEST_CASE("cylinder function evaluation") {
  const CylinderFunction zero = CylinderFunction::zero();
  CHECK(zero.eval(1.0, 2.0, 0) == 0.0);
  CHECK(zero.is_zero());

  // h = cos(theta) e^{-v^2}
  const CylinderFunction h = CylinderFunction::cos_mode(1, VProfile::gaussian(1.0));
  CHECK(h.eval(0.0, 0.0, 0) == Catch::Approx(1.0));
  CHECK(h.eval(0.0, 1.0, 1) == Catch::Approx(-2.0 * std::exp(-1.0)));
  CHECK_THROWS_AS(h.eval(0.0, 0.0, 5), std::invalid_argument);

  const CylinderFunction hs = CylinderFunction::sin_mode(2, VProfile::gaussian(0.5));
  CHECK(hs.eval(kPi / 4, 0.0, 0) == Catch::Approx(0.5));
  CHECK_THROWS_AS(CylinderFunction::sin_mode(0, VProfile::gaussian(1.0)),
                  std::invalid_argument);

  double jet[5];
  h.eval_jet(0.7, -0.4, 4, jet);
  for (int n = 0; n <= 4; ++n) CHECK(jet[n] == Catch::Approx(h.eval(0.7, -0.4, n)));
}

TEST_CASE("cylinder function tail bound check") {
  const CylinderFunction h = CylinderFunction::cos_mode(1, VProfile::gaussian(1.0));
  CHECK(h.rapidly_decreasing());
  CHECK(h.tail_below(1e-10, 8.0));

  const CylinderFunction flat = CylinderFunction::cos_mode(1, VProfile::constant(1.0));
  CHECK_FALSE(flat.rapidly_decreasing());
  CHECK_FALSE(flat.tail_below(1e-10, 8.0));
}
