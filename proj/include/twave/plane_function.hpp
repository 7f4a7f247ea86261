#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "twave/common.hpp"
#include "twave/grid.hpp"

namespace twave {

// Declared decay of a plane function: |f(x)| <= bound for |x| >= radius.
struct DecayBound {
  double radius = 8.0;
  double bound = 1e-12;
};

// Function on the initial plane M_0 = R^2 with optional first partials.
// Gridded instances interpolate bicubically inside the box and are zero
// outside (consistent with the rapid-decrease hypothesis).
class PlaneFunction {
 public:
  using Fn = std::function<double(double, double)>;

  PlaneFunction() : f_([](double, double) { return 0.0; }) {}

  static PlaneFunction zero() { return PlaneFunction(); }

  static PlaneFunction from_function(Fn f, DecayBound decay = {}) {
    PlaneFunction p;
    p.f_ = std::move(f);
    p.decay_ = decay;
    return p;
  }

  static PlaneFunction from_function(Fn f, Fn dx1, Fn dx2, DecayBound decay = {}) {
    PlaneFunction p;
    p.f_ = std::move(f);
    p.dx1_ = std::move(dx1);
    p.dx2_ = std::move(dx2);
    p.decay_ = decay;
    return p;
  }

  static PlaneFunction from_grid(Grid2 grid, DecayBound decay = {}) {
    auto g = std::make_shared<Grid2>(std::move(grid));
    PlaneFunction p;
    p.f_ = [g](double x1, double x2) {
      return g->contains(x1, x2) ? g->interp(x1, x2) : 0.0;
    };
    p.decay_ = decay;
    p.grid_ = g;
    return p;
  }

  // Samples an evaluator onto [-box, box]^2 with n points per side.
  static PlaneFunction sampled(const Fn& f, double box, int n, DecayBound decay = {}) {
    Grid2 g(-box, box, n, -box, box, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = f(g.x(i), g.y(j));
    return from_grid(std::move(g), decay);
  }

  double operator()(double x1, double x2) const { return f_(x1, x2); }

  bool has_partials() const { return static_cast<bool>(dx1_); }
  double dx1(double x1, double x2) const {
    if (!dx1_) throw std::logic_error("PlaneFunction: no analytic partials");
    return dx1_(x1, x2);
  }
  double dx2(double x1, double x2) const {
    if (!dx2_) throw std::logic_error("PlaneFunction: no analytic partials");
    return dx2_(x1, x2);
  }

  const DecayBound& decay() const { return decay_; }
  const Grid2* grid() const { return grid_.get(); }

  // Samples |f| on a ring of the given radius; used to verify the declared decay.
  double ring_max_abs(double radius, int n_samples = 64) const {
    double m = 0.0;
    for (int i = 0; i < n_samples; ++i) {
      const double a = kTwoPi * i / n_samples;
      m = std::max(m, std::abs(f_(radius * std::cos(a), radius * std::sin(a))));
    }
    return m;
  }

 private:
  Fn f_;
  Fn dx1_, dx2_;
  DecayBound decay_;
  std::shared_ptr<const Grid2> grid_;
};

}  // namespace twave
