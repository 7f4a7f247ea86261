#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twave/common.hpp"

namespace twave {

// Grid over the cylinder: theta_i = 2 pi i / n_theta (i < n_theta, periodic),
// v_j uniform over [-v_max, v_max] inclusive.
struct LineGrid {
  int n_theta = 256;
  int n_v = 1024;
  double v_max = 8.0;

  double theta(int i) const { return kTwoPi * i / n_theta; }
  double dv() const { return 2.0 * v_max / (n_v - 1); }
  double v(int j) const { return -v_max + j * dv(); }

  void validate() const {
    if (n_theta < 8 || n_theta % 2 != 0)
      throw std::invalid_argument("LineGrid: n_theta must be even and >= 8");
    if (n_v < 8) throw std::invalid_argument("LineGrid: n_v must be >= 8");
    if (!(v_max > 0.0)) throw std::invalid_argument("LineGrid: v_max must be positive");
  }
};

// Function on the cylinder sampled on a LineGrid. Values indexed [i_theta][j_v].
class SampledLineFunction {
 public:
  SampledLineFunction() = default;
  explicit SampledLineFunction(LineGrid grid)
      : grid_(grid), values_(static_cast<std::size_t>(grid.n_theta) * grid.n_v, 0.0) {
    grid_.validate();
  }

  static SampledLineFunction sample(const LineGrid& grid,
                                    const std::function<double(double, double)>& f) {
    SampledLineFunction g(grid);
    for (int i = 0; i < grid.n_theta; ++i)
      for (int j = 0; j < grid.n_v; ++j) g.at(i, j) = f(grid.theta(i), grid.v(j));
    return g;
  }

  const LineGrid& grid() const { return grid_; }
  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * grid_.n_v + j]; }
  double at(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * grid_.n_v + j];
  }
  const double* row(int i) const { return &values_[static_cast<std::size_t>(i) * grid_.n_v]; }
  double* row(int i) { return &values_[static_cast<std::size_t>(i) * grid_.n_v]; }

  // Linear interpolation in v along the theta row i. Out-of-range v is an error.
  double interp_v(int i, double v) const {
    const double f = (v + grid_.v_max) / grid_.dv();
    if (f < 0.0 || f > grid_.n_v - 1)
      throw std::out_of_range("SampledLineFunction: v outside the grid range");
    int j = static_cast<int>(std::floor(f));
    if (j >= grid_.n_v - 1) j = grid_.n_v - 2;
    const double t = f - j;
    const double* r = row(i);
    return (1.0 - t) * r[j] + t * r[j + 1];
  }

  // Bilinear interpolation, periodic in theta.
  double interp(double theta, double v) const {
    const double ft = normalize_angle(theta) / (kTwoPi / grid_.n_theta);
    const int i0 = static_cast<int>(std::floor(ft)) % grid_.n_theta;
    const int i1 = (i0 + 1) % grid_.n_theta;
    const double t = ft - std::floor(ft);
    return (1.0 - t) * interp_v(i0, v) + t * interp_v(i1, v);
  }

  // (1/2pi) sum_i g(theta_i, t + <omega_i, x>): the transform R of the sampled
  // data by trapezoid over the grid's own theta nodes. At t = 0 this is the
  // dual Radon transform.
  double transform_R_at(double t, double x1, double x2) const {
    double sum = 0.0;
    for (int i = 0; i < grid_.n_theta; ++i) {
      const double th = grid_.theta(i);
      sum += interp_v(i, t + x1 * std::cos(th) + x2 * std::sin(th));
    }
    return sum / grid_.n_theta;
  }

  double dual_radon(double x1, double x2) const { return transform_R_at(0.0, x1, x2); }

  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  // Largest |value| on the two extreme v rows; a tail-decay diagnostic.
  double boundary_max_abs() const {
    double m = 0.0;
    for (int i = 0; i < grid_.n_theta; ++i)
      m = std::max({m, std::abs(at(i, 0)), std::abs(at(i, grid_.n_v - 1))});
    return m;
  }

  void write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "theta,v,value\n";
    char buf[96];
    for (int i = 0; i < grid_.n_theta; ++i)
      for (int j = 0; j < grid_.n_v; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid_.theta(i), grid_.v(j),
                      at(i, j));
        out << buf;
      }
  }

 private:
  LineGrid grid_;
  std::vector<double> values_;
};

}  // namespace twave
