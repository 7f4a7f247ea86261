#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace twave {

namespace detail {

// Lagrange cubic weights on the equispaced stencil {0,1,2,3} at local tau.
inline void cubic_weights(double tau, double w[4]) {
  const double a = tau - 1.0, b = tau - 2.0, c = tau - 3.0;
  w[0] = -a * b * c / 6.0;
  w[1] = tau * b * c / 2.0;
  w[2] = -tau * a * c / 2.0;
  w[3] = tau * a * b / 6.0;
}

}  // namespace detail

// Uniform 2D grid over [x_lo, x_hi] x [y_lo, y_hi], values indexed [i*ny + j].
class Grid2 {
 public:
  Grid2() = default;
  Grid2(double x_lo, double x_hi, int nx, double y_lo, double y_hi, int ny)
      : x_lo_(x_lo), y_lo_(y_lo), nx_(nx), ny_(ny),
        hx_((x_hi - x_lo) / (nx - 1)), hy_((y_hi - y_lo) / (ny - 1)),
        values_(static_cast<std::size_t>(nx) * ny, 0.0) {
    if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2: need at least 4x4 points");
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double x(int i) const { return x_lo_ + i * hx_; }
  double y(int j) const { return y_lo_ + j * hy_; }
  double x_hi() const { return x(nx_ - 1); }
  double y_hi() const { return y(ny_ - 1); }
  double x_lo() const { return x_lo_; }
  double y_lo() const { return y_lo_; }

  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * ny_ + j]; }
  double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * ny_ + j]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool contains(double x, double y) const {
    return x >= x_lo_ && x <= x_hi() && y >= y_lo_ && y <= y_hi();
  }

  // Bicubic (4x4 Lagrange) interpolation; O(h^4) for smooth data.
  double interp(double x, double y) const {
    const double fx = (x - x_lo_) / hx_;
    const double fy = (y - y_lo_) / hy_;
    int ix = static_cast<int>(std::floor(fx)) - 1;
    int iy = static_cast<int>(std::floor(fy)) - 1;
    ix = std::clamp(ix, 0, nx_ - 4);
    iy = std::clamp(iy, 0, ny_ - 4);
    double wx[4], wy[4];
    detail::cubic_weights(fx - ix, wx);
    detail::cubic_weights(fy - iy, wy);
    double sum = 0.0;
    for (int a = 0; a < 4; ++a) {
      const double* row = &values_[static_cast<std::size_t>(ix + a) * ny_ + iy];
      sum += wx[a] * (wy[0] * row[0] + wy[1] * row[1] + wy[2] * row[2] + wy[3] * row[3]);
    }
    return sum;
  }

 private:
  double x_lo_ = 0.0, y_lo_ = 0.0;
  int nx_ = 0, ny_ = 0;
  double hx_ = 1.0, hy_ = 1.0;
  std::vector<double> values_;
};

}  // namespace twave
