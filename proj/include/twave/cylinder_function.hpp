#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twave/common.hpp"
#include "twave/profiles.hpp"

namespace twave {

// One Fourier mode of h: a_k(v) cos(k theta) + b_k(v) sin(k theta).
struct CylinderMode {
  int k = 0;
  VProfile cos_profile;
  VProfile sin_profile;  // ignored for k = 0
};

// Deformation datum h(theta, v) on the cylinder, spectral in theta and in
// closed form in v, so circle integrals need only 1D quadrature and
// derivatives land on the profiles.
class CylinderFunction {
 public:
  CylinderFunction() = default;
  explicit CylinderFunction(std::vector<CylinderMode> modes) : modes_(std::move(modes)) {
    for (const auto& m : modes_)
      if (m.k < 0) throw std::invalid_argument("CylinderFunction: mode k must be >= 0");
  }

  static CylinderFunction zero() { return CylinderFunction(); }

  static CylinderFunction cos_mode(int k, VProfile profile) {
    return CylinderFunction({CylinderMode{k, std::move(profile), VProfile::zero()}});
  }

  static CylinderFunction sin_mode(int k, VProfile profile) {
    if (k == 0) throw std::invalid_argument("CylinderFunction: sin mode needs k >= 1");
    return CylinderFunction({CylinderMode{k, VProfile::zero(), std::move(profile)}});
  }

  const std::vector<CylinderMode>& modes() const { return modes_; }

  bool is_zero() const {
    for (const auto& m : modes_)
      if (!m.cos_profile.is_zero() || !m.sin_profile.is_zero()) return false;
    return true;
  }

  bool rapidly_decreasing() const {
    for (const auto& m : modes_) {
      if (!m.cos_profile.rapidly_decreasing()) return false;
      if (m.k > 0 && !m.sin_profile.rapidly_decreasing()) return false;
    }
    return true;
  }

  int max_mode() const {
    int k = 0;
    for (const auto& m : modes_) k = std::max(k, m.k);
    return k;
  }

  // d^n/dv^n h(theta, v), n in 0..4.
  double eval(double theta, double v, int dv_order = 0) const {
    if (dv_order < 0 || dv_order > kMaxProfileDeriv)
      throw std::invalid_argument("CylinderFunction: dv_order must be in 0..4");
    double sum = 0.0;
    for (const auto& m : modes_) {
      const double c = m.cos_profile.eval(v, dv_order);
      sum += c * std::cos(m.k * theta);
      if (m.k > 0) sum += m.sin_profile.eval(v, dv_order) * std::sin(m.k * theta);
    }
    return sum;
  }

  double eval(const CylinderPoint& p, int dv_order = 0) const {
    return eval(p.theta, p.v, dv_order);
  }

  // v-derivatives 0..max_order at once.
  void eval_jet(double theta, double v, int max_order, double* out) const {
    for (int n = 0; n <= max_order; ++n) out[n] = 0.0;
    double jet[kMaxProfileDeriv + 1];
    for (const auto& m : modes_) {
      const double ck = std::cos(m.k * theta);
      if (!m.cos_profile.is_zero()) {
        m.cos_profile.eval_jet(v, max_order, jet);
        for (int n = 0; n <= max_order; ++n) out[n] += ck * jet[n];
      }
      if (m.k > 0 && !m.sin_profile.is_zero()) {
        const double sk = std::sin(m.k * theta);
        m.sin_profile.eval_jet(v, max_order, jet);
        for (int n = 0; n <= max_order; ++n) out[n] += sk * jet[n];
      }
    }
  }

  // Checks |v|^4 |d^n/dv^n h| < bound for |v| >= cutoff across modes and n <= 4.
  bool tail_below(double bound, double cutoff = 8.0) const {
    for (const auto& m : modes_) {
      for (int n = 0; n <= kMaxProfileDeriv; ++n) {
        if (m.cos_profile.tail_sup(cutoff, n) >= bound) return false;
        if (m.k > 0 && m.sin_profile.tail_sup(cutoff, n) >= bound) return false;
      }
    }
    return true;
  }

 private:
  std::vector<CylinderMode> modes_;
};

}  // namespace twave
