#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "twave/common.hpp"

namespace twave {

inline constexpr int kMaxProfileDeriv = 4;

namespace detail {

// Derivative of a polynomial given by coefficients c[0] + c[1] u + ...
inline std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  if (d.empty()) d.push_back(0.0);
  return d;
}

inline double poly_eval(const std::vector<double>& c, double u) {
  double r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * u + c[i];
  return r;
}

// p(u) -> p'(u) - 2 u p(u), the Gaussian-weighted derivative recurrence.
inline std::vector<double> gaussian_step(const std::vector<double>& c) {
  std::vector<double> d = poly_derivative(c);
  d.resize(std::max(d.size(), c.size() + 1), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) d[i + 1] -= 2.0 * c[i];
  return d;
}

// q(T) -> -m T q(T) + (1 - T^2) q'(T), for d/du [sech^m(u) q(tanh u)].
inline std::vector<double> sech_step(const std::vector<double>& c, int m) {
  std::vector<double> d = poly_derivative(c);
  std::vector<double> out(std::max(d.size() + 2, c.size() + 1), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    out[i] += d[i];
    out[i + 2] -= d[i];
  }
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] -= m * c[i];
  return out;
}

}  // namespace detail

// One v-profile with closed-form derivatives up to order 4:
//   gaussian_poly: P((v-c)/w) exp(-((v-c)/w)^2)
//   sech_pow:      a sech^m((v-c)/w)
//   constant:      a            (not rapidly decreasing; kernel tests only)
//   zero
class VProfile {
 public:
  enum class Kind { kZero, kGaussianPoly, kSechPow, kConstant };

  VProfile() : kind_(Kind::kZero) {}

  static VProfile zero() { return VProfile(); }

  static VProfile gaussian_poly(std::vector<double> coeffs, double center = 0.0,
                                double width = 1.0) {
    if (coeffs.empty()) throw std::invalid_argument("gaussian_poly: empty coefficients");
    if (!(width > 0.0)) throw std::invalid_argument("gaussian_poly: width must be positive");
    VProfile p;
    p.kind_ = Kind::kGaussianPoly;
    p.center_ = center;
    p.width_ = width;
    p.polys_[0] = std::move(coeffs);
    for (int n = 1; n <= kMaxProfileDeriv; ++n)
      p.polys_[n] = detail::gaussian_step(p.polys_[n - 1]);
    return p;
  }

  static VProfile gaussian(double amplitude, double center = 0.0, double width = 1.0) {
    return gaussian_poly({amplitude}, center, width);
  }

  static VProfile sech_pow(double amplitude, double center, double width, int power) {
    if (power < 1) throw std::invalid_argument("sech_pow: power must be >= 1");
    if (!(width > 0.0)) throw std::invalid_argument("sech_pow: width must be positive");
    VProfile p;
    p.kind_ = Kind::kSechPow;
    p.center_ = center;
    p.width_ = width;
    p.power_ = power;
    p.polys_[0] = {amplitude};
    for (int n = 1; n <= kMaxProfileDeriv; ++n)
      p.polys_[n] = detail::sech_step(p.polys_[n - 1], power);
    return p;
  }

  // v-independent profile; violates the decay requirement and is flagged as such.
  static VProfile constant(double value) {
    VProfile p;
    p.kind_ = Kind::kConstant;
    p.value_ = value;
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  bool rapidly_decreasing() const {
    return kind_ != Kind::kConstant || value_ == 0.0;
  }

  double eval(double v, int deriv_order = 0) const {
    if (deriv_order < 0 || deriv_order > kMaxProfileDeriv)
      throw std::invalid_argument("VProfile: derivative order must be in 0..4");
    double jet[kMaxProfileDeriv + 1];
    eval_jet(v, deriv_order, jet);
    return jet[deriv_order];
  }

  // All derivative orders 0..max_order at once; shares the exp/sech evaluation.
  void eval_jet(double v, int max_order, double* out) const {
    switch (kind_) {
      case Kind::kZero:
        for (int n = 0; n <= max_order; ++n) out[n] = 0.0;
        return;
      case Kind::kConstant:
        out[0] = value_;
        for (int n = 1; n <= max_order; ++n) out[n] = 0.0;
        return;
      case Kind::kGaussianPoly: {
        const double u = (v - center_) / width_;
        const double e = std::exp(-u * u);
        double wn = 1.0;
        for (int n = 0; n <= max_order; ++n) {
          out[n] = detail::poly_eval(polys_[n], u) * e / wn;
          wn *= width_;
        }
        return;
      }
      case Kind::kSechPow: {
        const double u = (v - center_) / width_;
        const double sm = std::pow(1.0 / std::cosh(u), power_);
        const double tn = std::tanh(u);
        double wn = 1.0;
        for (int n = 0; n <= max_order; ++n) {
          out[n] = detail::poly_eval(polys_[n], tn) * sm / wn;
          wn *= width_;
        }
        return;
      }
    }
  }

  // sup over |v| >= cutoff of |v|^4 |f^(n)(v)|, estimated by dense sampling.
  double tail_sup(double cutoff, int deriv_order) const {
    double sup = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double v = cutoff + 0.05 * i;
      const double w = std::pow(v, 4);
      sup = std::max(sup, w * std::abs(eval(v, deriv_order)));
      sup = std::max(sup, w * std::abs(eval(-v, deriv_order)));
    }
    return sup;
  }

 private:
  Kind kind_ = Kind::kZero;
  double center_ = 0.0;
  double width_ = 1.0;
  double value_ = 0.0;
  int power_ = 1;
  std::array<std::vector<double>, kMaxProfileDeriv + 1> polys_;
};

}  // namespace twave
