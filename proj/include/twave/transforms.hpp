#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "twave/common.hpp"
#include "twave/cylinder_function.hpp"
#include "twave/plane_function.hpp"
#include "twave/sampled_line.hpp"

namespace twave {

inline constexpr int kMaxTransformOrder = 4;

// ---------------------------------------------------------------------------
// The circle-average transform R and its derivatives.
//
//   Rh(t,x) = (1/2pi) \int h(omega, t + <omega,x>) dtheta.
//
// Differentiation goes under the integral: each d/dt contributes d/dv on h,
// each d/dx_i contributes omega_i d/dv. The theta quadrature is the trapezoid
// rule on n_theta nodes, spectrally accurate for these periodic integrands.
// ---------------------------------------------------------------------------

inline double transform_R(const CylinderFunction& h, const SpacetimePoint& p,
                          DerivOrder d = {}, int n_theta = 256) {
  if (d.t < 0 || d.x1 < 0 || d.x2 < 0 || d.total() > kMaxTransformOrder)
    throw std::invalid_argument("transform_R: derivative order must be in 0..4");
  if (n_theta < 16) throw std::invalid_argument("transform_R: n_theta must be >= 16");
  const int n = d.total();
  double sum = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = kTwoPi * i / n_theta;
    const double c = std::cos(theta), s = std::sin(theta);
    double w = 1.0;
    for (int a = 0; a < d.x1; ++a) w *= c;
    for (int a = 0; a < d.x2; ++a) w *= s;
    sum += w * h.eval(theta, p.t + c * p.x1 + s * p.x2, n);
  }
  return sum / n_theta;
}

// All partial derivatives of Rh up to total order max_order in one quadrature
// pass. Entries of equal total order share the same h-jet per node, so
// identities like the integrand cancellation -R[h_vv] + R[w1^2 h_vv] +
// R[w2^2 h_vv] = 0 hold to rounding.
class RJet {
 public:
  static constexpr int kSlots = 35;  // multi-indices with total order <= 4

  RJet(const CylinderFunction& h, const SpacetimePoint& p, int max_order,
       int n_theta = 256) {
    if (max_order < 0 || max_order > kMaxTransformOrder)
      throw std::invalid_argument("RJet: max_order must be in 0..4");
    if (n_theta < 16) throw std::invalid_argument("RJet: n_theta must be >= 16");
    max_order_ = max_order;
    d_.fill(0.0);
    double jet[kMaxTransformOrder + 1];
    double cpow[kMaxTransformOrder + 1], spow[kMaxTransformOrder + 1];
    for (int i = 0; i < n_theta; ++i) {
      const double theta = kTwoPi * i / n_theta;
      const double c = std::cos(theta), s = std::sin(theta);
      h.eval_jet(theta, p.t + c * p.x1 + s * p.x2, max_order, jet);
      cpow[0] = spow[0] = 1.0;
      for (int a = 1; a <= max_order; ++a) {
        cpow[a] = cpow[a - 1] * c;
        spow[a] = spow[a - 1] * s;
      }
      for (int nt = 0; nt <= max_order; ++nt)
        for (int n1 = 0; n1 + nt <= max_order; ++n1)
          for (int n2 = 0; n1 + n2 + nt <= max_order; ++n2)
            d_[slot(nt, n1, n2)] += cpow[n1] * spow[n2] * jet[nt + n1 + n2];
    }
    for (double& x : d_) x /= n_theta;
  }

  double get(int nt, int n1, int n2) const {
    if (nt + n1 + n2 > max_order_)
      throw std::invalid_argument("RJet: order beyond the computed jet");
    return d_[slot(nt, n1, n2)];
  }
  double get(const DerivOrder& d) const { return get(d.t, d.x1, d.x2); }

 private:
  static int slot(int nt, int n1, int n2) {
    // Dense index over nt + n1 + n2 <= 4.
    static constexpr int off[5] = {0, 1, 3, 6, 10};  // offsets within a level
    const int n = nt + n1 + n2;
    int base = 0;
    for (int m = 0; m < n; ++m) base += (m + 1) * (m + 2) / 2;
    return base + off[n - nt] + n2;
  }

  int max_order_ = 0;
  std::array<double, kSlots> d_;
};

// ---------------------------------------------------------------------------
// Radon transform over lines l_{(omega,v)} = { x : <omega,x> = v }.
// ---------------------------------------------------------------------------

struct RadonResult {
  double value = 0.0;
  double tail_estimate = 0.0;  // |f| at the two cut ends times the half length
  bool tail_warning = false;
};

// Line integral of f over l_{(omega,v)}, parametrized x = v omega + s omega^perp,
// trapezoid with n_s nodes on s in [-half_length, half_length].
inline RadonResult radon(const PlaneFunction& f, const CylinderPoint& p,
                         double half_length = 12.0, int n_s = 256,
                         double tail_tol = 1e-10) {
  if (n_s < 8) throw std::invalid_argument("radon: n_s must be >= 8");
  if (!(half_length > 0.0)) throw std::invalid_argument("radon: half_length must be positive");
  const double w1 = p.omega1(), w2 = p.omega2();
  const double ds = 2.0 * half_length / (n_s - 1);
  double sum = 0.0;
  double ends = 0.0;
  for (int i = 0; i < n_s; ++i) {
    const double s = -half_length + i * ds;
    const double val = f(p.v * w1 - s * w2, p.v * w2 + s * w1);
    const double weight = (i == 0 || i == n_s - 1) ? 0.5 : 1.0;
    sum += weight * val;
    if (i == 0 || i == n_s - 1) ends = std::max(ends, std::abs(val));
  }
  RadonResult r;
  r.value = sum * ds;
  r.tail_estimate = ends * half_length;
  r.tail_warning = r.tail_estimate > tail_tol * std::max(1.0, std::abs(r.value));
  return r;
}

struct RadonGridResult {
  SampledLineFunction values;
  bool tail_warning = false;
  double max_tail_estimate = 0.0;
};

inline RadonGridResult radon_grid(const PlaneFunction& f, const LineGrid& grid,
                                  double half_length = 12.0, int n_s = 256,
                                  double tail_tol = 1e-10) {
  RadonGridResult out{SampledLineFunction(grid), false, 0.0};
  for (int i = 0; i < grid.n_theta; ++i) {
    for (int j = 0; j < grid.n_v; ++j) {
      RadonResult r = radon(f, {grid.theta(i), grid.v(j)}, half_length, n_s, tail_tol);
      out.values.at(i, j) = r.value;
      out.max_tail_estimate = std::max(out.max_tail_estimate, r.tail_estimate);
      out.tail_warning = out.tail_warning || r.tail_warning;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert transform in v.
//
// The paper's transform carries a factor i/pi; here the real transform
//   Hg(v) = (1/pi) pv \int g(nu) / (nu - v) dnu
// is used throughout, with the i tracked algebraically (H_paper = i H). The
// principal value is evaluated by singularity subtraction,
//   pv \int_{-V}^{V} g/(nu-v) = \int [g(nu)-g(v)]/(nu-v) dnu
//                               + g(v) log|(V-v)/(V+v)|,
// with the regularized integrand handled by the trapezoid rule.
// ---------------------------------------------------------------------------

namespace detail {

// Hilbert sum along one row of samples g[0..n-1] at nodes v_j, evaluated at
// node index j0. The node collision uses the centered derivative as the
// regularized integrand's limit. include_log = false drops the boundary log
// term (only valid when g(v_j0) is below the tail bound, i.e. at the ends).
inline double hilbert_at_node(const double* g, int n, double dv, double v_max, int j0,
                              bool include_log) {
  const double gv = g[j0];
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double integrand;
    if (j == j0) {
      if (j0 >= 2 && j0 + 2 < n) {
        integrand = (-g[j0 + 2] + 8.0 * g[j0 + 1] - 8.0 * g[j0 - 1] + g[j0 - 2]) / (12.0 * dv);
      } else if (j0 >= 1 && j0 + 1 < n) {
        integrand = (g[j0 + 1] - g[j0 - 1]) / (2.0 * dv);
      } else if (j0 + 1 < n) {
        integrand = (g[j0 + 1] - g[j0]) / dv;
      } else {
        integrand = (g[j0] - g[j0 - 1]) / dv;
      }
    } else {
      integrand = (g[j] - gv) / ((j - j0) * dv);
    }
    const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    sum += w * integrand;
  }
  double result = sum * dv;
  if (include_log) {
    const double v = -v_max + j0 * dv;
    result += gv * std::log((v_max - v) / (v_max + v));
  }
  return result / kPi;
}

}  // namespace detail

// Hg(theta, v) at a grid row of g (theta must lie on the grid) and any interior
// v. Boundary v is rejected: the log term diverges there.
inline double hilbert_pv(const SampledLineFunction& g, const CylinderPoint& p) {
  const LineGrid& gr = g.grid();
  const double fi = normalize_angle(p.theta) / (kTwoPi / gr.n_theta);
  const int i = static_cast<int>(std::lround(fi)) % gr.n_theta;
  if (std::abs(fi - std::lround(fi)) > 1e-9)
    throw std::invalid_argument("hilbert_pv: theta must lie on the grid");
  if (!(std::abs(p.v) < gr.v_max))
    throw std::invalid_argument("hilbert_pv: v at the grid boundary is rejected");

  const double dv = gr.dv();
  const double gv = g.interp_v(i, p.v);
  const double* row = g.row(i);
  double sum = 0.0;
  for (int j = 0; j < gr.n_v; ++j) {
    const double dn = gr.v(j) - p.v;
    double integrand;
    if (std::abs(dn) < 0.5 * dv) {
      // Within half a cell of the singularity: use the local slope.
      const int jc = std::min(std::max(j, 2), gr.n_v - 3);
      integrand = (-row[jc + 2] + 8.0 * row[jc + 1] - 8.0 * row[jc - 1] + row[jc - 2]) /
                  (12.0 * dv);
    } else {
      integrand = (row[j] - gv) / dn;
    }
    const double w = (j == 0 || j == gr.n_v - 1) ? 0.5 : 1.0;
    sum += w * integrand;
  }
  double result = sum * dv + gv * std::log((gr.v_max - p.v) / (gr.v_max + p.v));
  return result / kPi;
}

// Hg on the whole grid. The two extreme v rows drop the log term, which is
// valid because the data must decay below the tail bound there.
inline SampledLineFunction hilbert_grid(const SampledLineFunction& g) {
  const LineGrid& gr = g.grid();
  SampledLineFunction out(gr);
  for (int i = 0; i < gr.n_theta; ++i) {
    const double* row = g.row(i);
    double* orow = out.row(i);
    for (int j = 0; j < gr.n_v; ++j) {
      const bool interior = (j != 0 && j != gr.n_v - 1);
      orow[j] = detail::hilbert_at_node(row, gr.n_v, gr.dv(), gr.v_max, j, interior);
    }
  }
  return out;
}

// 4th-order centered d/dv on the grid; one-sided at the ends.
inline SampledLineFunction dv_grid(const SampledLineFunction& g) {
  const LineGrid& gr = g.grid();
  SampledLineFunction out(gr);
  const double dv = gr.dv();
  for (int i = 0; i < gr.n_theta; ++i) {
    const double* r = g.row(i);
    double* o = out.row(i);
    const int n = gr.n_v;
    for (int j = 0; j < n; ++j) {
      if (j >= 2 && j + 2 < n) {
        o[j] = (-r[j + 2] + 8.0 * r[j + 1] - 8.0 * r[j - 1] + r[j - 2]) / (12.0 * dv);
      } else if (j + 4 < n && j < 2) {
        o[j] = (-25.0 * r[j] + 48.0 * r[j + 1] - 36.0 * r[j + 2] + 16.0 * r[j + 3] -
                3.0 * r[j + 4]) / (12.0 * dv);
      } else {
        o[j] = (25.0 * r[j] - 48.0 * r[j - 1] + 36.0 * r[j - 2] - 16.0 * r[j - 3] +
                3.0 * r[j - 4]) / (12.0 * dv);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Radon inversion and the wave-equation inverse:
//   f = (1/2) dual(H d/dv f_hat),   h = (1/4pi) H(d/dv f0_hat + f1_hat),
// the real-transform versions of the complex 1/(2i) and 1/(4pi i) factors.
// ---------------------------------------------------------------------------

struct TransformGrids {
  LineGrid line;
  double radon_half_length = 12.0;
  int radon_n_s = 256;
};

struct RadonInversion {
  SampledLineFunction f_hat;     // Radon transform samples
  SampledLineFunction filtered;  // H d/dv f_hat
  PlaneFunction reconstruction;  // x -> (1/2) filtered-check(x)
  bool tail_warning = false;
};

inline RadonInversion invert_radon(const PlaneFunction& f, const TransformGrids& grids) {
  RadonGridResult rg = radon_grid(f, grids.line, grids.radon_half_length, grids.radon_n_s);
  SampledLineFunction filtered = hilbert_grid(dv_grid(rg.values));
  auto shared = std::make_shared<SampledLineFunction>(filtered);
  PlaneFunction rec = PlaneFunction::from_function(
      [shared](double x1, double x2) { return 0.5 * shared->dual_radon(x1, x2); });
  return {std::move(rg.values), std::move(filtered), std::move(rec), rg.tail_warning};
}

struct CauchyToH {
  SampledLineFunction h;  // real by construction
  bool tail_warning = false;
};

// h = (1/4pi) H(d/dv f0^ + f1^) sampled on the grid, from Cauchy data
// f0 = u(0,.), f1 = u_t(0,.).
inline CauchyToH cauchy_to_h(const PlaneFunction& f0, const PlaneFunction& f1,
                             const TransformGrids& grids) {
  RadonGridResult r0 = radon_grid(f0, grids.line, grids.radon_half_length, grids.radon_n_s);
  RadonGridResult r1 = radon_grid(f1, grids.line, grids.radon_half_length, grids.radon_n_s);
  SampledLineFunction sum = dv_grid(r0.values);
  for (int i = 0; i < grids.line.n_theta; ++i)
    for (int j = 0; j < grids.line.n_v; ++j) sum.at(i, j) += r1.values.at(i, j);
  SampledLineFunction h = hilbert_grid(sum);
  const double scale = 1.0 / (4.0 * kPi);
  for (int i = 0; i < grids.line.n_theta; ++i)
    for (int j = 0; j < grids.line.n_v; ++j) h.at(i, j) *= scale;
  return {std::move(h), r0.tail_warning || r1.tail_warning};
}

}  // namespace twave
