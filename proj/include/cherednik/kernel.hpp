#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "cutoff.hpp"
#include "eigenbasis.hpp"
#include "errors.hpp"
#include "exp_sum.hpp"
#include "quadrature.hpp"

namespace cherednik {

/// Default minimum |x - y| (mod 2 pi) for the closed boundary form.
inline constexpr double kDiagonalGuard = 1e-3;

enum class KernelForm { spectral_sum, boundary_closed };

struct KernelEvalConfig {
  int N = 0;
  double k = 0.0;
  KernelForm form = KernelForm::spectral_sum;
  double diagonal_guard = kDiagonalGuard;
};

/// |x - y| reduced to [0, pi].
inline double periodic_distance(double x, double y) {
  return std::abs(std::remainder(x - y, 2.0 * std::numbers::pi));
}

/// K_N(x,y) = sum_{|n| <= N} gamma_n^2 E_n(ix) E_n(-iy), the defining sum.
inline cplx kernel_spectral(const Basis& basis, double x, double y) {
  cplx s = 0.0;
  for (int n = -basis.N(); n <= basis.N(); ++n) {
    const auto& e = basis.at(n);
    s += e.gamma_sq() * evaluate(e.poly, x) * evaluate(e.poly, -y);
  }
  return s;
}

/// N(x,y) = e^{-i(x-y)} E(ix) E(-iy) - E(-ix) E(iy) with E = E_{N+1}.
inline cplx numerator_N(const Basis& basis, double x, double y) {
  const TrigPoly& e = basis.poly(basis.N() + 1);
  return std::polar(1.0, -(x - y)) * evaluate(e, x) * evaluate(e, -y) - evaluate(e, -x) * evaluate(e, y);
}

/// Exact partial derivative of N(x,y) in y.
inline cplx numerator_N_dy(const Basis& basis, double x, double y) {
  const TrigPoly& e = basis.poly(basis.N() + 1);
  const TrigPoly de = derivative(e);
  const cplx phase = std::polar(1.0, -(x - y));
  const cplx ex = evaluate(e, x), emx = evaluate(e, -x);
  // d/dy E(-iy) = -E'(-y), d/dy E(iy) = E'(y) with E' the t-derivative.
  return cplx(0.0, 1.0) * phase * ex * evaluate(e, -y) - phase * ex * evaluate(de, -y) -
         emx * evaluate(de, y);
}

/// The closed boundary form gamma_{N+1}^2 N(x,y) / (1 - e^{-i(x-y)}).
inline cplx kernel_boundary(const Basis& basis, double x, double y, double guard = kDiagonalGuard) {
  if (!(guard > 0.0)) throw invalid_input("kernel_boundary: diagonal guard must be positive");
  if (periodic_distance(x, y) < guard) {
    std::ostringstream os;
    os << "kernel_boundary: |x - y| mod 2pi = " << periodic_distance(x, y) << " below guard " << guard;
    throw invalid_input(os.str());
  }
  const double g2 = basis.gamma_sq(basis.N() + 1);
  return g2 * numerator_N(basis, x, y) / (1.0 - std::polar(1.0, -(x - y)));
}

inline cplx evaluate_kernel(const Basis& basis, double x, double y, const KernelEvalConfig& cfg) {
  return cfg.form == KernelForm::spectral_sum ? kernel_spectral(basis, x, y)
                                              : kernel_boundary(basis, x, y, cfg.diagonal_guard);
}

/// C_N with N(x,y) = (x - y) C_N(x,y), off the diagonal: N / (x - y).
inline cplx c_factor_quotient(const Basis& basis, double x, double y) {
  if (x == y) throw invalid_input("c_factor_quotient: undefined on the diagonal");
  return numerator_N(basis, x, y) / (x - y);
}

/// C_N near the diagonal: -int_0^1 dN/dy(x, x + s(y - x)) ds by the fixed
/// 33-point Gauss-Legendre rule (exact up to rounding for the trigonometric
/// integrands that arise at N <= 64).
inline cplx c_factor_integral(const Basis& basis, double x, double y) {
  const auto& rule = gauss_legendre(33);
  auto f = [&](double s) { return numerator_N_dy(basis, x, x + s * (y - x)); };
  return -rule.apply(f, 0.0, 1.0);
}

inline cplx c_factor(const Basis& basis, double x, double y, double guard = kDiagonalGuard) {
  return std::abs(x - y) > guard ? c_factor_quotient(basis, x, y) : c_factor_integral(basis, x, y);
}

/// A_N(x) = C_N(x, x) = -dN/dy(x, x).
inline cplx a_factor(const Basis& basis, double x) { return -numerator_N_dy(basis, x, x); }

/// Remainder of the local decomposition: R_N = K_N - (gamma_{N+1}^2 / i) A_N(x).
inline cplx r_remainder(const Basis& basis, double x, double y) {
  const double g2 = basis.gamma_sq(basis.N() + 1);
  return kernel_spectral(basis, x, y) - g2 / cplx(0.0, 1.0) * a_factor(basis, x);
}

/// Orthogonal projection of f onto span{E_n(i.) : |n| <= N}.
inline TrigPoly reconstruct(const TrigPoly& f, const Basis& basis) {
  const int need = f.max_abs_frequency() + basis.N();
  const MomentTable wider = basis.table().covers(need) ? MomentTable() : MomentTable(basis.k(), need);
  const MomentTable& table = basis.table().covers(need) ? basis.table() : wider;
  TrigPoly out;
  for (int n = -basis.N(); n <= basis.N(); ++n) {
    const auto& e = basis.at(n);
    out += e.poly * (e.gamma_sq() * inner_product(f, e.poly, table));
  }
  return out;
}

struct DiscrepancyPoint {
  double x = 0.0, y = 0.0;
  cplx spectral, boundary;
  double abs_diff = 0.0;
};

struct DiscrepancyReport {
  int N = 0;
  double k = 0.0;
  double guard = kDiagonalGuard;
  std::size_t requested_points = 0;
  std::size_t evaluated_points = 0;
  double max_abs_difference = 0.0;
  double argmax_x = 0.0, argmax_y = 0.0;
  std::vector<DiscrepancyPoint> points;
};

/// Uniform (nx x ny) grid on [-pi, pi]^2, endpoints included, row-major in x.
inline std::vector<std::pair<double, double>> uniform_grid(int nx, int ny) {
  if (nx < 1 || ny < 1) throw invalid_input("uniform_grid: dimensions must be positive");
  const double pi = std::numbers::pi;
  auto node = [&](int i, int n) { return n == 1 ? 0.0 : -pi + 2.0 * pi * i / (n - 1); };
  std::vector<std::pair<double, double>> g;
  g.reserve(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) g.emplace_back(node(i, nx), node(j, ny));
  return g;
}

/// Evaluates both kernel forms at every guarded grid point and records the
/// largest discrepancy. Points inside the diagonal guard are skipped.
inline DiscrepancyReport compare_forms(const Basis& basis, const std::vector<std::pair<double, double>>& grid,
                                       double guard = kDiagonalGuard, bool keep_points = false) {
  if (grid.empty()) throw invalid_input("compare_forms: empty grid");
  DiscrepancyReport r;
  r.N = basis.N();
  r.k = basis.k();
  r.guard = guard;
  r.requested_points = grid.size();
  bool first = true;
  for (const auto& [x, y] : grid) {
    if (periodic_distance(x, y) < guard) continue;
    DiscrepancyPoint p{x, y, kernel_spectral(basis, x, y), kernel_boundary(basis, x, y, guard), 0.0};
    p.abs_diff = std::abs(p.spectral - p.boundary);
    ++r.evaluated_points;
    if (first || p.abs_diff > r.max_abs_difference) {
      r.max_abs_difference = p.abs_diff;
      r.argmax_x = x;
      r.argmax_y = y;
      first = false;
    }
    if (keep_points) r.points.push_back(p);
  }
  if (r.evaluated_points == 0) throw invalid_input("compare_forms: every grid point lies inside the diagonal guard");
  return r;
}

struct LocalDecomposition {
  int N = 0;
  double k = 0.0;
  double delta_request = 0.0;
  double delta = 0.0;
  int shrink_steps = 0;
  bool established = false;
  double gamma_sq = 0.0;
  std::vector<std::pair<double, cplx>> A_samples;
  double A_inf = 0.0;
  double A_sup = 0.0;
  int patch_points = 0;
  double R_bound = 0.0;
  /// max |K_N - rank-one - R_N| over the patch; zero up to rounding.
  double identity_defect = 0.0;
  /// inf |1 - e^{-i(x-y)}| over grid points where 1 - chi(x)chi(y) > 0.
  double remainder_denominator_inf = 0.0;
};

inline constexpr int kAGridPoints = 1025;
inline constexpr int kMaxDeltaHalvings = 20;

/// Samples A_N on [-delta, delta], halving delta until inf |A_N| > 0 on the
/// grid, then tabulates R_N on the patch [-delta, delta]^2.
inline LocalDecomposition local_decompose(const Basis& basis, double delta_request, int patch_points = 65) {
  const double pi = std::numbers::pi;
  if (!(delta_request > 0.0 && delta_request < pi / 4))
    throw invalid_input("local_decompose: delta must lie in (0, pi/4)");
  if (patch_points < 2) throw invalid_input("local_decompose: patch needs at least 2 points per side");

  LocalDecomposition d;
  d.N = basis.N();
  d.k = basis.k();
  d.delta_request = delta_request;
  d.gamma_sq = basis.gamma_sq(basis.N() + 1);
  d.patch_points = patch_points;

  double delta = delta_request;
  for (int step = 0; step <= kMaxDeltaHalvings; ++step) {
    d.A_samples.clear();
    double inf = std::numeric_limits<double>::infinity(), sup = 0.0;
    for (int i = 0; i < kAGridPoints; ++i) {
      const double x = -delta + 2.0 * delta * i / (kAGridPoints - 1);
      const cplx a = a_factor(basis, x);
      d.A_samples.emplace_back(x, a);
      inf = std::min(inf, std::abs(a));
      sup = std::max(sup, std::abs(a));
    }
    d.delta = delta;
    d.shrink_steps = step;
    d.A_inf = inf;
    d.A_sup = sup;
    // Relative floor: values at rounding level of sup |A| count as zero.
    if (inf > 1e-12 * std::max(1.0, sup)) {
      d.established = true;
      break;
    }
    delta *= 0.5;
  }
  if (!d.established) return d;

  const cplx rank_one_scale = d.gamma_sq / cplx(0.0, 1.0);
  for (int i = 0; i < patch_points; ++i) {
    const double x = -d.delta + 2.0 * d.delta * i / (patch_points - 1);
    const cplx rank_one = rank_one_scale * a_factor(basis, x);
    for (int j = 0; j < patch_points; ++j) {
      const double y = -d.delta + 2.0 * d.delta * j / (patch_points - 1);
      const cplx K = kernel_spectral(basis, x, y);
      const cplx R = r_remainder(basis, x, y);
      d.R_bound = std::max(d.R_bound, std::abs(R));
      d.identity_defect = std::max(d.identity_defect, std::abs(K - rank_one - R));
    }
  }

  const Cutoff chi(d.delta);
  const int grid = 129;
  d.remainder_denominator_inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double x = -pi + 2.0 * pi * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double y = -pi + 2.0 * pi * j / (grid - 1);
      if (1.0 - chi(x) * chi(y) <= 0.0) continue;
      d.remainder_denominator_inf = std::min(d.remainder_denominator_inf, std::abs(1.0 - std::polar(1.0, -(x - y))));
    }
  }
  return d;
}

} // namespace cherednik
