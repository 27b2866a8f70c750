#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <sstream>
#include <type_traits>
#include <vector>

#include "errors.hpp"

namespace cherednik {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the three-term recurrence.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int n) : nodes(n), weights(n) {
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-17) break;
      }
      // recompute derivative at the converged node
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes[i] = -x;
      nodes[n - 1 - i] = x;
      weights[i] = weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
  }

  /// Applies the rule to f on [a, b].
  template <class F>
  auto apply(F&& f, double a, double b) const {
    using R = std::invoke_result_t<F&, double>;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    R s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
    return s * half;
  }
};

inline const GaussLegendreRule& gauss_legendre(int n) {
  // Rules used by the library; constructed once, immutable afterwards.
  static const GaussLegendreRule g10(10), g20(20), g33(33);
  switch (n) {
  case 10: return g10;
  case 20: return g20;
  case 33: return g33;
  default: break;
  }
  throw invalid_input("gauss_legendre: unsupported order " + std::to_string(n));
}

template <class T>
struct QuadResult {
  T value{};
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = true;
};

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  /// Maximum bisection depth of any single panel.
  int max_depth = 60;
  /// Maximum number of bisections over the whole integral.
  int max_subdivisions = 1 << 20;
};

namespace detail {

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// G20 value with |G20 - G10| as error. Differences at the rounding level of
// int |f| over the panel are not resolvable and count as zero.
template <class F>
auto panel_estimate(F& f, double a, double b) {
  using R = std::invoke_result_t<F&, double>;
  const auto& g20 = gauss_legendre(20);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  R fine{};
  double mass = 0.0;
  for (std::size_t i = 0; i < g20.nodes.size(); ++i) {
    const R v = f(mid + half * g20.nodes[i]);
    fine += g20.weights[i] * v;
    mass += g20.weights[i] * static_cast<double>(std::abs(v));
  }
  fine *= half;
  mass *= std::abs(half);
  const auto coarse = gauss_legendre(10).apply(f, a, b);
  double err = static_cast<double>(std::abs(fine - coarse));
  if (err <= 50.0 * std::numeric_limits<double>::epsilon() * mass) err = 0.0;
  return std::pair{fine, err};
}

} // namespace detail

/// Globally adaptive Gauss-Legendre quadrature over the panels delimited by
/// `breakpoints` (ascending, at least two entries). The panel with the
/// largest error estimate is bisected until the summed estimate falls below
/// max(abs_tol, rel_tol * |value|). Never throws on non-convergence; the
/// caller inspects `converged`.
template <class F>
auto integrate_panels(F&& f, std::span<const double> breakpoints, const QuadOptions& opt = {}) {
  using T = std::invoke_result_t<F&, double>;
  if (breakpoints.size() < 2) throw invalid_input("integrate: need at least two breakpoints");

  std::priority_queue<detail::Panel<T>> heap;
  T total{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i], b = breakpoints[i + 1];
    if (!(b > a)) {
      if (b == a) continue;
      throw invalid_input("integrate: breakpoints must be ascending");
    }
    auto [v, e] = detail::panel_estimate(f, a, b);
    heap.push({a, b, v, e, 0});
    total += v;
    err += e;
  }

  QuadResult<T> res;
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * static_cast<double>(std::abs(total))); };
  while (!heap.empty() && err > target()) {
    if (res.subdivisions >= opt.max_subdivisions || heap.top().depth >= opt.max_depth) {
      res.converged = false;
      break;
    }
    auto p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    auto [vl, el] = detail::panel_estimate(f, p.a, m);
    auto [vr, er] = detail::panel_estimate(f, m, p.b);
    total += (vl + vr) - p.value;
    err += (el + er) - p.error;
    heap.push({p.a, m, vl, el, p.depth + 1});
    heap.push({m, p.b, vr, er, p.depth + 1});
    ++res.subdivisions;
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  T sum{};
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.abs_error_estimate = esum;
  return res;
}

template <class F>
auto integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  const double bp[2] = {a, b};
  return integrate_panels(std::forward<F>(f), std::span<const double>(bp, 2), opt);
}

/// Same as integrate_panels but raises numerical_failure when the depth or
/// subdivision cap is hit.
template <class F>
auto integrate_or_throw(F&& f, std::span<const double> breakpoints, const QuadOptions& opt,
                        const char* what) {
  auto r = integrate_panels(std::forward<F>(f), breakpoints, opt);
  if (!r.converged) {
    std::ostringstream os;
    os << what << ": adaptive quadrature did not converge (error estimate "
       << r.abs_error_estimate << " after " << r.subdivisions << " subdivisions)";
    throw numerical_failure(os.str(), static_cast<double>(std::real(r.value)));
  }
  return r;
}

} // namespace cherednik
