#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cutoff.hpp"
#include "eigenbasis.hpp"
#include "errors.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"

namespace cherednik {

inline constexpr double kDefaultDelta = std::numbers::pi / 8;

enum class WeightFamily { power, power_log, example_a };

/// Mirror-degenerate weight on 0 < |y| <= delta:
///   power      |y|^alpha
///   power_log  |y|^alpha (log(e/|y|))^{-beta}
///   example_a  |y|^alpha (1 + |sin(|y|^{-gamma})|) (log(e/|y|))^{-beta}
struct WeightSpec {
  WeightFamily family = WeightFamily::power;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;

  static WeightSpec power(double alpha) { return {WeightFamily::power, alpha, 0.0, 0.0}; }
  static WeightSpec power_log(double alpha, double beta) { return {WeightFamily::power_log, alpha, beta, 0.0}; }
  static WeightSpec example_a(double alpha, double beta, double gamma) {
    if (!(gamma > 0.0)) throw invalid_input("example_a weight requires gamma > 0");
    return {WeightFamily::example_a, alpha, beta, gamma};
  }

  bool has_log() const { return family != WeightFamily::power; }
  bool oscillates() const { return family == WeightFamily::example_a; }
};

inline std::string_view to_string(WeightFamily f) {
  switch (f) {
  case WeightFamily::power: return "power";
  case WeightFamily::power_log: return "powerlog";
  case WeightFamily::example_a: return "examplea";
  }
  return "?";
}

namespace detail {

inline void check_weight_argument(const WeightSpec& spec, double y) {
  const double ay = std::abs(y);
  if (!(ay > 0.0)) throw invalid_input("weight evaluated at the mirror y = 0");
  if (spec.has_log() && !(ay < std::numbers::e))
    throw invalid_input("logarithmic weight factor requires |y| < e");
}

} // namespace detail

/// w(y)^e, evaluated factor by factor so that large exponents of small |y|
/// do not pass through an overflowing intermediate.
inline double weight_pow(const WeightSpec& spec, double y, double e) {
  detail::check_weight_argument(spec, y);
  const double ay = std::abs(y);
  double v = std::pow(ay, spec.alpha * e);
  if (spec.oscillates()) v *= std::pow(1.0 + std::abs(std::sin(std::pow(ay, -spec.gamma))), e);
  if (spec.has_log() && spec.beta != 0.0) v *= std::pow(std::log(std::numbers::e / ay), -spec.beta * e);
  return v;
}

inline double weight_eval(const WeightSpec& spec, double y) { return weight_pow(spec, y, 1.0); }

/// Mean over one period of t -> (1 + |sin t|)^e.
inline double oscillation_mean(double e) {
  const double pi = std::numbers::pi;
  QuadOptions opt;
  opt.abs_tol = 1e-15;
  auto r = integrate([&](double t) { return std::pow(1.0 + std::sin(t), e); }, 0.0, pi, opt);
  return r.value / pi;
}

struct MirrorOptions {
  /// Relative accuracy requested of every shell integral.
  double tol = 1e-12;
  int max_shells = 200;
  /// Above this many oscillation periods in one shell the oscillating factor
  /// is replaced by its period mean.
  long oscillation_panel_cap = 1L << 16;
};

enum class ShellMode { smooth, resolved, averaged };

template <class T>
struct ShellIntegral {
  T value{};
  double error = 0.0;
  ShellMode mode = ShellMode::smooth;
  long panels = 1;
};

/// int_a^b g(y) w(y)^e dy for 0 < a < b, splitting at the kinks of
/// |sin(y^{-gamma})| when the weight oscillates.
template <class G>
auto integrate_shell(G&& g, const WeightSpec& spec, double e, double a, double b, double abs_tol,
                     const MirrorOptions& opt = {}) {
  using T = std::invoke_result_t<G&, double>;
  ShellIntegral<T> out;
  QuadOptions q;
  q.abs_tol = abs_tol;
  q.rel_tol = opt.tol;
  q.max_depth = 50;

  auto full = [&](double y) { return g(y) * weight_pow(spec, y, e); };
  if (!spec.oscillates()) {
    auto r = integrate(full, a, b, q);
    out.value = r.value;
    out.error = r.abs_error_estimate;
    if (!r.converged) throw numerical_failure("shell quadrature did not converge", std::abs(r.value));
    return out;
  }

  const double pi = std::numbers::pi;
  const double t_hi = std::pow(a, -spec.gamma), t_lo = std::pow(b, -spec.gamma);
  const double k_first = std::ceil(t_lo / pi), k_last = std::floor(t_hi / pi);
  const double periods = std::max(0.0, k_last - k_first + 1.0);
  if (periods <= static_cast<double>(opt.oscillation_panel_cap)) {
    // Integrate in t = y^{-gamma}: sin(t) is then free of the rounding that
    // y^{-gamma} picks up for small y, and the kinks sit exactly at k pi.
    const double inv_g = 1.0 / spec.gamma;
    auto in_t = [&](double t) {
      const double y = std::pow(t, -inv_g);
      double v = std::pow(y, spec.alpha * e) * std::pow(1.0 + std::abs(std::sin(t)), e);
      if (spec.beta != 0.0) v *= std::pow(std::log(std::numbers::e / y), -spec.beta * e);
      return g(y) * (v * (y * inv_g / t));
    };
    std::vector<double> bp;
    bp.reserve(static_cast<std::size_t>(periods) + 2);
    bp.push_back(t_lo);
    for (double kk = k_first; kk <= k_last; kk += 1.0)
      if (kk * pi > bp.back() && kk * pi < t_hi) bp.push_back(kk * pi);
    bp.push_back(t_hi);
    auto r = integrate_panels(in_t, std::span<const double>(bp), q);
    if (!r.converged) throw numerical_failure("oscillatory shell quadrature did not converge", std::abs(r.value));
    out.value = r.value;
    out.error = r.abs_error_estimate;
    out.mode = ShellMode::resolved;
    out.panels = static_cast<long>(bp.size()) - 1;
    return out;
  }

  // Many periods: integrate the slowly varying part against the period mean.
  WeightSpec slow = spec;
  slow.family = WeightFamily::power_log;
  const double mean = oscillation_mean(e);
  auto averaged = [&](double y) { return g(y) * (weight_pow(slow, y, e) * mean); };
  auto r = integrate(averaged, a, b, q);
  if (!r.converged) throw numerical_failure("averaged shell quadrature did not converge", std::abs(r.value));
  out.value = r.value;
  out.error = r.abs_error_estimate;
  out.mode = ShellMode::averaged;
  out.panels = static_cast<long>(periods);
  return out;
}

template <class T>
struct MirrorIntegral {
  T value{};
  std::vector<T> shells;
  T tail{};
  int shells_used = 0;
  int averaged_shells = 0;
};

/// int_{|y| <= delta} g(y) w(y)^e dy summed over dyadic shells
/// 2^{-j-1} delta <= |y| <= 2^{-j} delta, with a geometric tail estimate for
/// the innermost remainder.
template <class G>
auto mirror_integral(G&& g, const WeightSpec& spec, double e, double delta, const MirrorOptions& opt = {}) {
  using T = std::invoke_result_t<G&, double>;
  MirrorIntegral<T> out;
  auto both_sides = [&](double y) { return g(y) + g(-y); };

  // Magnitude hint for absolute tolerances when a shell integral cancels.
  double scale = 0.0;
  {
    const auto& rule = gauss_legendre(20);
    auto mag = [&](double y) { return std::abs(both_sides(y)) * weight_pow(spec, y, e); };
    scale = rule.apply(mag, 0.5 * delta, delta);
  }

  T sum{};
  for (int j = 0; j < opt.max_shells; ++j) {
    const double b = std::ldexp(delta, -j), a = 0.5 * b;
    const double abs_tol = std::max(1e-300, opt.tol * 1e-2 * std::max(scale, static_cast<double>(std::abs(sum))));
    auto s = integrate_shell(both_sides, spec, e, a, b, abs_tol, opt);
    out.shells.push_back(s.value);
    if (s.mode == ShellMode::averaged) ++out.averaged_shells;
    sum += s.value;
    out.shells_used = j + 1;
    if (j >= 2 && std::abs(s.value) <= 1e-17 * std::abs(sum)) break;
  }
  const std::size_t n = out.shells.size();
  if (n >= 2 && std::abs(out.shells[n - 2]) > 0.0) {
    const double r = std::abs(out.shells[n - 1]) / std::abs(out.shells[n - 2]);
    if (r < 1.0) out.tail = out.shells[n - 1] * (r / (1.0 - r));
  }
  out.value = sum + out.tail;
  return out;
}

enum class Classification { finite, divergent, inconclusive };

inline std::string_view to_string(Classification c) {
  switch (c) {
  case Classification::finite: return "finite";
  case Classification::divergent: return "divergent";
  case Classification::inconclusive: return "inconclusive";
  }
  return "?";
}

inline constexpr int kMaxCriterionShells = 48;
inline constexpr double kRatioBand = 1e-3;

struct CriterionReport {
  WeightSpec spec;
  double p = 2.0;
  double delta = kDefaultDelta;
  /// Exponent applied to the weight: -1/(p-1).
  double exponent = -1.0;
  std::vector<double> shell_values;
  double shell_ratio = 0.0;
  Classification classification = Classification::inconclusive;
  /// Partial shell sum; always a lower bound.
  double lower_bound = 0.0;
  /// Partial sum plus geometric tail; infinite unless finite.
  double upper_bound = std::numeric_limits<double>::infinity();
  /// Best estimate of the integral (infinite when divergent or inconclusive).
  double integral_estimate = std::numeric_limits<double>::infinity();
  bool terminated_by_underflow = false;
  int averaged_shells = 0;
};

namespace detail {

/// Geometric ratio fitted by least squares to log s_j over the second half.
inline double fitted_ratio(std::span<const double> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0.0;
  const std::size_t start = n / 2 >= n - 1 ? n - 2 : n / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (std::size_t j = start; j < n; ++j) {
    const double y = std::log(s[j]);
    sx += j, sy += y, sxx += double(j) * j, sxy += j * y;
    m += 1;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return std::exp(slope);
}

inline void check_p_delta(double p, double delta) {
  if (!(p > 1.0) || !std::isfinite(p)) throw invalid_input("exponent p must satisfy 1 < p < infinity");
  if (!(delta > 0.0 && delta < std::numbers::pi / 4)) throw invalid_input("delta must lie in (0, pi/4)");
}

struct ShellSeries {
  std::vector<double> values;
  bool underflow = false;
  int averaged = 0;
};

inline ShellSeries weight_shells(const WeightSpec& spec, double e, double delta, int max_shells,
                                 const MirrorOptions& opt) {
  ShellSeries s;
  auto one = [](double) { return 2.0; }; // both sides of the mirror
  for (int j = 0; j <= max_shells; ++j) {
    const double b = std::ldexp(delta, -j), a = 0.5 * b;
    ShellIntegral<double> r;
    try {
      r = integrate_shell(one, spec, e, a, b, 1e-300, opt);
    } catch (const numerical_failure& ex) {
      std::ostringstream os;
      os << "shell " << j << " [" << a << ", " << b << "]: " << ex.what();
      throw numerical_failure(os.str(), ex.partial_value());
    }
    if (r.mode == ShellMode::averaged) ++s.averaged;
    s.values.push_back(r.value);
    if (r.value < 1e-16) {
      s.underflow = true;
      break;
    }
  }
  return s;
}

} // namespace detail

/// Classifies finiteness of int_{|y| <= delta} w^{-1/(p-1)} dy from the
/// decay of its dyadic shell integrals.
inline CriterionReport criterion_integral(const WeightSpec& spec, double p, double delta = kDefaultDelta,
                                          const MirrorOptions& opt = {}) {
  detail::check_p_delta(p, delta);
  CriterionReport r;
  r.spec = spec;
  r.p = p;
  r.delta = delta;
  r.exponent = -1.0 / (p - 1.0);
  auto series = detail::weight_shells(spec, r.exponent, delta, kMaxCriterionShells, opt);
  r.shell_values = std::move(series.values);
  r.terminated_by_underflow = series.underflow;
  r.averaged_shells = series.averaged;
  for (double v : r.shell_values) r.lower_bound += v;
  r.shell_ratio = detail::fitted_ratio(r.shell_values);

  if (r.terminated_by_underflow || r.shell_ratio < 1.0 - kRatioBand)
    r.classification = Classification::finite;
  else if (r.shell_ratio > 1.0 + kRatioBand)
    r.classification = Classification::divergent;
  else
    r.classification = Classification::inconclusive;

  if (r.classification == Classification::finite) {
    const double last = r.shell_values.back();
    const double q = std::min(r.shell_ratio, 1.0 - kRatioBand);
    r.upper_bound = r.lower_bound + (r.terminated_by_underflow ? 0.0 : last * q / (1.0 - q));
    r.integral_estimate = r.upper_bound;
  }
  return r;
}

enum class Pairing { lebesgue, weighted_measure };

inline std::string_view to_string(Pairing p) { return p == Pairing::lebesgue ? "lebesgue" : "weighted_measure"; }

struct DualNormReport {
  Pairing pairing = Pairing::lebesgue;
  double p = 2.0;
  double delta = kDefaultDelta;
  Classification classification = Classification::inconclusive;
  /// Closed-form dual norm; infinite when the defining integral diverges.
  double closed_form_value = std::numeric_limits<double>::infinity();
  std::vector<double> epsilons;
  std::vector<double> extremizer_lower_bounds;
};

/// Norm of f -> int f dy (lebesgue) or f -> int f w dy (weighted_measure) on
/// L^p(w) over |y| <= delta, with lower bounds from truncated extremizers.
inline DualNormReport dual_norm(const WeightSpec& spec, double p, double delta, Pairing pairing,
                                const MirrorOptions& opt = {}) {
  detail::check_p_delta(p, delta);
  DualNormReport r;
  r.pairing = pairing;
  r.p = p;
  r.delta = delta;
  const double q = 1.0 / (p - 1.0);
  const double inv_pprime = 1.0 - 1.0 / p;

  // Extremizer f_eps: w^{-q} (lebesgue) or 1 (weighted) on eps < |y| <= delta.
  // Pairing value and L^p(w) norm are integrated separately.
  const double pair_exp = pairing == Pairing::lebesgue ? -q : 1.0;
  const double norm_exp = pairing == Pairing::lebesgue ? 1.0 - p * q : 1.0;
  auto pair_series = detail::weight_shells(spec, pair_exp, delta, kMaxCriterionShells, opt);
  auto norm_series = detail::weight_shells(spec, norm_exp, delta, kMaxCriterionShells, opt);
  const std::size_t n = std::min(pair_series.values.size(), norm_series.values.size());

  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    num += pair_series.values[j];
    den += norm_series.values[j];
    // Stop once a shell no longer moves the partial sums above rounding.
    if (j > 0 && pair_series.values[j] <= 1e-13 * num) break;
    r.epsilons.push_back(std::ldexp(delta, -static_cast<int>(j) - 1));
    r.extremizer_lower_bounds.push_back(num / std::pow(den, 1.0 / p));
  }

  double total = 0.0;
  for (double v : pair_series.values) total += v;
  const double ratio = detail::fitted_ratio(pair_series.values);
  if (pair_series.underflow || ratio < 1.0 - kRatioBand) {
    r.classification = Classification::finite;
    const double qq = std::min(ratio, 1.0 - kRatioBand);
    if (!pair_series.underflow) total += pair_series.values.back() * qq / (1.0 - qq);
    r.closed_form_value = std::pow(total, inv_pprime);
  } else {
    r.classification = ratio > 1.0 + kRatioBand ? Classification::divergent : Classification::inconclusive;
  }
  return r;
}

using SampledFunction = std::function<cplx(double)>;

/// Lambda f = int_{|y| <= delta} f(y) w(y) dy.
inline cplx lambda_apply(const SampledFunction& f, const WeightSpec& spec, double delta,
                         const MirrorOptions& opt = {}) {
  if (!(delta > 0.0)) throw invalid_input("lambda_apply: delta must be positive");
  return mirror_integral([&](double y) { return f(y); }, spec, 1.0, delta, opt).value;
}

struct DecomposedApplication {
  double delta = 0.0;
  double gamma_sq = 0.0;
  cplx lambda;
  std::vector<double> x;
  /// Localized Tf(x) = int_{|y| <= delta} K_N(x,y) f w dy.
  std::vector<cplx> Tf;
  /// Tf over the full circle, with w frozen at w(+-delta) beyond the patch.
  std::vector<cplx> Tf_full;
  std::vector<cplx> T_loc_f;
  std::vector<cplx> T_rem_f;
  std::vector<cplx> Sf;
  std::vector<cplx> A;
  /// (i / gamma^2) (Tf - Sf) / A_N at each x.
  std::vector<cplx> rhs;
  double identity_residual = 0.0;
  double x_independence_residual = 0.0;
  /// max |Tf_full - T_loc_f - T_rem_f|.
  double decomposition_residual = 0.0;
  double tolerance() const { return 1e-7 * (1.0 + std::abs(lambda)); }
};

/// Applies T f(x) = int K_N(x,y) f(y) w(y) dy through its decomposition
/// T = (gamma^2 / i) M_A Lambda + S on the mirror patch and checks the
/// pointwise identity Lambda f = (i / gamma^2)(Tf - Sf)(x) / A_N(x).
inline DecomposedApplication apply_T_decomposed(const SampledFunction& f, const Basis& basis, const WeightSpec& spec,
                                                const LocalDecomposition& local, int x_points = 17,
                                                const MirrorOptions& opt = {}) {
  if (!local.established) throw invalid_input("apply_T_decomposed: inf |A_N| > 0 was not established");
  if (local.N != basis.N() || local.k != basis.k())
    throw invalid_input("apply_T_decomposed: local decomposition does not match the basis");
  if (x_points < 1) throw invalid_input("apply_T_decomposed: need at least one x point");

  const double pi = std::numbers::pi;
  const double delta = local.delta;
  const Cutoff chi(delta);
  DecomposedApplication out;
  out.delta = delta;
  out.gamma_sq = local.gamma_sq;
  out.lambda = lambda_apply(f, spec, delta, opt);
  const cplx i_unit(0.0, 1.0);

  const double w_edge = weight_eval(spec, delta);
  QuadOptions outer_opt;
  outer_opt.abs_tol = opt.tol * 1e-2;
  outer_opt.rel_tol = opt.tol;
  const double outer_bp_left[] = {-pi, -delta};
  const double outer_bp_right[] = {delta, pi};

  for (int i = 0; i < x_points; ++i) {
    const double x = x_points == 1 ? 0.0 : -delta + 2.0 * delta * i / (x_points - 1);
    const double chi_x = chi(x);
    auto kf = [&](double y) { return kernel_spectral(basis, x, y) * f(y); };

    const cplx Tf = mirror_integral(kf, spec, 1.0, delta, opt).value;
    const cplx Sf = mirror_integral([&](double y) { return r_remainder(basis, x, y) * f(y); }, spec, 1.0, delta, opt).value;
    const cplx T_loc = chi_x * mirror_integral([&](double y) { return chi(y) * kf(y); }, spec, 1.0, delta, opt).value;

    auto outer = [&](auto&& g) {
      auto frozen = [&](double y) { return g(y) * w_edge; };
      return integrate_panels(frozen, std::span<const double>(outer_bp_left), outer_opt).value +
             integrate_panels(frozen, std::span<const double>(outer_bp_right), outer_opt).value;
    };
    auto rem = [&](double y) { return (1.0 - chi_x * chi(y)) * kf(y); };
    const cplx T_rem = mirror_integral(rem, spec, 1.0, delta, opt).value + outer(rem);
    const cplx T_full = Tf + outer(kf);

    const cplx a = a_factor(basis, x);
    const cplx rhs = i_unit / local.gamma_sq * (Tf - Sf) / a;

    out.x.push_back(x);
    out.Tf.push_back(Tf);
    out.Tf_full.push_back(T_full);
    out.T_loc_f.push_back(T_loc);
    out.T_rem_f.push_back(T_rem);
    out.Sf.push_back(Sf);
    out.A.push_back(a);
    out.rhs.push_back(rhs);
    out.identity_residual = std::max(out.identity_residual, std::abs(out.lambda - rhs));
    out.decomposition_residual = std::max(out.decomposition_residual, std::abs(T_full - T_loc - T_rem));
  }
  for (std::size_t a = 0; a < out.rhs.size(); ++a)
    for (std::size_t b = a + 1; b < out.rhs.size(); ++b)
      out.x_independence_residual = std::max(out.x_independence_residual, std::abs(out.rhs[a] - out.rhs[b]));
  return out;
}

struct EnvelopeCheck {
  double c1 = 0.0, c2 = 1.0;
  /// Worst signed relative violation of c1 env <= w^{-1/(p-1)} <= c2 env.
  double max_violation = -std::numeric_limits<double>::infinity();
  double worst_y = 0.0;
  std::size_t points = 0;
};

/// Checks the two-sided envelope of w^{-1/(p-1)} for the example_a weight,
/// env(y) = |y|^{-alpha/(p-1)} (log(e/|y|))^{beta/(p-1)}, c1 = 2^{-1/(p-1)}, c2 = 1.
inline EnvelopeCheck envelope_check_example_a(double alpha, double beta, double gamma, double p,
                                              std::span<const double> samples) {
  if (!(p > 1.0)) throw invalid_input("envelope_check_example_a: p must exceed 1");
  const auto spec = WeightSpec::example_a(alpha, beta, gamma);
  const double q = 1.0 / (p - 1.0);
  EnvelopeCheck c;
  c.c1 = std::pow(2.0, -q);
  c.c2 = 1.0;
  for (double y : samples) {
    detail::check_weight_argument(spec, y);
    const double ay = std::abs(y);
    // Same association for all three products so rounding cannot reorder them.
    const double power = std::pow(ay, -spec.alpha * q);
    const double logf = spec.beta != 0.0 ? std::pow(std::log(std::numbers::e / ay), spec.beta * q) : 1.0;
    const double osc = std::pow(1.0 + std::abs(std::sin(std::pow(ay, -gamma))), -q);
    const double wq = (power * osc) * logf;
    const double lower = (power * c.c1) * logf;
    const double upper = (power * c.c2) * logf;
    const double env = power * logf;
    const double v = std::max(lower - wq, wq - upper) / env;
    if (v > c.max_violation) c.max_violation = v, c.worst_y = y;
    ++c.points;
  }
  return c;
}

/// n points log-spaced on [lo, hi].
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2) throw invalid_input("log_spaced: need 0 < lo < hi and n >= 2");
  std::vector<double> v(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(a + (b - a) * i / (n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

struct ScanRow {
  double alpha = 0.0;
  Classification classification = Classification::inconclusive;
  /// Integral estimate when finite, otherwise the partial-sum lower bound.
  double integral_or_bound = 0.0;
};

struct ThresholdScan {
  double p = 2.0;
  double delta = kDefaultDelta;
  double alpha_star = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::vector<ScanRow> rows;
  double bracket_width() const { return bracket_hi - bracket_lo; }
};

/// Bisects the finite/divergent transition of the criterion over power weights.
inline ThresholdScan threshold_scan(double p, double delta, double alpha_min, double alpha_max, int steps = 20,
                                    const MirrorOptions& opt = {}) {
  detail::check_p_delta(p, delta);
  if (!(alpha_min < alpha_max)) throw invalid_input("threshold_scan: alpha_min must be below alpha_max");
  if (steps < 0) throw invalid_input("threshold_scan: steps must be >= 0");
  ThresholdScan s;
  s.p = p;
  s.delta = delta;
  auto probe = [&](double alpha) {
    const auto r = criterion_integral(WeightSpec::power(alpha), p, delta, opt);
    s.rows.push_back({alpha, r.classification,
                      r.classification == Classification::finite ? r.integral_estimate : r.lower_bound});
    return r.classification;
  };
  if (probe(alpha_min) != Classification::finite || probe(alpha_max) != Classification::divergent)
    throw invalid_input("threshold_scan: alpha range does not straddle a finite/divergent transition");
  double lo = alpha_min, hi = alpha_max;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto c = probe(mid);
    if (c == Classification::finite) {
      lo = mid;
    } else if (c == Classification::divergent) {
      hi = mid;
    } else {
      // mid sits in the inconclusive band around the transition: pull both
      // ends halfway toward it where the verdict allows.
      const double q = 0.25 * (hi - lo);
      if (probe(mid - q) == Classification::finite) lo = mid - q;
      if (probe(mid + q) == Classification::divergent) hi = mid + q;
    }
  }
  s.bracket_lo = lo;
  s.bracket_hi = hi;
  s.alpha_star = 0.5 * (lo + hi);
  return s;
}

} // namespace cherednik
