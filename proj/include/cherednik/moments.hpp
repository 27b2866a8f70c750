#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exp_sum.hpp"
#include "quadrature.hpp"

namespace cherednik {

inline constexpr double kDefaultMomentTol = 1e-12;

/// Multiplicity parameter k of the measure |sin x|^{2k} dx on [-pi, pi].
class MeasureParam {
public:
  explicit MeasureParam(double k) : k_(k) {
    if (!(k >= 0.0) || !std::isfinite(k))
      throw invalid_input("multiplicity parameter k must be a finite number >= 0");
  }
  double k() const { return k_; }
  double density(double x) const { return k_ == 0.0 ? 1.0 : std::pow(std::abs(std::sin(x)), 2.0 * k_); }

private:
  double k_;
};

namespace detail {

inline std::vector<double> measure_breakpoints(int panels_per_half) {
  // The density is non-smooth only at the mirror points -pi, 0, pi.
  std::vector<double> bp;
  const double pi = std::numbers::pi;
  for (int i = 0; i <= 2 * panels_per_half; ++i) bp.push_back(-pi + i * pi / panels_per_half);
  bp.back() = pi;
  bp[panels_per_half] = 0.0;
  return bp;
}

} // namespace detail

/// M_m = int_{-pi}^{pi} e^{imx} |sin x|^{2k} dx.
///
/// The imaginary part vanishes by parity, so only the cosine integral is
/// evaluated; evaluating at |m| makes M_m = M_{-m} hold bit for bit.
inline double moment(int m, double k, double tol = kDefaultMomentTol) {
  if (!(tol > 0.0)) throw invalid_input("moment: tol must be positive");
  const MeasureParam mu(k);
  const int am = std::abs(m);
  if (k == 0.0) return am == 0 ? 2.0 * std::numbers::pi : 0.0;

  // Roughly one panel per period of cos(mx) keeps the panel rule resolved.
  const auto bp = detail::measure_breakpoints(std::max(1, am / 2));
  auto f = [&](double x) { return std::cos(am * x) * mu.density(x); };
  QuadOptions opt;
  opt.abs_tol = tol;
  std::ostringstream what;
  what << "moment(m=" << m << ", k=" << k << ")";
  return integrate_or_throw(f, bp, opt, what.str().c_str()).value;
}

/// Estimates int f d mu_k over [-pi, pi] with panels split at the mirror points.
template <class F>
auto weighted_quad(F&& f, double k, double tol = kDefaultMomentTol) {
  if (!(tol > 0.0)) throw invalid_input("weighted_quad: tol must be positive");
  const MeasureParam mu(k);
  const auto bp = detail::measure_breakpoints(2);
  auto g = [&](double x) { return f(x) * mu.density(x); };
  QuadOptions opt;
  opt.abs_tol = tol;
  return integrate_or_throw(g, bp, opt, "weighted_quad");
}

/// Table of trigonometric moments M_m, |m| <= max_freq, for one k.
class MomentTable {
public:
  MomentTable() = default;

  MomentTable(double k, int max_freq, double tol = kDefaultMomentTol) : k_(MeasureParam(k).k()), values_() {
    if (max_freq < 0) throw invalid_input("MomentTable: max_freq must be >= 0");
    values_.reserve(max_freq + 1);
    for (int m = 0; m <= max_freq; ++m) values_.push_back(moment(m, k, tol));
  }

  /// Builds a table from stored values (index m = 0..max_freq).
  static MomentTable from_values(double k, std::vector<double> values) {
    if (values.empty()) throw invalid_input("MomentTable: empty value list");
    MomentTable t;
    t.k_ = MeasureParam(k).k();
    t.values_ = std::move(values);
    return t;
  }

  double k() const { return k_; }
  int max_freq() const { return static_cast<int>(values_.size()) - 1; }
  bool covers(int m) const { return std::abs(m) <= max_freq(); }

  double operator()(int m) const {
    if (!covers(m)) {
      std::ostringstream os;
      os << "MomentTable: frequency " << m << " outside table range " << max_freq();
      throw invalid_input(os.str());
    }
    return values_[std::abs(m)];
  }

  const std::vector<double>& values() const { return values_; }

private:
  double k_ = 0.0;
  std::vector<double> values_;
};

/// Lazily populated moment memo keyed by (k, m). Safe for concurrent use.
class MomentCache {
public:
  explicit MomentCache(double tol = kDefaultMomentTol) : tol_(tol) {}

  double get(int m, double k) {
    const std::pair key{k, std::abs(m)};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const double v = moment(m, k, tol_);
    std::lock_guard lock(mutex_);
    cache_.emplace(key, v);
    return v;
  }

  MomentTable table(double k, int max_freq) {
    std::vector<double> vals;
    for (int m = 0; m <= max_freq; ++m) vals.push_back(get(m, k));
    return MomentTable::from_values(k, std::move(vals));
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

private:
  double tol_;
  mutable std::mutex mutex_;
  std::map<std::pair<double, int>, double> cache_;
};

/// (f, g)_k = sum_{j,l} f_j conj(g_l) M_{j-l}, exact for trigonometric polynomials.
inline cplx inner_product(const TrigPoly& f, const TrigPoly& g, const MomentTable& table) {
  cplx s = 0.0;
  for (const auto& [j, fj] : f)
    for (const auto& [l, gl] : g) s += fj * std::conj(gl) * table(j - l);
  return s;
}

} // namespace cherednik
