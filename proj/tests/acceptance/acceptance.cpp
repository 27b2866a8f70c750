// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed below.
// Optional argument: directory for archived kernel comparison reports.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cherednik/io.hpp>

using namespace cherednik;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome bound(double value, double tol, const std::string& what) {
  return {value <= tol, what + " = " + sci(value) + " (tol " + sci(tol) + ")"};
}

const std::vector<double> kSweep{0.0, 0.25, 0.5, 1.0, 2.5};

// --- 1, 2 --------------------------------------------------------------------

Outcome eigen_residuals() {
  double worst = 0.0;
  for (double k : kSweep) worst = std::max(worst, check_basis(build_basis_range(-12, 12, k, 11)).max_eigen_residual);
  return bound(worst, 1e-9, "max relative eigen residual, |n|<=12, 5 values of k");
}

Outcome orthogonality() {
  double worst = 0.0;
  for (double k : kSweep) worst = std::max(worst, check_basis(build_basis_range(-12, 12, k, 11)).max_orthogonality);
  return bound(worst, 1e-9, "max relative Gram off-diagonal");
}

// --- 3, 4, 5, 6, 7 ---------------------------------------------------------

Outcome reflection() {
  double worst = 0.0;
  for (double k : {0.5, 1.0}) {
    const Basis b = build_basis_range(-12, 13, k, 12);
    for (int n = -12; n <= 12; ++n) worst = std::max(worst, reflection_check(n, b));
  }
  return bound(worst, 1e-10, "max reflection residual, |n|<=12, k in {0.5, 1}");
}

Outcome negative_index() {
  double b_err = 0.0, resid = 0.0;
  for (double k : {0.5, 1.0, 2.5}) {
    const Basis b = build_basis_range(-8, 8, k, 7);
    for (int n = 1; n <= 8; ++n) {
      const auto fit = negindex_check(n, b);
      b_err = std::max(b_err, std::abs(fit.B - fit.expected_B));
      resid = std::max(resid, fit.residual);
    }
  }
  return {b_err <= 1e-9 && resid <= 1e-9, "max |B - k/(n+k)| = " + sci(b_err) + ", max residual = " + sci(resid) + " (tol 1e-9)"};
}

Outcome closed_small_cases() {
  double e1 = 0.0, em1 = 0.0;
  for (double k : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0}) {
    const Basis b = build_basis(1, k);
    e1 = std::max(e1, coefficient_distance(b.poly(1), TrigPoly::monomial(1)));
    TrigPoly want = TrigPoly::monomial(-1);
    want.set(1, k / (1.0 + k));
    em1 = std::max(em1, coefficient_distance(b.poly(-1), want));
  }
  return {e1 == 0.0 && em1 <= 1e-10, "E_1 deviation = " + sci(e1) + " (exact), E_-1 deviation = " + sci(em1) + " (tol 1e-10)"};
}

Outcome norm_symmetry() {
  double worst = 0.0;
  for (double k : {0.5, 1.0}) {
    const Basis b = build_basis(10, k);
    for (int N = 0; N <= 10; ++N) worst = std::max(worst, std::abs(b.gamma_sq(-N) / b.gamma_sq(N + 1) - 1.0));
  }
  return bound(worst, 1e-10, "max |gamma_-N^2 / gamma_N+1^2 - 1|, N<=10");
}

Outcome reproducing() {
  double worst = 0.0;
  for (double k : {0.0, 0.5, 1.0, 2.5}) {
    for (int N = 0; N <= 8; ++N) {
      const Basis b = build_basis_range(-(N + 1), N + 1, k, N);
      for (int m = -(N + 1); m <= N + 1; ++m) {
        const TrigPoly r = reconstruct(b.poly(m), b);
        worst = std::max(worst, std::abs(m) <= N ? coefficient_distance(r, b.poly(m)) : r.max_abs_coefficient());
      }
    }
  }
  return bound(worst, 1e-9, "max reproduce/annihilate defect, N<=8");
}

// --- 8 -----------------------------------------------------------------------

namespace mp = boost::multiprecision;
using R = mp::cpp_bin_float_50;
using C = mp::cpp_complex_50;

// Moments from M_0 = 2 sqrt(pi) Gamma(k+1/2) / Gamma(k+1) and
// M_{2l+2} = M_{2l} (l - k) / (l + k + 1); odd ones vanish.
std::vector<R> hp_moments(double k_double, int max_freq) {
  const R k = k_double;
  const R half = R(1) / 2;
  std::vector<R> m(static_cast<std::size_t>(max_freq) + 1, R(0));
  m[0] = 2 * mp::sqrt(boost::math::constants::pi<R>()) * mp::tgamma(k + half) / mp::tgamma(k + 1);
  for (int l = 0; 2 * l + 2 <= max_freq; ++l) m[2 * l + 2] = m[2 * l] * (R(l) - k) / (R(l) + k + 1);
  return m;
}

struct HpEntry {
  std::vector<std::pair<int, R>> coeffs;
  R gamma_sq;
};

HpEntry hp_construct(int n, const std::vector<R>& M) {
  auto mom = [&](int d) { return M[static_cast<std::size_t>(std::abs(d))]; };
  std::vector<int> lower;
  for (int j = -std::abs(n); j <= std::abs(n); ++j) {
    const int d = std::abs(n) - std::abs(j);
    if ((d > 0 && d % 2 == 0) || (d == 0 && n < j)) lower.push_back(j);
  }
  const std::size_t s = lower.size();
  std::vector<std::vector<R>> a(s, std::vector<R>(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) a[i][j] = mom(lower[i] - lower[j]);
    a[i][s] = -mom(lower[i] - n);
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < s; ++r)
      if (mp::abs(a[r][c]) > mp::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (std::size_t r = c + 1; r < s; ++r) {
      const R f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= s; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<R> x(s);
  for (std::size_t i = s; i-- > 0;) {
    R v = a[i][s];
    for (std::size_t j = i + 1; j < s; ++j) v -= a[i][j] * x[j];
    x[i] = v / a[i][i];
  }
  HpEntry e;
  e.coeffs.emplace_back(n, R(1));
  for (std::size_t i = 0; i < s; ++i) e.coeffs.emplace_back(lower[i], x[i]);
  R norm = 0;
  for (const auto& [j, cj] : e.coeffs)
    for (const auto& [l, cl] : e.coeffs) norm += cj * cl * mom(j - l);
  e.gamma_sq = 1 / norm;
  return e;
}

struct HpComparison {
  double max_abs_difference = 0.0;
  double max_pointwise_gap = 0.0;
  std::size_t points = 0;
};

HpComparison hp_compare(int N, double k, const DiscrepancyReport& report) {
  const auto M = hp_moments(k, 2 * (N + 1));
  std::map<int, HpEntry> basis;
  for (int n = -N; n <= N + 1; ++n) basis.emplace(n, hp_construct(n, M));

  // E_n at +-t for every distinct node t used by the report.
  std::map<double, std::map<int, std::pair<C, C>>> cache;
  auto values = [&](double t) -> const std::map<int, std::pair<C, C>>& {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    const R tt = t;
    std::map<int, std::pair<C, C>> out;
    for (const auto& [n, e] : basis) {
      C plus(0), minus(0);
      for (const auto& [j, c] : e.coeffs) {
        const R arg = R(j) * tt;
        plus += C(c * mp::cos(arg), c * mp::sin(arg));
        minus += C(c * mp::cos(arg), -c * mp::sin(arg));
      }
      out.emplace(n, std::pair{plus, minus});
    }
    return cache.emplace(t, std::move(out)).first->second;
  };

  HpComparison h;
  for (const auto& p : report.points) {
    const auto& vx = values(p.x);
    const auto& vy = values(p.y);
    C spectral(0);
    for (int n = -N; n <= N; ++n) spectral += basis.at(n).gamma_sq * vx.at(n).first * vy.at(n).second;
    const R d = R(p.x) - R(p.y);
    const C phase(mp::cos(d), -mp::sin(d));
    const auto& ex = vx.at(N + 1);
    const auto& ey = vy.at(N + 1);
    const C numer = phase * ex.first * ey.second - ex.second * ey.first;
    const C boundary = basis.at(N + 1).gamma_sq * numer / (C(1) - phase);
    const double diff = static_cast<double>(mp::abs(spectral - boundary));
    h.max_abs_difference = std::max(h.max_abs_difference, diff);
    h.max_pointwise_gap = std::max(h.max_pointwise_gap, std::abs(diff - p.abs_diff));
    ++h.points;
  }
  return h;
}

Outcome kernel_comparison(const std::filesystem::path& archive) {
  std::filesystem::create_directories(archive);
  const auto grid = uniform_grid(101, 101);
  double worst_gap = 0.0, largest = 0.0;
  std::string where;
  for (int N : {0, 1, 2, 4}) {
    for (double k : {0.0, 0.5, 1.0}) {
      const Basis b = build_basis(N, k);
      const auto r = compare_forms(b, grid, kDiagonalGuard, true);
      const auto h = hp_compare(N, k, r);
      const double gap = std::max(h.max_pointwise_gap, std::abs(h.max_abs_difference - r.max_abs_difference));
      worst_gap = std::max(worst_gap, gap);
      largest = std::max(largest, r.max_abs_difference);

      auto doc = io::to_json(r);
      doc.erase("points");
      doc["extended_precision"] = {{"digits", 50}, {"max_abs_difference", h.max_abs_difference}, {"max_pointwise_gap", h.max_pointwise_gap}};
      char name[64];
      std::snprintf(name, sizeof name, "kernel_compare_N%d_k%.2f.json", N, k);
      std::ofstream(archive / name) << io::dump(doc);
      std::ofstream csv(archive / (std::string(name) + ".csv"));
      io::write_grid_csv(csv, r);
    }
  }
  return bound(worst_gap, 1e-10,
               "max |double - 50-digit| discrepancy over 12 (N,k) cases [largest spectral/boundary gap " + sci(largest) + "]");
}

// --- 9 -----------------------------------------------------------------------

Outcome diagonal_structure() {
  double diag = 0.0, factor = 0.0, branch = 0.0;
  for (int N : {0, 1, 2, 4, 8}) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
      const Basis b = build_basis(N, k);
      for (int i = 0; i <= 64; ++i) {
        const double x = -pi + 2 * pi * i / 64;
        diag = std::max(diag, std::abs(numerator_N(b, x, x)));
        for (double h : {-0.4, -0.05, 2e-3, 1.5e-3, 1.01e-3, 0.3}) {
          const double y = x + h;
          factor = std::max(factor, std::abs(numerator_N(b, x, y) - (x - y) * c_factor(b, x, y)));
          branch = std::max(branch, std::abs(c_factor_quotient(b, x, y) - c_factor_integral(b, x, y)));
        }
        for (double h : {5e-4, 1e-6}) factor = std::max(factor, std::abs(numerator_N(b, x, x + h) + h * c_factor(b, x, x + h)));
      }
    }
  }
  return {diag <= 1e-12 && factor <= 1e-10 && branch <= 1e-8,
          "|N(x,x)| = " + sci(diag) + " (1e-12), factorization = " + sci(factor) + " (1e-10), branches = " + sci(branch) + " (1e-8)"};
}

// --- 10 ----------------------------------------------------------------------

Outcome local_identity() {
  const Basis b = build_basis(2, 1.0);
  const auto local = local_decompose(b, pi / 8);
  if (!local.established) return {false, "inf |A_N| > 0 not established"};
  std::mt19937_64 rng(20240901);
  std::normal_distribution<double> c;
  std::uniform_int_distribution<int> deg(0, 6);
  double worst_ratio = 0.0, worst_id = 0.0, worst_xi = 0.0;
  for (int t = 0; t < 20; ++t) {
    TrigPoly p;
    const int d = deg(rng);
    for (int j = -d; j <= d; ++j) p.set(j, cplx(c(rng), c(rng)));
    const SampledFunction f = [p](double x) { return evaluate(p, x); };
    const auto r = apply_T_decomposed(f, b, WeightSpec::power(0.5), local);
    worst_id = std::max(worst_id, r.identity_residual);
    worst_xi = std::max(worst_xi, r.x_independence_residual);
    worst_ratio = std::max(worst_ratio, std::max(r.identity_residual, r.x_independence_residual) / r.tolerance());
  }
  return {worst_ratio <= 1.0, "identity = " + sci(worst_id) + ", x-independence = " + sci(worst_xi) +
                                  ", worst residual / (1e-7 (1+|Lambda f|)) = " + sci(worst_ratio)};
}

// --- 11 ----------------------------------------------------------------------

Outcome threshold() {
  bool ok = true;
  std::string detail;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto s = threshold_scan(p, kDefaultDelta, 0.0, 2.0 * p);
    const double err = std::abs(s.alpha_star - (p - 1.0));
    ok = ok && err <= 0.05;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sp=%.1f: alpha*=%.5f", detail.empty() ? "" : ", ", p, s.alpha_star);
    detail += buf;
  }
  return {ok, detail + " (tol 0.05 around p-1)"};
}

// --- 12 ----------------------------------------------------------------------

Outcome example_a() {
  double worst_env = -std::numeric_limits<double>::infinity();
  bool finite = true;
  std::string failures;
  const auto ys = log_spaced(1e-12, kDefaultDelta, 10000);
  for (double p : {1.5, 2.0, 3.0})
    for (double beta : {-2.0, 0.0, 2.0})
      for (double gamma : {0.5, 1.0})
        worst_env = std::max(worst_env, envelope_check_example_a(0.5 * (p - 1), beta, gamma, p, ys).max_violation);
  for (double beta : {-2.0, 0.0, 2.0}) {
    for (double gamma : {0.5, 1.0}) {
      const auto r = criterion_integral(WeightSpec::example_a(0.5, beta, gamma), 2.0);
      if (r.classification != Classification::finite) {
        finite = false;
        failures += " beta=" + sci(beta) + ",gamma=" + sci(gamma) + ":" + std::string(to_string(r.classification));
      }
    }
  }
  return {worst_env <= 0.0 && finite, "worst envelope violation = " + sci(worst_env) +
                                          "; criterion finite for alpha=0.5<p-1=1, all (beta,gamma): " +
                                          (finite ? "yes" : "no" + failures)};
}

// --- 13 ----------------------------------------------------------------------

Outcome orbit_algebra() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> idx(-25, 25), len(0, 9);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  bool idem = true;
  for (int t = 0; t < 100; ++t) {
    ExpSum s;
    for (int i = len(rng); i > 0; --i) s.add(idx(rng), coef(rng));
    for (PiMode mode : {PiMode::unit, PiMode::preserve_dominant}) {
      const ExpSum once = project_pi(s, mode);
      idem = idem && project_pi(once, mode) == once;
    }
  }
  bool unique = true;
  for (int N = 0; N <= 50; ++N) {
    const auto b = boundary_orbits(N);
    unique = unique && b.size() == 1 && b[0].ell == -N && b[0].m == N + 1;
  }
  double limit_err = 0.0;
  std::vector<double> xs;
  for (int i = 0; i <= 300; ++i) xs.push_back(0.1 * i);
  for (int m = 1; m <= 12; ++m) {
    const Orbit o = orbit_with_key(m);
    const ExpSum b{{o.m, coef(rng)}, {o.ell, coef(rng)}};
    limit_err = std::max(limit_err, std::abs(asymptotic_leading(b, xs).limit_estimate - b[o.m]));
  }
  limit_err = std::max(limit_err, std::abs(asymptotic_leading(ExpSum{{2, 5.0}, {-1, 7.0}}, xs).limit_estimate - 5.0));
  return {idem && unique && limit_err <= 1e-8, std::string("Pi idempotent on 100 sums: ") + (idem ? "yes" : "no") +
                                                   "; unique boundary orbit N<=50: " + (unique ? "yes" : "no") +
                                                   "; leading-term error = " + sci(limit_err) + " (1e-8)"};
}

} // namespace

int main(int argc, char** argv) {
  const std::filesystem::path archive = argc > 1 ? argv[1] : "acceptance_reports";
  struct Item {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items{
      {1, "eigen residual", eigen_residuals},
      {2, "orthogonality", orthogonality},
      {3, "reflection identity", reflection},
      {4, "negative-index reduction", negative_index},
      {5, "closed small cases", closed_small_cases},
      {6, "norm symmetry", norm_symmetry},
      {7, "reproducing property", reproducing},
      {8, "kernel form comparison", [&] { return kernel_comparison(archive); }},
      {9, "diagonal structure", diagonal_structure},
      {10, "local decomposition identity", local_identity},
      {11, "threshold reproduction", threshold},
      {12, "example A", example_a},
      {13, "orbit algebra", orbit_algebra},
  };
  int failed = 0;
  for (const auto& item : items) {
    Outcome o;
    try {
      o = item.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %-30s %s\n", o.pass ? "PASS" : "FAIL", item.id, item.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
  return failed == 0 ? 0 : 1;
}
