#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string_view>
#include <vector>

#include "eigenbasis.hpp"
#include "errors.hpp"
#include "exp_sum.hpp"

namespace cherednik {

/// Reflection orbit {n, 1-n} with dominant member m and subdominant ell.
struct Orbit {
  int n = 0;
  int partner = 1;
  int m = 1;
  int ell = 0;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

inline Orbit orbit_of(int n) {
  const int partner = 1 - n;
  return Orbit{n, partner, std::max(n, partner), std::min(n, partner)};
}

/// Orbit whose dominant member is m (m >= 1).
inline Orbit orbit_with_key(int m) {
  if (m < 1) throw invalid_input("orbit_with_key: dominant index must be >= 1");
  return orbit_of(m);
}

/// Index map j -> 1 - j, i.e. f(z) -> e^z f(-z) on exponential sums.
template <class Scalar>
ExponentialSum<Scalar> reflect_tilt(const ExponentialSum<Scalar>& f) {
  return f.reindexed([](int j) { return 1 - j; });
}

enum class PiMode {
  /// Unit coefficient at the dominant index of every touched orbit.
  unit,
  /// Keeps a_m at the dominant index (normalized-representative reading).
  preserve_dominant,
};

/// Orbit projection: every orbit meeting the support of s contributes one
/// term at its dominant index m. Idempotent in both modes.
inline ExpSum project_pi(const ExpSum& s, PiMode mode = PiMode::unit) {
  ExpSum out;
  for (const auto& [n, a] : s) {
    const Orbit o = orbit_of(n);
    if (mode == PiMode::unit)
      out.set(o.m, 1.0);
    else
      out.set(o.m, s[o.m]);
  }
  return out;
}

struct LeadingTerm {
  int m = 0;
  double limit_estimate = 0.0;
};

/// Estimates lim_{x->inf} e^{-mx} A(x) for A supported on a single orbit,
/// using the factored form a_m + a_ell e^{-(m-ell)x} at the last sample.
inline LeadingTerm asymptotic_leading(const ExpSum& b, std::span<const double> x_samples) {
  if (b.empty()) throw invalid_input("asymptotic_leading: empty superposition");
  const Orbit o = orbit_of(b.begin()->first);
  for (const auto& [n, a] : b)
    if (n != o.m && n != o.ell) throw invalid_input("asymptotic_leading: support spans more than one orbit");
  if (x_samples.empty()) throw invalid_input("asymptotic_leading: no samples");
  if (!std::is_sorted(x_samples.begin(), x_samples.end()))
    throw invalid_input("asymptotic_leading: samples must be ascending");
  const double gap = o.m - o.ell;
  const double x = x_samples.back();
  if (x < 20.0 / gap) {
    std::ostringstream os;
    os << "asymptotic_leading: final sample " << x << " below 20/(m-ell) = " << 20.0 / gap;
    throw invalid_input(os.str());
  }
  return {o.m, b[o.m] + b[o.ell] * std::exp(-gap * x)};
}

/// e^{-mx} A(x) at each sample, factored; the sequence whose limit is a_m.
inline std::vector<double> leading_profile(const ExpSum& b, std::span<const double> x_samples) {
  const Orbit o = orbit_of(b.empty() ? 1 : b.begin()->first);
  std::vector<double> out;
  for (double x : x_samples) out.push_back(b[o.m] + b[o.ell] * std::exp(-double(o.m - o.ell) * x));
  return out;
}

enum class TruncationCase { interior, low_only, high_only, outside };

inline std::string_view to_string(TruncationCase c) {
  switch (c) {
  case TruncationCase::interior: return "interior";
  case TruncationCase::low_only: return "low_only";
  case TruncationCase::high_only: return "high_only";
  case TruncationCase::outside: return "outside";
  }
  return "?";
}

/// Which members of the orbit fall in the window |.| <= N. `low_only` means
/// only ell (the member of smaller modulus) is inside, `high_only` only m.
inline TruncationCase classify_truncation(const Orbit& o, int N) {
  if (N < 0) throw invalid_input("classify_truncation: N must be >= 0");
  const bool m_in = std::abs(o.m) <= N;
  const bool ell_in = std::abs(o.ell) <= N;
  if (m_in && ell_in) return TruncationCase::interior;
  if (ell_in) return TruncationCase::low_only;
  if (m_in) return TruncationCase::high_only;
  return TruncationCase::outside;
}

/// Orbits touching [-N, N+1] that have exactly one member inside |.| <= N.
inline std::vector<Orbit> boundary_orbits(int N) {
  std::vector<Orbit> out;
  for (int m = 1; m <= N + 1; ++m) {
    const Orbit o = orbit_with_key(m);
    const auto c = classify_truncation(o, N);
    if (c == TruncationCase::low_only || c == TruncationCase::high_only) out.push_back(o);
  }
  return out;
}

struct NegIndexFit {
  double B = 0.0;
  double expected_B = 0.0;
  double residual = 0.0;
};

/// Fits E_{-n}(i.) - E_n(-i.) = B E_n(i.) by least squares over coefficients.
/// `residual` is the l2 norm of what the fitted multiple leaves over.
inline NegIndexFit negindex_check(int n, const Basis& basis) {
  if (n < 1) throw invalid_input("negindex_check: n must be >= 1");
  const TrigPoly& en = basis.poly(n);
  const TrigPoly d = basis.poly(-n) - en.negated_frequencies();
  cplx num = 0.0;
  double den = 0.0;
  for (const auto& [j, c] : en) {
    num += d[j] * std::conj(c);
    den += std::norm(c);
  }
  NegIndexFit fit;
  fit.B = std::real(num / den);
  fit.expected_B = basis.k() / (n + basis.k());
  fit.residual = (d - en * cplx(fit.B)).l2_coefficient_norm();
  return fit;
}

/// Coefficient l2 norm of E_n(i.) - reflect_tilt(E_{1-n}(i.)).
inline double reflection_check(int n, const Basis& basis) {
  return (basis.poly(n) - reflect_tilt(basis.poly(1 - n))).l2_coefficient_norm();
}

} // namespace cherednik
