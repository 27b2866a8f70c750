#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "exp_sum.hpp"
#include "moments.hpp"

namespace cherednik {

/// Condition number above which a Gram solve is reported as a failure.
inline constexpr double kGramConditionLimit = 1e12;
/// Largest truncation level accepted by the front ends.
inline constexpr int kMaxTruncation = 64;

/// Indices strictly below n in the triangular order, ascending:
/// j with |j| < |n| and |n| - |j| even and positive, or |j| = |n| and n < j.
inline std::vector<int> lower_set(int n) {
  std::vector<int> out;
  const int an = std::abs(n);
  for (int j = -an; j <= an; ++j) {
    const int aj = std::abs(j);
    const bool parity = aj < an && (an - aj) % 2 == 0;
    const bool tie = aj == an && n < j;
    if (parity || tie) out.push_back(j);
  }
  return out;
}

/// Spectral parameter: n + k for n > 0, n - k for n <= 0.
inline double eigenvalue(int n, double k) { return n > 0 ? n + k : n - k; }

/// Cherednik operator T^k f = f' + 2k (f(z) - f(-z)) / (1 - e^{-2z}) - k f,
/// applied exactly to sum_j c_j e^{jz} (equivalently, to the trigonometric
/// polynomial in t with z = it). The divided difference of e^{jz} is the
/// finite geometric sum e^{jz} + e^{(j-2)z} + ... + e^{(2-j)z} for j > 0 and
/// minus the same sum for e^{-jz} when j < 0.
inline TrigPoly cherednik_apply(const TrigPoly& f, double k) {
  TrigPoly out;
  for (const auto& [j, c] : f) {
    out.add(j, (static_cast<double>(j) - k) * c);
    if (k == 0.0 || j == 0) continue;
    const int top = std::abs(j);
    const double sign = j > 0 ? 1.0 : -1.0;
    for (int r = 0; r < top; ++r) out.add(top - 2 * r, sign * 2.0 * k * c);
  }
  return out;
}

/// E_n^k(i .) with its eigenvalue and squared norm gamma_n^{-2}.
struct EigenEntry {
  int n = 0;
  double k = 0.0;
  TrigPoly poly;
  double eigenvalue = 0.0;
  double norm_sq = 0.0;
  /// Condition estimate of the Gram system that produced `poly`.
  double gram_condition = 1.0;

  double gamma_sq() const { return 1.0 / norm_sq; }
};

/// Largest |j - l| needed to construct all indices with |n| <= max_index.
inline int required_moment_range(int max_index) { return 2 * std::abs(max_index); }

/// Builds E_n^k(i .) = e^{inx} + sum_{j below n} c_j e^{ijx} by imposing
/// orthogonality to every lower exponential: sum_l c_l M_{j-l} = -M_{j-n}.
inline EigenEntry construct(int n, double k, const MomentTable& table) {
  EigenEntry e;
  e.n = n;
  e.k = k;
  e.eigenvalue = eigenvalue(n, k);

  const auto lower = lower_set(n);
  const auto size = static_cast<Eigen::Index>(lower.size());
  e.poly.set(n, 1.0);
  if (size > 0) {
    Eigen::MatrixXd gram(size, size);
    Eigen::VectorXd rhs(size);
    for (Eigen::Index a = 0; a < size; ++a) {
      for (Eigen::Index b = 0; b < size; ++b) gram(a, b) = table(lower[a] - lower[b]);
      rhs(a) = -table(lower[a] - n);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(gram);
    const double rcond = lu.rcond();
    e.gram_condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(e.gram_condition <= kGramConditionLimit)) {
      std::ostringstream os;
      os << "construct(n=" << n << ", k=" << k << "): Gram matrix condition estimate "
         << e.gram_condition << " exceeds " << kGramConditionLimit;
      throw numerical_failure(os.str(), e.gram_condition);
    }
    const Eigen::VectorXd c = lu.solve(rhs);
    for (Eigen::Index a = 0; a < size; ++a) e.poly.set(lower[a], c(a));
  }
  e.norm_sq = std::real(inner_product(e.poly, e.poly, table));
  if (!(e.norm_sq > 0.0)) {
    std::ostringstream os;
    os << "construct(n=" << n << ", k=" << k << "): non-positive squared norm " << e.norm_sq;
    throw numerical_failure(os.str(), e.norm_sq);
  }
  return e;
}

/// ||T^k E - n_k E||_inf over coefficients, divided by max(1, ||E||_inf).
inline double eigen_residual(const EigenEntry& e) {
  const TrigPoly r = cherednik_apply(e.poly, e.k) - e.poly * cplx(e.eigenvalue);
  return r.max_abs_coefficient() / std::max(1.0, e.poly.max_abs_coefficient());
}

/// Eigenfunctions E_n for every index in [min_index, max_index].
class Basis {
public:
  Basis() = default;
  Basis(double k, int N, MomentTable table, std::map<int, EigenEntry> entries)
      : k_(k), N_(N), table_(std::move(table)), entries_(std::move(entries)) {}

  double k() const { return k_; }
  int N() const { return N_; }
  const MomentTable& table() const { return table_; }
  const std::map<int, EigenEntry>& entries() const { return entries_; }

  bool contains(int n) const { return entries_.count(n) != 0; }
  const EigenEntry& at(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) {
      std::ostringstream os;
      os << "Basis(k=" << k_ << ", N=" << N_ << ") has no entry for index " << n;
      throw invalid_input(os.str());
    }
    return it->second;
  }
  const TrigPoly& poly(int n) const { return at(n).poly; }
  double gamma_sq(int n) const { return at(n).gamma_sq(); }

private:
  double k_ = 0.0;
  int N_ = 0;
  MomentTable table_;
  std::map<int, EigenEntry> entries_;
};

struct BasisCheck {
  double max_eigen_residual = 0.0;
  int worst_eigen_index = 0;
  double max_orthogonality = 0.0;
  std::pair<int, int> worst_pair{0, 0};
};

/// Eigen residuals and relative Gram off-diagonals over all stored entries.
inline BasisCheck check_basis(const Basis& basis) {
  BasisCheck c;
  for (const auto& [n, e] : basis.entries()) {
    const double r = eigen_residual(e);
    if (r > c.max_eigen_residual) c.max_eigen_residual = r, c.worst_eigen_index = n;
  }
  for (auto a = basis.entries().begin(); a != basis.entries().end(); ++a) {
    for (auto b = std::next(a); b != basis.entries().end(); ++b) {
      const double ip = std::abs(inner_product(a->second.poly, b->second.poly, basis.table()));
      const double rel = ip / std::sqrt(a->second.norm_sq * b->second.norm_sq);
      if (rel > c.max_orthogonality) c.max_orthogonality = rel, c.worst_pair = {a->first, b->first};
    }
  }
  return c;
}

inline constexpr double kBasisTolerance = 1e-9;

/// Builds entries for every n in [min_index, max_index], labelled with
/// truncation level N, and validates eigen residuals and orthogonality.
inline Basis build_basis_range(int min_index, int max_index, double k, int N,
                               double tol = kDefaultMomentTol) {
  if (min_index > max_index) throw invalid_input("build_basis_range: empty index range");
  const int reach = std::max(std::abs(min_index), std::abs(max_index));
  MomentTable table(k, required_moment_range(reach), tol);
  std::map<int, EigenEntry> entries;
  for (int n = min_index; n <= max_index; ++n) {
    try {
      entries.emplace(n, construct(n, k, table));
    } catch (const numerical_failure& ex) {
      std::ostringstream os;
      os << "build_basis: index " << n << ": " << ex.what();
      throw numerical_failure(os.str(), ex.partial_value());
    }
  }
  Basis basis(k, N, std::move(table), std::move(entries));
  const auto check = check_basis(basis);
  if (check.max_eigen_residual > kBasisTolerance) {
    std::ostringstream os;
    os << "build_basis: eigen residual " << check.max_eigen_residual << " at index "
       << check.worst_eigen_index;
    throw numerical_failure(os.str(), check.max_eigen_residual);
  }
  if (check.max_orthogonality > kBasisTolerance) {
    std::ostringstream os;
    os << "build_basis: orthogonality defect " << check.max_orthogonality << " between "
       << check.worst_pair.first << " and " << check.worst_pair.second;
    throw numerical_failure(os.str(), check.max_orthogonality);
  }
  return basis;
}

/// Basis for truncation level N: indices -N .. N+1. The top index N+1 is
/// outside the truncated sum but enters the boundary kernel.
inline Basis build_basis(int N, double k, double tol = kDefaultMomentTol) {
  if (N < 0) throw invalid_input("build_basis: N must be >= 0");
  return build_basis_range(-N, N + 1, k, N, tol);
}

} // namespace cherednik
