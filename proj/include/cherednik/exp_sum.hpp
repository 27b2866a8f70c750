#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <map>
#include <utility>

namespace cherednik {

using cplx = std::complex<double>;

/// Finitely supported sum  sum_j c_j * phi_j  indexed by integer frequency.
///
/// With Scalar = complex<double> and phi_j(t) = e^{ijt} this is a
/// trigonometric polynomial, the restriction of an exponential polynomial
/// sum_j c_j e^{jz} to the imaginary axis z = it. With Scalar = double and
/// phi_j(x) = e^{jx} it is a real exponential superposition. Both readings
/// share the same coefficient algebra, which is all this class implements.
template <class Scalar>
class ExponentialSum {
public:
  using scalar_type = Scalar;
  using container = std::map<int, Scalar>;
  using const_iterator = typename container::const_iterator;

  ExponentialSum() = default;
  ExponentialSum(std::initializer_list<std::pair<const int, Scalar>> terms) {
    for (const auto& [j, c] : terms) add(j, c);
  }

  static ExponentialSum monomial(int j, Scalar c = Scalar(1)) {
    ExponentialSum s;
    s.add(j, c);
    return s;
  }

  /// Coefficient at frequency j (zero when absent).
  Scalar operator[](int j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void set(int j, Scalar c) { terms_[j] = c; }
  void add(int j, Scalar c) { terms_[j] += c; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  int min_frequency() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_frequency() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int max_abs_frequency() const {
    return std::max(std::abs(min_frequency()), std::abs(max_frequency()));
  }

  /// Removes entries whose magnitude does not exceed `threshold`.
  ExponentialSum& prune(double threshold = 0.0) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= threshold)
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  ExponentialSum& operator+=(const ExponentialSum& o) {
    for (const auto& [j, c] : o.terms_) terms_[j] += c;
    return *this;
  }
  ExponentialSum& operator-=(const ExponentialSum& o) {
    for (const auto& [j, c] : o.terms_) terms_[j] -= c;
    return *this;
  }
  ExponentialSum& operator*=(Scalar a) {
    for (auto& [j, c] : terms_) c *= a;
    return *this;
  }

  friend ExponentialSum operator+(ExponentialSum a, const ExponentialSum& b) { return a += b; }
  friend ExponentialSum operator-(ExponentialSum a, const ExponentialSum& b) { return a -= b; }
  friend ExponentialSum operator*(ExponentialSum a, Scalar s) { return a *= s; }
  friend ExponentialSum operator*(Scalar s, ExponentialSum a) { return a *= s; }

  /// Product of two sums: frequencies add.
  friend ExponentialSum operator*(const ExponentialSum& a, const ExponentialSum& b) {
    ExponentialSum out;
    for (const auto& [i, ci] : a.terms_)
      for (const auto& [j, cj] : b.terms_) out.terms_[i + j] += ci * cj;
    return out;
  }

  friend bool operator==(const ExponentialSum& a, const ExponentialSum& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplication by phi_s: j -> j + s.
  ExponentialSum shifted(int s) const {
    ExponentialSum out;
    for (const auto& [j, c] : terms_) out.terms_[j + s] = c;
    return out;
  }

  /// Argument reflection: j -> -j.
  ExponentialSum negated_frequencies() const {
    ExponentialSum out;
    for (const auto& [j, c] : terms_) out.terms_[-j] = c;
    return out;
  }

  /// Applies an arbitrary index map; colliding images are summed.
  template <class F>
  ExponentialSum reindexed(F&& map) const {
    ExponentialSum out;
    for (const auto& [j, c] : terms_) out.terms_[map(j)] += c;
    return out;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [j, c] : terms_) m = std::max(m, static_cast<double>(std::abs(c)));
    return m;
  }

  double l2_coefficient_norm() const {
    double s = 0.0;
    for (const auto& [j, c] : terms_) s += std::norm(cplx(c));
    return std::sqrt(s);
  }

private:
  container terms_;
};

/// Exponential polynomial on the imaginary axis, coefficients over C.
using TrigPoly = ExponentialSum<cplx>;
/// Real exponential superposition sum_n a_n e^{nx}.
using ExpSum = ExponentialSum<double>;

/// Evaluates sum_j c_j e^{ijt}.
inline cplx evaluate(const TrigPoly& f, double t) {
  cplx s = 0.0;
  for (const auto& [j, c] : f) s += c * std::polar(1.0, j * t);
  return s;
}

/// d/dt of sum_j c_j e^{ijt}, exactly.
inline TrigPoly derivative(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [j, c] : f)
    if (j != 0) out.set(j, cplx(0.0, j) * c);
  return out;
}

/// Evaluates sum_n a_n e^{nx}.
inline double evaluate(const ExpSum& s, double x) {
  double v = 0.0;
  for (const auto& [n, a] : s) v += a * std::exp(n * x);
  return v;
}

/// Sup-norm of the coefficient difference.
template <class Scalar>
double coefficient_distance(const ExponentialSum<Scalar>& a, const ExponentialSum<Scalar>& b) {
  return (a - b).max_abs_coefficient();
}

} // namespace cherednik
