#pragma once

#include <cmath>

#include "errors.hpp"

namespace cherednik {

/// Smooth cutoff equal to 1 on [-delta/2, delta/2] and 0 outside (-delta, delta),
/// built from t -> exp(-1/t) on the transition band.
class Cutoff {
public:
  explicit Cutoff(double delta) : delta_(delta) {
    if (!(delta > 0.0)) throw invalid_input("Cutoff: delta must be positive");
  }

  double delta() const { return delta_; }

  double operator()(double x) const {
    const double ax = std::abs(x);
    if (ax <= 0.5 * delta_) return 1.0;
    if (ax >= delta_) return 0.0;
    const double t = (delta_ - ax) / (0.5 * delta_); // 1 at delta/2, 0 at delta
    const double a = bump(t), b = bump(1.0 - t);
    return a / (a + b);
  }

private:
  static double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
  double delta_;
};

} // namespace cherednik
