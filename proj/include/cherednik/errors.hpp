#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// Raised when a caller violates a documented precondition.
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot reach its target accuracy.
/// `partial_value` carries the best estimate obtained before giving up.
class numerical_failure : public std::runtime_error {
public:
  explicit numerical_failure(const std::string& what, double partial_value = 0.0)
      : std::runtime_error(what), partial_value_(partial_value) {}

  double partial_value() const noexcept { return partial_value_; }

private:
  double partial_value_;
};

} // namespace cherednik
