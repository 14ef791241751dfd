#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgers {

/// Raised for arguments that violate an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a time integration leaves the admissible region (non-finite
/// coefficients or energy far above the a priori ceiling).
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t step, double time, const std::string& what)
      : std::runtime_error(what), step_(step), time_(time) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t step_;
  double time_;
};

}  // namespace burgers
