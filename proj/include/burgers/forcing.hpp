#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "burgers/field.hpp"

namespace burgers {

/// Scalar time modulation s(t) of a forcing term.
using TimeProfile = std::function<double(double)>;

/// Right-hand side f(x, t) = sum_i s_i(t) F_i(x) - alpha u.
///
/// Terms without a profile are steady. The linear damping -alpha u (ramp
/// relaxation) is carried separately so the solver can fold it into the
/// integrating factor.
class Forcing {
 public:
  struct Term {
    SpectralField shape;
    TimeProfile profile;  ///< empty: steady
  };

  Forcing() = default;
  explicit Forcing(SpectralField steady);

  void add(SpectralField shape, TimeProfile profile = {});
  void set_damping(double alpha);

  double damping() const noexcept { return damping_; }
  bool time_independent() const noexcept;
  bool has_terms() const noexcept { return !terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// sum_i s_i(t) F_i re-expressed on `basis` (excludes the damping).
  SpectralField at(double t, const BasisPtr& basis, int components) const;

  /// The steady field; throws InvalidArgument if any term is time-dependent.
  SpectralField steady(const BasisPtr& basis, int components) const;

 private:
  std::vector<Term> terms_;
  double damping_ = 0.0;
};

}  // namespace burgers
