#pragma once

#include <array>
#include <string>

namespace burgers {

enum class Boundary { dirichlet, periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// Interval (0,L) or rectangle (0,L1)x(0,L2) with homogeneous Dirichlet or
/// periodic boundary conditions.
///
/// `include_mean` only applies to periodic domains and controls whether the
/// constant mode (eigenvalue 0) is carried by bases built on this domain.
class Domain {
 public:
  static Domain interval(double length, Boundary boundary, bool include_mean = false);
  static Domain rectangle(double l1, double l2, Boundary boundary, bool include_mean = false);

  int dimension() const noexcept { return dimension_; }
  double length(int axis) const { return lengths_.at(static_cast<std::size_t>(axis)); }
  Boundary boundary() const noexcept { return boundary_; }
  bool include_mean() const noexcept { return include_mean_; }
  bool periodic() const noexcept { return boundary_ == Boundary::periodic; }

  /// |Omega|
  double measure() const noexcept;

  bool operator==(const Domain&) const = default;

 private:
  Domain(int dimension, std::array<double, 2> lengths, Boundary boundary, bool include_mean);

  int dimension_;
  std::array<double, 2> lengths_;
  Boundary boundary_;
  bool include_mean_;
};

}  // namespace burgers
