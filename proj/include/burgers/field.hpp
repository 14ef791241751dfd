#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "burgers/basis.hpp"

namespace burgers {

/// Function expanded in an eigenbasis: `components` scalar fields (1 for the
/// 1D equation, 2 for the 2D velocity), each with basis.size() coefficients.
class SpectralField {
 public:
  SpectralField(BasisPtr basis, int components);
  SpectralField(BasisPtr basis, int components, std::vector<double> coefficients);

  /// Unit coefficient on mode j of the given component.
  static SpectralField unit(BasisPtr basis, std::size_t j, int component = 0, int components = 1);

  const EigenBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  int components() const noexcept { return components_; }
  std::size_t modes() const noexcept { return basis_->size(); }

  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::span<double> coefficients() noexcept { return coefficients_; }
  std::span<const double> component(int c) const;
  std::span<double> component(int c);

  double operator()(int c, std::size_t j) const { return coefficients_[static_cast<std::size_t>(c) * modes() + j]; }
  double& operator()(int c, std::size_t j) { return coefficients_[static_cast<std::size_t>(c) * modes() + j]; }

  bool compatible(const SpectralField& other) const noexcept;
  bool is_zero() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s) noexcept;

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, double s) { return a *= s; }

 private:
  BasisPtr basis_;
  int components_;
  std::vector<double> coefficients_;
};

/// P_m: keeps the first m modes, zeroes the rest (same basis).
SpectralField project(const SpectralField& field, std::size_t m);

/// Re-expresses a field on another truncation of the same domain, padding
/// with zeros or dropping trailing modes.
SpectralField resize(const SpectralField& field, BasisPtr target);

/// (u, v)_{L2}
double inner(const SpectralField& u, const SpectralField& v);
/// (u, v)_V = (Au, v)
double inner_v(const SpectralField& u, const SpectralField& v);

/// Spatial mean of one component (0 when the basis carries no constant mode).
double mean(const SpectralField& field, int component = 0);

struct Norms {
  double l2 = 0.0;
  double v = 0.0;     ///< H0^1 seminorm (sum lambda_j a_j^2)^{1/2}
  double h2 = 0.0;    ///< ||Au||
  double linf = 0.0;  ///< max over dealiased grid nodes; a lower bound of the sup norm
};

Norms norms(const SpectralField& field);
double l2_norm(const SpectralField& field);
double v_norm(const SpectralField& field);
double h2_norm(const SpectralField& field);
double linf_norm(const SpectralField& field);

/// Nodal values, layout [component][iy * nx + ix].
class GridField {
 public:
  GridField(std::shared_ptr<const Grid> grid, int components);
  GridField(std::shared_ptr<const Grid> grid, int components, std::vector<double> values);

  const Grid& grid() const noexcept { return *grid_; }
  const std::shared_ptr<const Grid>& grid_ptr() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> component(int c) const;
  std::span<double> component(int c);

 private:
  std::shared_ptr<const Grid> grid_;
  int components_;
  std::vector<double> values_;
};

/// Nodal values on the basis' dealiased grid.
GridField to_grid(const SpectralField& field);
/// Nodal values of the derivative along `axis`.
GridField gradient_component(const SpectralField& field, int axis);

/// Quadrature projection onto `basis`. The grid must satisfy the dealiasing
/// resolution for the basis on every axis.
SpectralField from_grid(const GridField& grid, BasisPtr basis);

}  // namespace burgers
