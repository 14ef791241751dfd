#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "burgers/domain.hpp"

namespace burgers {

/// One-dimensional factor of a separable eigenfunction.
enum class Trig : std::uint8_t { sine = 0, cosine = 1, constant = 2 };

/// Axis factor: wavenumber index and kind. Dirichlet axes only use `sine`
/// (k >= 1); periodic axes use `constant` (k = 0), `sine` and `cosine`.
struct AxisMode {
  int k = 0;
  Trig kind = Trig::constant;

  auto operator<=>(const AxisMode&) const = default;
};

/// Eigenpair descriptor. For 1D domains `axis[1]` is the trivial factor
/// {0, constant}.
struct Mode {
  std::array<AxisMode, 2> axis;
  double eigenvalue = 0.0;

  /// Lexicographic tie-break key (k1, k2, p1, p2) with sine before cosine.
  std::array<int, 4> index_tuple() const;
  std::string label() const;
};

/// L2-normalized axis factor and its derivative, evaluated in closed form.
double axis_value(Boundary b, double length, AxisMode f, double x);
double axis_derivative(Boundary b, double length, AxisMode f, double x);

/// Eigenvalue contribution of one axis factor: (k pi / L)^2 for Dirichlet,
/// (2 k pi / L)^2 for periodic.
double axis_eigenvalue(Boundary b, double length, int k);

/// Uniform nodes with quadrature weights for one axis.
///
/// Periodic axes carry N nodes on [0, L) with trapezoid weights L/N.
/// Dirichlet axes carry 2N nodes on the odd extension [0, 2L); the weights
/// integrate over (0, L) and are exact for every 2L-periodic trigonometric
/// polynomial of degree <= N-1 in pi x / L, which covers products of sines
/// and cosines of either parity.
struct AxisGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  int resolution = 1;  ///< N: quadrature exact for degree <= N-1
  double spacing = 1.0;
};

/// Tensor grid; node (ix, iy) is stored at iy * nx + ix.
struct Grid {
  int dimension = 1;
  std::array<AxisGrid, 2> axes;

  std::size_t nx() const noexcept { return axes[0].nodes.size(); }
  std::size_t ny() const noexcept { return axes[1].nodes.size(); }
  std::size_t size() const noexcept { return nx() * ny(); }
};

/// Grid with resolution N per axis (see AxisGrid); for 1D domains the second
/// axis is a single node of weight 1.
std::shared_ptr<const Grid> make_grid(const Domain& domain, std::array<int, 2> resolution);

/// Minimum resolution N = 3K + 1 for an axis whose largest wavenumber is K;
/// triple products of band-limited fields are integrated exactly.
int dealiased_resolution(int max_index);

class EigenBasis;

/// Basis functions and first derivatives tabulated on a grid.
class GridTransform {
 public:
  GridTransform(const EigenBasis& basis, std::shared_ptr<const Grid> grid);

  const Grid& grid() const noexcept { return *grid_; }
  const std::shared_ptr<const Grid>& grid_ptr() const noexcept { return grid_; }

  /// Nodal values of sum_j a_j w_j, or of its derivative along `deriv_axis`
  /// (-1 for none). `coeffs` may be shorter than the basis (prefix).
  void synthesize(std::span<const double> coeffs, int deriv_axis, std::span<double> out) const;

  /// a_j = Q(g w_j) for j < out.size(), Q the grid quadrature.
  void analyze(std::span<const double> values, std::span<double> out) const;

  /// Q(g)
  double integrate(std::span<const double> values) const;

 private:
  struct AxisTable {
    std::size_t n = 0;
    std::vector<double> value;     // [f * n + i]
    std::vector<double> deriv;     // [f * n + i]
    std::vector<double> weighted;  // weight_i * value
  };
  struct Group {
    int fy = 0;
    std::vector<std::size_t> modes;
    std::vector<int> fx;
  };

  std::shared_ptr<const Grid> grid_;
  std::array<AxisTable, 2> tables_;
  std::vector<Group> groups_;
  std::size_t basis_size_ = 0;
};

/// The m lowest eigenpairs of A on a domain, ordered by eigenvalue with ties
/// broken lexicographically by index tuple.
class EigenBasis {
 public:
  const Domain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return modes_.size(); }
  const Mode& mode(std::size_t j) const { return modes_.at(j); }
  std::span<const Mode> modes() const noexcept { return modes_; }
  double eigenvalue(std::size_t j) const { return modes_.at(j).eigenvalue; }
  double lambda1() const noexcept { return modes_.front().eigenvalue; }

  /// Largest wavenumber index used on an axis.
  int max_index(int axis) const { return max_index_.at(static_cast<std::size_t>(axis)); }

  /// Distinct axis factors and the per-mode index into them.
  std::span<const AxisMode> axis_functions(int axis) const { return axis_functions_.at(static_cast<std::size_t>(axis)); }
  std::span<const int> axis_function_index(int axis) const { return axis_function_index_.at(static_cast<std::size_t>(axis)); }

  /// Position of a mode in the ordering, or size() if absent.
  std::size_t find(const Mode& mode) const;

  /// Dealiased grid and its transform tables.
  const GridTransform& transform() const noexcept { return *transform_; }
  const Grid& grid() const noexcept { return transform_->grid(); }
  const std::shared_ptr<const Grid>& grid_ptr() const noexcept { return transform_->grid_ptr(); }

  /// Same domain and truncation.
  bool same_space(const EigenBasis& other) const noexcept;

 private:
  friend std::shared_ptr<const EigenBasis> build_basis(const Domain&, std::size_t);
  EigenBasis(Domain domain, std::vector<Mode> modes);

  Domain domain_;
  std::vector<Mode> modes_;
  std::array<int, 2> max_index_{0, 0};
  std::array<std::vector<AxisMode>, 2> axis_functions_;
  std::array<std::vector<int>, 2> axis_function_index_;
  std::unique_ptr<GridTransform> transform_;
};

using BasisPtr = std::shared_ptr<const EigenBasis>;

/// Enumerate the m lowest eigenpairs; deterministic. Throws InvalidArgument
/// for m = 0.
BasisPtr build_basis(const Domain& domain, std::size_t m);

}  // namespace burgers
