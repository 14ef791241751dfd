#pragma once

#include <cstddef>

#include "burgers/field.hpp"

namespace burgers {

/// a_j -> lambda_j a_j
SpectralField apply_A(const SpectralField& u);

enum class TrilinearMethod { pseudospectral, quadrature_oracle };

struct TrilinearResult {
  double value = 0.0;
  TrilinearMethod method = TrilinearMethod::pseudospectral;
};

/// b(u, v, w) = sum_{i,j} int u_i d_i v_j w_j, evaluated on the dealiased
/// grid (exact for fields inside the truncation). `u` carries one component
/// per space dimension; `v` and `w` share a component count.
double trilinear_b(const SpectralField& u, const SpectralField& v, const SpectralField& w);

/// Same form evaluated by composite Gauss-Legendre quadrature with the basis
/// functions in closed form. Independent of the grid tables; slow.
TrilinearResult trilinear_b_quadrature(const SpectralField& u, const SpectralField& v, const SpectralField& w);

/// P_m B(u, v): the j-th coefficient is b(u, v, w_j) for j < m, zero beyond.
SpectralField apply_B(const SpectralField& u, const SpectralField& v, std::size_t m);
inline SpectralField apply_B(const SpectralField& u, std::size_t m) { return apply_B(u, u, m); }

/// Nodal values of div u = d_x u_1 + d_y u_2 on the dealiased grid. Exact at
/// the nodes; returned on the grid because derivatives of Dirichlet sine modes
/// leave the sine span.
GridField divergence(const SpectralField& u);

/// -(1/2) int (div u) |v|^2, the amount by which b(u, v, v) departs from zero.
double skew_defect(const SpectralField& u, const SpectralField& v);

/// The same integral by dense Gauss-Legendre quadrature.
double skew_defect_quadrature(const SpectralField& u, const SpectralField& v);

}  // namespace burgers
