#pragma once

#include "burgers/field.hpp"

namespace burgers {

/// Exact solution of u_t + u u_x = nu u_xx on a 1D periodic interval with no
/// forcing, via u = c - 2 nu phi_x / phi, phi solving the heat equation.
///
/// The heat flow is advanced in Fourier space on an internal grid of at least
/// max(512, 8 m) points (a power of two), where m is the size of the larger of
/// u0's basis and `target`. A nonzero mean c is removed by the Galilean shift
/// u(x, t) = c + v(x - c t, t). The result is projected onto `target`
/// (u0's basis when null).
///
/// Round-off in phi grows like exp(osc / (2 nu)), osc the oscillation of the
/// potential of u0; InvalidArgument is thrown when this exceeds 1e280.
SpectralField cole_hopf_oracle(const SpectralField& u0, double nu, double t, BasisPtr target = nullptr);

}  // namespace burgers
