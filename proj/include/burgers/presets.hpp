#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burgers/field.hpp"

namespace burgers {

/// Pointwise description of a field: value of component c at (x, y).
using PointFunction = std::function<double(int c, double x, double y)>;

/// L2 projection of a pointwise function onto `basis`, computed on a grid four
/// times finer than the dealiased one. On mean-excluded periodic domains the
/// function must have zero mean (|mean| <= 1e-10), otherwise InvalidArgument.
SpectralField sample(const BasisPtr& basis, int components, const PointFunction& fn);

/// amplitude * sin(k pi x / L) (Dirichlet) or amplitude * sin(2 k pi x / L)
/// (periodic) per axis; in 2D both components get the product of the axis
/// sines.
SpectralField sine_preset(const BasisPtr& basis, int components, double amplitude = 1.0, int wavenumber = 1);

/// Periodic 1D smoothed sawtooth
///   mean + amplitude * (2/pi) atan(r sin(theta) / (1 - r cos(theta))),
///   theta = 2 pi (x - position) / L, r = exp(-width),
/// a steep rise at `position` followed by a gentle linear decline. Smaller
/// `width` gives a steeper rise.
SpectralField smoothed_step_preset(const BasisPtr& basis, double amplitude = 1.0, double width = 0.1,
                                   double position = -1.0, double mean = 0.0);

/// Random band-limited field: a_{c,j} ~ N(0, 1) (1 + lambda_j)^{-decay},
/// rescaled to the requested L2 norm. The constant mode, if carried, is zeroed
/// unless `keep_mean` is set. Deterministic in `seed`.
SpectralField random_preset(const BasisPtr& basis, int components, std::uint64_t seed, double l2 = 1.0,
                            double decay = 1.0, bool keep_mean = false);

/// Explicit coefficient list, zero-padded to the basis size. Throws if longer.
SpectralField coefficient_preset(const BasisPtr& basis, int components, const std::vector<double>& coefficients);

}  // namespace burgers
