#include "burgers/presets.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "burgers/error.hpp"

namespace burgers {

SpectralField sample(const BasisPtr& basis, int components, const PointFunction& fn) {
  const Domain& d = basis->domain();
  std::array<int, 2> res{1, 1};
  for (int a = 0; a < d.dimension(); ++a) res[static_cast<std::size_t>(a)] = 4 * dealiased_resolution(basis->max_index(a));
  const auto grid = make_grid(d, res);
  GridField g(grid, components);
  for (int c = 0; c < components; ++c) {
    auto vals = g.component(c);
    double integral = 0.0;
    for (std::size_t iy = 0; iy < grid->ny(); ++iy) {
      for (std::size_t ix = 0; ix < grid->nx(); ++ix) {
        const double v = fn(c, grid->axes[0].nodes[ix], grid->axes[1].nodes[iy]);
        if (!std::isfinite(v)) throw InvalidArgument("sample: function returned a non-finite value");
        vals[iy * grid->nx() + ix] = v;
        integral += v * grid->axes[0].weights[ix] * grid->axes[1].weights[iy];
      }
    }
    if (d.periodic() && !d.include_mean() && std::abs(integral / d.measure()) > 1e-10)
      throw InvalidArgument("sample: nonzero mean on a mean-excluded domain (set include_mean)");
  }
  return from_grid(g, basis);
}

SpectralField sine_preset(const BasisPtr& basis, int components, double amplitude, int wavenumber) {
  if (wavenumber < 1) throw InvalidArgument("sine preset: wavenumber must be >= 1");
  const Domain& d = basis->domain();
  const double scale = d.periodic() ? 2.0 : 1.0;
  const double w1 = scale * wavenumber * std::numbers::pi / d.length(0);
  const double w2 = d.dimension() == 2 ? scale * wavenumber * std::numbers::pi / d.length(1) : 0.0;
  const int dim = d.dimension();
  return sample(basis, components, [=](int, double x, double y) {
    return dim == 2 ? amplitude * std::sin(w1 * x) * std::sin(w2 * y) : amplitude * std::sin(w1 * x);
  });
}

SpectralField smoothed_step_preset(const BasisPtr& basis, double amplitude, double width, double position,
                                   double mean) {
  const Domain& d = basis->domain();
  if (d.dimension() != 1 || !d.periodic()) throw InvalidArgument("smoothed_step preset: 1D periodic domain required");
  if (!(width > 0.0)) throw InvalidArgument("smoothed_step preset: width must be > 0");
  const double L = d.length(0);
  const double x0 = position < 0.0 ? 0.5 * L : position;
  const double r = std::exp(-width);
  return sample(basis, 1, [=](int, double x, double) {
    const double th = 2.0 * std::numbers::pi * (x - x0) / L;
    return mean + amplitude * (2.0 / std::numbers::pi) * std::atan2(r * std::sin(th), 1.0 - r * std::cos(th));
  });
}

SpectralField random_preset(const BasisPtr& basis, int components, std::uint64_t seed, double l2, double decay,
                            bool keep_mean) {
  if (!(l2 >= 0.0)) throw InvalidArgument("random preset: l2 must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField out(basis, components);
  for (int c = 0; c < components; ++c) {
    for (std::size_t j = 0; j < basis->size(); ++j) {
      const double a = normal(rng) * std::pow(1.0 + basis->eigenvalue(j), -decay);
      out(c, j) = basis->eigenvalue(j) == 0.0 && !keep_mean ? 0.0 : a;
    }
  }
  const double n = l2_norm(out);
  if (n > 0.0) out *= l2 / n;
  return out;
}

SpectralField coefficient_preset(const BasisPtr& basis, int components, const std::vector<double>& coefficients) {
  const std::size_t n = static_cast<std::size_t>(components) * basis->size();
  if (coefficients.size() > n) throw InvalidArgument("coefficient preset: more coefficients than components x modes");
  std::vector<double> c(coefficients);
  c.resize(n, 0.0);
  return SpectralField(basis, components, std::move(c));
}

}  // namespace burgers
