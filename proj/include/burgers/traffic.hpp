#pragma once

#include <string>
#include <variant>
#include <vector>

#include "burgers/forcing.hpp"
#include "burgers/solver.hpp"

namespace burgers {

/// Relaxation toward an inflow level: f = -alpha u + beta.
struct Ramp {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Mollified point source amplitude * k_sigma(x - x_k) switched by a square
/// wave: on for the first duty * period of every period.
struct TrafficLight {
  double x_k = 0.0;
  double sigma = 0.1;
  double period = 1.0;
  double duty = 0.5;
  double amplitude = 0.0;
};

/// Mollified point source active on [t_on, t_off] (an accident).
struct Pulse {
  double x0 = 0.0;
  double width = 0.1;
  double amplitude = 0.0;
  double t_on = 0.0;
  double t_off = 0.0;
};

using SourceTerm = std::variant<Ramp, TrafficLight, Pulse>;

/// Unit-mass periodic Gaussian of width sigma centred at x0, projected onto
/// a 1D periodic basis carrying the mean. Coefficients are analytic.
SpectralField gaussian_kernel(const BasisPtr& basis, double x0, double sigma);

/// Smoothed indicator of [t_on, t_off]; each edge is a smoothstep over `ramp`.
double smoothed_window(double t, double t_on, double t_off, double ramp);

/// Square wave of the given period and duty with smoothstep edges of width `ramp`.
double smoothed_square_wave(double t, double period, double duty, double ramp);

/// Forcing for a list of sources on a 1D periodic basis with include_mean.
/// Switching edges are smoothed over 2 dt. Kernel widths must be at least two
/// grid spacings of the basis grid.
Forcing build_source(const std::vector<SourceTerm>& sources, const BasisPtr& basis, double dt);

enum class Classification { shock, rarefaction, smooth };
std::string to_string(Classification c);

struct ShockDiagnostics {
  std::vector<double> times;
  std::vector<double> max_gradient;  ///< max |u_x| over the basis grid
  std::vector<double> position;      ///< argmax |u_x|, ties to smallest x; NaN when u_x = 0
  Classification classification = Classification::smooth;
};

/// Shock if max_t max_gradient >= 5 max_gradient(0); rarefaction if
/// max_gradient(t_end) <= 0.5 max_gradient(0); smooth otherwise (and always
/// when max_gradient(0) = 0).
ShockDiagnostics detect_shock(const Trajectory& trajectory);

struct ScenarioReport {
  Trajectory trajectory;
  ShockDiagnostics shock;
  std::vector<double> mean;  ///< spatial mean per snapshot
};

/// Integrates the 1D periodic problem (include_mean required) with the
/// scenario forcing. BlowUpError messages carry the scenario description.
ScenarioReport run_scenario(const std::vector<SourceTerm>& sources, const SpectralField& u0, double nu,
                            const SolverConfig& config);

std::string describe(const SourceTerm& source);

}  // namespace burgers
