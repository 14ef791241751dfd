#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "burgers/field.hpp"
#include "burgers/forcing.hpp"

namespace burgers {

/// du/dt + nu A u + B(u) = f, u(0) = u0.
struct BurgersProblem {
  double nu = 1.0;
  SpectralField u0;
  Forcing forcing{};
  /// false drops B(u) (linear heat flow); used by tests and linear-response runs.
  bool advection = true;

  const Domain& domain() const noexcept { return u0.basis().domain(); }
  void validate() const;
};

enum class Integrator { if_rk4, if_euler };

std::string to_string(Integrator i);
Integrator integrator_from_string(const std::string& s);

struct SolverConfig {
  std::size_t m = 64;
  double dt = 1e-3;
  double t_end = 1.0;
  Integrator integrator = Integrator::if_rk4;
  std::size_t record_every = 10;

  void validate() const;
};

/// Per-snapshot energy bookkeeping.
struct Diagnostics {
  double l2_sq = 0.0;   ///< ||u||^2
  double v_sq = 0.0;    ///< ||u||_V^2
  double a_sq = 0.0;    ///< ||Au||^2
  double b_uuu = 0.0;   ///< b(u, u, u); in 2D the skew defect -(1/2) int (div u)|u|^2
  double f_u = 0.0;     ///< (f(t), u) including the -alpha ||u||^2 damping power
};

struct Trajectory {
  BasisPtr basis;
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<Diagnostics> diagnostics;

  std::size_t size() const noexcept { return times.size(); }
};

/// P_m f(t) - (nu A + alpha) u - P_m B(u, u) for a state on an m-mode basis
/// (or a larger basis, in which case modes beyond m are ignored).
SpectralField rhs(double t, const SpectralField& u, const BurgersProblem& problem, std::size_t m);

/// ||u0||^2 e^{-nu l1 t} + ||f||^2 (1 - e^{-nu l1 t}) / (nu l1)^2
double energy_ceiling(double u0_sq, double f_sq, double nu, double lambda1, double t);

/// Integrating-factor time stepping of the m-mode Galerkin system. The
/// diagonal term (nu lambda_j + alpha) is propagated exactly; forcing and
/// advection use the configured explicit rule. Snapshots are taken every
/// `record_every` steps and always at t = 0 and t_end.
///
/// Throws BlowUpError on non-finite coefficients or, when the a priori energy
/// ceiling applies, energy above 1e6 times that ceiling.
Trajectory integrate(const BurgersProblem& problem, const SolverConfig& config);

/// Runs with truncations m1 < m2 on identical time grids.
std::pair<Trajectory, Trajectory> galerkin_pair(const BurgersProblem& problem, const SolverConfig& config,
                                                std::size_t m1, std::size_t m2);

/// Diagnostics of a single state.
Diagnostics diagnose(double t, const SpectralField& u, const BurgersProblem& problem);

}  // namespace burgers
