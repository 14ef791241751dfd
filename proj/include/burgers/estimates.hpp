#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "burgers/solver.hpp"

namespace burgers {

/// Pointwise comparison of a measured quantity against a proved bound.
///
/// A sample violates the bound when measured - bound > abs_tol + rel_tol * |bound|.
struct BoundReport {
  std::string quantity;
  std::vector<double> times;
  std::vector<double> measured;
  std::vector<double> bound;
  double worst_margin = 0.0;  ///< min over samples of bound - measured
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  bool violated = false;
  /// True when the bound's derivation needs a hypothesis the data may not meet
  /// (2D energy bounds without div u = 0).
  bool conditional = false;
  /// Named scalars reported with the bound (fitted constants, window sizes).
  std::vector<std::pair<std::string, double>> annotations;

  std::vector<double> margins() const;
};

/// Fills worst_margin and violated from the arrays and tolerances.
BoundReport make_report(std::string quantity, std::vector<double> times, std::vector<double> measured,
                        std::vector<double> bound, double rel_tol, double abs_tol);

/// Sampled g, h, y on the uniform grid t0 + i dt and the window constants
///   a1 >= int_t^{t+r} g, a2 >= int_t^{t+r} h, a3 >= int_t^{t+r} y  for all t.
struct GronwallData {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> g;
  std::vector<double> h;
  std::vector<double> y;
  double r = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  /// Throws InvalidArgument if the samples are negative, the arrays differ
  /// in length, or a_i is below the sampled window maximum.
  void check() const;
};

/// Supremum over window starts of int_t^{t+r} of the piecewise linear
/// interpolant of `f` (samples spaced dt). Window starts range over grid nodes
/// and nodes minus r inside [0, T - r]. Throws if r exceeds the span.
double window_sup(const std::vector<double>& f, double dt, double r);

/// Builds GronwallData with a1, a2, a3 set to the sampled window suprema.
GronwallData gronwall_data(double t0, double dt, std::vector<double> g, std::vector<double> h, std::vector<double> y,
                           double r);

/// (a3 / r + a2) e^{a1}
double uniform_gronwall_bound(const GronwallData& data);

/// ||u(t)||^2 against ||u0||^2 e^{-nu l1 t} + ||f||^2 (1 - e^{-nu l1 t}) / (nu l1)^2.
/// Requires a mean-free basis, steady f and no damping. 2D reports are
/// conditional and carry the largest |skew defect| seen.
BoundReport gronwall_bound_eq14(const Trajectory& trajectory, const BurgersProblem& problem, double rel_tol = 1e-8);

/// A constant fitted as the largest ratio over a random field family.
struct FittedConstant {
  std::string name;
  double value = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string family;
};

enum class AgmonVariant { h2, h1 };
std::string to_string(AgmonVariant v);

/// ||u||_{L2} ||u||_V^{-1} l1^{1/2}; in (0, 1] for mean-free fields.
double poincare_ratio(const SpectralField& field);

/// H2: ||u||_inf / (||u||^{1/2} ||Au||^{1/2}); H1: ||u||_inf / (||u||^{1/2} ||u||_V^{1/2}).
/// ||u||_inf is the grid maximum (a lower bound of the sup norm).
double agmon_ratio(const SpectralField& field, AgmonVariant variant);

/// ||u||_inf / ||u||_V.
double embedding_ratio(const SpectralField& field);

enum class ConstantKind { agmon_h2, agmon_h1, embedding };
std::string to_string(ConstantKind k);

/// Largest ratio over `samples` random band-limited scalar fields on `basis`
/// drawn with random_preset(seed + i, decay). The family string records the
/// basis and decay.
FittedConstant fit_constant(ConstantKind kind, const BasisPtr& basis, std::size_t samples, std::uint64_t seed,
                            double decay = 1.0);

/// Truncated Green's function on the Dirichlet square (0, pi)^2:
///   u_K = sum_{lambda_j <= K^2} w_j(x0) w_j / lambda_j,  x0 = (pi/2, pi/2).
/// The H1 Agmon ratio grows like (log K)^{3/4}; the H2 ratio stays bounded.
SpectralField agmon_divergent_sequence(int K);

struct EnstrophyOptions {
  double r = 0.0;                 ///< window; 0 selects t_end / 10
  double c1 = 0.0;                ///< H1 Agmon constant; 0 fits one
  std::size_t fit_samples = 200;
  std::uint64_t fit_seed = 7;
  double rel_tol = 1e-8;
};

/// ||u(t)||_V^2 for t >= r against (a3/r + a2) e^{a1} from the trajectory's own
/// windows with g = (2 c1'/nu^3) ||u||^2 ||u||_V^2, h = (2/nu) ||f||^2,
/// y = ||u||_V^2 and c1' = c1^2. Needs uniformly spaced snapshots.
BoundReport enstrophy_trace(const Trajectory& trajectory, const BurgersProblem& problem,
                            const EnstrophyOptions& options = {});

struct UniquenessResult {
  BoundReport report;          ///< ||u1 - u2||^2 vs ||p||^2 exp((c^2/nu) int ||u2||_V^2)
  FittedConstant constant;     ///< c
  double sup_difference = 0.0;  ///< sup_t ||u1 - u2||^2
  double halving_ratio = 0.0;  ///< sup with p/2 over sup with p (expected near 1/4)
};

/// Runs u0 + p and u0 on the same grid. `max_relative` caps ||p|| / ||u0||.
/// The constant is the embedding constant fitted on the problem's basis.
UniquenessResult uniqueness_experiment(const BurgersProblem& problem, const SpectralField& perturbation,
                                       const SolverConfig& config, double max_relative = 1e-2,
                                       std::size_t fit_samples = 200, std::uint64_t fit_seed = 11);

struct DependenceResult {
  std::vector<double> times;
  std::vector<double> difference;  ///< ||u_{f+df} - u_f||(t)
  double sup_difference = 0.0;
  double ratio_to_delta = 0.0;     ///< sup / ||df||
  double halving_ratio = 0.0;      ///< sup with df/2 over sup with df (expected near 1/2)
};

/// Runs f and f + delta_f (steady); compares trajectories snapshot by snapshot.
DependenceResult continuous_dependence_experiment(const BurgersProblem& problem, const SpectralField& delta_f,
                                                  const SolverConfig& config);

struct ConvergenceRow {
  std::size_t m = 0;
  double error = 0.0;  ///< ||u_m - u_{2m}|| at t_end
};

/// Rows sorted by m. Requires increasing m and 2 max(m) <= u0's basis size.
/// Distinct truncations run on up to `threads` workers.
std::vector<ConvergenceRow> convergence_study(const BurgersProblem& problem, const SolverConfig& config,
                                              const std::vector<std::size_t>& m_list, int threads = 1);

struct EnergyResidual {
  std::vector<double> times;
  std::vector<double> rate;      ///< (E(t+dt) - E(t-dt)) / (4 dt), E = ||u||^2
  std::vector<double> balance;   ///< (f, u) - nu ||u||_V^2 - b(u, u, u)
  double max_abs = 0.0;
};

/// Integrates with record_every = 1 and compares the centered energy rate to
/// the energy balance at every interior step of uniform spacing.
EnergyResidual energy_identity_residual(const BurgersProblem& problem, const SolverConfig& config);

}  // namespace burgers
