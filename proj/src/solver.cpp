#include "burgers/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "burgers/error.hpp"
#include "burgers/operators.hpp"

namespace burgers {

std::string to_string(Integrator i) { return i == Integrator::if_rk4 ? "ifrk4" : "ifeuler"; }

Integrator integrator_from_string(const std::string& s) {
  if (s == "ifrk4") return Integrator::if_rk4;
  if (s == "ifeuler") return Integrator::if_euler;
  throw InvalidArgument("unknown integrator '" + s + "' (expected ifrk4|ifeuler)");
}

void BurgersProblem::validate() const {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidArgument("nu must be > 0");
  if (u0.components() != domain().dimension())
    throw InvalidArgument("u0 needs one component per space dimension");
  for (const auto& t : forcing.terms()) {
    if (!(t.shape.basis().domain() == domain())) throw InvalidArgument("forcing and u0 must share the domain");
    if (t.shape.components() != u0.components()) throw InvalidArgument("forcing component count differs from u0");
  }
}

void SolverConfig::validate() const {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be > 0");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be >= 0");
  if (record_every < 1) throw InvalidArgument("record_every must be >= 1");
}

double energy_ceiling(double u0_sq, double f_sq, double nu, double lambda1, double t) {
  const double decay = std::exp(-nu * lambda1 * t);
  return u0_sq * decay + f_sq / (nu * nu * lambda1 * lambda1) * (1.0 - decay);
}

namespace {

// Evaluates P_m B(u, u) on raw coefficient vectors with reusable buffers.
class Advection {
 public:
  explicit Advection(const EigenBasis& basis)
      : tr_(basis.transform()), dim_(basis.domain().dimension()), m_(basis.size()) {
    const std::size_t n = tr_.grid().size();
    u_.assign(static_cast<std::size_t>(dim_), std::vector<double>(n));
    du_.resize(n);
    g_.resize(n);
  }

  // out = P_m B(a, a); a and out hold dim * m coefficients.
  void operator()(std::span<const double> a, std::span<double> out) {
    for (int i = 0; i < dim_; ++i) tr_.synthesize(a.subspan(static_cast<std::size_t>(i) * m_, m_), -1, u_[static_cast<std::size_t>(i)]);
    for (int c = 0; c < dim_; ++c) {
      std::fill(g_.begin(), g_.end(), 0.0);
      const auto ac = a.subspan(static_cast<std::size_t>(c) * m_, m_);
      for (int i = 0; i < dim_; ++i) {
        tr_.synthesize(ac, i, du_);
        const auto& ui = u_[static_cast<std::size_t>(i)];
        for (std::size_t p = 0; p < g_.size(); ++p) g_[p] += ui[p] * du_[p];
      }
      tr_.analyze(g_, out.subspan(static_cast<std::size_t>(c) * m_, m_));
    }
  }

 private:
  const GridTransform& tr_;
  int dim_;
  std::size_t m_;
  std::vector<std::vector<double>> u_;
  std::vector<double> du_;
  std::vector<double> g_;
};

BasisPtr truncated_basis(const SpectralField& u0, std::size_t m) {
  if (m > u0.modes()) throw InvalidArgument("solver m exceeds the truncation of u0's basis");
  return m == u0.modes() ? u0.basis_ptr() : build_basis(u0.basis().domain(), m);
}

}  // namespace

SpectralField rhs(double t, const SpectralField& u, const BurgersProblem& problem, std::size_t m) {
  if (m > u.modes()) throw InvalidArgument("rhs: m exceeds the state truncation");
  const BasisPtr& basis = u.basis_ptr();
  SpectralField out = problem.forcing.at(t, basis, u.components());
  const SpectralField bu = problem.advection ? apply_B(u, m) : SpectralField(basis, u.components());
  const double alpha = problem.forcing.damping();
  for (int c = 0; c < u.components(); ++c) {
    for (std::size_t j = 0; j < u.modes(); ++j) {
      if (j >= m) {
        out(c, j) = 0.0;
        continue;
      }
      out(c, j) -= (problem.nu * basis->eigenvalue(j) + alpha) * u(c, j) + bu(c, j);
    }
  }
  return out;
}

Diagnostics diagnose(double t, const SpectralField& u, const BurgersProblem& problem) {
  Diagnostics d;
  const auto& b = u.basis();
  for (int c = 0; c < u.components(); ++c) {
    for (std::size_t j = 0; j < u.modes(); ++j) {
      const double a = u(c, j);
      const double lam = b.eigenvalue(j);
      d.l2_sq += a * a;
      d.v_sq += lam * a * a;
      d.a_sq += lam * lam * a * a;
    }
  }
  d.b_uuu = problem.advection ? trilinear_b(u, u, u) : 0.0;
  d.f_u = inner(problem.forcing.at(t, u.basis_ptr(), u.components()), u) - problem.forcing.damping() * d.l2_sq;
  return d;
}

Trajectory integrate(const BurgersProblem& problem, const SolverConfig& config) {
  problem.validate();
  config.validate();
  const BasisPtr basis = truncated_basis(problem.u0, config.m);
  const std::size_t m = basis->size();
  const int comps = problem.u0.components();
  const std::size_t n = static_cast<std::size_t>(comps) * m;

  SpectralField state = resize(problem.u0, basis);
  const double alpha = problem.forcing.damping();
  const bool steady = problem.forcing.time_independent();
  const SpectralField f_steady = steady ? problem.forcing.steady(basis, comps) : SpectralField(basis, comps);

  // Energy ceiling applies to the undamped, steadily forced, mean-free problem.
  const bool ceiling = steady && alpha == 0.0 && basis->lambda1() > 0.0;
  const double u0_sq = l2_norm(problem.u0) * l2_norm(problem.u0);
  const double f_sq = l2_norm(f_steady) * l2_norm(f_steady);

  std::vector<double> rate(n);
  for (int c = 0; c < comps; ++c)
    for (std::size_t j = 0; j < m; ++j) rate[static_cast<std::size_t>(c) * m + j] = problem.nu * basis->eigenvalue(j) + alpha;

  Advection advection(*basis);
  // N(t, a) = P_m f(t) - P_m B(a, a)
  auto nonlinear = [&](double t, std::span<const double> a, std::span<double> out) {
    if (problem.advection) {
      advection(a, out);
      for (auto& v : out) v = -v;
    } else {
      std::fill(out.begin(), out.end(), 0.0);
    }
    if (steady) {
      const auto f = f_steady.coefficients();
      for (std::size_t i = 0; i < n; ++i) out[i] += f[i];
    } else {
      const SpectralField f = problem.forcing.at(t, basis, comps);
      const auto fc = f.coefficients();
      for (std::size_t i = 0; i < n; ++i) out[i] += fc[i];
    }
  };

  const double dt = config.dt;
  const std::size_t steps =
      config.t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(config.t_end / dt - 1e-9));

  Trajectory traj;
  traj.basis = basis;
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.push_back(state);
    traj.diagnostics.push_back(diagnose(t, state, problem));
  };
  record(0.0);

  std::vector<double> e_full(n), e_half(n);
  double e_dt = -1.0;
  auto set_exponentials = [&](double h) {
    if (h == e_dt) return;
    for (std::size_t i = 0; i < n; ++i) {
      e_full[i] = std::exp(-rate[i] * h);
      e_half[i] = std::exp(-rate[i] * h / 2.0);
    }
    e_dt = h;
  };

  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  auto a = state.coefficients();
  for (std::size_t step = 1; step <= steps; ++step) {
    const double t0 = static_cast<double>(step - 1) * dt;
    const double t1 = step == steps ? config.t_end : static_cast<double>(step) * dt;
    const double h = t1 - t0;
    set_exponentials(h);
    if (config.integrator == Integrator::if_euler) {
      nonlinear(t0, a, k1);
      for (std::size_t i = 0; i < n; ++i) a[i] = e_full[i] * (a[i] + h * k1[i]);
    } else {
      nonlinear(t0, a, k1);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = e_half[i] * (a[i] + 0.5 * h * k1[i]);
      nonlinear(t0 + 0.5 * h, tmp, k2);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = e_half[i] * a[i] + 0.5 * h * k2[i];
      nonlinear(t0 + 0.5 * h, tmp, k3);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = e_full[i] * a[i] + h * e_half[i] * k3[i];
      nonlinear(t1, tmp, k4);
      for (std::size_t i = 0; i < n; ++i)
        a[i] = e_full[i] * a[i] + h / 6.0 * (e_full[i] * k1[i] + 2.0 * e_half[i] * (k2[i] + k3[i]) + k4[i]);
    }

    double energy = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      finite = finite && std::isfinite(a[i]);
      energy += a[i] * a[i];
    }
    if (!finite || (ceiling && energy > 1e6 * energy_ceiling(u0_sq, f_sq, problem.nu, basis->lambda1(), t1))) {
      std::ostringstream os;
      os << "blow-up at step " << step << " (t = " << t1 << "): "
         << (finite ? "energy exceeds 1e6 x the a priori ceiling" : "non-finite coefficient");
      throw BlowUpError(step, t1, os.str());
    }
    if (step % config.record_every == 0 || step == steps) record(t1);
  }
  return traj;
}

std::pair<Trajectory, Trajectory> galerkin_pair(const BurgersProblem& problem, const SolverConfig& config,
                                                std::size_t m1, std::size_t m2) {
  if (!(m1 < m2)) throw InvalidArgument("galerkin_pair: m1 < m2 required");
  if (m2 > problem.u0.modes()) throw InvalidArgument("galerkin_pair: m2 exceeds the basis size");
  SolverConfig c1 = config;
  c1.m = m1;
  SolverConfig c2 = config;
  c2.m = m2;
  return {integrate(problem, c1), integrate(problem, c2)};
}

}  // namespace burgers
