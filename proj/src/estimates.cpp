#include "burgers/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "burgers/error.hpp"
#include "burgers/operators.hpp"
#include "burgers/parallel.hpp"
#include "burgers/presets.hpp"

namespace burgers {

std::vector<double> BoundReport::margins() const {
  std::vector<double> out(times.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bound[i] - measured[i];
  return out;
}

BoundReport make_report(std::string quantity, std::vector<double> times, std::vector<double> measured,
                        std::vector<double> bound, double rel_tol, double abs_tol) {
  if (times.size() != measured.size() || times.size() != bound.size())
    throw InvalidArgument("make_report: array lengths differ");
  BoundReport r;
  r.quantity = std::move(quantity);
  r.times = std::move(times);
  r.measured = std::move(measured);
  r.bound = std::move(bound);
  r.rel_tol = rel_tol;
  r.abs_tol = abs_tol;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const double margin = r.bound[i] - r.measured[i];
    r.worst_margin = std::min(r.worst_margin, margin);
    if (-margin > abs_tol + rel_tol * std::abs(r.bound[i])) r.violated = true;
  }
  if (r.times.empty()) r.worst_margin = 0.0;
  return r;
}

namespace {

// Piecewise linear interpolant of samples spaced dt and its running integral.
struct Linear {
  const std::vector<double>& f;
  double dt;
  std::vector<double> cumulative;

  Linear(const std::vector<double>& samples, double step) : f(samples), dt(step), cumulative(samples.size(), 0.0) {
    for (std::size_t i = 1; i < f.size(); ++i) cumulative[i] = cumulative[i - 1] + 0.5 * dt * (f[i - 1] + f[i]);
  }
  double span() const { return dt * static_cast<double>(f.size() - 1); }
  std::size_t cell(double t) const {
    const auto k = static_cast<std::size_t>(std::max(0.0, std::floor(t / dt)));
    return std::min(k, f.size() - 2);
  }
  double value(double t) const {
    const std::size_t k = cell(t);
    const double s = t - static_cast<double>(k) * dt;
    return f[k] + (f[k + 1] - f[k]) * s / dt;
  }
  double integral(double t) const {
    const std::size_t k = cell(t);
    const double s = t - static_cast<double>(k) * dt;
    return cumulative[k] + f[k] * s + (f[k + 1] - f[k]) * s * s / (2.0 * dt);
  }
};

}  // namespace

double window_sup(const std::vector<double>& f, double dt, double r) {
  if (!(r > 0.0)) throw InvalidArgument("window_sup: r must be > 0");
  if (!(dt > 0.0)) throw InvalidArgument("window_sup: dt must be > 0");
  if (f.size() < 2) throw InvalidArgument("window_sup: need at least two samples");
  const Linear lin(f, dt);
  const double last = lin.span() - r;
  if (last < -1e-12 * lin.span()) throw InvalidArgument("window_sup: window r exceeds the sampled span");
  const double end = std::max(0.0, last);

  std::vector<double> starts{0.0, end};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double t = static_cast<double>(i) * dt;
    if (t <= end) starts.push_back(t);
    if (t - r >= 0.0 && t - r <= end) starts.push_back(t - r);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  auto window = [&](double t) { return lin.integral(std::min(t + r, lin.span())) - lin.integral(t); };
  auto slope = [&](double t) { return lin.value(std::min(t + r, lin.span())) - lin.value(t); };
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    best = std::max(best, window(starts[i]));
    if (i + 1 == starts.size()) break;
    // Between breakpoints the window integral is quadratic; check its vertex.
    const double p = starts[i];
    const double q = starts[i + 1];
    const double dp = slope(p + 1e-9 * (q - p));
    const double dq = slope(q - 1e-9 * (q - p));
    if (dp > 0.0 && dq < 0.0) {
      const double root = p + (q - p) * dp / (dp - dq);
      best = std::max(best, window(std::clamp(root, p, q)));
    }
  }
  return best;
}

void GronwallData::check() const {
  if (g.size() != h.size() || g.size() != y.size()) throw InvalidArgument("GronwallData: g, h, y lengths differ");
  if (!(r > 0.0)) throw InvalidArgument("GronwallData: r must be > 0");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0.0 || h[i] < 0.0 || y[i] < 0.0) throw InvalidArgument("GronwallData: g, h, y must be nonnegative");
  const double tol = 1e-12;
  if (a1 < window_sup(g, dt, r) * (1.0 - tol) || a2 < window_sup(h, dt, r) * (1.0 - tol) ||
      a3 < window_sup(y, dt, r) * (1.0 - tol))
    throw InvalidArgument("GronwallData: a1, a2, a3 must bound the window integrals of g, h, y");
}

GronwallData gronwall_data(double t0, double dt, std::vector<double> g, std::vector<double> h, std::vector<double> y,
                           double r) {
  GronwallData d;
  d.t0 = t0;
  d.dt = dt;
  d.r = r;
  d.a1 = window_sup(g, dt, r);
  d.a2 = window_sup(h, dt, r);
  d.a3 = window_sup(y, dt, r);
  d.g = std::move(g);
  d.h = std::move(h);
  d.y = std::move(y);
  d.check();
  return d;
}

double uniform_gronwall_bound(const GronwallData& data) {
  if (!(data.r > 0.0)) throw InvalidArgument("uniform_gronwall_bound: r must be > 0");
  return (data.a3 / data.r + data.a2) * std::exp(data.a1);
}

BoundReport gronwall_bound_eq14(const Trajectory& trajectory, const BurgersProblem& problem, double rel_tol) {
  const Domain& d = problem.domain();
  if (d.include_mean()) throw InvalidArgument("gronwall_bound: needs a mean-free basis (lambda_1 > 0)");
  if (!problem.forcing.time_independent()) throw InvalidArgument("gronwall_bound: forcing must be time-independent");
  if (problem.forcing.damping() != 0.0) throw InvalidArgument("gronwall_bound: damping not covered by the bound");
  const double lambda1 = trajectory.basis->lambda1();
  const double u0 = l2_norm(problem.u0);
  const double f = problem.forcing.has_terms()
                       ? l2_norm(problem.forcing.steady(problem.u0.basis_ptr(), problem.u0.components()))
                       : 0.0;
  std::vector<double> measured, bound;
  double defect = 0.0;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    measured.push_back(trajectory.diagnostics[i].l2_sq);
    bound.push_back(energy_ceiling(u0 * u0, f * f, problem.nu, lambda1, trajectory.times[i]));
    if (d.dimension() == 2) defect = std::max(defect, std::abs(skew_defect(trajectory.states[i], trajectory.states[i])));
  }
  BoundReport r = make_report("l2_sq", trajectory.times, std::move(measured), std::move(bound), rel_tol, 0.0);
  r.annotations.emplace_back("lambda1", lambda1);
  r.annotations.emplace_back("nu", problem.nu);
  if (d.dimension() == 2) {
    r.conditional = true;
    r.annotations.emplace_back("max_abs_skew_defect", defect);
  }
  return r;
}

std::string to_string(AgmonVariant v) { return v == AgmonVariant::h2 ? "h2" : "h1"; }

std::string to_string(ConstantKind k) {
  switch (k) {
    case ConstantKind::agmon_h2: return "agmon_h2";
    case ConstantKind::agmon_h1: return "agmon_h1";
    case ConstantKind::embedding: return "embedding";
  }
  return "?";
}

double poincare_ratio(const SpectralField& field) {
  if (field.basis().lambda1() <= 0.0) throw InvalidArgument("poincare_ratio: basis carries the constant mode");
  const Norms n = norms(field);
  if (n.l2 == 0.0) throw InvalidArgument("poincare_ratio: zero field");
  return n.l2 / n.v * std::sqrt(field.basis().lambda1());
}

double agmon_ratio(const SpectralField& field, AgmonVariant variant) {
  const Norms n = norms(field);
  if (n.l2 == 0.0) throw InvalidArgument("agmon_ratio: zero field");
  const double upper = variant == AgmonVariant::h2 ? n.h2 : n.v;
  return n.linf / std::sqrt(n.l2 * upper);
}

double embedding_ratio(const SpectralField& field) {
  const Norms n = norms(field);
  if (n.v == 0.0) throw InvalidArgument("embedding_ratio: field has zero V norm");
  return n.linf / n.v;
}

FittedConstant fit_constant(ConstantKind kind, const BasisPtr& basis, std::size_t samples, std::uint64_t seed,
                            double decay) {
  if (samples == 0) throw InvalidArgument("fit_constant: samples must be >= 1");
  FittedConstant c;
  c.name = to_string(kind);
  c.samples = samples;
  c.seed = seed;
  std::ostringstream fam;
  const Domain& d = basis->domain();
  fam << "random_preset decay=" << decay << " m=" << basis->size() << " dim=" << d.dimension() << ' '
      << to_string(d.boundary());
  c.family = fam.str();
  for (std::size_t i = 0; i < samples; ++i) {
    const SpectralField u = random_preset(basis, 1, seed + i, 1.0, decay);
    double ratio = 0.0;
    switch (kind) {
      case ConstantKind::agmon_h2: ratio = agmon_ratio(u, AgmonVariant::h2); break;
      case ConstantKind::agmon_h1: ratio = agmon_ratio(u, AgmonVariant::h1); break;
      case ConstantKind::embedding: ratio = embedding_ratio(u); break;
    }
    c.value = std::max(c.value, ratio);
  }
  return c;
}

SpectralField agmon_divergent_sequence(int K) {
  if (K < 1) throw InvalidArgument("agmon_divergent_sequence: K must be >= 1");
  const double pi = std::numbers::pi;
  const Domain d = Domain::rectangle(pi, pi, Boundary::dirichlet);
  std::size_t count = 0;
  for (int k = 1; k <= K; ++k)
    for (int l = 1; l <= K; ++l)
      if (k * k + l * l <= K * K) ++count;
  if (count == 0) throw InvalidArgument("agmon_divergent_sequence: K too small for any mode");
  const BasisPtr basis = build_basis(d, count);
  SpectralField u(basis, 1);
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const Mode& mode = basis->mode(j);
    const double w = axis_value(d.boundary(), pi, mode.axis[0], 0.5 * pi) * axis_value(d.boundary(), pi, mode.axis[1], 0.5 * pi);
    u(0, j) = w / mode.eigenvalue;
  }
  return u;
}

namespace {

// Snapshot spacing, dropping a trailing shorter interval.
std::size_t uniform_prefix(const std::vector<double>& times, double& spacing) {
  if (times.size() < 3) throw InvalidArgument("trajectory needs at least three snapshots");
  spacing = times[1] - times[0];
  std::size_t n = times.size();
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::abs((times[i] - times[i - 1]) - spacing) > 1e-9 * spacing) {
      if (i + 1 != times.size()) throw InvalidArgument("trajectory snapshots are not uniformly spaced");
      n = i;
    }
  }
  return n;
}

}  // namespace

BoundReport enstrophy_trace(const Trajectory& trajectory, const BurgersProblem& problem,
                            const EnstrophyOptions& options) {
  double spacing = 0.0;
  const std::size_t n = uniform_prefix(trajectory.times, spacing);
  const double span = trajectory.times[n - 1] - trajectory.times[0];
  const double r = options.r > 0.0 ? options.r : trajectory.times.back() / 10.0;
  if (r > span * (1.0 + 1e-12)) throw InvalidArgument("enstrophy_trace: window r exceeds the trajectory span");

  FittedConstant c1;
  if (options.c1 > 0.0) {
    c1.name = "agmon_h1";
    c1.value = options.c1;
    c1.family = "supplied";
  } else {
    c1 = fit_constant(ConstantKind::agmon_h1, trajectory.basis, options.fit_samples, options.fit_seed);
  }
  const double c1p = c1.value * c1.value;
  const double nu = problem.nu;
  const int comps = problem.u0.components();

  std::vector<double> g(n), h(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Diagnostics& dg = trajectory.diagnostics[i];
    const double f = l2_norm(problem.forcing.at(trajectory.times[i], trajectory.basis, comps));
    g[i] = 2.0 * c1p / (nu * nu * nu) * dg.l2_sq * dg.v_sq;
    h[i] = 2.0 / nu * f * f;
    y[i] = dg.v_sq;
  }
  const GronwallData data = gronwall_data(trajectory.times[0], spacing, g, h, y, std::min(r, span));
  const double b = uniform_gronwall_bound(data);

  std::vector<double> times, measured, bound;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    if (trajectory.times[i] < trajectory.times[0] + r - 1e-12) continue;
    times.push_back(trajectory.times[i]);
    measured.push_back(trajectory.diagnostics[i].v_sq);
    bound.push_back(b);
  }
  BoundReport rep = make_report("v_sq", std::move(times), std::move(measured), std::move(bound), options.rel_tol, 0.0);
  rep.annotations.emplace_back("r", data.r);
  rep.annotations.emplace_back("a1", data.a1);
  rep.annotations.emplace_back("a2", data.a2);
  rep.annotations.emplace_back("a3", data.a3);
  rep.annotations.emplace_back("c1", c1.value);
  rep.annotations.emplace_back("c1_prime", c1p);
  if (problem.domain().dimension() == 2) rep.conditional = true;
  return rep;
}

namespace {

double sup_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

std::vector<double> squared_differences(const Trajectory& a, const Trajectory& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = l2_norm(a.states[i] - b.states[i]);
    out[i] = d * d;
  }
  return out;
}

}  // namespace

UniquenessResult uniqueness_experiment(const BurgersProblem& problem, const SpectralField& perturbation,
                                       const SolverConfig& config, double max_relative, std::size_t fit_samples,
                                       std::uint64_t fit_seed) {
  if (!perturbation.compatible(problem.u0)) throw InvalidArgument("uniqueness_experiment: perturbation basis differs from u0");
  const double u0n = l2_norm(problem.u0);
  if (l2_norm(perturbation) > max_relative * u0n * (1.0 + 1e-12))
    throw InvalidArgument("uniqueness_experiment: perturbation exceeds the allowed fraction of ||u0||");

  BurgersProblem p1 = problem;
  p1.u0 = problem.u0 + perturbation;
  BurgersProblem p_half = problem;
  p_half.u0 = problem.u0 + 0.5 * perturbation;
  const Trajectory u2 = integrate(problem, config);
  const Trajectory u1 = integrate(p1, config);
  const Trajectory uh = integrate(p_half, config);

  UniquenessResult res;
  res.constant = fit_constant(ConstantKind::embedding, u2.basis, fit_samples, fit_seed);
  const double c = res.constant.value;
  const SpectralField p0 = u1.states.front() - u2.states.front();
  const double p_sq = l2_norm(p0) * l2_norm(p0);

  std::vector<double> measured = squared_differences(u1, u2);
  std::vector<double> bound(u2.size());
  double integral = 0.0;
  for (std::size_t i = 0; i < u2.size(); ++i) {
    if (i > 0)
      integral += 0.5 * (u2.times[i] - u2.times[i - 1]) * (u2.diagnostics[i].v_sq + u2.diagnostics[i - 1].v_sq);
    bound[i] = p_sq * std::exp(c * c / problem.nu * integral);
  }
  res.sup_difference = sup_of(measured);
  const double sup_half = sup_of(squared_differences(uh, u2));
  res.halving_ratio = res.sup_difference > 0.0 ? sup_half / res.sup_difference : 0.0;
  res.report = make_report("diff_l2_sq", u2.times, std::move(measured), std::move(bound), 1e-8, 0.0);
  res.report.annotations.emplace_back("c", c);
  res.report.annotations.emplace_back("perturbation_l2_sq", p_sq);
  if (problem.domain().dimension() == 2) res.report.conditional = true;
  return res;
}

DependenceResult continuous_dependence_experiment(const BurgersProblem& problem, const SpectralField& delta_f,
                                                  const SolverConfig& config) {
  if (!(delta_f.basis().domain() == problem.domain()) || delta_f.components() != problem.u0.components())
    throw InvalidArgument("continuous_dependence_experiment: delta_f does not match the problem");
  const Trajectory base = integrate(problem, config);
  auto shifted = [&](double scale) {
    BurgersProblem p = problem;
    p.forcing.add(scale * delta_f);
    return integrate(p, config);
  };
  const Trajectory full = shifted(1.0);
  const Trajectory half = shifted(0.5);

  DependenceResult res;
  res.times = base.times;
  double sup_half = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    res.difference.push_back(l2_norm(full.states[i] - base.states[i]));
    sup_half = std::max(sup_half, l2_norm(half.states[i] - base.states[i]));
  }
  res.sup_difference = sup_of(res.difference);
  const double df = l2_norm(delta_f);
  res.ratio_to_delta = df > 0.0 ? res.sup_difference / df : 0.0;
  res.halving_ratio = res.sup_difference > 0.0 ? sup_half / res.sup_difference : 0.0;
  return res;
}

std::vector<ConvergenceRow> convergence_study(const BurgersProblem& problem, const SolverConfig& config,
                                              const std::vector<std::size_t>& m_list, int threads) {
  if (m_list.empty()) throw InvalidArgument("convergence_study: empty m list");
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1) throw InvalidArgument("convergence_study: m must be >= 1");
    if (i > 0 && m_list[i] <= m_list[i - 1]) throw InvalidArgument("convergence_study: m list must be increasing");
  }
  if (2 * m_list.back() > problem.u0.modes())
    throw InvalidArgument("convergence_study: 2 max(m) exceeds the basis size of u0");

  std::vector<std::size_t> ms;
  for (std::size_t m : m_list) {
    ms.push_back(m);
    ms.push_back(2 * m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const std::vector<SpectralField> finals = parallel_map(ms.size(), threads, [&](std::size_t i) {
    SolverConfig c = config;
    c.m = ms[i];
    c.record_every = std::numeric_limits<std::size_t>::max();
    return integrate(problem, c).states.back();
  });
  auto final_state = [&](std::size_t m) -> const SpectralField& {
    return finals[static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), m) - ms.begin())];
  };
  std::vector<ConvergenceRow> rows;
  for (std::size_t m : m_list) {
    const SpectralField& fine = final_state(2 * m);
    const SpectralField coarse = resize(final_state(m), fine.basis_ptr());
    rows.push_back({m, l2_norm(coarse - fine)});
  }
  return rows;
}

EnergyResidual energy_identity_residual(const BurgersProblem& problem, const SolverConfig& config) {
  SolverConfig c = config;
  c.record_every = 1;
  const Trajectory tr = integrate(problem, c);
  EnergyResidual res;
  for (std::size_t i = 1; i + 1 < tr.size(); ++i) {
    const double h0 = tr.times[i] - tr.times[i - 1];
    const double h1 = tr.times[i + 1] - tr.times[i];
    if (std::abs(h0 - h1) > 1e-9 * h0) continue;
    const Diagnostics& d = tr.diagnostics[i];
    const double rate = (tr.diagnostics[i + 1].l2_sq - tr.diagnostics[i - 1].l2_sq) / (4.0 * h0);
    const double balance = d.f_u - problem.nu * d.v_sq - d.b_uuu;
    res.times.push_back(tr.times[i]);
    res.rate.push_back(rate);
    res.balance.push_back(balance);
    res.max_abs = std::max(res.max_abs, std::abs(rate - balance));
  }
  return res;
}

}  // namespace burgers
