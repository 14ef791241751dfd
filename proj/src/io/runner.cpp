#include "burgers/io/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "burgers/cole_hopf.hpp"
#include "burgers/error.hpp"
#include "burgers/estimates.hpp"
#include "burgers/io/csv.hpp"
#include "burgers/io/hash.hpp"
#include "burgers/parallel.hpp"

#ifndef BURGERS_VERSION
#define BURGERS_VERSION "unknown"
#endif

namespace burgers::io {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string to_string(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::converge: return "converge";
    case Command::verify_bounds: return "verify-bounds";
    case Command::traffic: return "traffic";
    case Command::oracle_check: return "oracle-check";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::solve, Command::converge, Command::verify_bounds, Command::traffic, Command::oracle_check})
    if (to_string(c) == s) return c;
  throw InvalidArgument("unknown command '" + s + "'");
}

namespace {

struct Context {
  const RunSpec& spec;
  fs::path out;
  int threads;
  std::vector<std::string> files;
  json constants = json::array();
  json results = json::object();
  std::vector<std::string> summary;
  int exit_code = kExitOk;

  Context(const RunSpec& s, fs::path o, int t) : spec(s), out(std::move(o)), threads(t) {}

  std::string path(const std::string& name) {
    files.push_back(name);
    return (out / name).string();
  }
  void constant(const FittedConstant& c, const std::string& used_by) {
    constants.push_back({{"name", c.name},
                         {"value", c.value},
                         {"samples", c.samples},
                         {"seed", c.seed},
                         {"family", c.family},
                         {"used_by", used_by}});
  }
  void line(const std::string& s) { summary.push_back(s); }
};

std::string fmt(double v) { return format_double(v); }

BasisPtr solver_basis(const RunSpec& spec, std::size_t size) {
  return build_basis(make_domain(spec.domain), std::max(size, spec.solver.m));
}

void run_solve(Context& ctx) {
  const RunSpec& s = ctx.spec;
  const BasisPtr basis = solver_basis(s, s.solver.m);
  const Trajectory tr = integrate(make_problem(s, basis), s.solver);
  emit_csv(tr, ctx.path("trajectory.csv"));
  emit_coefficients_csv(tr, ctx.path("coefficients.csv"));
  emit_modes_csv(*basis, ctx.path("modes.csv"));
  const Diagnostics& d = tr.diagnostics.back();
  ctx.results = {{"snapshots", tr.size()}, {"final_time", tr.times.back()}, {"final_l2_sq", d.l2_sq}, {"final_v_sq", d.v_sq}};
  ctx.line("solve: " + std::to_string(tr.size()) + " snapshots, ||u(t_end)||^2 = " + fmt(d.l2_sq));
}

void run_converge(Context& ctx) {
  const RunSpec& s = ctx.spec;
  const auto& ms = s.experiment.m_list;
  const BasisPtr basis = solver_basis(s, 2 * ms.back());
  const auto rows = convergence_study(make_problem(s, basis), s.solver, ms, ctx.threads);
  std::vector<std::vector<std::string>> table;
  json res = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double ratio = i == 0 ? std::numeric_limits<double>::quiet_NaN() : rows[i].error / rows[i - 1].error;
    table.push_back({std::to_string(rows[i].m), fmt(rows[i].error), fmt(ratio)});
    res.push_back({{"m", rows[i].m}, {"error", rows[i].error}});
    ctx.line("converge: m = " + std::to_string(rows[i].m) + "  ||u_m - u_2m|| = " + fmt(rows[i].error));
  }
  write_csv(ctx.path("convergence.csv"), {"m", "error", "ratio"}, table);
  ctx.results = {{"rows", res}};
}

json annotations(const BoundReport& r) {
  json a = json::object();
  for (const auto& [k, v] : r.annotations) a[k] = v;
  return a;
}

void run_verify(Context& ctx) {
  const RunSpec& s = ctx.spec;
  const ExperimentSpec& e = s.experiment;
  const BasisPtr basis = solver_basis(s, s.solver.m);
  const BurgersProblem problem = make_problem(s, basis);
  const int comps = s.domain.dimension;

  struct Outcome {
    std::string name;
    std::optional<BoundReport> report;
    std::vector<FittedConstant> constants;
    json extra = json::object();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
  };

  const auto outcomes = parallel_map(e.bounds.size(), ctx.threads, [&](std::size_t i) {
    Outcome o;
    o.name = e.bounds[i];
    if (o.name == "gronwall") {
      o.report = gronwall_bound_eq14(integrate(problem, s.solver), problem, e.tolerance);
    } else if (o.name == "enstrophy") {
      const FittedConstant c1 = fit_constant(ConstantKind::agmon_h1, basis, e.fit_samples, e.fit_seed);
      const EnstrophyOptions opt{.r = e.window, .c1 = c1.value, .rel_tol = e.tolerance};
      o.report = enstrophy_trace(integrate(problem, s.solver), problem, opt);
      o.constants.push_back(c1);
    } else if (o.name == "uniqueness") {
      const SpectralField p = resize(make_field(e.perturbation, basis, comps), basis);
      UniquenessResult u = uniqueness_experiment(problem, p, s.solver, 1e-2, e.fit_samples, e.fit_seed);
      o.constants.push_back(u.constant);
      o.extra = {{"sup_difference", u.sup_difference}, {"halving_ratio", u.halving_ratio}};
      o.report = std::move(u.report);
    } else if (o.name == "dependence") {
      const SpectralField df = make_field(e.delta_f, basis, comps);
      const DependenceResult d = continuous_dependence_experiment(problem, df, s.solver);
      o.extra = {{"sup_difference", d.sup_difference}, {"ratio_to_delta", d.ratio_to_delta}, {"halving_ratio", d.halving_ratio}};
      o.header = {"time", "difference"};
      for (std::size_t k = 0; k < d.times.size(); ++k) o.rows.push_back({fmt(d.times[k]), fmt(d.difference[k])});
    } else {
      const EnergyResidual r = energy_identity_residual(problem, s.solver);
      o.extra = {{"max_abs_residual", r.max_abs}};
      o.header = {"time", "rate", "balance", "residual"};
      for (std::size_t k = 0; k < r.times.size(); ++k)
        o.rows.push_back({fmt(r.times[k]), fmt(r.rate[k]), fmt(r.balance[k]), fmt(r.rate[k] - r.balance[k])});
    }
    return o;
  });

  std::vector<std::vector<std::string>> summary;
  for (const Outcome& o : outcomes) {
    json entry = o.extra;
    if (o.report) {
      const BoundReport& r = *o.report;
      emit_csv(r, ctx.path("bound_" + o.name + ".csv"));
      entry["worst_margin"] = r.worst_margin;
      entry["violated"] = r.violated;
      entry["conditional"] = r.conditional;
      entry["annotations"] = annotations(r);
      summary.push_back({o.name, fmt(r.worst_margin), r.violated ? "1" : "0", r.conditional ? "1" : "0"});
      if (r.violated) ctx.exit_code = kExitViolation;
      ctx.line("verify-bounds: " + o.name + (r.violated ? " VIOLATED" : " holds") + ", worst margin " + fmt(r.worst_margin) +
               (r.conditional ? " (conditional)" : ""));
    } else {
      write_csv(ctx.path(o.name + ".csv"), o.header, o.rows);
      ctx.line("verify-bounds: " + o.name + " " + o.extra.dump());
    }
    for (const auto& c : o.constants) ctx.constant(c, o.name);
    ctx.results[o.name] = entry;
  }
  write_csv(ctx.path("summary.csv"), {"bound", "worst_margin", "violated", "conditional"}, summary);
}

void run_traffic(Context& ctx) {
  const RunSpec& s = ctx.spec;
  const BasisPtr basis = solver_basis(s, s.solver.m);
  const BurgersProblem problem = make_problem(s, basis);
  if (problem.forcing.has_terms())
    throw InvalidArgument("traffic: use scenario sources instead of problem.forcing");
  if (!problem.advection) throw InvalidArgument("traffic: nonlinear must be true");
  const ScenarioReport rep = run_scenario(s.scenario, problem.u0, problem.nu, s.solver);
  emit_csv(rep, ctx.path("scenario.csv"));
  emit_csv(rep.trajectory, ctx.path("trajectory.csv"));
  const std::string cls = to_string(rep.shock.classification);
  write_csv(ctx.path("summary.csv"), {"classification", "final_mean", "final_max_gradient", "final_shock_position"},
            {{cls, fmt(rep.mean.back()), fmt(rep.shock.max_gradient.back()), fmt(rep.shock.position.back())}});
  ctx.results = {{"classification", cls},
                 {"final_mean", rep.mean.back()},
                 {"final_max_gradient", rep.shock.max_gradient.back()}};
  ctx.line("traffic: classification = " + cls + ", final mean " + fmt(rep.mean.back()));
}

void run_oracle(Context& ctx) {
  const RunSpec& s = ctx.spec;
  if (s.domain.dimension != 1 || s.domain.boundary != Boundary::periodic)
    throw InvalidArgument("oracle-check: 1D periodic domain required");
  if (s.problem.forcing && s.problem.forcing->preset != "zero") throw InvalidArgument("oracle-check: forcing must be zero");
  if (!s.problem.nonlinear) throw InvalidArgument("oracle-check: nonlinear must be true");
  const BasisPtr basis = solver_basis(s, s.solver.m);
  const BurgersProblem problem = make_problem(s, basis);
  const BasisPtr fine = build_basis(basis->domain(), 4 * s.solver.m + 1);
  const SpectralField exact = cole_hopf_oracle(problem.u0, problem.nu, s.solver.t_end, fine);
  const auto& dts = s.experiment.dt_list;
  const auto errors = parallel_map(dts.size(), ctx.threads, [&](std::size_t i) {
    SolverConfig c = s.solver;
    c.dt = dts[i];
    c.record_every = std::numeric_limits<std::size_t>::max();
    return l2_norm(resize(integrate(problem, c).states.back(), fine) - exact);
  });
  std::vector<std::vector<std::string>> rows;
  json res = json::array();
  for (std::size_t i = 0; i < dts.size(); ++i) {
    const double order = i == 0 ? std::numeric_limits<double>::quiet_NaN()
                                : std::log(errors[i - 1] / errors[i]) / std::log(dts[i - 1] / dts[i]);
    rows.push_back({fmt(dts[i]), fmt(errors[i]), fmt(order)});
    res.push_back({{"dt", dts[i]}, {"error", errors[i]}});
    ctx.line("oracle-check: dt = " + fmt(dts[i]) + "  L2 error = " + fmt(errors[i]));
  }
  write_csv(ctx.path("oracle.csv"), {"dt", "error", "order"}, rows);
  ctx.results = {{"rows", res}};
}

json output_list(const fs::path& out, std::vector<std::string> files) {
  std::sort(files.begin(), files.end());
  json list = json::array();
  for (const auto& f : files) {
    const fs::path p = out / f;
    list.push_back({{"file", f}, {"sha256", sha256_file(p.string())}, {"bytes", fs::file_size(p)}});
  }
  return list;
}

}  // namespace

RunResult run(Command command, const RunSpec& spec, const fs::path& out, int threads) {
  fs::create_directories(out);
  const auto start = std::chrono::steady_clock::now();
  Context ctx(spec, out, threads);
  switch (command) {
    case Command::solve: run_solve(ctx); break;
    case Command::converge: run_converge(ctx); break;
    case Command::verify_bounds: run_verify(ctx); break;
    case Command::traffic: run_traffic(ctx); break;
    case Command::oracle_check: run_oracle(ctx); break;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json m;
  m["artifact"] = "burgers";
  m["version"] = BURGERS_VERSION;
  m["command"] = to_string(command);
  m["config"] = to_json(spec);
  m["spec_hash"] = spec_hash(spec);
  m["fitted_constants"] = ctx.constants;
  m["results"] = ctx.results;
  m["exit_code"] = ctx.exit_code;
  m["threads"] = threads;
  m["wall_time_s"] = wall;
  m["outputs"] = output_list(out, ctx.files);
  std::ofstream f(out / "manifest.json", std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + (out / "manifest.json").string() + "'");
  f << m.dump(2) << '\n';
  return {ctx.exit_code, std::move(m), std::move(ctx.summary)};
}

RunResult replay(const fs::path& manifest, const fs::path& out, int threads) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot read manifest '" + manifest.string() + "'");
  const json recorded = json::parse(in);
  const RunSpec spec = parse_config(recorded.at("config").dump());
  if (spec_hash(spec) != recorded.at("spec_hash").get<std::string>())
    throw std::runtime_error("manifest config does not reproduce its spec_hash");
  RunResult res = run(command_from_string(recorded.at("command").get<std::string>()), spec, out, threads);

  std::map<std::string, std::string> fresh;
  for (const auto& o : res.manifest.at("outputs")) fresh[o.at("file").get<std::string>()] = o.at("sha256").get<std::string>();
  std::vector<std::string> lines;
  bool same = fresh.size() == recorded.at("outputs").size();
  for (const auto& o : recorded.at("outputs")) {
    const std::string file = o.at("file").get<std::string>();
    const auto it = fresh.find(file);
    const bool ok = it != fresh.end() && it->second == o.at("sha256").get<std::string>();
    same = same && ok;
    lines.push_back("replay: " + file + (ok ? " identical" : " DIFFERS"));
  }
  res.summary = std::move(lines);
  res.exit_code = same ? kExitOk : kExitError;
  return res;
}

}  // namespace burgers::io
