#include "burgers/io/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "burgers/error.hpp"
#include "burgers/io/hash.hpp"
#include "burgers/presets.hpp"

namespace burgers::io {

ConfigError::ConfigError(Kind kind, std::string path, int line, const std::string& message)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << to_string(kind) << " error";
        if (!path.empty()) os << " at '" << path << "'";
        if (line > 0) os << " (line " << line << ")";
        os << ": " << message;
        return os.str();
      }()),
      kind_(kind),
      path_(std::move(path)),
      line_(line) {}

std::string to_string(ConfigError::Kind k) {
  switch (k) {
    case ConfigError::Kind::syntax: return "syntax";
    case ConfigError::Kind::schema: return "schema";
    case ConfigError::Kind::validation: return "validation";
  }
  return "?";
}

ExperimentSpec::ExperimentSpec() {
  perturbation.preset = "random";
  perturbation.seed = 1;
  perturbation.l2 = 1e-3;
  delta_f.preset = "random";
  delta_f.seed = 2;
  delta_f.l2 = 1e-3;
}

const std::map<std::string, std::vector<std::string>>& schema_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"", {"domain", "problem", "solver", "experiment", "scenario"}},
      {"domain", {"dimension", "lengths", "boundary", "include_mean"}},
      {"problem", {"nu", "nonlinear", "initial", "forcing"}},
      {"field", {"preset", "amplitude", "wavenumber", "width", "position", "mean", "seed", "l2", "decay", "values"}},
      {"solver", {"m", "dt", "t_end", "integrator", "record_every"}},
      {"experiment",
       {"m_list", "bounds", "window", "tolerance", "fit_samples", "fit_seed", "perturbation", "delta_f", "dt_list"}},
      {"ramp", {"alpha", "beta"}},
      {"traffic_light", {"x_k", "sigma", "period", "duty", "amplitude"}},
      {"pulse", {"x0", "width", "amplitude", "t_on", "t_off"}},
  };
  return keys;
}

namespace {

using Kind = ConfigError::Kind;

int line_of(const YAML::Node& n) {
  const YAML::Mark m = n.Mark();
  return m.is_null() ? 0 : m.line + 1;
}

[[noreturn]] void schema_error(const std::string& path, const YAML::Node& n, const std::string& msg) {
  throw ConfigError(Kind::schema, path, line_of(n), msg);
}

[[noreturn]] void validation_error(const std::string& path, const YAML::Node& n, const std::string& msg) {
  throw ConfigError(Kind::validation, path, line_of(n), msg);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void require_map(const YAML::Node& n, const std::string& path) {
  if (!n.IsMap()) schema_error(path, n, "expected a mapping");
}

void check_keys(const YAML::Node& n, const std::string& path, const std::string& block) {
  require_map(n, path);
  const auto& allowed = schema_keys().at(block);
  for (const auto& kv : n) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw ConfigError(Kind::schema, join(path, key), line_of(kv.first), "unknown key (allowed: " + list + ")");
    }
  }
}

double as_double(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) schema_error(path, n, "expected a number");
  double v = 0.0;
  try {
    v = n.as<double>();
  } catch (const YAML::Exception&) {
    schema_error(path, n, "expected a number, got '" + n.Scalar() + "'");
  }
  if (!std::isfinite(v)) validation_error(path, n, "must be finite");
  return v;
}

long long as_integer(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) schema_error(path, n, "expected an integer");
  try {
    return n.as<long long>();
  } catch (const YAML::Exception&) {
    schema_error(path, n, "expected an integer, got '" + n.Scalar() + "'");
  }
}

std::size_t as_count(const YAML::Node& n, const std::string& path, long long min) {
  const long long v = as_integer(n, path);
  if (v < min) validation_error(path, n, "must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

bool as_bool(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) schema_error(path, n, "expected true or false");
  try {
    return n.as<bool>();
  } catch (const YAML::Exception&) {
    schema_error(path, n, "expected true or false, got '" + n.Scalar() + "'");
  }
}

std::string as_string(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) schema_error(path, n, "expected a string");
  return n.Scalar();
}

std::vector<double> as_doubles(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence()) schema_error(path, n, "expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(as_double(n[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void positive(double v, const std::string& path, const YAML::Node& n) {
  if (!(v > 0.0)) validation_error(path, n, "must be > 0");
}

struct Reader {
  const YAML::Node& node;
  std::string path;

  YAML::Node get(const std::string& key) const { return node[key]; }
  bool has(const std::string& key) const { return node[key].IsDefined(); }
  std::string at(const std::string& key) const { return join(path, key); }

  void number(const std::string& key, double& out) const {
    if (has(key)) out = as_double(get(key), at(key));
  }
  void required_number(const std::string& key, double& out) const {
    if (!has(key)) schema_error(at(key), node, "required key missing");
    number(key, out);
  }
};

FieldSpec parse_field(const YAML::Node& n, const std::string& path) {
  check_keys(n, path, "field");
  const Reader r{n, path};
  FieldSpec f;
  if (!r.has("preset")) schema_error(r.at("preset"), n, "required key missing");
  f.preset = as_string(r.get("preset"), r.at("preset"));
  static const std::map<std::string, std::set<std::string>> params{
      {"sine", {"amplitude", "wavenumber"}},
      {"smoothed_step", {"amplitude", "width", "position", "mean"}},
      {"random", {"seed", "l2", "decay"}},
      {"coefficients", {"values"}},
      {"zero", {}},
  };
  const auto it = params.find(f.preset);
  if (it == params.end())
    schema_error(r.at("preset"), r.get("preset"),
                 "unknown preset '" + f.preset + "' (sine|smoothed_step|random|coefficients|zero)");
  for (const auto& kv : n) {
    const std::string key = kv.first.as<std::string>();
    if (key != "preset" && !it->second.count(key))
      throw ConfigError(Kind::schema, join(path, key), line_of(kv.first),
                        "key not used by preset '" + f.preset + "'");
  }
  r.number("amplitude", f.amplitude);
  if (r.has("wavenumber")) f.wavenumber = static_cast<int>(as_count(r.get("wavenumber"), r.at("wavenumber"), 1));
  r.number("width", f.width);
  if (r.has("width")) positive(f.width, r.at("width"), r.get("width"));
  if (r.has("position")) f.position = as_double(r.get("position"), r.at("position"));
  r.number("mean", f.mean);
  if (r.has("seed")) f.seed = static_cast<std::uint64_t>(as_count(r.get("seed"), r.at("seed"), 0));
  if (f.preset == "random" && !f.seed) schema_error(r.at("seed"), n, "random preset requires an explicit seed");
  r.number("l2", f.l2);
  if (r.has("l2") && f.l2 < 0.0) validation_error(r.at("l2"), r.get("l2"), "must be >= 0");
  r.number("decay", f.decay);
  if (r.has("values")) f.values = as_doubles(r.get("values"), r.at("values"));
  return f;
}

DomainSpec parse_domain(const YAML::Node& n) {
  DomainSpec d;
  if (!n.IsDefined()) {
    d.lengths = {2.0 * std::numbers::pi};
    return d;
  }
  check_keys(n, "domain", "domain");
  const Reader r{n, "domain"};
  if (r.has("dimension")) {
    d.dimension = static_cast<int>(as_integer(r.get("dimension"), r.at("dimension")));
    if (d.dimension != 1 && d.dimension != 2) validation_error(r.at("dimension"), r.get("dimension"), "must be 1 or 2");
  }
  if (r.has("boundary")) {
    const std::string b = as_string(r.get("boundary"), r.at("boundary"));
    if (b != "periodic" && b != "dirichlet")
      schema_error(r.at("boundary"), r.get("boundary"), "expected periodic or dirichlet, got '" + b + "'");
    d.boundary = boundary_from_string(b);
  }
  if (r.has("include_mean")) d.include_mean = as_bool(r.get("include_mean"), r.at("include_mean"));
  if (d.include_mean && d.boundary == Boundary::dirichlet)
    validation_error(r.at("include_mean"), r.get("include_mean"), "Dirichlet domains carry no constant mode");
  if (r.has("lengths")) {
    d.lengths = as_doubles(r.get("lengths"), r.at("lengths"));
    if (d.lengths.size() != static_cast<std::size_t>(d.dimension))
      validation_error(r.at("lengths"), r.get("lengths"), "needs one length per dimension");
    for (double l : d.lengths) positive(l, r.at("lengths"), r.get("lengths"));
  } else {
    d.lengths.assign(static_cast<std::size_t>(d.dimension), d.boundary == Boundary::periodic ? 2.0 * std::numbers::pi : 1.0);
  }
  return d;
}

ProblemSpec parse_problem(const YAML::Node& n) {
  if (!n.IsDefined()) throw ConfigError(Kind::schema, "problem", 0, "required block missing");
  check_keys(n, "problem", "problem");
  const Reader r{n, "problem"};
  ProblemSpec p;
  r.required_number("nu", p.nu);
  positive(p.nu, r.at("nu"), r.get("nu"));
  if (r.has("nonlinear")) p.nonlinear = as_bool(r.get("nonlinear"), r.at("nonlinear"));
  if (!r.has("initial")) schema_error(r.at("initial"), n, "required key missing");
  p.initial = parse_field(r.get("initial"), r.at("initial"));
  if (r.has("forcing")) p.forcing = parse_field(r.get("forcing"), r.at("forcing"));
  return p;
}

SolverConfig parse_solver(const YAML::Node& n) {
  if (!n.IsDefined()) throw ConfigError(Kind::schema, "solver.t_end", 0, "required key missing");
  check_keys(n, "solver", "solver");
  const Reader r{n, "solver"};
  SolverConfig s;
  if (r.has("m")) s.m = as_count(r.get("m"), r.at("m"), 1);
  r.number("dt", s.dt);
  if (r.has("dt")) positive(s.dt, r.at("dt"), r.get("dt"));
  r.required_number("t_end", s.t_end);
  if (s.t_end < 0.0) validation_error(r.at("t_end"), r.get("t_end"), "must be >= 0");
  if (r.has("integrator")) {
    const std::string i = as_string(r.get("integrator"), r.at("integrator"));
    if (i != "ifrk4" && i != "ifeuler") schema_error(r.at("integrator"), r.get("integrator"), "expected ifrk4 or ifeuler");
    s.integrator = integrator_from_string(i);
  }
  if (r.has("record_every")) s.record_every = as_count(r.get("record_every"), r.at("record_every"), 1);
  return s;
}

ExperimentSpec parse_experiment(const YAML::Node& n) {
  ExperimentSpec e;
  if (!n.IsDefined()) return e;
  check_keys(n, "experiment", "experiment");
  const Reader r{n, "experiment"};
  if (r.has("m_list")) {
    const YAML::Node l = r.get("m_list");
    if (!l.IsSequence() || l.size() == 0) schema_error(r.at("m_list"), l, "expected a nonempty list of integers");
    e.m_list.clear();
    for (std::size_t i = 0; i < l.size(); ++i) {
      e.m_list.push_back(as_count(l[i], r.at("m_list") + "[" + std::to_string(i) + "]", 1));
      if (i > 0 && e.m_list[i] <= e.m_list[i - 1]) validation_error(r.at("m_list"), l, "must be strictly increasing");
    }
  }
  if (r.has("bounds")) {
    const YAML::Node l = r.get("bounds");
    if (!l.IsSequence()) schema_error(r.at("bounds"), l, "expected a list");
    static const std::set<std::string> known{"gronwall", "enstrophy", "uniqueness", "dependence", "energy"};
    e.bounds.clear();
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string p = r.at("bounds") + "[" + std::to_string(i) + "]";
      const std::string b = as_string(l[i], p);
      if (!known.count(b)) schema_error(p, l[i], "unknown bound '" + b + "' (gronwall|enstrophy|uniqueness|dependence|energy)");
      e.bounds.push_back(b);
    }
  }
  r.number("window", e.window);
  if (e.window < 0.0) validation_error(r.at("window"), r.get("window"), "must be >= 0");
  r.number("tolerance", e.tolerance);
  if (e.tolerance < 0.0) validation_error(r.at("tolerance"), r.get("tolerance"), "must be >= 0");
  if (r.has("fit_samples")) e.fit_samples = as_count(r.get("fit_samples"), r.at("fit_samples"), 1);
  if (r.has("fit_seed")) e.fit_seed = static_cast<std::uint64_t>(as_count(r.get("fit_seed"), r.at("fit_seed"), 0));
  if (r.has("perturbation")) e.perturbation = parse_field(r.get("perturbation"), r.at("perturbation"));
  if (r.has("delta_f")) e.delta_f = parse_field(r.get("delta_f"), r.at("delta_f"));
  if (r.has("dt_list")) {
    e.dt_list = as_doubles(r.get("dt_list"), r.at("dt_list"));
    if (e.dt_list.empty()) schema_error(r.at("dt_list"), r.get("dt_list"), "expected a nonempty list");
    for (double dt : e.dt_list) positive(dt, r.at("dt_list"), r.get("dt_list"));
  }
  return e;
}

std::vector<SourceTerm> parse_scenario(const YAML::Node& n) {
  std::vector<SourceTerm> out;
  if (!n.IsDefined()) return out;
  if (!n.IsSequence()) schema_error("scenario", n, "expected a list of sources");
  for (std::size_t i = 0; i < n.size(); ++i) {
    const std::string path = "scenario[" + std::to_string(i) + "]";
    const YAML::Node item = n[i];
    if (!item.IsMap() || item.size() != 1) schema_error(path, item, "expected a single-key mapping (ramp|traffic_light|pulse)");
    const auto kv = *item.begin();
    const std::string kind = kv.first.as<std::string>();
    const std::string p = join(path, kind);
    if (kind != "ramp" && kind != "traffic_light" && kind != "pulse")
      throw ConfigError(Kind::schema, p, line_of(kv.first), "unknown source (ramp|traffic_light|pulse)");
    check_keys(kv.second, p, kind);
    const Reader r{kv.second, p};
    if (kind == "ramp") {
      Ramp s;
      r.required_number("alpha", s.alpha);
      r.required_number("beta", s.beta);
      if (s.alpha < 0.0) validation_error(r.at("alpha"), r.get("alpha"), "must be >= 0");
      out.emplace_back(s);
    } else if (kind == "traffic_light") {
      TrafficLight s;
      r.required_number("x_k", s.x_k);
      r.required_number("sigma", s.sigma);
      r.required_number("period", s.period);
      r.required_number("duty", s.duty);
      r.required_number("amplitude", s.amplitude);
      positive(s.sigma, r.at("sigma"), r.get("sigma"));
      positive(s.period, r.at("period"), r.get("period"));
      if (!(s.duty > 0.0 && s.duty < 1.0)) validation_error(r.at("duty"), r.get("duty"), "must be in (0, 1)");
      out.emplace_back(s);
    } else {
      Pulse s;
      r.required_number("x0", s.x0);
      r.required_number("width", s.width);
      r.required_number("amplitude", s.amplitude);
      r.required_number("t_on", s.t_on);
      r.required_number("t_off", s.t_off);
      positive(s.width, r.at("width"), r.get("width"));
      if (s.t_off < s.t_on) validation_error(r.at("t_off"), r.get("t_off"), "must be >= t_on");
      out.emplace_back(s);
    }
  }
  return out;
}

void resolve_field(FieldSpec& f, const DomainSpec& d) {
  if (f.preset == "smoothed_step" && !f.position) f.position = 0.5 * d.lengths.front();
}

}  // namespace

RunSpec parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(Kind::syntax, "", e.mark.line + 1, e.msg);
  }
  if (!root.IsDefined() || root.IsNull()) throw ConfigError(Kind::schema, "", 0, "empty document");
  check_keys(root, "", "");
  RunSpec s;
  s.domain = parse_domain(root["domain"]);
  s.problem = parse_problem(root["problem"]);
  s.solver = parse_solver(root["solver"]);
  s.experiment = parse_experiment(root["experiment"]);
  s.scenario = parse_scenario(root["scenario"]);
  resolve_field(s.problem.initial, s.domain);
  if (s.problem.forcing) resolve_field(*s.problem.forcing, s.domain);
  resolve_field(s.experiment.perturbation, s.domain);
  resolve_field(s.experiment.delta_f, s.domain);
  return s;
}

RunSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(Kind::syntax, "", 0, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

nlohmann::ordered_json to_json(const FieldSpec& f) {
  nlohmann::ordered_json j;
  j["preset"] = f.preset;
  if (f.preset == "sine") {
    j["amplitude"] = f.amplitude;
    j["wavenumber"] = f.wavenumber;
  } else if (f.preset == "smoothed_step") {
    j["amplitude"] = f.amplitude;
    j["width"] = f.width;
    if (f.position) j["position"] = *f.position;
    j["mean"] = f.mean;
  } else if (f.preset == "random") {
    j["seed"] = f.seed.value_or(0);
    j["l2"] = f.l2;
    j["decay"] = f.decay;
  } else if (f.preset == "coefficients") {
    j["values"] = f.values;
  }
  return j;
}

nlohmann::ordered_json to_json(const RunSpec& s) {
  nlohmann::ordered_json j;
  j["domain"] = {{"dimension", s.domain.dimension},
                 {"lengths", s.domain.lengths},
                 {"boundary", to_string(s.domain.boundary)},
                 {"include_mean", s.domain.include_mean}};
  nlohmann::ordered_json p;
  p["nu"] = s.problem.nu;
  p["nonlinear"] = s.problem.nonlinear;
  p["initial"] = to_json(s.problem.initial);
  if (s.problem.forcing) p["forcing"] = to_json(*s.problem.forcing);
  j["problem"] = p;
  j["solver"] = {{"m", s.solver.m},
                 {"dt", s.solver.dt},
                 {"t_end", s.solver.t_end},
                 {"integrator", to_string(s.solver.integrator)},
                 {"record_every", s.solver.record_every}};
  const ExperimentSpec& e = s.experiment;
  j["experiment"] = {{"m_list", e.m_list},
                     {"bounds", e.bounds},
                     {"window", e.window},
                     {"tolerance", e.tolerance},
                     {"fit_samples", e.fit_samples},
                     {"fit_seed", e.fit_seed},
                     {"perturbation", to_json(e.perturbation)},
                     {"delta_f", to_json(e.delta_f)},
                     {"dt_list", e.dt_list}};
  auto scenario = nlohmann::ordered_json::array();
  for (const auto& src : s.scenario) {
    if (const auto* r = std::get_if<Ramp>(&src)) {
      scenario.push_back({{"ramp", {{"alpha", r->alpha}, {"beta", r->beta}}}});
    } else if (const auto* l = std::get_if<TrafficLight>(&src)) {
      scenario.push_back({{"traffic_light",
                           {{"x_k", l->x_k}, {"sigma", l->sigma}, {"period", l->period}, {"duty", l->duty}, {"amplitude", l->amplitude}}}});
    } else {
      const auto& q = std::get<Pulse>(src);
      scenario.push_back({{"pulse",
                           {{"x0", q.x0}, {"width", q.width}, {"amplitude", q.amplitude}, {"t_on", q.t_on}, {"t_off", q.t_off}}}});
    }
  }
  j["scenario"] = scenario;
  return j;
}

std::string spec_hash(const RunSpec& spec) { return sha256_hex(to_json(spec).dump()); }

Domain make_domain(const DomainSpec& spec) {
  if (spec.dimension == 1) return Domain::interval(spec.lengths.at(0), spec.boundary, spec.include_mean);
  return Domain::rectangle(spec.lengths.at(0), spec.lengths.at(1), spec.boundary, spec.include_mean);
}

SpectralField make_field(const FieldSpec& f, const BasisPtr& basis, int components) {
  if (f.preset == "zero") return SpectralField(basis, components);
  if (f.preset == "sine") return sine_preset(basis, components, f.amplitude, f.wavenumber);
  if (f.preset == "smoothed_step") {
    if (components != 1) throw InvalidArgument("smoothed_step preset is scalar (1D only)");
    return smoothed_step_preset(basis, f.amplitude, f.width, f.position.value_or(-1.0), f.mean);
  }
  if (f.preset == "random") {
    if (!f.seed) throw InvalidArgument("random preset requires a seed");
    return random_preset(basis, components, *f.seed, f.l2, f.decay);
  }
  if (f.preset == "coefficients") return coefficient_preset(basis, components, f.values);
  throw InvalidArgument("unknown preset '" + f.preset + "'");
}

BurgersProblem make_problem(const RunSpec& spec, const BasisPtr& basis) {
  const int comps = spec.domain.dimension;
  // Data are drawn on the solver truncation so every command sees the same fields.
  const BasisPtr data_basis = spec.solver.m < basis->size() ? build_basis(basis->domain(), spec.solver.m) : basis;
  BurgersProblem p{.nu = spec.problem.nu, .u0 = resize(make_field(spec.problem.initial, data_basis, comps), basis)};
  p.advection = spec.problem.nonlinear;
  if (spec.problem.forcing) {
    SpectralField f = resize(make_field(*spec.problem.forcing, data_basis, comps), basis);
    if (!f.is_zero()) p.forcing.add(std::move(f));
  }
  return p;
}

}  // namespace burgers::io
