#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/solver.hpp"
#include "burgers/traffic.hpp"

namespace burgers::io {

/// Parse failure. `kind` separates malformed text (syntax), documents that do
/// not match the schema (schema) and physically invalid values (validation).
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { syntax, schema, validation };

  ConfigError(Kind kind, std::string path, int line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }  ///< 1-based; 0 when unknown

 private:
  Kind kind_;
  std::string path_;
  int line_;
};

std::string to_string(ConfigError::Kind k);

/// Field description: named preset or explicit coefficients.
struct FieldSpec {
  std::string preset = "zero";  ///< sine | smoothed_step | random | coefficients | zero
  double amplitude = 1.0;       ///< sine, smoothed_step
  int wavenumber = 1;           ///< sine
  double width = 0.1;           ///< smoothed_step
  std::optional<double> position;  ///< smoothed_step; default L/2
  double mean = 0.0;            ///< smoothed_step
  std::optional<std::uint64_t> seed;  ///< random (required)
  double l2 = 1.0;              ///< random
  double decay = 1.0;           ///< random
  std::vector<double> values;   ///< coefficients
};

struct DomainSpec {
  int dimension = 1;
  std::vector<double> lengths;  ///< default 2 pi (periodic) or 1 (Dirichlet) per axis
  Boundary boundary = Boundary::periodic;
  bool include_mean = false;
};

struct ProblemSpec {
  double nu = 0.0;
  bool nonlinear = true;
  FieldSpec initial;
  std::optional<FieldSpec> forcing;  ///< steady
};

struct ExperimentSpec {
  std::vector<std::size_t> m_list{8, 16, 32};
  std::vector<std::string> bounds{"gronwall", "enstrophy", "uniqueness", "dependence", "energy"};
  double window = 0.0;  ///< enstrophy r; 0 selects t_end / 10
  double tolerance = 1e-8;
  std::size_t fit_samples = 200;
  std::uint64_t fit_seed = 7;
  FieldSpec perturbation;
  FieldSpec delta_f;
  std::vector<double> dt_list{4e-3, 2e-3, 1e-3};

  ExperimentSpec();
};

/// Fully resolved run description.
struct RunSpec {
  DomainSpec domain;
  ProblemSpec problem;
  SolverConfig solver;
  ExperimentSpec experiment;
  std::vector<SourceTerm> scenario;
};

/// Parses a YAML (or JSON) document. Unknown keys are rejected; defaults are
/// filled in. Throws ConfigError.
RunSpec parse_config(const std::string& text);
RunSpec load_config(const std::string& path);

/// Canonical echo of every resolved parameter.
nlohmann::ordered_json to_json(const RunSpec& spec);
nlohmann::ordered_json to_json(const FieldSpec& spec);

/// SHA-256 of the canonical echo.
std::string spec_hash(const RunSpec& spec);

/// Allowed keys per block, as enforced by the parser ("" is the top level).
const std::map<std::string, std::vector<std::string>>& schema_keys();

Domain make_domain(const DomainSpec& spec);
SpectralField make_field(const FieldSpec& spec, const BasisPtr& basis, int components);
/// Problem on `basis` (whose size may exceed solver.m).
BurgersProblem make_problem(const RunSpec& spec, const BasisPtr& basis);

}  // namespace burgers::io
