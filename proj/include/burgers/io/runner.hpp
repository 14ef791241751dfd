#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/io/config.hpp"

namespace burgers::io {

enum class Command { solve, converge, verify_bounds, traffic, oracle_check };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json manifest;
  std::vector<std::string> summary;  ///< human-readable lines
};

/// Executes a command, writes its CSV files and manifest.json into `out`
/// (created if missing). Output bytes do not depend on `threads`.
///
/// Outputs per command:
///   solve          trajectory.csv, coefficients.csv, modes.csv
///   converge       convergence.csv
///   verify-bounds  bound_<name>.csv per bound, dependence.csv, energy.csv, summary.csv
///   traffic        scenario.csv, trajectory.csv, summary.csv
///   oracle-check   oracle.csv
RunResult run(Command command, const RunSpec& spec, const std::filesystem::path& out, int threads = 1);

/// Re-runs the command recorded in a manifest into `out` and compares output
/// hashes. exit_code is kExitOk when every file is byte-identical.
RunResult replay(const std::filesystem::path& manifest, const std::filesystem::path& out, int threads = 1);

}  // namespace burgers::io
