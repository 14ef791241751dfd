#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "burgers/error.hpp"
#include "burgers/io/config.hpp"
#include "burgers/io/runner.hpp"

namespace {

struct Options {
  std::string config;
  std::string out = "out";
  int threads = 1;
};

void add_run_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "run configuration (YAML or JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", opt.out, "output directory")->capture_default_str();
  cmd->add_option("--threads", opt.threads, "worker threads for sweeps")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace burgers::io;
  CLI::App app{"Spectral Galerkin solver and estimates lab for the viscous Burgers equation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BURGERS_VERSION);

  Options opt;
  std::string manifest;
  const std::pair<const char*, const char*> commands[] = {
      {"solve", "integrate and write the trajectory"},
      {"converge", "m-refinement study"},
      {"verify-bounds", "check the energy, enstrophy and uniqueness bounds"},
      {"traffic", "run a traffic scenario with shock diagnostics"},
      {"oracle-check", "compare against the Cole-Hopf exact solution"},
  };
  for (const auto& [name, help] : commands) add_run_options(app.add_subcommand(name, help), opt);
  CLI::App* rep = app.add_subcommand("replay", "re-run a manifest and compare output hashes");
  rep->add_option("--manifest", manifest, "manifest.json of an earlier run")->required()->check(CLI::ExistingFile);
  rep->add_option("--out", opt.out, "output directory")->capture_default_str();
  rep->add_option("--threads", opt.threads, "worker threads for sweeps")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    RunResult res;
    if (rep->parsed()) {
      res = replay(manifest, opt.out, opt.threads);
    } else {
      const CLI::App* sub = app.get_subcommands().front();
      res = run(command_from_string(sub->get_name()), load_config(opt.config), opt.out, opt.threads);
    }
    for (const auto& line : res.summary) std::cout << line << '\n';
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config " << e.what() << '\n';
  } catch (const burgers::BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
