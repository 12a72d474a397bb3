// Command-line front end: simulate, return-series, limit, compare.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hexwalk/cli_io.hpp"
#include "hexwalk/limit_laws.hpp"

namespace {

struct Flags {
  std::optional<std::string> theta;
  std::optional<std::string> preset;
  std::optional<std::string> state;
  std::optional<std::string> config;
  std::optional<int> t_max;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> tolerance;
  std::optional<int> window;
  bool indices = false;
  bool normalize = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  auto* theta = cmd->add_option("--theta", f.theta, "Coin angle in radians, or grover");
  auto* preset = cmd->add_option("--preset", f.preset, "Named coin (grover)");
  theta->excludes(preset);
  cmd->add_option("--state", f.state, "Real initial coin state alpha,beta,gamma");
  cmd->add_option("--config", f.config, "JSON run configuration; flags override its keys");
  cmd->add_option("--t-max", f.t_max, "Number of steps");
  cmd->add_option("--out", f.out, "Output file (default: standard output)");
  cmd->add_option("--format", f.format, "csv, json or text");
  cmd->add_option("--tolerance", f.tolerance, "compare: pass threshold (default 0.01)");
  cmd->add_option("--window", f.window, "compare: number of trailing even steps averaged (default 10)");
  cmd->add_flag("--indices", f.indices, "simulate: also emit integer site indices");
  cmd->add_flag("--normalize", f.normalize, "Rescale the initial state to unit norm");
}

hexwalk::RunConfig build_config(const Flags& f) {
  using namespace hexwalk;
  RunConfig config;
  if (f.config) config = load_config(*f.config, config);
  nlohmann::json overrides = nlohmann::json::object();
  if (f.theta) {
    if (*f.theta == "grover") {
      overrides["theta"] = "grover";
    } else {
      std::size_t used = 0;
      double value = 0;
      try {
        value = std::stod(*f.theta, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != f.theta->size()) throw InputError("--theta: not a number or 'grover': " + *f.theta);
      overrides["theta"] = value;
    }
  }
  if (f.preset) overrides["preset"] = *f.preset;
  if (f.t_max) overrides["t_max"] = *f.t_max;
  if (f.out) overrides["output_path"] = *f.out;
  if (f.format) overrides["format"] = *f.format;
  if (f.tolerance) overrides["tolerance"] = *f.tolerance;
  if (f.window) overrides["window"] = *f.window;
  if (f.indices) overrides["indices"] = true;
  config = config_from_json(overrides, config);
  if (f.state) config.state = parse_state_triple(*f.state, f.normalize);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  using hexwalk::ExitCode;

  CLI::App app{"Three-state quantum walk on the hexagonal lattice"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name : {"simulate", "return-series", "limit", "compare"}) {
    add_flags(app.add_subcommand(name, ""), flags);
  }
  app.get_subcommand("simulate")->description("Probability distribution at t-max (px,py,prob)");
  app.get_subcommand("return-series")->description("Origin probability at even steps (t,p_origin,limit)");
  app.get_subcommand("limit")->description("Long-time limit quantities of the return probability");
  app.get_subcommand("compare")->description("Simulation versus long-time limit at the origin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InvalidInput);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const hexwalk::RunConfig config = build_config(flags);
    ExitCode code = ExitCode::Success;
    if (config.output_path.empty()) {
      code = hexwalk::run_command(command, config, std::cout);
      std::cout.flush();
    } else {
      std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
      if (!out) throw hexwalk::InputError("cannot open output file '" + config.output_path + "'");
      code = hexwalk::run_command(command, config, out);
      out.close();
      if (!out) throw hexwalk::InputError("failed writing output file '" + config.output_path + "'");
    }
    return static_cast<int>(code);
  } catch (const hexwalk::QuadratureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::ComputationFailure);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::InvalidInput);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::ComputationFailure);
  }
}
