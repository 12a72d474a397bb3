#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hexwalk/coin.hpp"
#include "hexwalk/lattice.hpp"
#include "hexwalk/types.hpp"

namespace hexwalk {

enum class OutputFormat { Csv, Json, Text };

OutputFormat parse_format(std::string_view name);
std::string_view format_name(OutputFormat format);

/// Process exit codes of the command-line tool.
enum class ExitCode : int { Success = 0, InvalidInput = 1, ComputationFailure = 2, ComparisonFail = 3 };

/// Rejected configuration or unreadable/unwritable file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parsed states must have unit norm within this tolerance; they are then
/// rescaled exactly.
inline constexpr double kConfigNormTolerance = 1e-9;

struct RunConfig {
  CoinParams coin = CoinParams::grover();
  CoinState state{0.0, 1.0, 0.0};
  int t_max = 100;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  double tolerance = 0.01;
  int window = 10;
  bool indices = false;
};

/// Applies the keys present in `j` on top of `base`. Recognized keys:
/// theta (number), preset ("grover"), alpha/beta/gamma ([re, im] or number),
/// t_max, output_path, format, tolerance, window, indices, normalize.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// "a,b,c" real triple. With `normalize` the vector is rescaled; otherwise
/// it must already have unit norm within kConfigNormTolerance.
CoinState parse_state_triple(std::string_view text, bool normalize = false);

CoinParams parse_preset(std::string_view name);

/// %.17g: shortest form that round-trips, at least 12 significant digits.
std::string format_double(double v);

// simulate

struct SimulationRow {
  Site site;
  PhysicalPoint point;
  double prob = 0;
};

/// Occupied sites at t_max, sorted by (px, py).
std::vector<SimulationRow> simulate(const RunConfig& config);
void write_simulation(std::ostream& os, const std::vector<SimulationRow>& rows, const RunConfig& config);

// return-series

struct SeriesRow {
  int t = 0;
  double p_origin = 0;
  double limit = 0;
};

std::vector<SeriesRow> return_series_table(const RunConfig& config);
void write_return_series(std::ostream& os, const std::vector<SeriesRow>& rows, const RunConfig& config);

// limit

struct LimitReport {
  double theta = 0;
  double c = 0;
  double s = 0;
  double a_theta = 0;
  double limit = 0;
  double delta = 0;
  bool delocalized = false;
  Vec3cd origin_amplitude = Vec3cd::Zero();
};

LimitReport limit_report(const RunConfig& config);
nlohmann::json to_json(const LimitReport& report);
LimitReport limit_report_from_json(const nlohmann::json& j);
void write_limit(std::ostream& os, const LimitReport& report, const RunConfig& config);

// compare

struct ComparisonReport {
  int t_max = 0;
  std::vector<int> window_times;
  double mean_p_origin = 0;
  double limit = 0;
  double probability_error = 0;
  Vec3cd mean_origin_amplitude = Vec3cd::Zero();
  Vec3cd limit_amplitude = Vec3cd::Zero();
  double amplitude_error = 0;  // max over components
  double tolerance = 0;
  bool pass = false;
};

/// Averages the origin probability and amplitude over the last `window`
/// even steps up to t_max and compares them with the long-time limits.
ComparisonReport compare(const RunConfig& config);
nlohmann::json to_json(const ComparisonReport& report);
void write_compare(std::ostream& os, const ComparisonReport& report, const RunConfig& config);

/// Runs one of simulate, return-series, limit, compare and writes its output
/// to `os`. Returns Success, or ComparisonFail for a failing compare.
/// Throws InputError for an unknown command.
ExitCode run_command(std::string_view command, const RunConfig& config, std::ostream& os);

}  // namespace hexwalk
