#include "hexwalk/cli_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hexwalk/evolution.hpp"
#include "hexwalk/limit_laws.hpp"

namespace hexwalk {

using nlohmann::json;

namespace {

cdouble complex_from_json(const json& j, const char* key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError(std::string("config key '") + key + "' must be [re, im] or a number");
}

CoinState checked_state(const Vec3cd& v, bool normalize) {
  if (!v.allFinite()) throw InputError("initial state has non-finite components");
  if (!normalize && std::abs(v.squaredNorm() - 1.0) > kConfigNormTolerance) {
    throw InputError("initial state is not normalized (|alpha|^2+|beta|^2+|gamma|^2 = " +
                     format_double(v.squaredNorm()) + "); pass --normalize to rescale");
  }
  try {
    return CoinState::normalized(v);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void validate(const RunConfig& config) {
  if (config.t_max < 0) throw InputError("t_max must be non-negative");
  if (config.window < 1) throw InputError("window must be at least 1");
  if (!(config.tolerance > 0) || !std::isfinite(config.tolerance)) {
    throw InputError("tolerance must be a positive number");
  }
}

// Negative zero is written as 0.
double unsigned_zero(double v) { return v == 0 ? 0.0 : v; }

json complex_to_json(cdouble z) { return json::array({unsigned_zero(z.real()), unsigned_zero(z.imag())}); }

std::string complex_to_text(cdouble z) {
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

const Site kOrigin{Sublattice::A, 0, 0};

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw InputError("unknown format '" + std::string(name) + "' (expected csv, json or text)");
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Text: return "text";
  }
  return "csv";
}

CoinParams parse_preset(std::string_view name) {
  if (name == "grover") return CoinParams::grover();
  throw InputError("unknown preset '" + std::string(name) + "' (only 'grover' is defined)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0 ? 0.0 : v);
  return buf;
}

CoinState parse_state_triple(std::string_view text, bool normalize) {
  std::vector<double> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw InputError("cannot parse state component '" + token + "'");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos) {
      throw InputError("cannot parse state component '" + token + "'");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3) throw InputError("state must have exactly three comma-separated components");
  return checked_state(Vec3cd(parts[0], parts[1], parts[2]), normalize);
}

RunConfig config_from_json(const json& j, RunConfig base) {
  static constexpr std::array<std::string_view, 12> kKeys{
      "theta", "preset", "alpha", "beta", "gamma", "t_max",
      "output_path", "format", "tolerance", "window", "indices", "normalize"};
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw InputError("unknown config key '" + key + "'");
    }
  }
  try {
    if (j.contains("preset") && j.contains("theta")) {
      throw InputError("config sets both 'preset' and 'theta'");
    }
    if (j.contains("preset")) base.coin = parse_preset(j.at("preset").get<std::string>());
    if (j.contains("theta")) {
      const json& theta = j.at("theta");
      if (theta.is_string()) {
        base.coin = parse_preset(theta.get<std::string>());
      } else {
        try {
          base.coin = CoinParams(theta.get<double>());
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
    }
    const int given = static_cast<int>(j.contains("alpha")) + static_cast<int>(j.contains("beta")) +
                      static_cast<int>(j.contains("gamma"));
    if (given != 0 && given != 3) throw InputError("config must give all of alpha, beta, gamma or none");
    if (given == 3) {
      const Vec3cd v(complex_from_json(j.at("alpha"), "alpha"), complex_from_json(j.at("beta"), "beta"),
                     complex_from_json(j.at("gamma"), "gamma"));
      base.state = checked_state(v, j.value("normalize", false));
    }
    if (j.contains("t_max")) base.t_max = j.at("t_max").get<int>();
    if (j.contains("output_path")) base.output_path = j.at("output_path").get<std::string>();
    if (j.contains("format")) base.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("tolerance")) base.tolerance = j.at("tolerance").get<double>();
    if (j.contains("window")) base.window = j.at("window").get<int>();
    if (j.contains("indices")) base.indices = j.at("indices").get<bool>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  validate(base);
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j, std::move(base));
}

std::vector<SimulationRow> simulate(const RunConfig& config) {
  validate(config);
  const WaveFunction wf = evolve(config.state, config.t_max, build_coin(config.coin));
  const Distribution dist = distribution(wf);
  std::vector<SimulationRow> rows;
  rows.reserve(dist.probs.size());
  for (const auto& [site, p] : dist.probs) rows.push_back({site, to_physical(site), p});
  // 2 px = 3x + [B] and py is proportional to y, so this is the (px, py) order.
  const auto key = [](const Site& s) {
    return std::pair(3L * s.x + (s.sub == Sublattice::B ? 1 : 0), s.y);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const SimulationRow& a, const SimulationRow& b) { return key(a.site) < key(b.site); });
  return rows;
}

void write_simulation(std::ostream& os, const std::vector<SimulationRow>& rows, const RunConfig& config) {
  if (config.format == OutputFormat::Json) {
    json out;
    out["command"] = "simulate";
    out["theta"] = config.coin.theta();
    out["t"] = config.t_max;
    json list = json::array();
    for (const auto& r : rows) {
      json row{{"px", r.point.px}, {"py", r.point.py}, {"prob", r.prob}};
      if (config.indices) {
        row["sub"] = r.site.sub == Sublattice::A ? "A" : "B";
        row["x"] = r.site.x;
        row["y"] = r.site.y;
      }
      list.push_back(std::move(row));
    }
    out["rows"] = std::move(list);
    os << out.dump(2) << '\n';
    return;
  }
  os << (config.indices ? "sub,x,y,px,py,prob\n" : "px,py,prob\n");
  for (const auto& r : rows) {
    if (config.indices) {
      os << (r.site.sub == Sublattice::A ? "A" : "B") << ',' << r.site.x << ',' << r.site.y << ',';
    }
    os << format_double(r.point.px) << ',' << format_double(r.point.py) << ',' << format_double(r.prob)
       << '\n';
  }
}

std::vector<SeriesRow> return_series_table(const RunConfig& config) {
  validate(config);
  const double limit = limit_return_probability(config.coin, config.state);
  std::vector<SeriesRow> rows;
  for (const auto& p : return_series(config.state, config.t_max, build_coin(config.coin))) {
    rows.push_back({p.t, p.probability, limit});
  }
  return rows;
}

void write_return_series(std::ostream& os, const std::vector<SeriesRow>& rows, const RunConfig& config) {
  if (config.format == OutputFormat::Json) {
    json out;
    out["command"] = "return-series";
    out["theta"] = config.coin.theta();
    out["limit"] = rows.empty() ? 0.0 : rows.front().limit;
    json list = json::array();
    for (const auto& r : rows) list.push_back({{"t", r.t}, {"p_origin", r.p_origin}, {"limit", r.limit}});
    out["rows"] = std::move(list);
    os << out.dump(2) << '\n';
    return;
  }
  os << "t,p_origin,limit\n";
  for (const auto& r : rows) {
    os << r.t << ',' << format_double(r.p_origin) << ',' << format_double(r.limit) << '\n';
  }
}

LimitReport limit_report(const RunConfig& config) {
  LimitReport r;
  r.theta = config.coin.theta();
  r.c = config.coin.c();
  r.s = config.coin.s();
  r.a_theta = a_theta(config.coin);
  r.limit = limit_return_probability(config.coin, config.state);
  r.delta = delta_weight(config.coin, config.state);
  r.delocalized = delocalization_condition(config.coin, config.state);
  r.origin_amplitude = asymptotic_origin_amplitude(config.coin, config.state).vector();
  return r;
}

json to_json(const LimitReport& r) {
  return json{{"theta", r.theta},
              {"c", r.c},
              {"s", r.s},
              {"A", r.a_theta},
              {"limit", r.limit},
              {"delta", r.delta},
              {"delocalized", r.delocalized},
              {"origin_amplitude",
               json::array({complex_to_json(r.origin_amplitude(0)), complex_to_json(r.origin_amplitude(1)),
                            complex_to_json(r.origin_amplitude(2))})}};
}

LimitReport limit_report_from_json(const json& j) {
  try {
    LimitReport r;
    r.theta = j.at("theta").get<double>();
    r.c = j.at("c").get<double>();
    r.s = j.at("s").get<double>();
    r.a_theta = j.at("A").get<double>();
    r.limit = j.at("limit").get<double>();
    r.delta = j.at("delta").get<double>();
    r.delocalized = j.at("delocalized").get<bool>();
    const json& amp = j.at("origin_amplitude");
    if (!amp.is_array() || amp.size() != 3) throw InputError("origin_amplitude must have three entries");
    for (int k = 0; k < 3; ++k) r.origin_amplitude(k) = complex_from_json(amp[k], "origin_amplitude");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed limit report: ") + e.what());
  }
}

void write_limit(std::ostream& os, const LimitReport& r, const RunConfig& config) {
  if (config.format == OutputFormat::Json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  os << "theta: " << format_double(r.theta) << '\n'
     << "c: " << format_double(r.c) << '\n'
     << "s: " << format_double(r.s) << '\n'
     << "A: " << format_double(r.a_theta) << '\n'
     << "limit: " << format_double(r.limit) << '\n'
     << "delta: " << format_double(r.delta) << '\n'
     << "delocalized: " << (r.delocalized ? "true" : "false") << '\n'
     << "origin_amplitude: " << complex_to_text(r.origin_amplitude(0)) << ' '
     << complex_to_text(r.origin_amplitude(1)) << ' ' << complex_to_text(r.origin_amplitude(2)) << '\n';
}

ComparisonReport compare(const RunConfig& config) {
  validate(config);
  ComparisonReport r;
  r.t_max = config.t_max;
  r.tolerance = config.tolerance;
  r.limit = limit_return_probability(config.coin, config.state);
  r.limit_amplitude = asymptotic_origin_amplitude(config.coin, config.state).vector();

  const int last_even = config.t_max - config.t_max % 2;
  const int first = std::max(0, last_even - 2 * (config.window - 1));
  Propagator p(build_coin(config.coin), config.state);
  p.advance(first);
  double p_sum = 0;
  Vec3cd amp_sum = Vec3cd::Zero();
  for (;;) {
    r.window_times.push_back(p.time());
    p_sum += p.probability(kOrigin);
    amp_sum += p.amplitude(kOrigin);
    if (p.time() + 2 > last_even) break;
    p.advance(2);
  }
  const double n = static_cast<double>(r.window_times.size());
  r.mean_p_origin = p_sum / n;
  r.mean_origin_amplitude = amp_sum / n;
  r.probability_error = std::abs(r.mean_p_origin - r.limit);
  r.amplitude_error = (r.mean_origin_amplitude - r.limit_amplitude).cwiseAbs().maxCoeff();
  r.pass = r.probability_error <= r.tolerance && r.amplitude_error <= r.tolerance;
  return r;
}

json to_json(const ComparisonReport& r) {
  json amp_sim = json::array(), amp_lim = json::array();
  for (int k = 0; k < 3; ++k) {
    amp_sim.push_back(complex_to_json(r.mean_origin_amplitude(k)));
    amp_lim.push_back(complex_to_json(r.limit_amplitude(k)));
  }
  return json{{"t_max", r.t_max},
              {"window_times", r.window_times},
              {"mean_p_origin", r.mean_p_origin},
              {"limit", r.limit},
              {"probability_error", r.probability_error},
              {"mean_origin_amplitude", amp_sim},
              {"limit_amplitude", amp_lim},
              {"amplitude_error", r.amplitude_error},
              {"tolerance", r.tolerance},
              {"result", r.pass ? "PASS" : "FAIL"}};
}

void write_compare(std::ostream& os, const ComparisonReport& r, const RunConfig& config) {
  if (config.format == OutputFormat::Json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  os << "t_max: " << r.t_max << '\n'
     << "window: " << r.window_times.front() << ".." << r.window_times.back() << " ("
     << r.window_times.size() << " even steps)\n"
     << "mean_p_origin: " << format_double(r.mean_p_origin) << '\n'
     << "limit: " << format_double(r.limit) << '\n'
     << "probability_error: " << format_double(r.probability_error) << '\n'
     << "amplitude_error: " << format_double(r.amplitude_error) << '\n'
     << "tolerance: " << format_double(r.tolerance) << '\n'
     << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
}

ExitCode run_command(std::string_view command, const RunConfig& config, std::ostream& os) {
  if (command == "simulate") {
    write_simulation(os, simulate(config), config);
  } else if (command == "return-series") {
    write_return_series(os, return_series_table(config), config);
  } else if (command == "limit") {
    write_limit(os, limit_report(config), config);
  } else if (command == "compare") {
    const ComparisonReport r = compare(config);
    write_compare(os, r, config);
    if (!r.pass) return ExitCode::ComparisonFail;
  } else {
    throw InputError("unknown command '" + std::string(command) + "'");
  }
  return ExitCode::Success;
}

}  // namespace hexwalk
