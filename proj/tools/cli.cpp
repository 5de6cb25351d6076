#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gravotto/cycle.hpp"
#include "gravotto/montecarlo.hpp"
#include "gravotto/serialize.hpp"
#include "gravotto/sweep.hpp"

namespace gravotto::cli {

namespace {

/// Raw flag values; optional<> distinguishes "given" from "absent" so
/// --config can fill the gaps before validation.
struct RawOptions {
  std::optional<std::string> metric_kind;
  std::optional<double> g;
  std::optional<double> r_s;
  std::optional<double> r_q;
  std::optional<double> a;
  std::optional<double> r_a;
  std::optional<double> r_b;
  std::optional<double> z_a;
  std::optional<double> z_b;
  std::optional<double> t_cold;
  std::optional<double> t_hot;
  std::optional<double> gap;
  bool first_order = false;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::vector<double> anchors;  // --offsets (rn) / --anchors (desitter)
  std::optional<double> sep_min;
  std::optional<double> sep_max;
  std::optional<std::size_t> points;
};

void fill_number(std::optional<double>& slot, const nlohmann::json& config,
                 const char* key) {
  if (slot || !config.contains(key)) return;
  const auto& value = config.at(key);
  if (!value.is_number())
    throw UsageError(std::string("config field '") + key +
                     "' must be a number");
  slot = value.get<double>();
}

void fill_integer(std::optional<std::uint64_t>& slot,
                  const nlohmann::json& config, const char* key) {
  if (slot || !config.contains(key)) return;
  const auto& value = config.at(key);
  if (!value.is_number_unsigned())
    throw UsageError(std::string("config field '") + key +
                     "' must be a nonnegative integer");
  slot = value.get<std::uint64_t>();
}

void fill_string(std::optional<std::string>& slot,
                 const nlohmann::json& config, const char* key) {
  if (slot || !config.contains(key)) return;
  const auto& value = config.at(key);
  if (!value.is_string())
    throw UsageError(std::string("config field '") + key +
                     "' must be a string");
  slot = value.get<std::string>();
}

void apply_config(RawOptions& raw, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file '" + path +
                     "' does not parse as JSON: " + e.what());
  }
  if (!config.is_object())
    throw UsageError("config file must hold a JSON object");

  static const std::set<std::string> kAllowed = {
      "metric",  "r_a",     "r_b",     "z_a",     "z_b",    "t_cold",
      "t_hot",   "gap",     "first_order",        "format", "out",
      "seed",    "samples", "offsets", "anchors", "sep_min",
      "sep_max", "points"};
  for (const auto& [key, value] : config.items())
    if (!kAllowed.contains(key))
      throw UsageError("unknown config field '" + key + "'");

  if (config.contains("metric")) {
    Metric metric;
    try {
      metric = metric_from_json(config.at("metric").dump());
    } catch (const ArgumentError& e) {
      throw UsageError(std::string("config metric object invalid: ") +
                       e.what());
    }
    // Flags win field by field; a --metric flag naming a different kind
    // discards the config metric block entirely.
    const auto adopt = [&](const char* kind, auto fill) {
      if (!raw.metric_kind) raw.metric_kind = kind;
      if (*raw.metric_kind == kind) fill();
    };
    if (const auto* uniform = std::get_if<UniformField>(&metric)) {
      adopt("uniform", [&] {
        if (!raw.g) raw.g = uniform->g;
      });
    } else if (const auto* rn = std::get_if<ReissnerNordstrom>(&metric)) {
      adopt("rn", [&] {
        if (!raw.r_s) raw.r_s = rn->r_s;
        if (!raw.r_q) raw.r_q = rn->r_q;
      });
    } else {
      const auto& ds = std::get<DeSitter>(metric);
      adopt("desitter", [&] {
        if (!raw.a) raw.a = ds.a;
      });
    }
  }

  fill_number(raw.r_a, config, "r_a");
  fill_number(raw.r_b, config, "r_b");
  fill_number(raw.z_a, config, "z_a");
  fill_number(raw.z_b, config, "z_b");
  fill_number(raw.t_cold, config, "t_cold");
  fill_number(raw.t_hot, config, "t_hot");
  fill_number(raw.gap, config, "gap");
  fill_number(raw.sep_min, config, "sep_min");
  fill_number(raw.sep_max, config, "sep_max");
  fill_integer(raw.seed, config, "seed");
  fill_integer(raw.samples, config, "samples");
  fill_string(raw.format, config, "format");
  fill_string(raw.out, config, "out");
  if (config.contains("first_order")) {
    if (!config.at("first_order").is_boolean())
      throw UsageError("config field 'first_order' must be a boolean");
    raw.first_order = raw.first_order || config.at("first_order").get<bool>();
  }
  if (config.contains("points")) {
    if (!raw.points) {
      if (!config.at("points").is_number_unsigned())
        throw UsageError("config field 'points' must be a positive integer");
      raw.points = config.at("points").get<std::size_t>();
    }
  }
  if (config.contains("offsets") && config.contains("anchors"))
    throw UsageError("config may hold 'offsets' or 'anchors', not both");
  for (const char* key : {"offsets", "anchors"}) {
    if (!config.contains(key) || !raw.anchors.empty()) continue;
    const auto& list = config.at(key);
    if (!list.is_array())
      throw UsageError(std::string("config field '") + key +
                       "' must be an array of numbers");
    for (const auto& value : list) {
      if (!value.is_number())
        throw UsageError(std::string("config field '") + key +
                         "' must be an array of numbers");
      raw.anchors.push_back(value.get<double>());
    }
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

RunConfig finalize(Command command, RawOptions& raw) {
  if (raw.config_path) apply_config(raw, *raw.config_path);

  RunConfig cfg;
  cfg.command = command;

  const bool is_sweep =
      command == Command::kSweepRn || command == Command::kSweepDeSitter;
  const bool needs_stations = !is_sweep;
  const bool needs_thermal =
      command == Command::kCycle || command == Command::kMc;

  std::vector<std::string> missing;
  std::vector<std::string> conflicts;
  const auto need = [&](const std::optional<double>& slot,
                        const char* flag) -> double {
    if (!slot) {
      missing.push_back(flag);
      return 0.0;
    }
    return *slot;
  };
  const auto forbid = [&](const std::optional<double>& slot,
                          const char* flag) {
    if (slot) conflicts.push_back(flag);
  };

  std::string kind;
  if (command == Command::kSweepRn)
    kind = "rn";
  else if (command == Command::kSweepDeSitter)
    kind = "desitter";
  else if (raw.metric_kind)
    kind = *raw.metric_kind;
  else
    missing.push_back("--metric");

  if (!kind.empty() && kind != "uniform" && kind != "rn" && kind != "desitter")
    throw UsageError("unknown metric '" + kind +
                     "': expected uniform|rn|desitter");

  if (kind == "uniform") {
    cfg.metric = UniformField{need(raw.g, "--g")};
    forbid(raw.r_s, "--r-s");
    forbid(raw.r_q, "--r-q");
    forbid(raw.a, "--a");
    if (needs_stations) {
      cfg.alice = Station{need(raw.z_a, "--z-a")};
      cfg.bob = Station{need(raw.z_b, "--z-b")};
      forbid(raw.r_a, "--r-a");
      forbid(raw.r_b, "--r-b");
    }
  } else if (kind == "rn") {
    // Sweeps default to the uncharged family; elsewhere the charge must be
    // stated, zero included.
    const double r_q = command == Command::kSweepRn
                           ? raw.r_q.value_or(0.0)
                           : need(raw.r_q, "--r-q");
    cfg.metric = ReissnerNordstrom{need(raw.r_s, "--r-s"), r_q};
    forbid(raw.g, "--g");
    forbid(raw.a, "--a");
    if (needs_stations) {
      cfg.alice = Station{need(raw.r_a, "--r-a")};
      cfg.bob = Station{need(raw.r_b, "--r-b")};
      forbid(raw.z_a, "--z-a");
      forbid(raw.z_b, "--z-b");
    }
    if (raw.first_order)
      conflicts.push_back("--first-order (uniform metric only)");
  } else if (kind == "desitter") {
    cfg.metric = DeSitter{need(raw.a, "--a")};
    forbid(raw.g, "--g");
    forbid(raw.r_s, "--r-s");
    forbid(raw.r_q, "--r-q");
    if (needs_stations) {
      cfg.alice = Station{need(raw.r_a, "--r-a")};
      cfg.bob = Station{need(raw.r_b, "--r-b")};
      forbid(raw.z_a, "--z-a");
      forbid(raw.z_b, "--z-b");
    }
    if (raw.first_order)
      conflicts.push_back("--first-order (uniform metric only)");
  }

  if (needs_thermal) {
    cfg.t_cold = need(raw.t_cold, "--t-cold");
    cfg.t_hot = need(raw.t_hot, "--t-hot");
    cfg.gap_a = need(raw.gap, "--gap");
  }

  cfg.first_order = raw.first_order && kind == "uniform";

  if (command == Command::kMc) {
    cfg.seed = raw.seed.value_or(1);
    cfg.samples = raw.samples.value_or(100000);
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  }

  if (is_sweep) {
    if (raw.anchors.empty())
      cfg.anchors = command == Command::kSweepRn
                        ? std::vector<double>{0.1, 0.5, 1.0, 2.0}
                        : std::vector<double>{0.1, 0.3, 0.5, 0.7};
    else
      cfg.anchors = raw.anchors;
    cfg.points = raw.points.value_or(200);
    if (cfg.points < 2) throw UsageError("--points must be at least 2");
    if (command == Command::kSweepRn) {
      cfg.sep_min = raw.sep_min.value_or(1e-2);
      cfg.sep_max = raw.sep_max.value_or(1e2);
    } else {
      double max_anchor = 0.0;
      for (const double anchor : cfg.anchors) {
        if (!(anchor >= 0.0 && anchor < 1.0))
          throw UsageError(
              "--anchors for desitter must lie in [0, 1) (units of a)");
        max_anchor = std::max(max_anchor, anchor);
      }
      cfg.sep_min = raw.sep_min.value_or(1e-3);
      cfg.sep_max = raw.sep_max.value_or((1.0 - max_anchor) * 0.999);
    }
    if (!(cfg.sep_min > 0.0 && cfg.sep_max > cfg.sep_min))
      throw UsageError("--sep-min/--sep-max must satisfy 0 < min < max");
  }

  const std::string format = raw.format.value_or(is_sweep ? "csv" : "json");
  if (format == "json")
    cfg.format = OutputFormat::kJson;
  else if (format == "csv")
    cfg.format = OutputFormat::kCsv;
  else
    throw UsageError("--format must be json or csv");
  if (is_sweep && cfg.format == OutputFormat::kJson)
    throw UsageError("sweep tables are emitted as csv only");

  cfg.out_path = raw.out;

  if (!missing.empty() || !conflicts.empty()) {
    std::string message;
    if (!missing.empty())
      message += "missing required flags: " + join(missing);
    if (!conflicts.empty()) {
      if (!message.empty()) message += "; ";
      message += "flags not applicable here: " + join(conflicts);
    }
    throw UsageError(message);
  }
  return cfg;
}

RedshiftFactor first_order_chi(const RunConfig& cfg) {
  const auto& field = std::get<UniformField>(cfg.metric);
  validate_station(cfg.metric, cfg.alice);
  validate_station(cfg.metric, cfg.bob);
  const double g_dr =
      field.g * (cfg.alice.coordinate - cfg.bob.coordinate);
  if (!(1.0 + g_dr > 0.0))
    throw DomainError("first-order factor 1 + g*dz is not positive");
  return RedshiftFactor{1.0 + g_dr};
}

CycleParams to_params(const RunConfig& cfg) {
  return CycleParams{cfg.metric, cfg.alice, cfg.bob,
                     cfg.t_cold, cfg.t_hot, cfg.gap_a};
}

void emit_bound(const RunConfig& cfg, double bound, std::ostream& out) {
  if (cfg.format == OutputFormat::kJson) {
    nlohmann::ordered_json object;
    object["bound"] = bound;
    object["units"] = std::string(kUnitsNote);
    out << object.dump() << '\n';
  } else {
    out << "bound\n" << format_double(bound) << '\n';
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"gravitational Otto refrigeration cycles in static spacetimes"};
  app.name("gravotto");
  app.require_subcommand(1);

  RawOptions raw;

  const auto add_metric = [&](CLI::App* cmd) {
    cmd->add_option("--metric", raw.metric_kind,
                    "metric kind: uniform|rn|desitter");
    cmd->add_option("--g", raw.g, "surface acceleration (uniform), 1/m");
    cmd->add_option("--r-s", raw.r_s, "Schwarzschild radius (rn), m");
    cmd->add_option("--r-q", raw.r_q, "charge length (rn), m");
    cmd->add_option("--a", raw.a, "cosmological horizon radius (desitter), m");
  };
  const auto add_stations = [&](CLI::App* cmd) {
    cmd->add_option("--r-a", raw.r_a, "Alice's radial coordinate, m");
    cmd->add_option("--r-b", raw.r_b, "Bob's radial coordinate, m");
    cmd->add_option("--z-a", raw.z_a, "Alice's height (uniform), m");
    cmd->add_option("--z-b", raw.z_b, "Bob's height (uniform), m");
    cmd->add_flag("--first-order", raw.first_order,
                  "use chi = 1 + g*dz instead of the exact uniform factor");
  };
  const auto add_thermal = [&](CLI::App* cmd) {
    cmd->add_option("--t-cold", raw.t_cold, "cold reservoir temperature");
    cmd->add_option("--t-hot", raw.t_hot, "hot reservoir temperature");
    cmd->add_option("--gap", raw.gap, "Alice's qubit gap");
  };
  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", raw.format, "output format: json|csv");
    cmd->add_option("--out", raw.out, "write output to this file");
    cmd->add_option("--config", raw.config_path,
                    "JSON config file; explicit flags win");
  };
  const auto add_sweep_grid = [&](CLI::App* cmd) {
    cmd->add_option("--sep-min", raw.sep_min,
                    "smallest separation (horizon units)");
    cmd->add_option("--sep-max", raw.sep_max,
                    "largest separation (horizon units)");
    cmd->add_option("--points", raw.points, "grid resolution (default 200)");
  };

  auto* cycle_cmd =
      app.add_subcommand("cycle", "evaluate one refrigeration cycle");
  add_metric(cycle_cmd);
  add_stations(cycle_cmd);
  add_thermal(cycle_cmd);
  add_io(cycle_cmd);

  auto* bound_cmd = app.add_subcommand(
      "bound", "lower bound on T_c/T_h for a station pair");
  add_metric(bound_cmd);
  add_stations(bound_cmd);
  add_io(bound_cmd);

  auto* mc_cmd = app.add_subcommand(
      "mc", "trajectory-sampled estimate of the stroke energetics");
  add_metric(mc_cmd);
  add_stations(mc_cmd);
  add_thermal(mc_cmd);
  add_io(mc_cmd);
  mc_cmd->add_option("--seed", raw.seed, "generator seed (default 1)");
  mc_cmd->add_option("--samples", raw.samples,
                     "number of trajectories (default 100000)");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "tabulate bound-curve families as CSV");
  sweep_cmd->require_subcommand(1);
  auto* sweep_rn = sweep_cmd->add_subcommand(
      "rn", "curves over a Reissner-Nordstrom exterior");
  sweep_rn->add_option("--r-s", raw.r_s, "Schwarzschild radius, m");
  sweep_rn->add_option("--r-q", raw.r_q, "charge length, m");
  sweep_rn->add_option("--offsets", raw.anchors,
                       "Bob's horizon offsets (units of r_s)");
  add_sweep_grid(sweep_rn);
  add_io(sweep_rn);
  auto* sweep_ds =
      sweep_cmd->add_subcommand("desitter", "curves over a De Sitter patch");
  sweep_ds->add_option("--a", raw.a, "cosmological horizon radius, m");
  sweep_ds->add_option("--anchors", raw.anchors,
                       "Alice's radii (units of a)");
  add_sweep_grid(sweep_ds);
  add_io(sweep_ds);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gravotto");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    throw HelpRequested(parsed.empty() ? app.help() : parsed.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command command = Command::kCycle;
  if (bound_cmd->parsed())
    command = Command::kBound;
  else if (mc_cmd->parsed())
    command = Command::kMc;
  else if (sweep_cmd->parsed())
    command = sweep_rn->parsed() ? Command::kSweepRn : Command::kSweepDeSitter;
  return finalize(command, raw);
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file_sink;
  std::ostream* sink = &out;
  if (cfg.out_path) {
    file_sink.open(*cfg.out_path);
    if (!file_sink)
      throw Error("cannot open output file '" + *cfg.out_path + "'");
    sink = &file_sink;
  }

  if (naked_singularity(cfg.metric))
    err << "warning: naked singularity (r_q > r_s/2): no horizon, static "
           "domain is (0, inf)\n";

  switch (cfg.command) {
    case Command::kCycle: {
      const CycleReport report =
          cfg.first_order
              ? run_cycle(first_order_chi(cfg), cfg.t_cold, cfg.t_hot,
                          cfg.gap_a)
              : run_cycle(to_params(cfg));
      if (cfg.format == OutputFormat::kJson)
        *sink << to_json(report) << '\n';
      else
        *sink << to_csv(report);
      break;
    }
    case Command::kBound: {
      double bound = 0.0;
      if (cfg.first_order) {
        const auto& field = std::get<UniformField>(cfg.metric);
        validate_station(cfg.metric, cfg.alice);
        validate_station(cfg.metric, cfg.bob);
        const double dz = cfg.alice.coordinate - cfg.bob.coordinate;
        if (dz < 0.0)
          throw OrientationError(
              "Alice below Bob in a uniform field: no redshift gain, "
              "refrigeration impossible");
        bound = earth_estimate(field.g, dz);
      } else {
        bound = cold_temperature_bound(cfg.metric, cfg.alice, cfg.bob);
      }
      emit_bound(cfg, bound, *sink);
      break;
    }
    case Command::kMc: {
      const TrajectoryLedger ledger =
          cfg.first_order
              ? simulate_cycles(first_order_chi(cfg), cfg.t_cold, cfg.t_hot,
                                cfg.gap_a, cfg.samples, cfg.seed)
              : simulate_cycles(to_params(cfg), cfg.samples, cfg.seed);
      if (cfg.format == OutputFormat::kJson)
        *sink << to_json(ledger) << '\n';
      else
        *sink << to_csv(ledger);
      break;
    }
    case Command::kSweepRn: {
      const auto& metric = std::get<ReissnerNordstrom>(cfg.metric);
      std::vector<double> offsets;
      offsets.reserve(cfg.anchors.size());
      for (const double anchor : cfg.anchors)
        offsets.push_back(anchor * metric.r_s);
      std::vector<double> separations =
          log_spaced_grid(cfg.sep_min, cfg.sep_max, cfg.points);
      for (double& dr : separations) dr *= metric.r_s;
      write_csv(rn_bound_curves(metric.r_s, metric.r_q, offsets, separations),
                *sink);
      break;
    }
    case Command::kSweepDeSitter: {
      const auto& metric = std::get<DeSitter>(cfg.metric);
      std::vector<double> radii;
      radii.reserve(cfg.anchors.size());
      for (const double anchor : cfg.anchors)
        radii.push_back(anchor * metric.a);
      std::vector<double> separations =
          log_spaced_grid(cfg.sep_min, cfg.sep_max, cfg.points);
      for (double& dr : separations) dr *= metric.a;
      write_csv(desitter_bound_curves(metric.a, radii, separations), *sink);
      break;
    }
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    const RunConfig cfg = parse_args(args);
    return dispatch(cfg, std::cout, std::cerr);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const OrientationError& e) {
    std::cerr << "orientation error: " << e.what() << '\n';
    return 1;
  } catch (const NoHorizonError& e) {
    std::cerr << "no-horizon error: " << e.what() << '\n';
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gravotto::cli
