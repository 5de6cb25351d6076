#include "gravotto/sweep.hpp"

#include <cmath>
#include <ostream>
#include <variant>

#include "gravotto/cycle.hpp"
#include "gravotto/serialize.hpp"

namespace gravotto {

namespace {

void require_grid(std::span<const double> separations) {
  if (separations.empty())
    throw ArgumentError("at least one separation is required");
  double previous = 0.0;
  for (const double dr : separations) {
    if (!(std::isfinite(dr) && dr > previous))
      throw ArgumentError(
          "separations must be positive and strictly increasing");
    previous = dr;
  }
}

}  // namespace

SweepTable rn_bound_curves(double r_s, double r_q,
                           std::span<const double> bob_offsets,
                           std::span<const double> separations) {
  const Metric metric = ReissnerNordstrom{r_s, r_q};
  validate_metric(metric);
  const auto horizon = outer_horizon(metric);
  if (!horizon)
    throw NoHorizonError(
        "r_q > r_s/2 leaves no event horizon to anchor the sweep to");
  require_grid(separations);
  if (bob_offsets.empty())
    throw ArgumentError("at least one bob offset is required");

  SweepTable table;
  table.metadata = {
      {"metric", "rn"},
      {"r_s", format_double(r_s)},
      {"r_q", format_double(r_q)},
      {"r_plus", format_double(*horizon)},
      {"separation_unit", "r_s"},
      {"units", std::string(kUnitsNote)},
  };
  table.separations.reserve(separations.size());
  for (const double dr : separations) table.separations.push_back(dr / r_s);

  for (const double offset : bob_offsets) {
    if (!(std::isfinite(offset) && offset > 0.0))
      throw ArgumentError("bob offsets must be positive");
    const Station bob{*horizon + offset};
    table.labels.push_back("offset=" + format_double(offset / r_s));
    std::vector<double> curve;
    curve.reserve(separations.size());
    for (const double dr : separations) {
      const Station alice{bob.coordinate + dr};
      curve.push_back(cold_temperature_bound(metric, alice, bob));
    }
    table.bounds.push_back(std::move(curve));
  }
  return table;
}

SweepTable desitter_bound_curves(double a, std::span<const double> alice_radii,
                                 std::span<const double> separations) {
  const Metric metric = DeSitter{a};
  validate_metric(metric);
  require_grid(separations);
  if (alice_radii.empty())
    throw ArgumentError("at least one alice radius is required");

  SweepTable table;
  table.metadata = {
      {"metric", "desitter"},
      {"a", format_double(a)},
      {"separation_unit", "a"},
      {"units", std::string(kUnitsNote)},
  };
  table.separations.reserve(separations.size());
  for (const double dr : separations) table.separations.push_back(dr / a);

  for (const double r_a : alice_radii) {
    const Station alice{r_a};
    validate_station(metric, alice);
    table.labels.push_back("r_a=" + format_double(r_a / a));
    std::vector<double> curve;
    curve.reserve(separations.size());
    for (const double dr : separations) {
      const Station bob{r_a + dr};
      curve.push_back(cold_temperature_bound(metric, alice, bob));
    }
    table.bounds.push_back(std::move(curve));
  }
  return table;
}

SweepTable run_sweep(const SweepSpec& spec) {
  if (const auto* rn = std::get_if<ReissnerNordstrom>(&spec.metric))
    return rn_bound_curves(rn->r_s, rn->r_q, spec.anchors, spec.separations);
  if (const auto* ds = std::get_if<DeSitter>(&spec.metric))
    return desitter_bound_curves(ds->a, spec.anchors, spec.separations);
  throw ArgumentError("bound-curve sweeps are defined for rn and desitter");
}

double earth_estimate(double g, double delta_r) {
  if (!(std::isfinite(g) && g >= 0.0))
    throw ArgumentError("g must be finite and nonnegative");
  if (!(std::isfinite(delta_r) && delta_r >= 0.0))
    throw ArgumentError("delta_r must be finite and nonnegative");
  return 1.0 / (1.0 + g * delta_r);
}

std::vector<double> log_spaced_grid(double lo, double hi, std::size_t points) {
  if (!(std::isfinite(lo) && lo > 0.0) || !(std::isfinite(hi) && hi > lo))
    throw ArgumentError("grid requires 0 < lo < hi");
  if (points < 2) throw ArgumentError("grid requires at least two points");
  std::vector<double> grid(points);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * t);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

void write_csv(const SweepTable& table, std::ostream& out) {
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << "=" << value << "\n";
  out << "separation";
  for (const auto& label : table.labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < table.separations.size(); ++i) {
    out << format_double(table.separations[i]);
    for (const auto& curve : table.bounds) out << ',' << format_double(curve[i]);
    out << '\n';
  }
}

}  // namespace gravotto
