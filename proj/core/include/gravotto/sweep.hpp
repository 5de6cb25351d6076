#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gravotto/spacetime.hpp"

namespace gravotto {

/// One family of bound curves: a metric template plus the anchor coordinates
/// (Bob's horizon offsets for RN, Alice's radii for De Sitter) and the
/// separation grid, all in absolute lengths.
struct SweepSpec {
  Metric metric;
  std::vector<double> anchors;
  std::vector<double> separations;
};

/// Tabulated bound curves. The separation column is reported in horizon
/// units (r_s for RN, a for De Sitter) to match the conventional axes;
/// `bounds[curve][i]` pairs with `separations[i]`.
struct SweepTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> labels;
  std::vector<double> separations;
  std::vector<std::vector<double>> bounds;
};

/// Bound curves over a Reissner-Nordstrom exterior. Bob sits at
/// r+ + offset, Alice at r_B + separation. Throws NoHorizonError for a
/// naked singularity (there is no horizon to anchor to).
SweepTable rn_bound_curves(double r_s, double r_q,
                           std::span<const double> bob_offsets,
                           std::span<const double> separations);

/// Bound curves over a De Sitter static patch. Alice sits at each anchor
/// radius, Bob at r_A + separation (closer to the horizon).
SweepTable desitter_bound_curves(double a, std::span<const double> alice_radii,
                                 std::span<const double> separations);

/// Dispatches on the metric family of the spec.
SweepTable run_sweep(const SweepSpec& spec);

/// First-order lower bound 1/(1 + g * delta_r) for a uniform weak field.
double earth_estimate(double g, double delta_r);

/// `points` strictly increasing values log-spaced over [lo, hi].
std::vector<double> log_spaced_grid(double lo, double hi, std::size_t points);

/// CSV form: `#`-prefixed metadata lines, a header row
/// `separation,<label>...`, then one row per separation with floats in
/// shortest round-trip decimal form.
void write_csv(const SweepTable& table, std::ostream& out);

}  // namespace gravotto
