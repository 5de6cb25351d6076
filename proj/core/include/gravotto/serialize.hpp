#pragma once

#include <string>
#include <string_view>

#include "gravotto/cycle.hpp"
#include "gravotto/montecarlo.hpp"
#include "gravotto/spacetime.hpp"

namespace gravotto {

/// Convention banner carried in every serialized output.
inline constexpr std::string_view kUnitsNote =
    "natural (c=hbar=G=k_B=eps0=1); lengths in meters";

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

/// Metric as a JSON object with a "kind" discriminator in
/// {"uniform","rn","desitter"} and parameter fields g, r_s, r_q, a.
std::string to_json(const Metric& metric);

/// Parses the metric JSON form; throws ArgumentError on anything malformed,
/// including unknown keys.
Metric metric_from_json(std::string_view text);

std::string to_json(const CycleReport& report);

/// Header row plus one value row, same field names and order as the JSON
/// form; undefined COPs serialize as empty fields.
std::string to_csv(const CycleReport& report);

std::string to_json(const TrajectoryLedger& ledger);

std::string to_csv(const TrajectoryLedger& ledger);

}  // namespace gravotto
