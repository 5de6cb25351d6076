#pragma once

#include <optional>
#include <variant>

#include "gravotto/errors.hpp"

namespace gravotto {

/// Uniform weak field along z: |g00(z)| = (1 + g z)^2. The redshift between
/// two heights is then (1 + g z_A)/(1 + g z_B), which reduces to 1 + g*dz
/// for small g*dz.
struct UniformField {
  double g = 0.0;  ///< surface acceleration, inverse length, g >= 0

  bool operator==(const UniformField&) const = default;
};

/// Charged, non-rotating, spherically symmetric body:
/// f(r) = 1 - r_s/r + (r_q/r)^2.
struct ReissnerNordstrom {
  double r_s = 0.0;  ///< Schwarzschild radius (= 2M), r_s > 0
  double r_q = 0.0;  ///< charge length (r_q^2 = Q^2/4pi), r_q >= 0

  bool operator==(const ReissnerNordstrom&) const = default;
};

/// Static patch of the expanding vacuum solution: f(r) = 1 - (r/a)^2.
struct DeSitter {
  double a = 0.0;  ///< cosmological horizon radius, a > 0

  bool operator==(const DeSitter&) const = default;
};

using Metric = std::variant<UniformField, ReissnerNordstrom, DeSitter>;

/// One laboratory position: height z for UniformField, radius r otherwise.
struct Station {
  double coordinate = 0.0;

  bool operator==(const Station&) const = default;
};

/// chi = sqrt(|g00(emitter)|) / sqrt(|g00(absorber)|).
struct RedshiftFactor {
  double value = 1.0;
};

/// Coordinate interval, possibly unbounded; open ends exclude the endpoint.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_open = true;
  bool upper_open = true;

  bool contains(double x) const {
    const bool above = lower_open ? x > lower : x >= lower;
    const bool below = upper_open ? x < upper : x <= upper;
    return above && below;
  }
};

/// Stations closer than this (relative to the boundary coordinate) to an
/// open domain boundary are rejected: sqrt(g00) loses all significance there.
inline constexpr double kBoundaryGuard = 1e-12;

/// Throws ArgumentError unless the metric parameters satisfy their bounds.
void validate_metric(const Metric& metric);

/// Throws DomainError unless the station lies strictly inside the static
/// domain, clear of the guard band around any open boundary.
void validate_station(const Metric& metric, Station station);

/// |g00| at the station. Positive for every valid station.
double metric_g00(const Metric& metric, Station station);

/// Frequency ratio of a photon sent from emitter to absorber.
/// redshift_factor(m, A, B) * redshift_factor(m, B, A) == 1 up to rounding.
RedshiftFactor redshift_factor(const Metric& metric, Station emitter,
                               Station absorber);

/// Outer boundary of the static region, when one exists:
/// RN outer root r+ of f, De Sitter horizon a, z = -1/g for a uniform field.
std::optional<double> outer_horizon(const Metric& metric);

/// Coordinate interval on which the metric is static and g00 > 0.
Interval static_domain(const Metric& metric);

/// True for a Reissner-Nordstrom metric with r_q > r_s/2 (no horizon).
bool naked_singularity(const Metric& metric);

}  // namespace gravotto
