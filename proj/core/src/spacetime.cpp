#include "gravotto/spacetime.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gravotto {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void reject_station(double coordinate, const Interval& domain) {
  std::ostringstream msg;
  msg << "station coordinate " << coordinate << " outside the static domain "
      << (domain.lower_open ? '(' : '[') << domain.lower << ", " << domain.upper
      << (domain.upper_open ? ')' : ']');
  throw DomainError(msg.str());
}

}  // namespace

void validate_metric(const Metric& metric) {
  std::visit(Overloaded{
                 [](const UniformField& m) {
                   if (!(std::isfinite(m.g) && m.g >= 0.0))
                     throw ArgumentError("uniform field requires g >= 0");
                 },
                 [](const ReissnerNordstrom& m) {
                   if (!(std::isfinite(m.r_s) && m.r_s > 0.0))
                     throw ArgumentError("rn metric requires r_s > 0");
                   if (!(std::isfinite(m.r_q) && m.r_q >= 0.0))
                     throw ArgumentError("rn metric requires r_q >= 0");
                 },
                 [](const DeSitter& m) {
                   if (!(std::isfinite(m.a) && m.a > 0.0))
                     throw ArgumentError("de sitter metric requires a > 0");
                 },
             },
             metric);
}

Interval static_domain(const Metric& metric) {
  validate_metric(metric);
  return std::visit(
      Overloaded{
          [](const UniformField& m) {
            if (m.g > 0.0) return Interval{-1.0 / m.g, kInf, true, true};
            return Interval{-kInf, kInf, true, true};
          },
          [](const ReissnerNordstrom& m) {
            const double half = 0.5 * m.r_s;
            if (m.r_q > half)  // naked singularity: f > 0 on all of r > 0
              return Interval{0.0, kInf, true, true};
            const double r_plus =
                half + std::sqrt((half - m.r_q) * (half + m.r_q));
            return Interval{r_plus, kInf, true, true};
          },
          [](const DeSitter& m) { return Interval{0.0, m.a, false, true}; },
      },
      metric);
}

void validate_station(const Metric& metric, Station station) {
  const double x = station.coordinate;
  if (!std::isfinite(x)) throw DomainError("station coordinate must be finite");
  const Interval domain = static_domain(metric);
  if (std::isfinite(domain.lower)) {
    const double guard =
        domain.lower_open ? kBoundaryGuard * std::abs(domain.lower) : 0.0;
    const bool inside =
        domain.lower_open ? x > domain.lower + guard : x >= domain.lower;
    if (!inside) reject_station(x, domain);
  }
  if (std::isfinite(domain.upper)) {
    const double guard =
        domain.upper_open ? kBoundaryGuard * std::abs(domain.upper) : 0.0;
    const bool inside =
        domain.upper_open ? x < domain.upper - guard : x <= domain.upper;
    if (!inside) reject_station(x, domain);
  }
}

double metric_g00(const Metric& metric, Station station) {
  validate_station(metric, station);
  const double value = std::visit(
      Overloaded{
          [&](const UniformField& m) {
            const double u = 1.0 + m.g * station.coordinate;
            return u * u;
          },
          [&](const ReissnerNordstrom& m) {
            const double r = station.coordinate;
            const double q = m.r_q / r;
            return 1.0 - m.r_s / r + q * q;
          },
          [&](const DeSitter& m) {
            const double x = station.coordinate / m.a;
            return 1.0 - x * x;
          },
      },
      metric);
  // Can only trip for near-extremal RN where f has a double root and the
  // guard band still leaves f below rounding noise.
  if (!(value > 0.0))
    throw DomainError("|g00| vanishes at double precision for this station");
  return value;
}

RedshiftFactor redshift_factor(const Metric& metric, Station emitter,
                               Station absorber) {
  const double emitter_g00 = metric_g00(metric, emitter);
  const double absorber_g00 = metric_g00(metric, absorber);
  const double chi = std::sqrt(emitter_g00 / absorber_g00);
  if (!(std::isfinite(chi) && chi > 0.0))
    throw DomainError("redshift factor is not finite");
  return RedshiftFactor{chi};
}

std::optional<double> outer_horizon(const Metric& metric) {
  validate_metric(metric);
  return std::visit(
      Overloaded{
          [](const UniformField& m) -> std::optional<double> {
            if (m.g > 0.0) return -1.0 / m.g;
            return std::nullopt;
          },
          [](const ReissnerNordstrom& m) -> std::optional<double> {
            const double half = 0.5 * m.r_s;
            if (m.r_q > half) return std::nullopt;
            // (half-r_q)(half+r_q) instead of half^2-r_q^2: the factored
            // form stays accurate for near-extremal charges.
            return half + std::sqrt((half - m.r_q) * (half + m.r_q));
          },
          [](const DeSitter& m) -> std::optional<double> { return m.a; },
      },
      metric);
}

bool naked_singularity(const Metric& metric) {
  const auto* rn = std::get_if<ReissnerNordstrom>(&metric);
  return rn != nullptr && rn->r_q > 0.5 * rn->r_s;
}

}  // namespace gravotto
