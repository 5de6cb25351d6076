#include "gravotto/cycle.hpp"

#include <cmath>

#include "gravotto/thermo.hpp"

namespace gravotto {

double shifted_gap(double gap_a, RedshiftFactor chi) {
  if (!(std::isfinite(gap_a) && gap_a > 0.0))
    throw ArgumentError("gap must be a finite positive energy");
  if (!(std::isfinite(chi.value) && chi.value > 0.0))
    throw ArgumentError("redshift factor must be finite and positive");
  return chi.value * gap_a;
}

StrokeEnergies stroke_energies(double p_a, double p_b, double gap_a,
                               double chi) {
  if (!(p_a >= 0.0 && p_a < 1.0) || !(p_b >= 0.0 && p_b < 1.0))
    throw ArgumentError("purities must lie in [0, 1)");
  if (!(std::isfinite(gap_a) && gap_a > 0.0))
    throw ArgumentError("gap must be a finite positive energy");
  if (!(std::isfinite(chi) && chi > 0.0))
    throw ArgumentError("redshift factor must be finite and positive");
  const double boost = (chi - 1.0) * gap_a;
  const double half_dp = 0.5 * (p_b - p_a);
  return StrokeEnergies{
      .w1 = 0.5 * (1.0 - p_a) * boost,
      .q2 = -half_dp * chi * gap_a,
      .w3 = -0.5 * (1.0 - p_b) * boost,
      .q4 = half_dp * gap_a,
  };
}

std::optional<double> cop(double chi) {
  if (!(std::isfinite(chi) && chi > 0.0))
    throw ArgumentError("redshift factor must be finite and positive");
  if (chi <= 1.0) return std::nullopt;
  return 1.0 / (chi - 1.0);
}

std::optional<double> carnot_cop(double t_cold, double t_hot) {
  if (!(std::isfinite(t_cold) && t_cold > 0.0) ||
      !(std::isfinite(t_hot) && t_hot > 0.0))
    throw ArgumentError("temperatures must be finite and positive");
  if (t_hot <= t_cold) return std::nullopt;
  return t_cold / (t_hot - t_cold);
}

double cold_temperature_bound(const Metric& metric, Station alice,
                              Station bob) {
  const double alice_g00 = metric_g00(metric, alice);
  const double bob_g00 = metric_g00(metric, bob);
  if (bob_g00 > alice_g00)
    throw OrientationError(
        "|g00| at Bob exceeds |g00| at Alice: no redshift gain in this "
        "orientation, refrigeration impossible");
  return std::sqrt(bob_g00 / alice_g00);
}

CycleReport run_cycle(RedshiftFactor chi, double t_cold, double t_hot,
                      double gap_a) {
  const double gap_b = shifted_gap(gap_a, chi);
  const double p_a = purity(gap_a, t_cold);
  const double p_b = purity(gap_b, t_hot);
  const StrokeEnergies strokes = stroke_energies(p_a, p_b, gap_a, chi.value);
  CycleReport report;
  report.w1 = strokes.w1;
  report.q2 = strokes.q2;
  report.w3 = strokes.w3;
  report.q4 = strokes.q4;
  report.chi = chi.value;
  report.gap_b = gap_b;
  report.p_a = p_a;
  report.p_b = p_b;
  report.cop = cop(chi.value);
  report.cop_carnot = carnot_cop(t_cold, t_hot);
  report.operable = strokes.q4 > 0.0;
  report.bound = 1.0 / chi.value;
  return report;
}

CycleReport run_cycle(const CycleParams& params) {
  return run_cycle(redshift_factor(params.metric, params.alice, params.bob),
                   params.t_cold, params.t_hot, params.gap_a);
}

}  // namespace gravotto
