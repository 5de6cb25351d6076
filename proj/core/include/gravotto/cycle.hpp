#pragma once

#include <optional>

#include "gravotto/spacetime.hpp"

namespace gravotto {

/// Everything needed to evaluate one four-stroke refrigeration cycle.
/// Alice holds the cold reservoir at her station, Bob the hot one.
struct CycleParams {
  Metric metric;
  Station alice;
  Station bob;
  double t_cold = 0.0;  ///< Alice's reservoir temperature, > 0
  double t_hot = 0.0;   ///< Bob's reservoir temperature, > 0
  double gap_a = 0.0;   ///< Alice's qubit gap, > 0
};

/// Energy ledger of the four strokes. Signs follow the working medium:
/// positive energy flows into it.
struct StrokeEnergies {
  double w1 = 0.0;  ///< work consumed boosting the photon (>= 0 for chi >= 1)
  double q2 = 0.0;  ///< heat exchanged with the hot reservoir (< 0 when cooling)
  double w3 = 0.0;  ///< work released on the return trip (<= 0 for chi >= 1)
  double q4 = 0.0;  ///< heat drawn from the cold reservoir (> 0 when cooling)
};

/// Full evaluation of one cycle.
struct CycleReport {
  double w1 = 0.0;
  double q2 = 0.0;
  double w3 = 0.0;
  double q4 = 0.0;
  double chi = 1.0;
  double gap_b = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  std::optional<double> cop;         ///< empty when chi <= 1
  std::optional<double> cop_carnot;  ///< empty when t_hot <= t_cold
  bool operable = false;             ///< true iff q4 > 0
  double bound = 1.0;  ///< 1/chi; T_c/T_h must exceed it to refrigerate
};

/// Gap Bob's qubit needs to absorb Alice's photon: chi * gap_a.
double shifted_gap(double gap_a, RedshiftFactor chi);

/// Stroke energies for given purities. The general-metric substitution
/// g*dr -> chi - 1 is applied, so the work strokes are exact in chi.
/// The four energies sum to zero algebraically.
StrokeEnergies stroke_energies(double p_a, double p_b, double gap_a,
                               double chi);

/// Coefficient of performance 1/(chi - 1); empty when chi <= 1 (no work
/// is consumed, so the quotient is meaningless).
std::optional<double> cop(double chi);

/// Carnot refrigerator COP t_cold/(t_hot - t_cold); empty when
/// t_hot <= t_cold.
std::optional<double> carnot_cop(double t_cold, double t_hot);

/// Lower bound on T_c/T_h for refrigeration between the two stations:
/// sqrt(|g00(bob)|/|g00(alice)|) = 1/chi. Throws OrientationError when
/// |g00(bob)| > |g00(alice)| (the pair cannot refrigerate as oriented);
/// equal stations give the degenerate bound 1.
double cold_temperature_bound(const Metric& metric, Station alice,
                              Station bob);

/// Runs the cycle for an explicit redshift factor (used by the first-order
/// uniform-field path and by the trajectory sampler).
CycleReport run_cycle(RedshiftFactor chi, double t_cold, double t_hot,
                      double gap_a);

/// Runs the cycle between the two stations of `params`. Non-operable
/// parameter sets yield a report with operable == false, not an error.
CycleReport run_cycle(const CycleParams& params);

}  // namespace gravotto
