#pragma once

#include "gravotto/errors.hpp"
#include "gravotto/spacetime.hpp"

namespace gravotto {

/// Population bias p = tanh(gap / (2 T)) of a thermal two-level system.
/// Requires gap >= 0 and T > 0.
double purity(double gap, double temperature);

/// Probability (1 - p)/2 = 1/(1 + exp(gap/T)) of finding the upper level
/// occupied. Lies in (0, 1/2] for finite arguments.
double excited_population(double gap, double temperature);

/// Inverse of purity: T = gap / (2 artanh(p)) for p in (0, 1), gap > 0.
double temperature_from_purity(double gap, double p);

/// Temperature of a remote thermal system as measured locally: chi * T.
double tolman_shift(double local_temperature, RedshiftFactor chi);

/// Two-level system in a diagonal thermal state. The (gap, temperature,
/// purity) triple is kept consistent by construction.
struct ThermalQubit {
  double gap = 0.0;
  double temperature = 0.0;
  double purity = 0.0;

  static ThermalQubit from_temperature(double gap, double temperature);
  static ThermalQubit from_purity(double gap, double purity);
};

/// A local temperature together with its redshift-scaled counterpart.
struct TolmanPair {
  double local_temperature = 0.0;
  double shifted_temperature = 0.0;

  static TolmanPair shift(double local_temperature, RedshiftFactor chi);
};

}  // namespace gravotto
