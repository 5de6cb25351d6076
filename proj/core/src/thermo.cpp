#include "gravotto/thermo.hpp"

#include <cmath>

namespace gravotto {

namespace {

void require_thermal(double gap, double temperature) {
  if (!(std::isfinite(gap) && gap >= 0.0))
    throw ArgumentError("gap must be a finite nonnegative energy");
  if (!(std::isfinite(temperature) && temperature > 0.0))
    throw ArgumentError("temperature must be a finite positive value");
}

}  // namespace

double purity(double gap, double temperature) {
  require_thermal(gap, temperature);
  return std::tanh(gap / (2.0 * temperature));
}

double excited_population(double gap, double temperature) {
  require_thermal(gap, temperature);
  // exp(-x)/(1+exp(-x)) keeps full relative accuracy deep in the Boltzmann
  // tail, where (1 - tanh(x/2))/2 cancels catastrophically.
  const double boltzmann = std::exp(-(gap / temperature));
  return boltzmann / (1.0 + boltzmann);
}

double temperature_from_purity(double gap, double p) {
  if (!(std::isfinite(gap) && gap > 0.0))
    throw ArgumentError("gap must be a finite positive energy");
  if (!(p > 0.0 && p < 1.0))
    throw ArgumentError("purity must lie strictly inside (0, 1)");
  return gap / (2.0 * std::atanh(p));
}

double tolman_shift(double local_temperature, RedshiftFactor chi) {
  if (!(std::isfinite(local_temperature) && local_temperature > 0.0))
    throw ArgumentError("temperature must be a finite positive value");
  if (!(std::isfinite(chi.value) && chi.value > 0.0))
    throw ArgumentError("redshift factor must be finite and positive");
  return chi.value * local_temperature;
}

ThermalQubit ThermalQubit::from_temperature(double gap, double temperature) {
  if (!(std::isfinite(gap) && gap > 0.0))
    throw ArgumentError("gap must be a finite positive energy");
  const double p = gravotto::purity(gap, temperature);
  if (p >= 1.0)
    throw ArgumentError(
        "purity saturates to 1 at double precision for gap/(2T) this large");
  return ThermalQubit{gap, temperature, p};
}

ThermalQubit ThermalQubit::from_purity(double gap, double purity) {
  const double temperature = temperature_from_purity(gap, purity);
  return ThermalQubit{gap, temperature, purity};
}

TolmanPair TolmanPair::shift(double local_temperature, RedshiftFactor chi) {
  return TolmanPair{local_temperature, tolman_shift(local_temperature, chi)};
}

}  // namespace gravotto
