#include "gravotto/montecarlo.hpp"

#include <cmath>

#include "gravotto/thermo.hpp"

namespace gravotto {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Level sample_level(double gap, double temperature, SplitMix64& rng) {
  const double p = excited_population(gap, temperature);
  return rng.next_double() < p ? Level::kExcited : Level::kGround;
}

StrokeEnergies trajectory_energies(bool alice_excited, bool bob_excited,
                                   double gap_a, double chi) {
  if (!(std::isfinite(gap_a) && gap_a > 0.0))
    throw ArgumentError("gap must be a finite positive energy");
  if (!(std::isfinite(chi) && chi > 0.0))
    throw ArgumentError("redshift factor must be finite and positive");
  const double gap_b = chi * gap_a;
  const double boost = gap_b - gap_a;  // photon energy change per transit
  const double w1 = alice_excited ? boost : 0.0;
  const double q2 =
      static_cast<double>((bob_excited ? 1 : 0) - (alice_excited ? 1 : 0)) *
      gap_b;
  const double w3 = bob_excited ? -boost : 0.0;
  // Stroke 4 hands Alice back her initial level; its heat balances the
  // other three records, closing the books of every single trajectory.
  const double q4 = -((w1 + q2) + w3);
  return StrokeEnergies{w1, q2, w3, q4};
}

TrajectoryLedger simulate_cycles(RedshiftFactor chi, double t_cold,
                                 double t_hot, double gap_a, std::uint64_t n,
                                 std::uint64_t seed) {
  if (n < 1) throw ArgumentError("at least one trajectory is required");
  const double gap_b = shifted_gap(gap_a, chi);
  const double excited_alice = excited_population(gap_a, t_cold);
  const double excited_bob = excited_population(gap_b, t_hot);

  // Each trajectory is fully described by the (alice, bob) level pair;
  // exact integer counts carry all the statistics.
  SplitMix64 rng(seed);
  std::uint64_t down = 0;  // alice excited, bob ground
  std::uint64_t up = 0;    // alice ground, bob excited
  std::uint64_t both = 0;  // both excited
  for (std::uint64_t i = 0; i < n; ++i) {
    const bool alice = rng.next_double() < excited_alice;
    const bool bob = rng.next_double() < excited_bob;
    down += static_cast<std::uint64_t>(alice && !bob);
    up += static_cast<std::uint64_t>(!alice && bob);
    both += static_cast<std::uint64_t>(alice && bob);
  }

  const double boost = gap_b - gap_a;
  // Stroke-4 quantum of a mixed trajectory, same rounding as
  // trajectory_energies.
  const double restore = -((boost - gap_b));
  const double count = static_cast<double>(n);
  const double alice_excited_count = static_cast<double>(down + both);
  const double bob_excited_count = static_cast<double>(up + both);
  const double net_up = static_cast<double>(up) - static_cast<double>(down);

  TrajectoryLedger ledger;
  ledger.n = n;
  ledger.seed = seed;
  ledger.generator = kGeneratorName;
  ledger.mean_w1 = boost * (alice_excited_count / count);
  ledger.mean_q2 = gap_b * (net_up / count);
  ledger.mean_w3 = -boost * (bob_excited_count / count);
  // Closed by the same bookkeeping identity as each trajectory.
  ledger.mean_q4 = -((ledger.mean_w1 + ledger.mean_q2) + ledger.mean_w3);

  // Sample standard errors: every stroke takes the values {+v, -v, 0} with
  // exact occurrence counts, so the usual (sum, sum of squares) pair has a
  // closed form.
  const auto standard_error = [count](double v, double positives,
                                      double negatives) {
    if (count < 2.0) return 0.0;
    const double support = positives + negatives;
    const double net = positives - negatives;
    const double variance =
        v * v * (support - net * net / count) / (count - 1.0);
    return std::sqrt(std::max(variance, 0.0) / count);
  };
  ledger.se_w1 = standard_error(boost, alice_excited_count, 0.0);
  ledger.se_q2 = standard_error(gap_b, static_cast<double>(up),
                                static_cast<double>(down));
  ledger.se_w3 = standard_error(boost, bob_excited_count, 0.0);
  ledger.se_q4 = standard_error(restore, static_cast<double>(down),
                                static_cast<double>(up));
  return ledger;
}

TrajectoryLedger simulate_cycles(const CycleParams& params, std::uint64_t n,
                                 std::uint64_t seed) {
  return simulate_cycles(
      redshift_factor(params.metric, params.alice, params.bob), params.t_cold,
      params.t_hot, params.gap_a, n, seed);
}

}  // namespace gravotto
