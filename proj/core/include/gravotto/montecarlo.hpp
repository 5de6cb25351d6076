#pragma once

#include <cstdint>
#include <string>

#include "gravotto/cycle.hpp"

namespace gravotto {

/// Counter-based deterministic generator (splitmix64): output k of a given
/// seed is mix(seed + k * golden), so any draw can be reproduced or computed
/// out of order. Every ledger pins the generator by name.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double next_double();

 private:
  std::uint64_t state_;
};

inline constexpr const char* kGeneratorName = "splitmix64";

enum class Level { kGround, kExcited };

/// Draws one thermal level: excited with probability
/// excited_population(gap, temperature). Consumes exactly one draw.
Level sample_level(double gap, double temperature, SplitMix64& rng);

/// Energy records of a single trajectory given the two sampled levels
/// (Alice's initial level and Bob's level after thermalization). Stroke 4
/// restores Alice's initial level, so the four energies sum to zero
/// exactly, trajectory by trajectory.
StrokeEnergies trajectory_energies(bool alice_excited, bool bob_excited,
                                   double gap_a, double chi);

/// Sample statistics over n simulated cycles.
struct TrajectoryLedger {
  std::uint64_t n = 0;
  double mean_w1 = 0.0;
  double mean_q2 = 0.0;
  double mean_w3 = 0.0;
  double mean_q4 = 0.0;
  double se_w1 = 0.0;
  double se_q2 = 0.0;
  double se_w3 = 0.0;
  double se_q4 = 0.0;
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;
};

/// Simulates n independent cycles at an explicit redshift factor.
/// Each trajectory consumes two draws (Alice's level, then Bob's level
/// after thermalization); fixed (chi, temperatures, gap, n, seed) give a
/// bit-identical ledger.
TrajectoryLedger simulate_cycles(RedshiftFactor chi, double t_cold,
                                 double t_hot, double gap_a, std::uint64_t n,
                                 std::uint64_t seed);

/// Same, with the redshift factor computed from the station pair.
TrajectoryLedger simulate_cycles(const CycleParams& params, std::uint64_t n,
                                 std::uint64_t seed);

}  // namespace gravotto
