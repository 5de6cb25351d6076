#include "gravotto/cycle.hpp"

#include <cmath>

#include "doctest.h"
#include "gravotto/montecarlo.hpp"
#include "gravotto/thermo.hpp"
#include "support/constants.hpp"
#include "support/draws.hpp"

using namespace gravotto;

namespace {

void check_rel(double actual, double expected, double tolerance) {
  const double scale = std::max(std::abs(expected), 1e-300);
  CHECK(std::abs(actual - expected) <= tolerance * scale);
}

// chi = 2 exactly: f(10) = 0.8, f(2.5) = 0.2 for r_s = 2.
const CycleParams kChiTwoScenario{ReissnerNordstrom{2.0, 0.0}, Station{10.0},
                                  Station{2.5},  1.0, 1.5, 1.0};

}  // namespace

TEST_CASE("shifted gap") {
  CHECK(shifted_gap(1.0, RedshiftFactor{1.0}) == 1.0);
  CHECK(shifted_gap(1.0, RedshiftFactor{2.0}) == 2.0);
  CHECK(shifted_gap(1.0, RedshiftFactor{1.0 + 3.5e-9}) == 1.0 + 3.5e-9);
  CHECK_THROWS_AS(shifted_gap(0.0, RedshiftFactor{2.0}), ArgumentError);
  CHECK_THROWS_AS(shifted_gap(1.0, RedshiftFactor{-1.0}), ArgumentError);
}

TEST_CASE("stroke energies") {
  SUBCASE("reference tuple at chi = 2, T_c = 1, T_h = 1.5") {
    const StrokeEnergies s = stroke_energies(
        expected::kTanhHalf, expected::kTanhTwoThirds, 1.0, 2.0);
    check_rel(s.w1, expected::kStrokeW1, 1e-14);
    check_rel(s.q2, expected::kStrokeQ2, 1e-14);
    check_rel(s.w3, expected::kStrokeW3, 1e-14);
    check_rel(s.q4, expected::kStrokeQ4, 1e-14);
    CHECK(std::abs(s.w1 + s.q2 + s.w3 + s.q4) <= 1e-15);
  }
  SUBCASE("equal purities exchange nothing with the reservoirs") {
    const StrokeEnergies s = stroke_energies(0.3, 0.3, 1.0, 1.7);
    CHECK(s.q2 == 0.0);
    CHECK(s.q4 == 0.0);
    CHECK(s.w1 == -s.w3);
  }
  SUBCASE("no field, no work strokes") {
    const StrokeEnergies s = stroke_energies(0.2, 0.6, 1.0, 1.0);
    CHECK(s.w1 == 0.0);
    CHECK(s.w3 == 0.0);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(stroke_energies(-0.1, 0.3, 1.0, 2.0), ArgumentError);
    CHECK_THROWS_AS(stroke_energies(0.1, 1.0, 1.0, 2.0), ArgumentError);
    CHECK_THROWS_AS(stroke_energies(0.1, 0.3, 0.0, 2.0), ArgumentError);
    CHECK_THROWS_AS(stroke_energies(0.1, 0.3, 1.0, 0.0), ArgumentError);
  }
}

TEST_CASE("coefficient of performance") {
  CHECK(cop(2.0) == 1.0);
  CHECK_FALSE(cop(1.0).has_value());
  CHECK_FALSE(cop(0.5).has_value());
  check_rel(*cop(1.0 + 3.5e-9), expected::kCopGeostationary, 1e-6);
  CHECK_THROWS_AS(cop(-1.0), ArgumentError);

  SUBCASE("identically equals q4/(w1+w3)") {
    const StrokeEnergies s = stroke_energies(
        expected::kTanhHalf, expected::kTanhTwoThirds, 1.0, 2.0);
    check_rel(s.q4 / (s.w1 + s.w3), *cop(2.0), 1e-10);
  }
}

TEST_CASE("Carnot coefficient of performance") {
  CHECK(carnot_cop(1.0, 2.0) == 1.0);
  CHECK(carnot_cop(1.0, 1.5) == 2.0);
  CHECK_FALSE(carnot_cop(1.0, 1.0).has_value());
  CHECK_FALSE(carnot_cop(2.0, 1.0).has_value());
  CHECK_THROWS_AS(carnot_cop(0.0, 1.0), ArgumentError);
  SUBCASE("dominates the cycle COP in the reference scenario") {
    CHECK(*cop(2.0) < *carnot_cop(1.0, 1.5));
  }
}

TEST_CASE("cold temperature bound") {
  const Metric ds = DeSitter{1.0};
  SUBCASE("identical stations give the degenerate bound 1") {
    CHECK(cold_temperature_bound(ds, Station{0.4}, Station{0.4}) == 1.0);
  }
  SUBCASE("De Sitter pair r_A = 0.1, r_B = 0.9") {
    check_rel(cold_temperature_bound(ds, Station{0.1}, Station{0.9}),
              expected::kDeSitterBound, 1e-14);
  }
  SUBCASE("wrong orientation is rejected") {
    CHECK_THROWS_AS(cold_temperature_bound(ds, Station{0.9}, Station{0.1}),
                    OrientationError);
    const Metric rn = ReissnerNordstrom{2.0, 0.0};
    CHECK_THROWS_AS(cold_temperature_bound(rn, Station{4.0}, Station{8.0}),
                    OrientationError);
  }
  SUBCASE("RN pair r_A = 8, r_B = 4") {
    check_rel(cold_temperature_bound(ReissnerNordstrom{2.0, 0.0}, Station{8.0},
                                     Station{4.0}),
              expected::kRnBoundExample, 1e-14);
  }
}

TEST_CASE("run_cycle end to end") {
  SUBCASE("chi = 2 reference scenario") {
    const CycleReport report = run_cycle(kChiTwoScenario);
    check_rel(report.chi, 2.0, 1e-14);
    check_rel(report.gap_b, 2.0, 1e-14);
    check_rel(report.p_a, expected::kTanhHalf, 1e-14);
    check_rel(report.p_b, expected::kTanhTwoThirds, 1e-14);
    check_rel(report.w1, expected::kStrokeW1, 1e-12);
    check_rel(report.q2, expected::kStrokeQ2, 1e-12);
    check_rel(report.w3, expected::kStrokeW3, 1e-12);
    check_rel(report.q4, expected::kStrokeQ4, 1e-12);
    REQUIRE(report.cop.has_value());
    check_rel(*report.cop, 1.0, 1e-12);
    REQUIRE(report.cop_carnot.has_value());
    CHECK(*report.cop_carnot == 2.0);
    CHECK(report.operable);
    check_rel(report.bound, 0.5, 1e-14);
  }
  SUBCASE("too hot to refrigerate") {
    CycleParams params = kChiTwoScenario;
    params.t_hot = 3.0;  // above chi * t_cold = 2
    const CycleReport report = run_cycle(params);
    CHECK(report.q4 < 0.0);
    CHECK_FALSE(report.operable);
  }
  SUBCASE("flat spacetime never refrigerates") {
    const CycleReport report =
        run_cycle(CycleParams{UniformField{0.0}, Station{5.0}, Station{0.0},
                              1.0, 1.5, 1.0});
    CHECK(report.w1 == 0.0);
    CHECK(report.w3 == 0.0);
    CHECK_FALSE(report.operable);
    CHECK_FALSE(report.cop.has_value());
    CHECK(report.bound == 1.0);
  }
  SUBCASE("boundary tie t_hot = chi * t_cold is non-operable") {
    const CycleReport report = run_cycle(RedshiftFactor{2.0}, 1.0, 2.0, 1.0);
    CHECK(report.q4 == 0.0);
    CHECK_FALSE(report.operable);
  }
}

TEST_CASE("cycle invariants over randomized parameters") {
  SplitMix64 rng(90210);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const bool operable_class = (i % 2) == 0;
    const CycleParams params =
        testsupport::draw_params(rng, i, operable_class);
    const CycleReport report = run_cycle(params);

    // Energy closure.
    const double residual =
        std::abs(report.w1 + report.q2 + report.w3 + report.q4);
    const double scale = std::max(
        std::max(std::abs(report.w1), std::abs(report.q2)),
        std::max(std::abs(report.w3), std::abs(report.q4)));
    CHECK(residual <= 1e-12 * scale);

    // COP identity away from purity ties.
    if (report.p_b != report.p_a) {
      REQUIRE(report.cop.has_value());
      const double from_strokes = report.q4 / (report.w1 + report.w3);
      CHECK(std::abs(from_strokes / *report.cop - 1.0) <= 1e-10);
    }

    // Operability: four independent predicates and the report agree.
    const double chi =
        redshift_factor(params.metric, params.alice, params.bob).value;
    const bool by_temperature = params.t_hot < chi * params.t_cold;
    const bool by_purity = report.p_b > report.p_a;
    const bool by_heat = report.q4 > 0.0;
    const bool by_bound =
        params.t_cold / params.t_hot >
        cold_temperature_bound(params.metric, params.alice, params.bob);
    CHECK(by_temperature == by_purity);
    CHECK(by_purity == by_heat);
    CHECK(by_heat == by_bound);
    CHECK(report.operable == by_heat);
    CHECK(report.operable == operable_class);

    if (report.operable) {
      // Strict Carnot dominance and the cooling sign structure.
      REQUIRE(report.cop.has_value());
      REQUIRE(report.cop_carnot.has_value());
      CHECK(*report.cop < *report.cop_carnot);
      CHECK(report.w1 > 0.0);
      CHECK(report.q2 < 0.0);
      CHECK(report.w3 < 0.0);
      CHECK(report.q4 > 0.0);
    }

    // Purity ordering mirrors the Tolman condition.
    const double p_b_direct =
        purity(shifted_gap(params.gap_a, RedshiftFactor{chi}), params.t_hot);
    CHECK((p_b_direct > report.p_a) == by_temperature);
  }
}
