#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "critorbit/errors.hpp"
#include "critorbit/orbit.hpp"

namespace critorbit {
namespace {

const MapSpec kChebyshev = MapSpec::unicritical(2, -2.0);

TEST(IterateOrbit, ChebyshevClosedForm) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 30, 0.0);
  ASSERT_EQ(orbit.size(), 31u);
  EXPECT_EQ(orbit.points[0], Complex(0.0));
  EXPECT_EQ(orbit.points[1], Complex(-2.0));
  for (std::size_t k = 2; k < orbit.size(); ++k) EXPECT_EQ(orbit.points[k], Complex(2.0));
  EXPECT_EQ(orbit.start, Complex(-2.0));
  // DR^k(-2) = -4^k: exponent 2k, mantissa -1.
  EXPECT_EQ(orbit.cocycle[0], XComplex(1.0));
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    EXPECT_EQ(orbit.cocycle[k].exponent(), static_cast<std::int64_t>(2 * k));
    EXPECT_EQ(orbit.cocycle[k].mantissa(), Complex(-1.0));
  }
  EXPECT_FALSE(orbit.escaped_at);
  EXPECT_EQ(orbit.truncated_at, 30u);
}

TEST(IterateOrbit, SuperattractingCriticalRelation) {
  const MapSpec m = MapSpec::unicritical(2, 0.0);
  try {
    iterate_orbit(m, 0.0, 10, 0.0);
    FAIL() << "expected CriticalRelationError";
  } catch (const CriticalRelationError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  const OrbitRecord rec = iterate_orbit(m, 0.0, 10, 0.0, {.throw_on_relation = false});
  ASSERT_TRUE(rec.critical_relation_at);
  EXPECT_EQ(*rec.critical_relation_at, 1u);
  EXPECT_TRUE(rec.cocycle.back().is_zero());
  EXPECT_THROW(summability_report(rec, 1), InvalidOrbitError);
}

TEST(IterateOrbit, EscapeIndex) {
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, 1.0), 0.0, 100, 10.0);
  ASSERT_TRUE(orbit.escaped_at);
  EXPECT_EQ(*orbit.escaped_at, 4u);
  const std::vector<Complex> expected{0.0, 1.0, 2.0, 5.0, 26.0};
  EXPECT_EQ(orbit.points, expected);
}

TEST(IterateOrbit, RejectsNonCriticalStart) {
  EXPECT_THROW(iterate_orbit(kChebyshev, 0.5, 10, 0.0), PreconditionError);
}

TEST(IterateOrbitProperty, CocycleRecurrenceAndMonotoneSums) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex c(1.5 * u(rng), 1.5 * u(rng));
    const MapSpec m = MapSpec::unicritical(2 + trial % 3, c);
    const OrbitRecord orbit = iterate_orbit(m, 0.0, 500, 1e6, {.throw_on_relation = false});
    for (std::size_t k = 0; k + 1 < orbit.size(); ++k) {
      const XComplex expect = xc_mul(orbit.cocycle[k], XComplex(m.eval(orbit.points[k + 1]).derivative));
      EXPECT_EQ(orbit.cocycle[k + 1], expect);
      EXPECT_GE(orbit.partial_sums_abs[k + 1], orbit.partial_sums_abs[k]);
    }
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (orbit.cocycle[k].is_zero()) EXPECT_TRUE(orbit.has_relation());
    }
  }
}

TEST(IterateOrbitProperty, PrefixConsistency) {
  const MapSpec m = MapSpec::unicritical(2, Complex(-0.12, 0.75));
  const OrbitRecord a = iterate_orbit(m, 0.0, 200, 0.0);
  const OrbitRecord b = iterate_orbit(m, 0.0, 700, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a.points[k], b.points[k]);
    EXPECT_EQ(a.cocycle[k], b.cocycle[k]);
    EXPECT_EQ(a.partial_sums_abs[k], b.partial_sums_abs[k]);
  }
}

TEST(Summability, ChebyshevGeometricSeries) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 64, 0.0);
  const SummabilityReport r = summability_report(orbit, 16);
  EXPECT_EQ(r.classification, SummabilityClass::summable_evidence);
  EXPECT_NEAR(r.tail_ratio, 0.25, 1e-14);
  EXPECT_NEAR(r.partial_sum, 4.0 / 3.0, 1e-15);
}

TEST(Summability, ChebyshevPartialSumConvergenceRate) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 40, 0.0);
  for (std::size_t n = 5; n < orbit.size(); ++n) {
    EXPECT_LT(std::abs(orbit.partial_sums_abs[n] - 4.0 / 3.0), std::pow(4.0, -static_cast<double>(n) + 2.0));
  }
}

TEST(Summability, AttractingFixedPointDiverges) {
  // z_fix = (1 - sqrt(0.6))/2, multiplier 2 z_fix ~ 0.1127.
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, 0.1), 0.0, 200, 0.0);
  const SummabilityReport r = summability_report(orbit, 32);
  EXPECT_EQ(r.classification, SummabilityClass::divergent_evidence);
  const double multiplier = 1.0 - std::sqrt(0.6);
  EXPECT_NEAR(r.tail_ratio, 1.0 / multiplier, 1e-6 / multiplier);
}

TEST(Summability, UnitCocycleIsInconclusive) {
  OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 1, 0.0);
  orbit.points.assign(101, Complex(0.0));
  orbit.cocycle.clear();
  orbit.partial_sums_abs.clear();
  for (int k = 0; k <= 100; ++k) {
    orbit.cocycle.emplace_back(std::polar(1.0, 0.3 * k));
    orbit.partial_sums_abs.push_back(k + 1.0);
  }
  const SummabilityReport r = summability_report(orbit, 20);
  EXPECT_NEAR(r.tail_ratio, 1.0, 1e-14);
  EXPECT_EQ(r.classification, SummabilityClass::inconclusive);
}

TEST(Summability, WindowTooLong) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 10, 0.0);
  EXPECT_THROW(summability_report(orbit, 8), PreconditionError);
}

TEST(ClassifyParameter, Examples) {
  const ParameterClass zero = classify_parameter(0.0, 2, 1000);
  EXPECT_EQ(zero.kind, ParameterKind::attracting);
  EXPECT_EQ(zero.period, 1);
  EXPECT_EQ(zero.multiplier, Complex(0.0));

  EXPECT_EQ(classify_parameter(1.0, 2, 1000).kind, ParameterKind::escaping);

  const ParameterClass basilica = classify_parameter(-1.0, 2, 1000);
  EXPECT_EQ(basilica.kind, ParameterKind::attracting);
  EXPECT_EQ(basilica.period, 2);
  EXPECT_EQ(basilica.multiplier, Complex(0.0));

  // Misiurewicz parameters land on repelling cycles.
  EXPECT_EQ(classify_parameter(-2.0, 2, 1000).kind, ParameterKind::undecided);
  EXPECT_EQ(classify_parameter(Complex(0.0, 1.0), 2, 1000).kind, ParameterKind::undecided);
}

TEST(ClassifyParameter, AttractingCycleOfPeriodThree) {
  // Airplane parameter: superattracting 3-cycle near c = -1.7549.
  const ParameterClass airplane = classify_parameter(-1.754877666246693, 2, 5000);
  EXPECT_EQ(airplane.kind, ParameterKind::attracting);
  EXPECT_EQ(airplane.period, 3);
  ASSERT_TRUE(airplane.multiplier);
  EXPECT_LT(std::abs(*airplane.multiplier), 1e-6);
  // Interior of the main cardioid: attracting fixed point z with 2z = 0.5.
  const ParameterClass cardioid = classify_parameter(0.25 - 0.0625, 2, 5000);
  EXPECT_EQ(cardioid.kind, ParameterKind::attracting);
  EXPECT_EQ(cardioid.period, 1);
  EXPECT_NEAR(std::abs(*cardioid.multiplier - Complex(0.5)), 0.0, 1e-9);
}

TEST(ClassifyParameterProperty, OutsideRadiusTwoEscapes) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> r(2.0 + 1e-9, 10.0);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 500; ++i) {
    const Complex c = std::polar(r(rng), theta(rng));
    EXPECT_EQ(classify_parameter(c, 2, 1000).kind, ParameterKind::escaping) << c;
  }
}

TEST(JuliaSample, UnitCircleForSquaring) {
  const auto pts = julia_sample(MapSpec::unicritical(2, 0.0), 2000, 100, 42);
  ASSERT_EQ(pts.size(), 2000u);
  for (const Complex& z : pts) EXPECT_LT(std::abs(std::abs(z) - 1.0), 1e-6);
}

TEST(JuliaSample, ChebyshevInterval) {
  const auto pts = julia_sample(kChebyshev, 2000, 100, 42);
  for (const Complex& z : pts) {
    EXPECT_LT(std::abs(z.imag()), 1e-6);
    EXPECT_LE(std::abs(z.real()), 2.0 + 1e-6);
  }
}

TEST(JuliaSample, DeterministicForSeed) {
  const MapSpec m = MapSpec::unicritical(2, Complex(-0.12, 0.75));
  EXPECT_EQ(julia_sample(m, 500, 50, 9), julia_sample(m, 500, 50, 9));
  EXPECT_NE(julia_sample(m, 500, 50, 9), julia_sample(m, 500, 50, 10));
}

TEST(JuliaSample, GeneralRationalPreimagesStayInvariant) {
  // z^2 + c written as a rational map with a common-factor-free denominator
  // forces the general root-finding branch.
  const MapSpec m = MapSpec::rational(Polynomial({Complex(-0.2, 0.3), 0.4, 1.0}), Polynomial::constant(2.0));
  const auto pts = julia_sample(m, 200, 50, 1);
  // Forward images of samples are samples of the same invariant set: R(z)
  // must itself be a backward-orbit point, checked by |R(z_{k+1}) - z_k| = 0.
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) EXPECT_LT(std::abs(m(pts[k + 1]) - pts[k]), 1e-9);
}

}  // namespace
}  // namespace critorbit
