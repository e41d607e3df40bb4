#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "critorbit/errors.hpp"
#include "critorbit/obstruction.hpp"

namespace critorbit {
namespace {

const MapSpec kChebyshev = MapSpec::unicritical(2, -2.0);

TEST(Obstruction, ChebyshevClosedForm) {
  // b[1] = 1 and b[n] = -(2 * 4^(n-1) + 1) / 3 for n >= 2, exact in doubles
  // while 4^(n-1) < 2^53.
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 40, 0.0);
  const ObstructionSeries s = obstruction_sequence(orbit, VectorFieldSpec::constant(1.0), 26);
  ASSERT_EQ(s.b.size(), 27u);
  EXPECT_TRUE(s.b[0].is_zero());
  EXPECT_EQ(s.b[1].to_complex(), Complex(1.0));
  for (int n = 2; n <= 26; ++n) {
    const double expected = -(2.0 * std::pow(4.0, n - 1) + 1.0) / 3.0;
    EXPECT_EQ(s.b[static_cast<std::size_t>(n)].to_complex(), Complex(expected)) << n;
  }
}

TEST(Obstruction, ChebyshevGrowthIsLogFour) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 200, 0.0);
  const ObstructionSeries s = obstruction_sequence(orbit, VectorFieldSpec::constant(1.0), 200);
  EXPECT_NEAR(s.growth_exponent, std::log(4.0), 1e-9);
  EXPECT_EQ(s.bounded_evidence, BoundedEvidence::unbounded);
}

TEST(Obstruction, ZeroFieldIsBounded) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 100, 0.0);
  const ObstructionSeries s = obstruction_sequence(orbit, VectorFieldSpec(), 100);
  for (const XComplex& b : s.b) EXPECT_TRUE(b.is_zero());
  EXPECT_EQ(s.bounded_evidence, BoundedEvidence::bounded);
}

TEST(Obstruction, AttractingOrbitDoesNotGrow) {
  // Critical orbit converging to an attracting fixed point: b[n] converges to
  // the fixed point's alpha, so the fitted exponent is ~0.
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, 0.1), 0.0, 300, 0.0);
  const ObstructionSeries s = obstruction_sequence(orbit, VectorFieldSpec::constant(1.0), 300);
  EXPECT_NEAR(s.growth_exponent, 0.0, 1e-6);
  EXPECT_NE(s.bounded_evidence, BoundedEvidence::unbounded);
}

TEST(Obstruction, RecurrenceMatchesDirectFormula) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 40, 0.0);
  const VectorFieldSpec v(Polynomial({1.0, 1.0}));
  const ObstructionSeries s = obstruction_sequence(orbit, v, 10);
  const Complex direct = obstruction_direct(orbit, v, 10).to_complex();
  const Complex rec = s.b[10].to_complex();
  EXPECT_LT(std::abs(direct - rec), 1e-8 * std::abs(rec));
  EXPECT_TRUE(obstruction_direct(orbit, v, 0).is_zero());
}

TEST(Obstruction, RejectsRelationAndShortOrbit) {
  const OrbitRecord rel = iterate_orbit(MapSpec::unicritical(2, -1.0), 0.0, 20, 0.0, {.throw_on_relation = false});
  ASSERT_TRUE(rel.has_relation());
  EXPECT_THROW(obstruction_sequence(rel, VectorFieldSpec::constant(1.0), 2), InvalidOrbitError);
  const OrbitRecord shortorbit = iterate_orbit(kChebyshev, 0.0, 5, 0.0);
  EXPECT_THROW(obstruction_sequence(shortorbit, VectorFieldSpec::constant(1.0), 50), PreconditionError);
}

TEST(ObstructionProperty, RecurrenceInvariantHoldsEverywhere) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex c(1.2 * u(rng), 1.2 * u(rng));
    const MapSpec m = MapSpec::unicritical(2, c);
    const OrbitRecord orbit = iterate_orbit(m, 0.0, 2000, 0.0, {.throw_on_relation = false});
    if (orbit.has_relation()) continue;
    const VectorFieldSpec v(Polynomial({Complex(u(rng), u(rng)), Complex(u(rng), u(rng))}));
    const ObstructionSeries s = obstruction_sequence(orbit, v, orbit.size());
    for (std::size_t k = 0; k + 1 < s.b.size(); ++k) {
      const XComplex next = xc_add(xc_mul(XComplex(m.eval(orbit.points[k]).derivative), s.b[k]), XComplex(v(orbit.points[k])));
      EXPECT_EQ(next, s.b[k + 1]);
    }
  }
}

TEST(ObstructionProperty, FormulasAgreeForSmallN) {
  const std::vector<MapSpec> maps{kChebyshev, MapSpec::unicritical(2, Complex(0.0, 1.0)),
                                  MapSpec::polynomial(Polynomial({0.0, -3.0, 0.0, 1.0}))};
  for (const MapSpec& m : maps) {
    for (const Complex& c : m.critical_points()) {
      const OrbitRecord orbit = iterate_orbit(m, c, 30, 0.0);
      for (const VectorFieldSpec& v : {VectorFieldSpec::constant(1.0), VectorFieldSpec(Polynomial({1.0, 1.0}))}) {
        const ObstructionSeries s = obstruction_sequence(orbit, v, 20);
        for (std::size_t n = 1; n <= 20; ++n) {
          const XComplex direct = obstruction_direct(orbit, v, n);
          const double rel = xc_sub(direct, s.b[n]).abs() / std::max(s.b[n].abs(), 1e-300);
          EXPECT_LT(rel, 1e-8) << "n=" << n;
        }
      }
    }
  }
}

TEST(GrowthFit, UsesTrailingHalf) {
  // Transient of 100 flat samples, then slope 0.5: the fit ignores the start.
  std::vector<XComplex> b(1, XComplex());
  for (int k = 1; k <= 100; ++k) b.emplace_back(1.0);
  for (int k = 101; k <= 400; ++k) b.push_back(XComplex::from_parts(1.0, 0) * XComplex(std::exp(0.5 * (k - 100))));
  EXPECT_NEAR(fit_growth_exponent(b), 0.5, 1e-9);
}

}  // namespace
}  // namespace critorbit
