#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "critorbit/errors.hpp"
#include "critorbit/measure.hpp"

namespace critorbit {
namespace {

const MapSpec kChebyshev = MapSpec::unicritical(2, -2.0);

// Oracle: direct double-precision summation of v(x_k) / (-4)^k over the
// closed-form Chebyshev orbit 0, -2, 2, 2, ... (cocycle -4, -16, -64, ...)
Complex chebyshev_oracle(const std::function<Complex(Complex)>& v, int terms) {
  Complex sum = v(0.0);
  double cocycle = 1.0;
  for (int k = 1; k < terms; ++k) {
    const Complex x = k == 1 ? Complex(-2.0) : Complex(2.0);
    cocycle *= 2.0 * x.real();
    sum += v(x) / cocycle;
  }
  return sum;
}

TEST(MuFunctional, ChebyshevConstantField) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 200, 0.0);
  const MuResult mu = mu_functional(orbit, VectorFieldSpec::constant(1.0), 1e-15);
  EXPECT_TRUE(mu.converged);
  EXPECT_NEAR(std::abs(mu.value - Complex(2.0 / 3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(chebyshev_oracle([](Complex) { return Complex(1.0); }, 60) - Complex(2.0 / 3.0)), 0.0, 1e-15);
  EXPECT_LT(mu.tail_bound, 1e-15);
  EXPECT_EQ(mu.partial.size(), mu.terms_used);
}

TEST(MuFunctional, ChebyshevIdentityField) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 200, 0.0);
  const MuResult mu = mu_functional(orbit, VectorFieldSpec::monomial(1), 1e-15);
  EXPECT_TRUE(mu.converged);
  EXPECT_NEAR(std::abs(mu.value - Complex(1.0 / 3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(chebyshev_oracle([](Complex z) { return z; }, 60) - Complex(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(MuFunctional, PartialIncrementsMatchTerms) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 50, 0.0);
  const MuResult mu = mu_functional(orbit, VectorFieldSpec::monomial(1), 0.0, 30);
  EXPECT_FALSE(mu.converged);
  ASSERT_EQ(mu.terms_used, 30u);
  for (std::size_t n = 1; n < mu.partial.size(); ++n) {
    const double term = std::abs(orbit.points[n]) / orbit.cocycle[n].abs();
    EXPECT_NEAR(std::abs(mu.partial[n] - mu.partial[n - 1]), term, 1e-15);
  }
}

TEST(MuFunctional, ZeroField) {
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, Complex(0.0, 1.0)), 0.0, 200, 0.0);
  const MuResult mu = mu_functional(orbit, VectorFieldSpec(), 1e-12);
  EXPECT_EQ(mu.value, Complex(0.0));
  EXPECT_TRUE(mu.converged);
}

TEST(MuFunctional, RejectsPoleOnOrbit) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 100, 0.0);
  const VectorFieldSpec v(Polynomial::constant(1.0), Polynomial({-2.0, 1.0}));
  EXPECT_THROW(mu_functional(orbit, v, 1e-12), PoleProximityError);
  // A pole far from [-2, 2] is fine.
  const VectorFieldSpec far(Polynomial::constant(1.0), Polynomial({-10.0, 1.0}));
  EXPECT_NO_THROW(mu_functional(orbit, far, 1e-12));
}

TEST(MuFunctional, RejectsEscapedOrbit) {
  const OrbitRecord orbit = iterate_orbit(MapSpec::unicritical(2, 1.0), 0.0, 100, 10.0);
  EXPECT_THROW(mu_functional(orbit, VectorFieldSpec::constant(1.0), 1e-12), InvalidOrbitError);
}

TEST(MuConstantUnicritical, Chebyshev) {
  const MuConstantResult r = mu_constant_unicritical(-2.0, 2, 1e-13, 500);
  EXPECT_NEAR(std::abs(r.mu.value - Complex(2.0 / 3.0)), 0.0, 1e-13);
  EXPECT_TRUE(r.nonvanishing);
}

TEST(MuConstantUnicritical, MisiurewiczAtI) {
  // Orbit 0, i, i-1, -i, i-1, ...: prefix terms plus a geometric tail over
  // the repelling 2-cycle with multiplier (2i - 2)(-2i) = 4 + 4i.
  const Complex i(0.0, 1.0);
  const Complex c1 = 2.0 * i;
  const Complex c2 = c1 * (2.0 * i - 2.0);
  const Complex c3 = c2 * (-2.0 * i);
  const Complex rho = 4.0 + 4.0 * i;
  ASSERT_NEAR(std::abs(rho), 4.0 * std::sqrt(2.0), 1e-15);
  const Complex oracle = 1.0 + 1.0 / c1 + (1.0 / c2 + 1.0 / c3) / (1.0 - 1.0 / rho);

  const MuConstantResult r = mu_constant_unicritical(i, 2, 1e-14, 500);
  EXPECT_TRUE(r.mu.converged);
  EXPECT_TRUE(r.nonvanishing);
  EXPECT_NEAR(std::abs(r.mu.value - oracle), 0.0, 1e-13);
}

TEST(MuConstantUnicritical, AttractingParameterNotSummable) {
  EXPECT_THROW(mu_constant_unicritical(0.1, 2, 1e-12, 500), NotSummableError);
}

TEST(MomentVector, ChebyshevMoments) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 200, 0.0);
  const auto m = moment_vector(orbit, 3, 1e-14);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_NEAR(std::abs(m[0] - Complex(2.0 / 3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(m[1] - Complex(1.0 / 3.0)), 0.0, 1e-14);
  // Linearity: mu(2z + 3) = 2 m1 + 3 m0.
  const MuResult affine = mu_functional(orbit, VectorFieldSpec(Polynomial({3.0, 2.0})), 1e-14);
  EXPECT_NEAR(std::abs(affine.value - (2.0 * m[1] + 3.0 * m[0])), 0.0, 1e-12);
}

TEST(MomentVector, SingleTermEdge) {
  const Complex c(0.0, 1.0);
  const OrbitRecord orbit = iterate_orbit(MapSpec::rational(Polynomial({c, 0.0, 1.0}), Polynomial::constant(1.0)),
                                          0.0, 100, 0.0);
  const auto m = moment_vector(orbit, 3, 1e-12, 1);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0], Complex(1.0));  // v(c) = c^0 with c = 0
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(m[j], Complex(0.0));
}

TEST(MuLinearityProperty, RandomPolynomialFields) {
  const OrbitRecord orbit = iterate_orbit(kChebyshev, 0.0, 300, 0.0);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto random_poly = [&] {
    std::vector<Complex> c(1 + rng() % 6);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    return Polynomial(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p1 = random_poly();
    const Polynomial p2 = random_poly();
    const Complex a(u(rng), u(rng));
    const Complex b(u(rng), u(rng));
    const Complex mu1 = mu_functional(orbit, VectorFieldSpec(p1), 1e-15).value;
    const Complex mu2 = mu_functional(orbit, VectorFieldSpec(p2), 1e-15).value;
    const Complex mix = mu_functional(orbit, VectorFieldSpec(a * p1 + b * p2), 1e-15).value;
    const Complex expect = a * mu1 + b * mu2;
    EXPECT_LT(std::abs(mix - expect), 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST(WitnessField, ClosedFormMaximizer) {
  const std::vector<Complex> m{2.0 / 3.0, 1.0 / 3.0};
  const WitnessResult w = find_witness_field(m);
  EXPECT_NEAR(std::abs(w.mu_value - Complex(std::sqrt(5.0) / 3.0)), 0.0, 1e-15);
  const double norm = std::sqrt(5.0) / 3.0;
  EXPECT_NEAR(std::abs(w.field.numerator().coefficient(0) - Complex(2.0 / 3.0 / norm)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w.field.numerator().coefficient(1) - Complex(1.0 / 3.0 / norm)), 0.0, 1e-15);
}

TEST(WitnessField, SingleNonzeroMoment) {
  const std::vector<Complex> m{1.0, 0.0, 0.0};
  const WitnessResult w = find_witness_field(m);
  EXPECT_EQ(w.field.numerator(), Polynomial::constant(1.0));
  EXPECT_EQ(w.mu_value, Complex(1.0));
}

TEST(WitnessField, ComplexMomentsGiveRealMaximum) {
  const std::vector<Complex> m{Complex(0.3, -0.4), Complex(0.0, 1.2)};
  const WitnessResult w = find_witness_field(m);
  EXPECT_NEAR(w.mu_value.real(), 1.3, 1e-15);
  EXPECT_NEAR(w.mu_value.imag(), 0.0, 1e-15);
}

TEST(WitnessField, ZeroMoments) {
  const std::vector<Complex> m{0.0, 0.0};
  EXPECT_THROW(find_witness_field(m), NoWitnessError);
}

}  // namespace
}  // namespace critorbit
