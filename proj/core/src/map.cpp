#include "critorbit/map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critorbit/errors.hpp"
#include "critorbit/roots.hpp"

namespace critorbit {

MapSpec MapSpec::rational(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw DegenerateMapError("denominator is identically zero");
  MapSpec m;
  m.degree_ = std::max(numerator.degree(), denominator.degree());
  if (m.degree_ < 2) {
    throw DegenerateMapError("map degree must be at least 2, got " + std::to_string(m.degree_));
  }
  if (denominator.degree() >= 1 && !numerator.is_zero()) {
    for (const Complex& r : poly_roots(denominator)) {
      const double rel = std::abs(numerator(r)) / numerator.magnitude_at(r);
      if (rel < kCoprimeTolerance) {
        throw DegenerateMapError("numerator and denominator share a root near (" +
                                 std::to_string(r.real()) + ", " + std::to_string(r.imag()) + ")");
      }
    }
  }
  m.num_ = std::move(numerator);
  m.den_ = std::move(denominator);
  m.dnum_ = m.num_.derivative() * m.den_ - m.num_ * m.den_.derivative();

  if (m.dnum_.degree() >= 1) {
    for (const RootCluster& cl : cluster_roots(m.dnum_, poly_roots(m.dnum_), kCriticalClusterTolerance)) {
      // Multiple poles also annihilate N'D - ND'; they map to infinity.
      const double den_rel = std::abs(m.den_(cl.location)) / m.den_.magnitude_at(cl.location);
      if (den_rel < kPoleTolerance) continue;
      m.critical_.push_back(cl.location);
      m.multiplicity_.push_back(cl.multiplicity);
    }
  }
  return m;
}

MapSpec MapSpec::unicritical(int d, Complex c) {
  if (d < 2) throw DegenerateMapError("unicritical degree must be at least 2");
  std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1, Complex{});
  coeffs.front() = c;
  coeffs.back() = 1.0;
  return polynomial(Polynomial(std::move(coeffs)));
}

MapValue MapSpec::eval(Complex z) const {
  const auto [n, dn] = num_.eval_with_derivative(z);
  if (is_polynomial()) {
    const Complex d0 = den_.coefficient(0);
    return {n / d0, dn / d0};
  }
  const auto [d, dd] = den_.eval_with_derivative(z);
  if (std::abs(d) <= kPoleTolerance * den_.magnitude_at(z)) {
    throw PoleError("map evaluated at a pole");
  }
  return {n / d, (dn * d - n * dd) / (d * d)};
}

MapValue eval_map(const MapSpec& map, Complex z) { return map.eval(z); }

std::vector<Complex> critical_points(const MapSpec& map) { return map.critical_points(); }

}  // namespace critorbit
