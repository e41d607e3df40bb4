#include "critorbit/field.hpp"

#include <algorithm>
#include <cmath>

#include "critorbit/errors.hpp"
#include "critorbit/roots.hpp"

namespace critorbit {

VectorFieldSpec::VectorFieldSpec(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DegenerateMapError("vector field denominator is identically zero");
  if (den_.degree() >= 1) {
    for (const RootCluster& cl : cluster_roots(den_, poly_roots(den_))) poles_.push_back(cl.location);
  }
}

MapValue VectorFieldSpec::eval(Complex z) const {
  const auto [n, dn] = num_.eval_with_derivative(z);
  if (is_polynomial()) {
    const Complex d0 = den_.coefficient(0);
    return {n / d0, dn / d0};
  }
  const auto [d, dd] = den_.eval_with_derivative(z);
  if (std::abs(d) <= kPoleTolerance * den_.magnitude_at(z)) {
    throw PoleError("vector field evaluated at a pole");
  }
  return {n / d, (dn * d - n * dd) / (d * d)};
}

void check_pole_distance(const VectorFieldSpec& v, std::span<const Complex> points) {
  if (v.poles().empty() || points.empty()) return;
  double re_lo = points[0].real(), re_hi = re_lo, im_lo = points[0].imag(), im_hi = im_lo;
  for (const Complex& z : points) {
    re_lo = std::min(re_lo, z.real());
    re_hi = std::max(re_hi, z.real());
    im_lo = std::min(im_lo, z.imag());
    im_hi = std::max(im_hi, z.imag());
  }
  const double diameter = std::hypot(re_hi - re_lo, im_hi - im_lo);
  const double limit = std::max(1e-3 * diameter, 1e-12);
  for (const Complex& pole : v.poles()) {
    for (const Complex& z : points) {
      if (std::abs(z - pole) < limit) {
        throw PoleProximityError("vector field pole lies within " + std::to_string(limit) +
                                 " of the orbit");
      }
    }
  }
}

}  // namespace critorbit
