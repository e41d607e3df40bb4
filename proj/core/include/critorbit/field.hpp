#pragma once

#include <span>
#include <vector>

#include "critorbit/map.hpp"
#include "critorbit/polynomial.hpp"

namespace critorbit {

// Perturbation direction v = numerator / denominator. Polynomial fields have
// denominator 1 and no poles.
class VectorFieldSpec {
 public:
  VectorFieldSpec() : VectorFieldSpec(Polynomial{}) {}
  explicit VectorFieldSpec(Polynomial numerator, Polynomial denominator = Polynomial::constant(1.0));

  static VectorFieldSpec constant(Complex c) { return VectorFieldSpec(Polynomial::constant(c)); }
  static VectorFieldSpec monomial(int j) { return VectorFieldSpec(Polynomial::monomial(j)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const std::vector<Complex>& poles() const { return poles_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  // v(z) and v'(z); PoleError at a pole.
  MapValue eval(Complex z) const;
  Complex operator()(Complex z) const { return eval(z).value; }

  friend bool operator==(const VectorFieldSpec& a, const VectorFieldSpec& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
  std::vector<Complex> poles_;
};

// Rejects fields with a pole closer than 1e-3 * diam(points) (absolute floor
// 1e-12) to any of the points. Throws PoleProximityError.
void check_pole_distance(const VectorFieldSpec& v, std::span<const Complex> points);

}  // namespace critorbit
