#pragma once

#include <vector>

#include "critorbit/polynomial.hpp"

namespace critorbit {

inline constexpr double kPoleTolerance = 1e-10;
inline constexpr double kCoprimeTolerance = 1e-10;
inline constexpr double kCriticalResidualTolerance = 1e-10;
inline constexpr double kCriticalClusterTolerance = 1e-7;

struct MapValue {
  Complex value;
  Complex derivative;
};

// A rational map R = numerator / denominator of degree d >= 2, together with
// its finite-plane critical points. Immutable once built.
//
// The theory assumes J(R) is a compact subset of the plane (infinity lies in
// the Fatou set). That is the caller's responsibility and is not checked.
class MapSpec {
 public:
  // Validates degree, coprimality and computes the critical points.
  // Throws DegenerateMapError.
  static MapSpec rational(Polynomial numerator, Polynomial denominator);
  static MapSpec polynomial(Polynomial p) { return rational(std::move(p), Polynomial::constant(1.0)); }
  // z^d + c.
  static MapSpec unicritical(int d, Complex c);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  int degree() const { return degree_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Distinct critical points, sorted by (re, im).
  const std::vector<Complex>& critical_points() const { return critical_; }
  const std::vector<int>& critical_multiplicities() const { return multiplicity_; }
  // Numerator of R' = (N'D - ND') / D^2.
  const Polynomial& derivative_numerator() const { return dnum_; }

  // R(z) and R'(z). Throws PoleError when |D(z)| is below the pole tolerance
  // relative to sum|d_i||z|^i.
  MapValue eval(Complex z) const;
  Complex operator()(Complex z) const { return eval(z).value; }

  // Everything else is derived from the coefficients.
  friend bool operator==(const MapSpec& a, const MapSpec& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  MapSpec() = default;

  Polynomial num_;
  Polynomial den_;
  Polynomial dnum_;
  int degree_ = 0;
  std::vector<Complex> critical_;
  std::vector<int> multiplicity_;
};

MapValue eval_map(const MapSpec& map, Complex z);

// Distinct finite critical points (roots of N'D - ND' that are not poles).
std::vector<Complex> critical_points(const MapSpec& map);

}  // namespace critorbit
