#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "critorbit/xcomplex.hpp"

namespace critorbit {

// Dense complex polynomial, coefficients lowest degree first. Trailing zero
// coefficients are trimmed on construction, so the leading coefficient is
// nonzero unless the polynomial is identically zero (empty coefficient list).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);
  Polynomial(std::initializer_list<Complex> coefficients)
      : Polynomial(std::vector<Complex>(coefficients)) {}

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, Complex coefficient = 1.0);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coefficients() const { return coeffs_; }
  Complex coefficient(int i) const;
  Complex leading() const { return is_zero() ? Complex{} : coeffs_.back(); }

  Complex operator()(Complex z) const;

  struct ValueAndDerivative {
    Complex value;
    Complex derivative;
  };
  ValueAndDerivative eval_with_derivative(Complex z) const;

  // sum |a_i| |z|^i, the natural scale for relative residuals at z.
  double magnitude_at(Complex z) const;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace critorbit
