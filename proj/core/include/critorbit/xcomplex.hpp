#pragma once

#include <complex>
#include <cstdint>

namespace critorbit {

using Complex = std::complex<double>;

// Complex number with an extended binary exponent: value = mantissa * 2^exponent
// with |mantissa| in [1, 2), or mantissa = 0 and exponent = 0 for zero.
//
// Long products of derivatives along an orbit grow or shrink geometrically;
// keeping the exponent in a 64-bit integer lets 10^6-term cocycles stay
// representable where a plain double would overflow after ~500 factors.
class XComplex {
 public:
  XComplex() = default;
  XComplex(Complex z);  // NOLINT(google-explicit-constructor)
  XComplex(double x) : XComplex(Complex(x, 0.0)) {}  // NOLINT

  // Builds mantissa * 2^exponent and renormalizes.
  static XComplex from_parts(Complex mantissa, std::int64_t exponent);

  const Complex& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == Complex(0.0, 0.0); }

  // Nearest double-precision value; overflows to inf and underflows to 0.
  Complex to_complex() const;
  // log|value|; -inf for zero.
  double log_abs() const;
  // |value| as a double (may be inf or 0).
  double abs() const;

  XComplex conj() const;
  XComplex operator-() const;

  friend bool operator==(const XComplex&, const XComplex&) = default;

 private:
  Complex mantissa_{0.0, 0.0};
  std::int64_t exponent_ = 0;
};

// Exponent arithmetic is exact; throws OverflowError when it leaves int64.
XComplex xc_mul(const XComplex& a, const XComplex& b);
// Aligns exponents before adding. When the exponents differ by more than the
// mantissa width the smaller operand is swamped and the larger is returned.
XComplex xc_add(const XComplex& a, const XComplex& b);
XComplex xc_sub(const XComplex& a, const XComplex& b);
// Throws std::domain_error on division by zero.
XComplex xc_inv(const XComplex& a);
XComplex xc_div(const XComplex& a, const XComplex& b);

inline XComplex operator*(const XComplex& a, const XComplex& b) { return xc_mul(a, b); }
inline XComplex operator+(const XComplex& a, const XComplex& b) { return xc_add(a, b); }
inline XComplex operator-(const XComplex& a, const XComplex& b) { return xc_sub(a, b); }
inline XComplex operator/(const XComplex& a, const XComplex& b) { return xc_div(a, b); }

// Width (in binary digits) past which an addend is considered swamped.
inline constexpr std::int64_t kXComplexSwampBits = 64;

}  // namespace critorbit
