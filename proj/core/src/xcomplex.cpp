#include "critorbit/xcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "critorbit/errors.hpp"

namespace critorbit {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("XComplex exponent overflow");
  }
  return out;
}

Complex scale2(Complex z, int e) {
  return {std::ldexp(z.real(), e), std::ldexp(z.imag(), e)};
}

}  // namespace

XComplex XComplex::from_parts(Complex mantissa, std::int64_t exponent) {
  XComplex out;
  if (!std::isfinite(mantissa.real()) || !std::isfinite(mantissa.imag())) {
    throw OverflowError("XComplex built from a non-finite mantissa");
  }
  if (mantissa == Complex(0.0, 0.0)) return out;
  // Pre-scale by the larger component so hypot cannot overflow.
  int e = 0;
  std::frexp(std::max(std::fabs(mantissa.real()), std::fabs(mantissa.imag())), &e);
  Complex m = scale2(mantissa, -e);
  std::int64_t ex = checked_add(exponent, e);
  int f = 0;
  std::frexp(std::abs(m), &f);  // |m| in [0.5, 1) * 2^f
  m = scale2(m, 1 - f);
  ex = checked_add(ex, f - 1);
  // Guard against hypot rounding at the interval ends.
  double mod = std::abs(m);
  if (mod >= 2.0) {
    m = scale2(m, -1);
    ex = checked_add(ex, 1);
  } else if (mod < 1.0) {
    m = scale2(m, 1);
    ex = checked_add(ex, -1);
  }
  out.mantissa_ = m;
  out.exponent_ = ex;
  return out;
}

XComplex::XComplex(Complex z) { *this = from_parts(z, 0); }

Complex XComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  constexpr std::int64_t kClamp = 4096;
  const std::int64_t e = std::clamp<std::int64_t>(exponent_, -kClamp, kClamp);
  return scale2(mantissa_, static_cast<int>(e));
}

double XComplex::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(mantissa_)) + static_cast<double>(exponent_) * std::log(2.0);
}

double XComplex::abs() const { return std::abs(to_complex()); }

XComplex XComplex::conj() const {
  XComplex out = *this;
  out.mantissa_ = std::conj(mantissa_);
  return out;
}

XComplex XComplex::operator-() const {
  XComplex out = *this;
  out.mantissa_ = -mantissa_;
  return out;
}

XComplex xc_mul(const XComplex& a, const XComplex& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return XComplex::from_parts(a.mantissa() * b.mantissa(),
                              checked_add(a.exponent(), b.exponent()));
}

XComplex xc_add(const XComplex& a, const XComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const XComplex& big = a.exponent() >= b.exponent() ? a : b;
  const XComplex& small = a.exponent() >= b.exponent() ? b : a;
  // Difference computed without overflow: big >= small.
  const auto gap = static_cast<std::uint64_t>(big.exponent()) -
                   static_cast<std::uint64_t>(small.exponent());
  if (gap > static_cast<std::uint64_t>(kXComplexSwampBits)) return big;
  const Complex sum = big.mantissa() + scale2(small.mantissa(), -static_cast<int>(gap));
  return XComplex::from_parts(sum, big.exponent());
}

XComplex xc_sub(const XComplex& a, const XComplex& b) { return xc_add(a, -b); }

XComplex xc_inv(const XComplex& a) {
  if (a.is_zero()) throw std::domain_error("XComplex division by zero");
  if (a.exponent() == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("XComplex exponent overflow");
  }
  return XComplex::from_parts(1.0 / a.mantissa(), -a.exponent());
}

XComplex xc_div(const XComplex& a, const XComplex& b) {
  if (b.is_zero()) throw std::domain_error("XComplex division by zero");
  if (a.is_zero()) return {};
  if (b.exponent() == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("XComplex exponent overflow");
  }
  return XComplex::from_parts(a.mantissa() / b.mantissa(),
                              checked_add(a.exponent(), -b.exponent()));
}

}  // namespace critorbit
