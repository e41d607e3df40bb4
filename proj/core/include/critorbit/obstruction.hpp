#pragma once

#include <cstddef>
#include <vector>

#include "critorbit/field.hpp"
#include "critorbit/orbit.hpp"

namespace critorbit {

enum class BoundedEvidence { bounded, unbounded, inconclusive };

inline constexpr double kGrowthMargin = 0.01;
inline constexpr std::size_t kGrowthMinSamples = 32;

// b[n] = DR^{n-1}(R(c)) * sum_{k<n} v(R^k(c)) / DR^k(R(c)), the derivative of
// (R + lambda v)^n(c) at lambda = 0, with b[0] = 0.
struct ObstructionSeries {
  std::vector<XComplex> b;
  // Least-squares slope of log|b[k]| against k over the trailing half
  // (at least kGrowthMinSamples points when available).
  double growth_exponent = 0.0;
  BoundedEvidence bounded_evidence = BoundedEvidence::inconclusive;

  friend bool operator==(const ObstructionSeries&, const ObstructionSeries&) = default;
};

// Forward recurrence b[k+1] = DR(R^k(c)) b[k] + v(R^k(c)) in extended-exponent
// arithmetic; produces b[0..n]. Needs orbit points 0..n-1.
ObstructionSeries obstruction_sequence(const OrbitRecord& orbit, const VectorFieldSpec& v, std::size_t n);

// b[n] through the product-times-sum formula. Loses precision for large n;
// kept as an independent cross-check of the recurrence.
XComplex obstruction_direct(const OrbitRecord& orbit, const VectorFieldSpec& v, std::size_t n);

// Least-squares slope of log|b[k]| over the trailing window. Exposed for the
// scan module and tests.
double fit_growth_exponent(const std::vector<XComplex>& b);

const char* to_string(BoundedEvidence e);

}  // namespace critorbit
