#include "critorbit/obstruction.hpp"

#include <algorithm>
#include <cmath>

#include "critorbit/errors.hpp"

namespace critorbit {

double fit_growth_exponent(const std::vector<XComplex>& b) {
  if (b.size() < 2) return 0.0;
  const std::size_t n = b.size() - 1;
  const std::size_t trailing = std::max((n + 1) / 2, std::min(kGrowthMinSamples, n));
  const std::size_t first = n - trailing + 1;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (std::size_t k = first; k <= n; ++k) {
    if (b[k].is_zero()) continue;
    const double x = static_cast<double>(k);
    const double y = b[k].log_abs();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  const double cnt = static_cast<double>(count);
  const double denom = cnt * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (cnt * sxy - sx * sy) / denom;
}

ObstructionSeries obstruction_sequence(const OrbitRecord& orbit, const VectorFieldSpec& v, std::size_t n) {
  if (orbit.has_relation()) throw InvalidOrbitError("orbit has a critical relation");
  if (orbit.size() < n) {
    throw PreconditionError("orbit has " + std::to_string(orbit.size()) + " points, need " +
                            std::to_string(n));
  }
  ObstructionSeries out;
  out.b.reserve(n + 1);
  out.b.emplace_back();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex z = orbit.points[k];
    const Complex dr = orbit.map.eval(z).derivative;
    out.b.push_back(xc_add(xc_mul(XComplex(dr), out.b.back()), XComplex(v(z))));
  }

  const bool all_zero = std::all_of(out.b.begin(), out.b.end(), [](const XComplex& x) { return x.is_zero(); });
  if (all_zero) {
    out.growth_exponent = 0.0;
    out.bounded_evidence = BoundedEvidence::bounded;
    return out;
  }
  out.growth_exponent = fit_growth_exponent(out.b);
  if (out.growth_exponent > kGrowthMargin) {
    out.bounded_evidence = BoundedEvidence::unbounded;
  } else if (out.growth_exponent < -kGrowthMargin) {
    out.bounded_evidence = BoundedEvidence::bounded;
  } else {
    out.bounded_evidence = BoundedEvidence::inconclusive;
  }
  return out;
}

XComplex obstruction_direct(const OrbitRecord& orbit, const VectorFieldSpec& v, std::size_t n) {
  if (orbit.has_relation()) throw InvalidOrbitError("orbit has a critical relation");
  if (n == 0) return {};
  if (orbit.size() < n) throw PreconditionError("orbit too short for obstruction_direct");
  XComplex sum;
  for (std::size_t k = 0; k < n; ++k) {
    sum = xc_add(sum, xc_div(XComplex(v(orbit.points[k])), orbit.cocycle[k]));
  }
  return xc_mul(orbit.cocycle[n - 1], sum);
}

const char* to_string(BoundedEvidence e) {
  switch (e) {
    case BoundedEvidence::bounded: return "bounded";
    case BoundedEvidence::unbounded: return "unbounded";
    case BoundedEvidence::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace critorbit
