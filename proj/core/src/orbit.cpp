#include "critorbit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "critorbit/errors.hpp"
#include "critorbit/roots.hpp"

namespace critorbit {

double default_escape_radius(int d, Complex c) {
  return std::max(2.0, std::pow(std::abs(c), 1.0 / (d - 1))) + 1.0;
}

OrbitRecord iterate_orbit(const MapSpec& map, Complex c, std::size_t n_max, double escape_radius,
                          const OrbitOptions& options) {
  if (n_max < 1) throw PreconditionError("iterate_orbit needs n_max >= 1");
  const Polynomial& dnum = map.derivative_numerator();
  if (std::abs(dnum(c)) > 1e-8 * std::max(dnum.magnitude_at(c), 1e-300)) {
    throw PreconditionError("iterate_orbit: start point is not a critical point of the map");
  }

  OrbitRecord orbit{.map = map,
                    .critical_point = c,
                    .start = {},
                    .points = {},
                    .cocycle = {},
                    .partial_sums_abs = {},
                    .escaped_at = {},
                    .critical_relation_at = {},
                    .truncated_at = 0,
                    .warnings = {}};
  orbit.points.reserve(n_max + 1);
  orbit.cocycle.reserve(n_max + 1);
  orbit.partial_sums_abs.reserve(n_max + 1);

  orbit.points.push_back(c);
  orbit.cocycle.emplace_back(1.0);
  orbit.partial_sums_abs.push_back(1.0);

  Complex z = map(c);
  orbit.start = z;
  bool warned = false;
  const auto& crit = map.critical_points();

  for (std::size_t k = 1; k <= n_max; ++k) {
    const MapValue next = map.eval(z);
    if (!std::isfinite(std::abs(next.derivative))) {
      // Left the double range; with escape checking off this is the escape.
      orbit.escaped_at = k - 1;
      orbit.warnings.push_back("orbit overflowed at index " + std::to_string(k));
      break;
    }
    orbit.points.push_back(z);
    const XComplex cocycle = xc_mul(orbit.cocycle.back(), XComplex(next.derivative));
    orbit.cocycle.push_back(cocycle);
    const double inv = cocycle.is_zero() ? std::numeric_limits<double>::infinity()
                                         : xc_inv(cocycle).abs();
    orbit.partial_sums_abs.push_back(orbit.partial_sums_abs.back() + inv);
    orbit.truncated_at = k;

    if (escape_radius > 0.0 && std::abs(z) > escape_radius) {
      orbit.escaped_at = k;
      break;
    }

    for (const Complex& cp : crit) {
      const double dist = std::abs(z - cp);
      const double scale = std::max(1.0, std::abs(cp));
      if (dist <= kCriticalRelationTolerance * scale) {
        if (options.throw_on_relation) {
          throw CriticalRelationError(k, "critical orbit returns to a critical point at index " +
                                             std::to_string(k));
        }
        orbit.critical_relation_at = k;
        break;
      }
      if (!warned && dist <= kNearRelationTolerance * scale) {
        orbit.warnings.push_back("near critical relation at index " + std::to_string(k));
        warned = true;
      }
    }
    if (orbit.critical_relation_at) break;
    z = next.value;
  }
  return orbit;
}

SummabilityReport summability_report(const OrbitRecord& orbit, std::size_t window,
                                     const SummabilityOptions& options) {
  if (orbit.has_relation()) throw InvalidOrbitError("orbit has a critical relation");
  if (window < 1) throw PreconditionError("summability window must be >= 1");
  if (orbit.size() < 2 * window) {
    throw PreconditionError("orbit shorter than twice the summability window");
  }
  const std::size_t n = orbit.size() - 1;
  SummabilityReport report;
  report.window = window;
  report.terms = orbit.size();
  report.partial_sum = orbit.partial_sums_abs[n];

  const double log_ratio =
      (orbit.cocycle[n - window].log_abs() - orbit.cocycle[n].log_abs()) / static_cast<double>(window);
  report.tail_ratio = std::exp(log_ratio);
  if (report.tail_ratio < 1.0) {
    const double last = std::exp(-orbit.cocycle[n].log_abs());
    report.tail_bound = last * report.tail_ratio / (1.0 - report.tail_ratio);
  } else {
    report.tail_bound = std::numeric_limits<double>::infinity();
  }

  bool superlinear = !std::isfinite(report.partial_sum);
  if (!superlinear && n >= 2 * window) {
    const double s0 = orbit.partial_sums_abs[n - 2 * window];
    const double s1 = orbit.partial_sums_abs[n - window];
    const double d1 = s1 - s0;
    const double d2 = report.partial_sum - s1;
    superlinear = d1 > 0.0 && d2 > (1.0 + options.margin) * d1;
  }

  const double scale = std::max(1.0, report.partial_sum);
  if (report.tail_ratio < 1.0 - options.margin && report.tail_bound < options.tol * scale) {
    report.classification = SummabilityClass::summable_evidence;
  } else if (report.tail_ratio > 1.0 + options.margin || superlinear) {
    report.classification = SummabilityClass::divergent_evidence;
  } else {
    report.classification = SummabilityClass::inconclusive;
  }
  return report;
}

namespace {

// Integer powers through repeated multiplication: std::pow(complex, int) goes
// through exp/log and is neither exact at 0 nor conjugation-symmetric.
Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  Complex b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

struct UnicriticalMap {
  int d;
  Complex c;
  Complex f(Complex z) const { return ipow(z, d) + c; }
  Complex df(Complex z) const { return static_cast<double>(d) * ipow(z, d - 1); }
};

// f^m(z) - z and its derivative.
std::pair<Complex, Complex> periodic_residual(const UnicriticalMap& f, Complex z, int m) {
  Complex w = z;
  Complex dw = 1.0;
  for (int i = 0; i < m; ++i) {
    dw *= f.df(w);
    w = f.f(w);
  }
  return {w - z, dw - 1.0};
}

}  // namespace

ParameterClass classify_parameter(Complex c, int d, std::size_t n_max, double escape_radius) {
  if (d < 2) throw PreconditionError("classify_parameter needs d >= 2");
  const double radius = escape_radius > 0.0 ? escape_radius : default_escape_radius(d, c);
  const UnicriticalMap f{d, c};

  ParameterClass result;
  Complex tortoise = 0.0;
  Complex hare = f.f(tortoise);
  std::size_t power = 1;
  std::size_t lam = 1;
  std::size_t iters = 1;

  while (iters <= n_max) {
    if (std::abs(hare) > radius) {
      result.kind = ParameterKind::escaping;
      result.iterations_used = iters;
      return result;
    }
    const double scale = std::max(1.0, std::abs(hare));
    if (std::abs(hare - tortoise) < kCycleDetectTolerance * scale) {
      const int m = static_cast<int>(lam);
      Complex z = hare;
      for (int it = 0; it < 50; ++it) {
        const auto [g, dg] = periodic_residual(f, z, m);
        if (g == Complex(0.0, 0.0) || dg == Complex(0.0, 0.0)) break;
        const Complex step = g / dg;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
      }
      if (std::abs(z - hare) > 1e-6 * scale) z = hare;  // Newton wandered off
      int period = m;
      for (int q = 1; q < m; ++q) {
        if (m % q != 0) continue;
        if (std::abs(periodic_residual(f, z, q).first) < kCycleDetectTolerance * scale) {
          period = q;
          break;
        }
      }
      Complex multiplier = 1.0;
      Complex w = z;
      for (int i = 0; i < period; ++i) {
        multiplier *= f.df(w);
        w = f.f(w);
      }
      if (std::abs(multiplier) < 1.0) {
        result.kind = ParameterKind::attracting;
        result.period = period;
        result.multiplier = multiplier;
        result.iterations_used = iters;
        return result;
      }
      // Landed on a non-attracting cycle; no further iteration can change
      // the verdict.
      result.iterations_used = iters;
      return result;
    }
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = f.f(hare);
    ++lam;
    ++iters;
  }
  result.iterations_used = n_max;
  return result;
}

std::vector<Complex> julia_sample(const MapSpec& map, std::size_t n_points, std::size_t transient,
                                  std::uint64_t seed) {
  const int d = map.degree();
  const Polynomial& num = map.numerator();
  const Polynomial& den = map.denominator();

  // Start from the most repelling fixed point.
  const Polynomial fixed_eq = num - Polynomial({0.0, 1.0}) * den;
  Complex z{};
  double best = -1.0;
  for (const Complex& p : poly_roots(fixed_eq)) {
    double mult = 0.0;
    try {
      mult = std::abs(map.eval(p).derivative);
    } catch (const PoleError&) {
      continue;
    }
    if (mult > best) {
      best = mult;
      z = p;
    }
  }

  // z^d + a0 (times a constant) admits closed-form preimages.
  bool monomial_plus_constant = map.is_polynomial() && num.degree() == d;
  for (int i = 1; i < d && monomial_plus_constant; ++i) {
    monomial_plus_constant = num.coefficient(i) == Complex(0.0, 0.0);
  }
  const Complex lead = num.leading();
  const Complex a0 = num.coefficient(0);
  const Complex d0 = den.coefficient(0);

  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  out.reserve(n_points);
  for (std::size_t i = 0; i < transient + n_points; ++i) {
    const auto branch = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    if (monomial_plus_constant) {
      const Complex base = std::pow((z * d0 - a0) / lead, 1.0 / d);
      z = base * std::polar(1.0, 2.0 * std::numbers::pi * branch / d);
    } else {
      const Polynomial eq = num - z * den;
      const auto roots = poly_roots(eq);
      if (roots.size() != static_cast<std::size_t>(d)) {
        throw RootFindingError("preimage equation lost degree");
      }
      z = roots[static_cast<std::size_t>(branch)];
    }
    if (i >= transient) out.push_back(z);
  }
  return out;
}

const char* to_string(SummabilityClass c) {
  switch (c) {
    case SummabilityClass::summable_evidence: return "summable";
    case SummabilityClass::divergent_evidence: return "divergent";
    case SummabilityClass::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(ParameterKind k) {
  switch (k) {
    case ParameterKind::escaping: return "escaping";
    case ParameterKind::attracting: return "attracting";
    case ParameterKind::undecided: return "undecided";
  }
  return "?";
}

}  // namespace critorbit
