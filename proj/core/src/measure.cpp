#include "critorbit/measure.hpp"

#include <algorithm>
#include <cmath>

#include "critorbit/errors.hpp"

namespace critorbit {

MuResult mu_functional(const OrbitRecord& orbit, const VectorFieldSpec& v, double tol,
                       std::size_t n_max) {
  if (orbit.has_relation()) throw InvalidOrbitError("orbit has a critical relation");
  if (orbit.escaped_at) throw InvalidOrbitError("critical orbit escaped; c is not in the Julia set");
  if (n_max < 1) throw PreconditionError("mu_functional needs n_max >= 1");
  check_pole_distance(v, orbit.points);

  double ratio = 1.0;
  if (orbit.size() >= 2) {
    const std::size_t window = std::clamp<std::size_t>(orbit.size() / 2, 1, 32);
    const SummabilityReport report = summability_report(orbit, window);
    if (report.classification == SummabilityClass::divergent_evidence) {
      throw NotSummableError("critical orbit shows divergent evidence (tail ratio " +
                             std::to_string(report.tail_ratio) + ")");
    }
    ratio = report.tail_ratio;
  }

  std::vector<Complex> values(orbit.size());
  double vmax = 0.0;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    values[k] = v(orbit.points[k]);
    vmax = std::max(vmax, std::abs(values[k]));
  }

  MuResult result;
  const std::size_t limit = std::min(n_max, orbit.size());
  result.partial.reserve(limit);
  Complex sum{};
  result.tail_bound = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < limit; ++k) {
    sum += (XComplex(values[k]) / orbit.cocycle[k]).to_complex();
    result.partial.push_back(sum);
    result.terms_used = k + 1;
    if (ratio < 1.0) {
      const double inv = std::exp(-orbit.cocycle[k].log_abs());
      result.tail_bound = vmax * inv * ratio / (1.0 - ratio);
      if (result.tail_bound < tol) {
        result.converged = true;
        break;
      }
    }
  }
  result.value = sum;
  return result;
}

MuConstantResult mu_constant_unicritical(Complex c, int d, double tol, std::size_t n_max) {
  const MapSpec map = MapSpec::unicritical(d, c);
  const OrbitRecord orbit = iterate_orbit(map, 0.0, n_max, default_escape_radius(d, c));
  MuConstantResult out;
  out.mu = mu_functional(orbit, VectorFieldSpec::constant(1.0), tol);
  out.threshold = std::max(10.0 * out.mu.tail_bound, 10.0 * tol);
  out.nonvanishing = out.mu.converged && std::abs(out.mu.value) > out.threshold;
  return out;
}

std::vector<Complex> moment_vector(const OrbitRecord& orbit, int max_degree, double tol,
                                   std::size_t n_max) {
  if (max_degree < 0) throw PreconditionError("moment_vector needs max_degree >= 0");
  std::vector<Complex> moments;
  moments.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int j = 0; j <= max_degree; ++j) {
    moments.push_back(mu_functional(orbit, VectorFieldSpec::monomial(j), tol, n_max).value);
  }
  return moments;
}

WitnessResult find_witness_field(std::span<const Complex> moments, double threshold) {
  if (moments.empty()) throw PreconditionError("find_witness_field needs at least one moment");
  double norm2 = 0.0;
  for (const Complex& m : moments) norm2 += std::norm(m);
  const double norm = std::sqrt(norm2);
  if (norm == 0.0 || norm <= threshold) {
    throw NoWitnessError("moments vanish: mu is zero on polynomials up to degree " +
                         std::to_string(moments.size() - 1));
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(moments.size());
  Complex mu{};
  for (const Complex& m : moments) {
    coeffs.push_back(std::conj(m) / norm);
    mu += coeffs.back() * m;
  }
  return {VectorFieldSpec(Polynomial(std::move(coeffs))), mu};
}

}  // namespace critorbit
