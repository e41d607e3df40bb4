#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critorbit/map.hpp"
#include "critorbit/xcomplex.hpp"

namespace critorbit {

inline constexpr double kCriticalRelationTolerance = 1e-12;
inline constexpr double kNearRelationTolerance = 1e-6;

// Critical orbit c, R(c), R^2(c), ... together with the derivative cocycle
// along the orbit of the critical value:
//   cocycle[k] = DR^k(R(c)) = prod_{j=1..k} DR(points[j]),  cocycle[0] = 1.
// points[0] is the critical point itself, so points[k] = R^k(c) lines up with
// cocycle[k] in the sums v(R^k(c)) / DR^k(R(c)).
struct OrbitRecord {
  MapSpec map;
  Complex critical_point;
  Complex start;  // R(c), the critical value
  std::vector<Complex> points;
  std::vector<XComplex> cocycle;
  // sum_{j<=k} 1/|cocycle[j]|; saturates at +inf when the cocycle collapses.
  std::vector<double> partial_sums_abs;
  std::optional<std::size_t> escaped_at;
  std::optional<std::size_t> critical_relation_at;
  std::size_t truncated_at = 0;  // index of the last stored point
  std::vector<std::string> warnings;

  std::size_t size() const { return points.size(); }
  bool has_relation() const { return critical_relation_at.has_value(); }
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct OrbitOptions {
  // When false a critical relation is recorded in the result and iteration
  // stops; when true CriticalRelationError is thrown.
  bool throw_on_relation = true;
};

// Iterates the critical orbit of c for n_max steps or until |z| exceeds
// escape_radius (escape checking is off for escape_radius <= 0). The escaping
// point is kept as the last entry.
OrbitRecord iterate_orbit(const MapSpec& map, Complex c, std::size_t n_max, double escape_radius,
                          const OrbitOptions& options = {});

// max(2, |c|^(1/(d-1))) + 1, escape radius for z^d + c.
double default_escape_radius(int d, Complex c);

enum class SummabilityClass { summable_evidence, divergent_evidence, inconclusive };

struct SummabilityOptions {
  double margin = 0.05;
  double tol = 1e-10;
};

struct SummabilityReport {
  double partial_sum = 0.0;  // S_N
  // Geometric mean of |cocycle[k]| / |cocycle[k+1]| over the trailing window.
  double tail_ratio = 0.0;
  // Geometric estimate of sum_{k>N} 1/|cocycle[k]|; +inf when tail_ratio >= 1.
  double tail_bound = 0.0;
  std::size_t window = 0;
  std::size_t terms = 0;
  SummabilityClass classification = SummabilityClass::inconclusive;
  friend bool operator==(const SummabilityReport&, const SummabilityReport&) = default;
};

// Evidence (never proof) about sum 1/|DR^k(R(c))|. Throws InvalidOrbitError
// on orbits with a recorded critical relation.
SummabilityReport summability_report(const OrbitRecord& orbit, std::size_t window,
                                     const SummabilityOptions& options = {});

enum class ParameterKind { escaping, attracting, undecided };

struct ParameterClass {
  ParameterKind kind = ParameterKind::undecided;
  std::optional<int> period;
  std::optional<Complex> multiplier;
  std::size_t iterations_used = 0;
  friend bool operator==(const ParameterClass&, const ParameterClass&) = default;
};

inline constexpr double kCycleDetectTolerance = 1e-9;

// Classifies z^d + c by its critical orbit: escape, an attracting cycle found
// with Brent's cycle detection plus Newton refinement, or undecided. A
// non-positive escape_radius selects default_escape_radius.
ParameterClass classify_parameter(Complex c, int d, std::size_t n_max, double escape_radius = 0.0);

// Inverse-iteration sample of J(R) starting from the most repelling fixed
// point; the preimage branch is drawn from a seeded generator.
std::vector<Complex> julia_sample(const MapSpec& map, std::size_t n_points, std::size_t transient,
                                  std::uint64_t seed);

const char* to_string(SummabilityClass c);
const char* to_string(ParameterKind k);

}  // namespace critorbit
