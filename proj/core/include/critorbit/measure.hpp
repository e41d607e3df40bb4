#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "critorbit/field.hpp"
#include "critorbit/orbit.hpp"

namespace critorbit {

// mu_{R,c}(v) = sum_k v(R^k(c)) / DR^k(R(c)), truncated.
struct MuResult {
  Complex value;
  std::vector<Complex> partial;  // partial[N] = sum_{k<=N}
  double tail_bound = 0.0;
  bool converged = false;
  std::size_t terms_used = 0;

  friend bool operator==(const MuResult&, const MuResult&) = default;
};

inline constexpr std::size_t kAllTerms = std::numeric_limits<std::size_t>::max();

// Sums until the geometric tail estimate
//   max_k |v(R^k(c))| * (1/|DR^N(R(c))|) / (1 - r)
// drops below tol, or until n_max terms / the end of the orbit. The ratio r
// comes from summability_report over the trailing window of the orbit.
// Throws InvalidOrbitError (critical relation, escaped orbit),
// NotSummableError (divergent evidence), PoleProximityError.
MuResult mu_functional(const OrbitRecord& orbit, const VectorFieldSpec& v, double tol,
                       std::size_t n_max = kAllTerms);

struct MuConstantResult {
  MuResult mu;
  double threshold = 0.0;
  // |mu| exceeds threshold: the sum is certified away from zero.
  bool nonvanishing = false;
  friend bool operator==(const MuConstantResult&, const MuConstantResult&) = default;
};

// mu_{p_c, c}(1) for p_c = z^d + c, critical orbit of length n_max.
MuConstantResult mu_constant_unicritical(Complex c, int d, double tol, std::size_t n_max);

// m_j = mu(z^j), j = 0..max_degree.
std::vector<Complex> moment_vector(const OrbitRecord& orbit, int max_degree, double tol,
                                   std::size_t n_max = kAllTerms);

struct WitnessResult {
  VectorFieldSpec field;
  Complex mu_value;
  friend bool operator==(const WitnessResult&, const WitnessResult&) = default;
};

// The polynomial field maximizing |mu(v)| over unit-norm coefficient vectors:
// a_j = conj(m_j) / |m|, giving mu(v) = |m|. Throws NoWitnessError when
// |m| <= threshold.
WitnessResult find_witness_field(std::span<const Complex> moments, double threshold = 0.0);

}  // namespace critorbit
