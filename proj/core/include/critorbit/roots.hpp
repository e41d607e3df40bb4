#pragma once

#include <vector>

#include "critorbit/polynomial.hpp"

namespace critorbit {

struct RootOptions {
  int max_iterations = 1000;
};

// All complex roots of p, repeated according to multiplicity, found
// simultaneously with the Aberth-Ehrlich iteration. Seeds are rotated roots
// of unity on the Cauchy bound circle. Every returned root r satisfies
// |p(r)| / sum|a_i||r|^i < tol, otherwise RootFindingError is thrown.
// Roots at the origin that are exact (vanishing low coefficients) are peeled
// off before iterating.
std::vector<Complex> poly_roots(const Polynomial& p, double tol = 1e-10,
                                const RootOptions& options = {});

struct RootCluster {
  Complex location;
  int multiplicity = 1;
};

// Merges roots closer than cluster_tol * max(1, |z|) and reports multiplicity.
// Loosely clustered roots (the usual Aberth output for a multiple root) are
// also merged when p and its first m-1 derivatives vanish at the centroid.
std::vector<RootCluster> cluster_roots(const Polynomial& p, const std::vector<Complex>& roots,
                                       double cluster_tol = 1e-7);

}  // namespace critorbit
