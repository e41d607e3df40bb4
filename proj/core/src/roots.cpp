#include "critorbit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critorbit/errors.hpp"

namespace critorbit {
namespace {

constexpr double kEps = 2.220446049250313e-16;

double relative_residual(const Polynomial& p, Complex z) {
  const double scale = p.magnitude_at(z);
  if (scale == 0.0) return 0.0;
  return std::abs(p(z)) / scale;
}

std::vector<Complex> aberth(const Polynomial& p, double tol, const RootOptions& options) {
  const int n = p.degree();
  const Complex lead = p.leading();
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(p.coefficient(i) / lead));
  bound += 1.0;

  // A fraction of the Cauchy radius keeps seeds inside the root annulus on
  // typical inputs; the 0.4 rad offset breaks conjugate symmetry.
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, theta);
  }

  std::vector<bool> done(z.size(), false);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const auto [value, deriv] = p.eval_with_derivative(z[i]);
      if (std::abs(value) <= kEps * p.magnitude_at(z[i])) {
        done[i] = true;
        continue;
      }
      const Complex ratio = value / deriv;
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        // Derivative vanished or two iterates collided: nudge and retry.
        step = Complex(1e-3, 1e-3) * std::max(1.0, std::abs(z[i]));
      }
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  for (const Complex& r : z) {
    if (!(relative_residual(p, r) < tol)) {
      throw RootFindingError("Aberth iteration did not converge for degree " +
                             std::to_string(n) + " polynomial");
    }
  }
  return z;
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p, double tol, const RootOptions& options) {
  if (p.degree() < 1) throw PreconditionError("poly_roots needs degree >= 1");

  auto coeffs = p.coefficients();
  std::size_t zeros = 0;
  while (coeffs[zeros] == Complex(0.0, 0.0)) ++zeros;
  std::vector<Complex> roots(zeros, Complex{});
  const Polynomial reduced(std::vector<Complex>(coeffs.begin() + static_cast<long>(zeros), coeffs.end()));

  if (reduced.degree() == 1) {
    roots.push_back(-reduced.coefficient(0) / reduced.coefficient(1));
  } else if (reduced.degree() > 1) {
    auto found = aberth(reduced, tol, options);
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

std::vector<RootCluster> cluster_roots(const Polynomial& p, const std::vector<Complex>& roots,
                                       double cluster_tol) {
  std::vector<Complex> sorted = roots;
  std::sort(sorted.begin(), sorted.end(), lex_less);

  // Single linkage at the tight tolerance.
  std::vector<std::vector<Complex>> groups;
  for (const Complex& r : sorted) {
    bool placed = false;
    for (auto& g : groups) {
      for (const Complex& m : g) {
        if (std::abs(r - m) < cluster_tol * std::max(1.0, std::abs(m))) {
          g.push_back(r);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) groups.push_back({r});
  }

  auto centroid = [](const std::vector<Complex>& g) {
    Complex s{};
    for (const Complex& z : g) s += z;
    return s / static_cast<double>(g.size());
  };

  // Loose pass: a multiple root comes back from the iteration spread over a
  // small circle. Merge groups if the merged centroid annihilates enough
  // derivatives of p.
  constexpr double kLoose = 1e-3;
  constexpr double kDerivativeTol = 1e-8;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < groups.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < groups.size() && !merged; ++b) {
        const Complex ca = centroid(groups[a]);
        const Complex cb = centroid(groups[b]);
        if (std::abs(ca - cb) >= kLoose * std::max(1.0, std::abs(ca))) continue;
        std::vector<Complex> joint = groups[a];
        joint.insert(joint.end(), groups[b].begin(), groups[b].end());
        const Complex c = centroid(joint);
        Polynomial q = p;
        bool ok = true;
        for (std::size_t k = 0; k < joint.size() && ok; ++k) {
          ok = relative_residual(q, c) < kDerivativeTol;
          q = q.derivative();
        }
        if (ok) {
          groups[a] = std::move(joint);
          groups.erase(groups.begin() + static_cast<long>(b));
          merged = true;
        }
      }
    }
  }

  std::vector<RootCluster> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back({centroid(g), static_cast<int>(g.size())});
  std::sort(out.begin(), out.end(),
            [](const RootCluster& x, const RootCluster& y) { return lex_less(x.location, y.location); });
  return out;
}

}  // namespace critorbit
