#pragma once

#include <cstdint>
#include <vector>

#include "critorbit/field.hpp"
#include "critorbit/map.hpp"

namespace critorbit {

inline constexpr double kCycleTolerance = 1e-8;
inline constexpr double kParabolicTolerance = 1e-6;

enum class CycleKind { attracting, indifferent, repelling };

struct Cycle {
  std::vector<Complex> points;  // p, R(p), ..., R^{n-1}(p)
  int period = 0;
  Complex multiplier;  // product of DR over the points
  double residual = 0.0;  // |R^n(p) - p|
  CycleKind kind = CycleKind::repelling;

  Complex base() const { return points.front(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// R_lambda = R + lambda v with its derivative.
class PerturbedMap {
 public:
  PerturbedMap(const MapSpec& map, const VectorFieldSpec& v, Complex lambda)
      : map_(map), field_(v), lambda_(lambda) {}

  MapValue eval(Complex z) const;
  Complex lambda() const { return lambda_; }

 private:
  const MapSpec& map_;
  const VectorFieldSpec& field_;
  Complex lambda_;
};

// R + lambda v as a standalone map, (N vd + lambda vn D) / (D vd).
MapSpec perturbed_map_spec(const MapSpec& map, const VectorFieldSpec& v, Complex lambda);

// Builds the cycle through p without reordering its points.
Cycle make_cycle(const MapSpec& map, Complex p, int period);
Cycle make_cycle(const PerturbedMap& map, Complex p, int period);

// Newton on R^period(z) - z from every seed. Converged points are grouped into
// cycles (each cycle listed once, rotated so its first point is the smallest
// in (re, im) order), cycles of a smaller exact period are dropped, and the
// result is sorted by first point.
std::vector<Cycle> find_cycles(const MapSpec& map, int period, const std::vector<Complex>& seeds,
                               double tol = 1e-13);

// Julia-set samples plus a square grid covering them; count seeds in total.
std::vector<Complex> default_cycle_seeds(const MapSpec& map, std::size_t count, std::uint64_t seed = 1);

struct CycleAlphaSolution {
  std::vector<Complex> alpha;
  std::vector<double> residuals;

  friend bool operator==(const CycleAlphaSolution&, const CycleAlphaSolution&) = default;
};

// Solves v = alpha o R - DR alpha on the cycle:
//   alpha(p_0) = [sum_k v(p_k) DR^{n-1-k}(p_{k+1})] / (1 - rho),
//   alpha(p_{k+1}) = DR(p_k) alpha(p_k) + v(p_k).
// Throws ParabolicCycleError when |1 - rho| <= kParabolicTolerance.
CycleAlphaSolution solve_alpha_on_cycle(const MapSpec& map, const Cycle& cycle, const VectorFieldSpec& v);
CycleAlphaSolution solve_alpha_on_cycle(const PerturbedMap& map, const Cycle& cycle,
                                        const VectorFieldSpec& v);

enum class StopReason { reached_target, multiplier_degenerate, newton_failure };

struct ContinuationOptions {
  double degeneracy_margin = 1e-3;  // stop once |rho| <= 1 + margin
  double max_point_jump = 0.1;      // relative to max(1, |p|)
  double min_step = 1e-12;          // fraction of the full path
  double newton_tol = 1e-14;
  int max_newton = 60;
  double fd_step = 1e-5;            // for velocity_at_zero
};

struct ContinuationResult {
  std::vector<Complex> lambda_path;
  std::vector<Cycle> cycles;
  Complex velocity_at_zero;
  StopReason stopped_reason = StopReason::reached_target;

  friend bool operator==(const ContinuationResult&, const ContinuationResult&) = default;
};

// Predictor-corrector continuation of a repelling cycle along
// lambda = t * lambda_target, t in [0, 1]. The predictor follows the exact
// alpha velocity, the corrector is Newton on (R + lambda v)^n(z) - z, and the
// step halves on failure.
ContinuationResult continue_cycle(const MapSpec& map, const VectorFieldSpec& v, const Cycle& cycle,
                                  Complex lambda_target, int steps, const ContinuationOptions& options = {});

struct MotionCheck {
  Complex alpha;
  Complex fd_velocity;
  double discrepancy = 0.0;
  friend bool operator==(const MotionCheck&, const MotionCheck&) = default;
};

// Compares alpha at the cycle's base point with the central difference
// (p(h) - p(-h)) / 2h of the continued base point.
MotionCheck motion_velocity_check(const MapSpec& map, const VectorFieldSpec& v, const Cycle& cycle, double h);

const char* to_string(CycleKind k);
const char* to_string(StopReason r);

}  // namespace critorbit
