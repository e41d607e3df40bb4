#include "critorbit/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "critorbit/errors.hpp"
#include "critorbit/orbit.hpp"

namespace critorbit {
namespace {

double scale_of(Complex z) { return std::max(1.0, std::abs(z)); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <class F>
Complex iterate_n(const F& f, Complex z, int n) {
  for (int i = 0; i < n; ++i) z = f.eval(z).value;
  return z;
}

// Newton on f^n(z) - z; nullopt when it diverges, stalls or hits a pole.
template <class F>
std::optional<Complex> newton_periodic(const F& f, Complex z, int n, double tol, int max_iter) {
  try {
    for (int iter = 0; iter < max_iter; ++iter) {
      Complex w = z;
      Complex dw = 1.0;
      for (int i = 0; i < n; ++i) {
        const MapValue mv = f.eval(w);
        dw *= mv.derivative;
        w = mv.value;
      }
      const Complex g = w - z;
      if (g == Complex(0.0, 0.0)) return z;
      const Complex step = g / (dw - 1.0);
      if (!finite(step)) return std::nullopt;
      z -= step;
      if (!finite(z) || std::abs(z) > 1e12) return std::nullopt;
      if (std::abs(step) <= tol * scale_of(z)) {
        if (std::abs(iterate_n(f, z, n) - z) < kCycleTolerance * scale_of(z)) return z;
        return std::nullopt;
      }
    }
    if (std::abs(iterate_n(f, z, n) - z) < 1e-11 * scale_of(z)) return z;
  } catch (const PoleError&) {
  }
  return std::nullopt;
}

CycleKind kind_of(Complex multiplier) {
  const double m = std::abs(multiplier);
  if (m < 1.0 - 1e-9) return CycleKind::attracting;
  if (m > 1.0 + 1e-9) return CycleKind::repelling;
  return CycleKind::indifferent;
}

template <class F>
Cycle make_cycle_impl(const F& f, Complex p, int period) {
  if (period < 1) throw PreconditionError("cycle period must be >= 1");
  Cycle cycle;
  cycle.period = period;
  cycle.multiplier = 1.0;
  Complex z = p;
  for (int i = 0; i < period; ++i) {
    cycle.points.push_back(z);
    const MapValue mv = f.eval(z);
    cycle.multiplier *= mv.derivative;
    z = mv.value;
  }
  cycle.residual = std::abs(z - p);
  cycle.kind = kind_of(cycle.multiplier);
  return cycle;
}

template <class F>
CycleAlphaSolution solve_alpha_impl(const F& f, const Cycle& cycle, const VectorFieldSpec& v) {
  const std::size_t n = cycle.points.size();
  if (n == 0) throw PreconditionError("empty cycle");
  std::vector<Complex> dr(n);
  std::vector<Complex> vv(n);
  Complex rho = 1.0;
  Complex acc{};
  for (std::size_t k = 0; k < n; ++k) {
    dr[k] = f.eval(cycle.points[k]).derivative;
    vv[k] = v(cycle.points[k]);
    rho *= dr[k];
    acc = acc * dr[k] + vv[k];
  }
  if (std::abs(1.0 - rho) <= kParabolicTolerance) {
    throw ParabolicCycleError("cycle multiplier is within " + std::to_string(kParabolicTolerance) +
                              " of 1; the linearized equation is singular");
  }
  CycleAlphaSolution sol;
  sol.alpha.resize(n);
  sol.alpha[0] = acc / (1.0 - rho);
  for (std::size_t k = 0; k + 1 < n; ++k) sol.alpha[k + 1] = dr[k] * sol.alpha[k] + vv[k];
  sol.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex next = sol.alpha[(i + 1) % n];
    sol.residuals[i] = std::abs(vv[i] - (next - dr[i] * sol.alpha[i]));
  }
  return sol;
}

bool rounded_less(Complex a, Complex b) {
  const double ra = std::round(a.real() * 1e8), rb = std::round(b.real() * 1e8);
  if (ra != rb) return ra < rb;
  return std::round(a.imag() * 1e8) < std::round(b.imag() * 1e8);
}

}  // namespace

MapValue PerturbedMap::eval(Complex z) const {
  const MapValue r = map_.eval(z);
  if (lambda_ == Complex(0.0, 0.0)) return r;
  const MapValue f = field_.eval(z);
  return {r.value + lambda_ * f.value, r.derivative + lambda_ * f.derivative};
}

MapSpec perturbed_map_spec(const MapSpec& map, const VectorFieldSpec& v, Complex lambda) {
  const Polynomial num = map.numerator() * v.denominator() + lambda * (v.numerator() * map.denominator());
  return MapSpec::rational(num, map.denominator() * v.denominator());
}

Cycle make_cycle(const MapSpec& map, Complex p, int period) { return make_cycle_impl(map, p, period); }
Cycle make_cycle(const PerturbedMap& map, Complex p, int period) { return make_cycle_impl(map, p, period); }

std::vector<Cycle> find_cycles(const MapSpec& map, int period, const std::vector<Complex>& seeds, double tol) {
  if (period < 1) throw PreconditionError("find_cycles needs period >= 1");
  if (seeds.empty()) throw PreconditionError("find_cycles needs at least one seed");
  std::vector<Cycle> cycles;
  for (const Complex& seed : seeds) {
    const auto root = newton_periodic(map, seed, period, tol, 100);
    if (!root) continue;
    const Complex z = *root;
    bool lower = false;
    for (int q = 1; q < period && !lower; ++q) {
      if (period % q == 0) lower = std::abs(iterate_n(map, z, q) - z) < kCycleTolerance * scale_of(z);
    }
    if (lower) continue;

    bool seen = false;
    for (const Cycle& c : cycles) {
      for (const Complex& p : c.points) {
        if (std::abs(p - z) < 1e-7 * scale_of(z)) {
          seen = true;
          break;
        }
      }
      if (seen) break;
    }
    if (seen) continue;

    Cycle raw = make_cycle(map, z, period);
    const auto it = std::min_element(raw.points.begin(), raw.points.end(), rounded_less);
    if (it != raw.points.begin()) raw = make_cycle(map, *it, period);
    cycles.push_back(std::move(raw));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return rounded_less(a.base(), b.base()); });
  return cycles;
}

std::vector<Complex> default_cycle_seeds(const MapSpec& map, std::size_t count, std::uint64_t seed) {
  std::vector<Complex> seeds;
  const std::size_t n_julia = count / 2;
  try {
    seeds = julia_sample(map, n_julia, 64, seed);
  } catch (const RootFindingError&) {
    seeds.clear();
  }
  double radius = 1.0;
  for (const Complex& z : seeds) radius = std::max(radius, std::abs(z));
  radius *= 1.1;
  const std::size_t n_grid = count - seeds.size();
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_grid))));
  for (std::size_t i = 0; i < side && seeds.size() < count; ++i) {
    for (std::size_t j = 0; j < side && seeds.size() < count; ++j) {
      const double x = -radius + (static_cast<double>(i) + 0.5) * 2.0 * radius / static_cast<double>(side);
      const double y = -radius + (static_cast<double>(j) + 0.5) * 2.0 * radius / static_cast<double>(side);
      seeds.emplace_back(x, y);
    }
  }
  return seeds;
}

CycleAlphaSolution solve_alpha_on_cycle(const MapSpec& map, const Cycle& cycle, const VectorFieldSpec& v) {
  return solve_alpha_impl(map, cycle, v);
}

CycleAlphaSolution solve_alpha_on_cycle(const PerturbedMap& map, const Cycle& cycle,
                                        const VectorFieldSpec& v) {
  return solve_alpha_impl(map, cycle, v);
}

ContinuationResult continue_cycle(const MapSpec& map, const VectorFieldSpec& v, const Cycle& cycle,
                                  Complex lambda_target, int steps, const ContinuationOptions& options) {
  if (steps < 1) throw PreconditionError("continue_cycle needs steps >= 1");
  if (cycle.points.empty()) throw InvalidCycleError("empty cycle");
  if (std::abs(cycle.multiplier) <= 1.0) {
    throw PreconditionError("continue_cycle needs a repelling cycle");
  }
  const int n = cycle.period;
  const PerturbedMap base_map(map, v, 0.0);
  const auto refined = newton_periodic(base_map, cycle.base(), n, options.newton_tol, options.max_newton);
  if (!refined) throw InvalidCycleError("Newton failed on the input cycle at lambda = 0");

  ContinuationResult result;
  result.lambda_path.push_back(0.0);
  result.cycles.push_back(cycle);

  // Central difference of the continued base point, predictor alpha * h.
  {
    const double h = options.fd_step;
    const Complex alpha0 = solve_alpha_on_cycle(base_map, make_cycle(base_map, *refined, n), v).alpha[0];
    std::optional<Complex> plus, minus;
    const PerturbedMap fp(map, v, h);
    const PerturbedMap fm(map, v, -h);
    plus = newton_periodic(fp, *refined + h * alpha0, n, options.newton_tol, options.max_newton);
    minus = newton_periodic(fm, *refined - h * alpha0, n, options.newton_tol, options.max_newton);
    if (!plus || !minus) throw InvalidCycleError("Newton failed next to lambda = 0");
    result.velocity_at_zero = (*plus - *minus) / (2.0 * h);
  }

  if (lambda_target == Complex(0.0, 0.0)) return result;

  const double nominal = 1.0 / steps;
  double t = 0.0;
  double dt = nominal;
  Complex z = *refined;
  while (t < 1.0) {
    const double t_next = std::min(1.0, t + dt);
    const Complex lam = t * lambda_target;
    const Complex lam_next = t_next * lambda_target;
    const PerturbedMap here(map, v, lam);
    const PerturbedMap there(map, v, lam_next);

    Complex alpha;
    try {
      alpha = solve_alpha_on_cycle(here, make_cycle(here, z, n), v).alpha[0];
    } catch (const ParabolicCycleError&) {
      result.stopped_reason = StopReason::multiplier_degenerate;
      return result;
    }
    const Complex predicted = z + (lam_next - lam) * alpha;
    const auto corrected = newton_periodic(there, predicted, n, options.newton_tol, options.max_newton);
    const bool ok = corrected && std::abs(*corrected - z) <= options.max_point_jump * scale_of(z);
    if (!ok) {
      dt *= 0.5;
      if (dt < options.min_step) {
        result.stopped_reason = StopReason::newton_failure;
        return result;
      }
      continue;
    }
    Cycle next = make_cycle(there, *corrected, n);
    if (std::abs(next.multiplier) <= 1.0 + options.degeneracy_margin) {
      result.stopped_reason = StopReason::multiplier_degenerate;
      return result;
    }
    z = *corrected;
    t = t_next;
    result.lambda_path.push_back(t_next == 1.0 ? lambda_target : lam_next);
    result.cycles.push_back(std::move(next));
    dt = std::min(nominal, 2.0 * dt);
  }
  result.stopped_reason = StopReason::reached_target;
  return result;
}

MotionCheck motion_velocity_check(const MapSpec& map, const VectorFieldSpec& v, const Cycle& cycle, double h) {
  if (!(h > 0.0)) throw PreconditionError("motion_velocity_check needs h > 0");
  MotionCheck check;
  check.alpha = solve_alpha_on_cycle(map, cycle, v).alpha[0];
  const ContinuationResult up = continue_cycle(map, v, cycle, h, 1);
  const ContinuationResult down = continue_cycle(map, v, cycle, -h, 1);
  if (up.stopped_reason != StopReason::reached_target || down.stopped_reason != StopReason::reached_target) {
    throw InvalidCycleError(std::string("continuation stopped: ") +
                            to_string(up.stopped_reason != StopReason::reached_target ? up.stopped_reason
                                                                                      : down.stopped_reason));
  }
  check.fd_velocity = (up.cycles.back().base() - down.cycles.back().base()) / (2.0 * h);
  check.discrepancy = std::abs(check.alpha - check.fd_velocity);
  return check;
}

const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::attracting: return "attracting";
    case CycleKind::indifferent: return "indifferent";
    case CycleKind::repelling: return "repelling";
  }
  return "?";
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::reached_target: return "reached_target";
    case StopReason::multiplier_degenerate: return "multiplier_degenerate";
    case StopReason::newton_failure: return "newton_failure";
  }
  return "?";
}

}  // namespace critorbit
