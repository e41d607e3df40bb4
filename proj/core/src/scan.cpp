#include "critorbit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "critorbit/errors.hpp"
#include "critorbit/measure.hpp"
#include "critorbit/obstruction.hpp"

namespace critorbit {
namespace {

double axis(double lo, double hi, int n, int i) {
  if (n == 1) return 0.5 * (lo + hi);
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

unsigned resolve_workers(unsigned requested, std::size_t items) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(items, 1)));
}

// Runs fn(i) for i in [0, n) on a pool of workers pulling indices from a
// shared counter. fn writes to slot i only.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
}

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

}  // namespace

std::size_t ScanConfig::point_count() const {
  if (is_path()) return path.size();
  return static_cast<std::size_t>(std::max(nx, 0)) * static_cast<std::size_t>(std::max(ny, 0));
}

void ScanConfig::validate() const {
  if (d < 2) throw PreconditionError("scan needs d >= 2");
  if (!is_path() && (nx < 1 || ny < 1)) throw PreconditionError("scan resolution must be >= 1 on each axis");
  if (orbit_length < 16) throw PreconditionError("scan orbit_length must be >= 16");
}

Complex ScanConfig::point(std::size_t index) const {
  if (is_path()) return path.at(index);
  const auto i = static_cast<int>(index % static_cast<std::size_t>(nx));
  const auto j = static_cast<int>(index / static_cast<std::size_t>(nx));
  return {axis(region.re_min, region.re_max, nx, i), axis(region.im_max, region.im_min, ny, j)};
}

ScanRow scan_point(Complex c, const ScanConfig& config) {
  ScanRow row;
  row.c = c;
  try {
    const ParameterClass cls = classify_parameter(c, config.d, config.orbit_length, config.escape_radius);
    row.kind = cls.kind;
    row.period = cls.period;
    if (cls.kind != ParameterKind::undecided) return row;

    const MapSpec map = MapSpec::unicritical(config.d, c);
    const double radius = config.escape_radius > 0.0 ? config.escape_radius : default_escape_radius(config.d, c);
    const OrbitRecord orbit = iterate_orbit(map, 0.0, config.orbit_length, radius, {.throw_on_relation = false});
    row.flags.insert(row.flags.end(), orbit.warnings.begin(), orbit.warnings.end());
    if (orbit.critical_relation_at) {
      row.flags.push_back("critical_relation@" + std::to_string(*orbit.critical_relation_at));
      return row;
    }
    if (orbit.escaped_at) {
      row.flags.push_back("escaped@" + std::to_string(*orbit.escaped_at));
      return row;
    }
    const std::size_t window = std::min<std::size_t>(32, orbit.size() / 2);
    const SummabilityReport report = summability_report(orbit, window);
    row.summability = report.classification;
    row.growth_exponent = obstruction_sequence(orbit, config.field, config.orbit_length).growth_exponent;
    if (report.classification == SummabilityClass::summable_evidence) {
      try {
        row.mu_constant = mu_functional(orbit, VectorFieldSpec::constant(1.0), 1e-12).value;
      } catch (const Error& e) {
        row.flags.push_back(std::string("mu:") + e.what());
      }
    }
  } catch (const Error& e) {
    row.flags.push_back(std::string("error:") + e.what());
  }
  return row;
}

std::vector<ScanRow> scan_parameters(const ScanConfig& config) {
  config.validate();
  const std::size_t n = config.point_count();
  std::vector<ScanRow> rows(n);
  parallel_for(n, resolve_workers(config.worker_count, n),
               [&](std::size_t i) { rows[i] = scan_point(config.point(i), config); });
  return rows;
}

HeatmapGrid growth_heatmap(const std::vector<ScanRow>& rows, const ScanConfig& config) {
  if (config.is_path()) throw ShapeError("growth_heatmap needs a rectangular scan");
  if (rows.size() != config.point_count()) {
    throw ShapeError("row count " + std::to_string(rows.size()) + " does not match resolution " +
                     std::to_string(config.nx) + "x" + std::to_string(config.ny));
  }
  HeatmapGrid grid;
  grid.nx = config.nx;
  grid.ny = config.ny;
  grid.values.resize(rows.size());
  grid.channel.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& r = rows[i];
    switch (r.kind) {
      case ParameterKind::attracting:
        grid.values[i] = kAttractingSentinel;
        grid.channel[i] = CellChannel::attracting;
        break;
      case ParameterKind::escaping:
        grid.values[i] = kEscapingSentinel;
        grid.channel[i] = CellChannel::escaping;
        break;
      case ParameterKind::undecided:
        if (r.growth_exponent) {
          grid.values[i] = *r.growth_exponent;
          grid.channel[i] = CellChannel::candidate;
        } else {
          grid.values[i] = std::numeric_limits<double>::quiet_NaN();
          grid.channel[i] = CellChannel::missing;
        }
        break;
    }
  }
  return grid;
}

EscapeGrid render_escape(const ScanConfig& config, int max_iter) {
  if (config.d < 2) throw PreconditionError("render needs d >= 2");
  if (!config.is_path() && (config.nx < 1 || config.ny < 1)) {
    throw PreconditionError("render resolution must be >= 1 on each axis");
  }
  EscapeGrid grid;
  grid.nx = config.is_path() ? static_cast<int>(config.path.size()) : config.nx;
  grid.ny = config.is_path() ? 1 : config.ny;
  grid.max_iter = max_iter;
  const std::size_t n = config.point_count();
  grid.counts.assign(n, max_iter);
  const int d = config.d;

  parallel_for(n, resolve_workers(config.worker_count, n), [&](std::size_t idx) {
    const Complex p = config.point(idx);
    const bool param = config.plane == RenderPlane::parameter;
    const Complex c = param ? p : config.julia_c;
    Complex z = param ? Complex(0.0, 0.0) : p;
    const double radius = config.escape_radius > 0.0 ? config.escape_radius : default_escape_radius(d, c);
    int k = 0;
    while (k < max_iter && std::abs(z) <= radius) {
      z = ipow(z, d) + c;
      ++k;
    }
    grid.counts[idx] = std::abs(z) > radius ? k : max_iter;
  });
  return grid;
}

}  // namespace critorbit
