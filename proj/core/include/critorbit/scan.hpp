#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critorbit/field.hpp"
#include "critorbit/orbit.hpp"

namespace critorbit {

struct Region {
  double re_min = -2.0;
  double re_max = 0.5;
  double im_min = -1.25;
  double im_max = 1.25;
  friend bool operator==(const Region&, const Region&) = default;
};

enum class RenderPlane { parameter, dynamical };

// Sweep over the unicritical family z^d + c. Exactly one of region / path
// is used: a non-empty path takes precedence.
//
// Grid points include the region edges: c = re_min + i (re_max - re_min)/(nx - 1)
// (the midpoint when nx = 1). Rows are emitted in row-major order starting at
// the top row (im_max), matching image layout.
struct ScanConfig {
  Region region;
  std::vector<Complex> path;
  int d = 2;
  int nx = 64;
  int ny = 64;
  std::size_t orbit_length = 1000;
  VectorFieldSpec field = VectorFieldSpec::constant(1.0);
  double escape_radius = 0.0;  // <= 0: default_escape_radius(d, c) per point
  unsigned worker_count = 1;   // 0: hardware concurrency
  // render_escape only.
  RenderPlane plane = RenderPlane::parameter;
  Complex julia_c{};

  bool is_path() const { return !path.empty(); }
  std::size_t point_count() const;
  // Throws PreconditionError.
  void validate() const;
  Complex point(std::size_t index) const;
};

struct ScanRow {
  Complex c;
  ParameterKind kind = ParameterKind::undecided;  // undecided = candidate non-hyperbolic
  std::optional<int> period;
  std::optional<SummabilityClass> summability;
  std::optional<double> growth_exponent;
  std::optional<Complex> mu_constant;
  std::vector<std::string> flags;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

// One row; never throws on domain errors (they become flags).
ScanRow scan_point(Complex c, const ScanConfig& config);

// All rows in grid (or path) order; identical output for any worker_count.
std::vector<ScanRow> scan_parameters(const ScanConfig& config);

enum class CellChannel : std::uint8_t { candidate = 0, attracting = 1, escaping = 2, missing = 3 };

inline constexpr double kAttractingSentinel = 0.0;
inline constexpr double kEscapingSentinel = -1.0;

struct HeatmapGrid {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;  // row-major, NaN for missing cells
  std::vector<CellChannel> channel;
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

// Throws ShapeError for path configs or a row count different from nx * ny.
HeatmapGrid growth_heatmap(const std::vector<ScanRow>& rows, const ScanConfig& config);

struct EscapeGrid {
  int nx = 0;
  int ny = 0;
  std::vector<int> counts;  // row-major; max_iter for points that never escape
  int max_iter = 0;
  int at(int i, int j) const { return counts[static_cast<std::size_t>(j) * nx + i]; }
};

// Escape-time counts: parameter plane (critical orbit of z^d + c) or the
// dynamical plane of z^d + julia_c. A path config renders as an N x 1 strip.
EscapeGrid render_escape(const ScanConfig& config, int max_iter);

}  // namespace critorbit
