#include <gtest/gtest.h>

#include <cmath>

#include "critorbit/errors.hpp"
#include "critorbit/scan.hpp"

namespace critorbit {
namespace {

ScanConfig path_config() {
  ScanConfig cfg;
  cfg.path = {-2.0, -1.0, 0.0, 1.0};
  cfg.orbit_length = 400;
  return cfg;
}

TEST(ScanParameters, PathExamples) {
  const auto rows = scan_parameters(path_config());
  ASSERT_EQ(rows.size(), 4u);

  EXPECT_EQ(rows[0].kind, ParameterKind::undecided);
  ASSERT_TRUE(rows[0].growth_exponent);
  EXPECT_NEAR(*rows[0].growth_exponent, std::log(4.0), 1e-6);
  EXPECT_EQ(rows[0].summability, SummabilityClass::summable_evidence);
  ASSERT_TRUE(rows[0].mu_constant);
  EXPECT_NEAR(std::abs(*rows[0].mu_constant - Complex(2.0 / 3.0)), 0.0, 1e-10);

  EXPECT_EQ(rows[1].kind, ParameterKind::attracting);
  EXPECT_EQ(rows[1].period, 2);
  EXPECT_EQ(rows[2].kind, ParameterKind::attracting);
  EXPECT_EQ(rows[2].period, 1);
  EXPECT_EQ(rows[3].kind, ParameterKind::escaping);
  EXPECT_FALSE(rows[3].growth_exponent);
}

TEST(ScanParameters, WorkerCountDoesNotChangeOutput) {
  ScanConfig cfg;
  cfg.nx = 12;
  cfg.ny = 9;
  cfg.orbit_length = 300;
  cfg.worker_count = 1;
  const auto serial = scan_parameters(cfg);
  cfg.worker_count = 8;
  EXPECT_EQ(scan_parameters(cfg), serial);
}

TEST(ScanParameters, GridOrderAndEdges) {
  ScanConfig cfg;
  cfg.region = {-1.0, 1.0, -0.5, 0.5};
  cfg.nx = 3;
  cfg.ny = 2;
  EXPECT_EQ(cfg.point(0), Complex(-1.0, 0.5));
  EXPECT_EQ(cfg.point(2), Complex(1.0, 0.5));
  EXPECT_EQ(cfg.point(3), Complex(-1.0, -0.5));
  EXPECT_EQ(cfg.point(5), Complex(1.0, -0.5));
  cfg.nx = 1;
  EXPECT_EQ(cfg.point(0).real(), 0.0);
}

TEST(ScanParameters, RejectsBadResolution) {
  ScanConfig cfg;
  cfg.nx = 0;
  EXPECT_THROW(scan_parameters(cfg), PreconditionError);
  cfg.nx = 4;
  cfg.d = 1;
  EXPECT_THROW(scan_parameters(cfg), PreconditionError);
}

TEST(ScanPoint, CriticalRelationIsFlagged) {
  // c = i is Misiurewicz, no relation; c = 0 is attracting. A relation at an
  // undecided parameter needs the critical point to be periodic with a
  // non-attracting cycle, which cannot happen, so only check flags stay empty.
  ScanConfig cfg;
  cfg.orbit_length = 300;
  const ScanRow row = scan_point(Complex(0.0, 1.0), cfg);
  EXPECT_EQ(row.kind, ParameterKind::undecided);
  EXPECT_TRUE(row.flags.empty());
  ASSERT_TRUE(row.growth_exponent);
  EXPECT_GT(*row.growth_exponent, 0.5);
}

TEST(GrowthHeatmap, AllEscapingRegion) {
  ScanConfig cfg;
  cfg.region = {3.0, 4.0, -0.5, 0.5};
  cfg.nx = 5;
  cfg.ny = 4;
  cfg.orbit_length = 100;
  const HeatmapGrid g = growth_heatmap(scan_parameters(cfg), cfg);
  ASSERT_EQ(g.values.size(), 20u);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    EXPECT_EQ(g.values[i], kEscapingSentinel);
    EXPECT_EQ(g.channel[i], CellChannel::escaping);
  }
}

TEST(GrowthHeatmap, ChebyshevCell) {
  ScanConfig cfg;
  cfg.region = {-2.0, -1.0, -0.25, 0.25};
  cfg.nx = 3;
  cfg.ny = 3;
  cfg.orbit_length = 400;
  const HeatmapGrid g = growth_heatmap(scan_parameters(cfg), cfg);
  // Middle row is the real axis; first column is c = -2.
  EXPECT_EQ(g.channel[3], CellChannel::candidate);
  EXPECT_NEAR(g.at(0, 1), std::log(4.0), 0.05);
  // c = -1.5 + 0i sits in the period-doubling cascade region but the
  // classifier may or may not decide it; c = -1 is the basilica.
  EXPECT_EQ(g.at(2, 1), kAttractingSentinel);
}

TEST(GrowthHeatmap, ShapeErrors) {
  const ScanConfig path = path_config();
  EXPECT_THROW(growth_heatmap(scan_parameters(path), path), ShapeError);
  ScanConfig cfg;
  cfg.nx = 2;
  cfg.ny = 2;
  EXPECT_THROW(growth_heatmap(std::vector<ScanRow>(3), cfg), ShapeError);
}

TEST(RenderEscape, KnownCounts) {
  ScanConfig cfg;
  cfg.path = {0.0, 1.0};
  cfg.escape_radius = 10.0;
  const EscapeGrid g = render_escape(cfg, 50);
  ASSERT_EQ(g.nx, 2);
  ASSERT_EQ(g.ny, 1);
  EXPECT_EQ(g.at(0, 0), 50);
  EXPECT_EQ(g.at(1, 0), 4);

  cfg.d = 3;
  cfg.path = {0.0};
  EXPECT_EQ(render_escape(cfg, 50).at(0, 0), 50);
}

TEST(RenderEscapeProperty, ConjugateSymmetry) {
  ScanConfig cfg;
  cfg.region = {-2.0, 0.5, -1.0, 1.0};
  cfg.nx = 41;
  cfg.ny = 21;
  const EscapeGrid g = render_escape(cfg, 200);
  for (int j = 0; j < cfg.ny; ++j) {
    for (int i = 0; i < cfg.nx; ++i) {
      const Complex c = cfg.point(static_cast<std::size_t>(j) * cfg.nx + i);
      const Complex mirror = cfg.point(static_cast<std::size_t>(cfg.ny - 1 - j) * cfg.nx + i);
      ASSERT_LT(std::abs(c - std::conj(mirror)), 1e-9);
      EXPECT_EQ(g.at(i, j), g.at(i, cfg.ny - 1 - j)) << c;
    }
  }
}

TEST(RenderEscapeProperty, MoreIterationsNeverEscapeEarlier) {
  ScanConfig cfg;
  cfg.nx = 30;
  cfg.ny = 30;
  const EscapeGrid coarse = render_escape(cfg, 50);
  const EscapeGrid fine = render_escape(cfg, 400);
  for (std::size_t k = 0; k < coarse.counts.size(); ++k) {
    if (coarse.counts[k] < 50) {
      EXPECT_EQ(fine.counts[k], coarse.counts[k]);
    } else {
      EXPECT_GE(fine.counts[k], 50);
    }
  }
}

TEST(RenderEscape, DynamicalPlane) {
  ScanConfig cfg;
  cfg.plane = RenderPlane::dynamical;
  cfg.julia_c = 0.0;
  cfg.escape_radius = 2.0;
  cfg.path = {Complex(0.5, 0.0), Complex(3.0, 0.0)};
  const EscapeGrid g = render_escape(cfg, 100);
  EXPECT_EQ(g.at(0, 0), 100);
  EXPECT_EQ(g.at(1, 0), 0);
}

}  // namespace
}  // namespace critorbit
