#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "areaflow/geometry.hpp"
#include "areaflow/reconstruction.hpp"
#include "oracles.hpp"

using namespace areaflow;
using oracle::kPi;

namespace {

CurvatureProfile from_rho(std::size_t n, double (*rho)(double)) {
  const ThetaGrid grid(n);
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = 1.0 / rho(grid.node(j));
  return CurvatureProfile(grid, k);
}

}  // namespace

TEST_CASE("unit curvature rebuilds the unit circle through the origin") {
  const CurvatureProfile one(ThetaGrid(64), std::vector<double>(64, 1.0));
  const auto poly = reconstruct(one);
  REQUIRE(poly.points.size() == 64);
  REQUIRE(poly.tangent_angles.size() == 64);
  double worst = 0.0;
  for (std::size_t j = 0; j < 64; ++j) {
    const double t = one.grid().node(j);
    worst = std::max(worst, std::hypot(poly.points[j].x - std::sin(t), poly.points[j].y - (1.0 - std::cos(t))));
  }
  CHECK(worst < 1e-13);
  CHECK(closure_error(poly) < 1e-14);
}

TEST_CASE("closure error mirrors the closing residual") {
  const auto open = from_rho(256, [](double t) { return 1.0 + 0.2 * std::cos(t); });
  const auto poly = reconstruct(open);
  CHECK(closure_error(poly) == doctest::Approx(0.2 * kPi).epsilon(1e-12));
  CHECK(closure_error(poly) == doctest::Approx(closing_residual(open)).epsilon(1e-14));

  const auto closed = reconstruct(project_closing(open));
  CHECK(closure_error(closed) <= 1e-8 * 2 * kPi);

  const auto e = builtin_shape(EllipseShape{2.0, 1.0}, ThetaGrid(256));
  CHECK(closure_error(reconstruct(e)) <= 1e-10);
}

TEST_CASE("ellipse extents") {
  const auto e = builtin_shape(EllipseShape{2.0, 1.0}, ThetaGrid(256));
  const auto poly = reconstruct(e);
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const auto& p : poly.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  // The support angle is the outward normal; tangent angle zero points
  // along +x, so the major axis comes out vertical.
  CHECK(std::abs((xmax - xmin) - 2.0) < 1e-4);
  CHECK(std::abs((ymax - ymin) - 4.0) < 1e-4);

  // Every vertex lies on the axis-aligned ellipse after centering.
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  double worst = 0.0;
  for (const auto& p : poly.points) {
    const double u = (p.x - cx) / 1.0, v = (p.y - cy) / 2.0;
    worst = std::max(worst, std::abs(u * u + v * v - 1.0));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("translation equivariance and anchor-independent area") {
  const auto k = builtin_shape(FourierShape{{1.0, {{2, 0.05, 0.01}, {3, 0.02, 0.0}}}}, ThetaGrid(128));
  const auto base = reconstruct(k);
  const Anchor shift{0.75, -3.5};
  const auto moved = reconstruct(k, shift);
  for (std::size_t j = 0; j < base.points.size(); ++j) {
    CHECK(moved.points[j].x == base.points[j].x + 0.75);
    CHECK(moved.points[j].y == base.points[j].y - 3.5);
  }
  CHECK(enclosed_area(moved) == doctest::Approx(enclosed_area(base)).epsilon(1e-13));
  CHECK(closure_error(moved) == doctest::Approx(closure_error(base)).epsilon(1e-6));
}

TEST_CASE("orientation is counterclockwise") {
  const auto k = builtin_shape(EllipseShape{1.5, 1.0}, ThetaGrid(64));
  const auto poly = reconstruct(k);
  CHECK(enclosed_area(poly) > 0.0);
  CHECK(polygon_area(poly) > 0.0);
}

TEST_CASE("advance anchor") {
  const CurvatureProfile one(ThetaGrid(32), std::vector<double>(32, 1.0));
  const FlowState circle = initial_state(one);
  const auto still = advance_anchor(circle, 0.1);
  CHECK(still.c1 == 0.0);
  CHECK(std::abs(still.c2) < 1e-15);

  // kappa = 1/(1 - 0.3 cos 2 theta): speed at 0 is 1/0.7 - 0.7 lambda with
  // lambda = 2/2.09, and its theta-derivative vanishes there by symmetry.
  const auto k = builtin_shape(FourierShape{{1.0, {{2, 0.1, 0.0}}}}, ThetaGrid(64));
  FlowState s = initial_state(k);
  s.anchor = {0.25, -0.5};
  const double speed0 = 1.0 / 0.7 - 0.7 * (2.0 / 2.09);
  const auto next = advance_anchor(s, 0.1);
  CHECK(next.c1 == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(next.c2 == doctest::Approx(-0.5 + 0.1 * speed0).epsilon(1e-13));
}
