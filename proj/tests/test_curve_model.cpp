#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "areaflow/curve_model.hpp"
#include "areaflow/errors.hpp"
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

TEST_CASE("theta grid nodes and spacing") {
  const ThetaGrid g8 = make_theta_grid(8);
  CHECK(g8.spacing() == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(g8.node(0) == 0.0);
  CHECK(g8.node(7) == doctest::Approx(7 * kPi / 4).epsilon(1e-15));
  CHECK(make_theta_grid(256).spacing() == doctest::Approx(2 * kPi / 256).epsilon(1e-15));
}

TEST_CASE("theta grid rejects odd or small sizes") {
  CHECK_THROWS_WITH_AS(make_theta_grid(7), doctest::Contains("grid size must be even and >= 8"), GridError);
  CHECK_THROWS_AS(make_theta_grid(6), GridError);
  CHECK_THROWS_AS(make_theta_grid(0), GridError);
  CHECK_NOTHROW(make_theta_grid(10));
}

TEST_CASE("curvature profile enforces positivity and size") {
  const ThetaGrid grid(8);
  CHECK_THROWS_AS(CurvatureProfile(grid, std::vector<double>(7, 1.0)), GridError);
  std::vector<double> k(8, 1.0);
  k[5] = 0.0;
  try {
    CurvatureProfile bad(grid, k);
    FAIL("expected ConvexityError");
  } catch (const ConvexityError& e) {
    CHECK(e.index() == 5);
  }
  k[5] = std::nan("");
  CHECK_THROWS_AS(CurvatureProfile(grid, k), ConvexityError);
}

TEST_CASE("support to curvature: circle") {
  const auto support = sample_support(ThetaGrid(64), FourierSeries{3.0, {}});
  const auto kappa = support_to_curvature(support);
  for (double v : kappa.values()) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("support to curvature: single harmonic, analytic and stencil paths") {
  const ThetaGrid grid(256);
  auto support = sample_support(grid, FourierSeries{1.0, {{2, 0.1, 0.0}}});
  const auto analytic = support_to_curvature(support);
  CHECK(analytic[0] == doctest::Approx(1.0 / 0.7).epsilon(1e-14));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(analytic[j] == doctest::Approx(1.0 / (1.0 - 0.3 * std::cos(2 * grid.node(j)))).epsilon(1e-14));
  }

  // Without coefficients the second derivative comes from the stencil.
  support.coefficients.reset();
  const auto second = support_to_curvature(support, StencilOrder::second);
  const auto fourth = support_to_curvature(support, StencilOrder::fourth);
  CHECK(second[0] == doctest::Approx(1.0 / 0.7).epsilon(1e-3));
  CHECK(std::abs(fourth[0] - 1.0 / 0.7) < std::abs(second[0] - 1.0 / 0.7));
}

TEST_CASE("support to curvature rejects non-convex support with the node index") {
  const ThetaGrid grid(64);
  // h + h'' = 1 - 3*0.5 cos 2 theta is negative at theta = 0.
  const auto support = sample_support(grid, FourierSeries{1.0, {{2, 0.5, 0.0}}});
  try {
    support_to_curvature(support);
    FAIL("expected ConvexityError");
  } catch (const ConvexityError& e) {
    CHECK(e.index() == 0);
  }
}

TEST_CASE("ellipse via analytic support matches the parametric radius of curvature") {
  const ThetaGrid grid(128);
  const auto kappa = builtin_shape(EllipseShape{2.0, 1.0}, grid);
  CHECK(kappa[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(kappa[32] == doctest::Approx(0.25).epsilon(1e-14));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(1.0 / kappa[j] == doctest::Approx(oracle::ellipse_radius_at_normal(2.0, 1.0, grid.node(j))).epsilon(1e-12));
  }
}

TEST_CASE("builtin shapes") {
  const ThetaGrid grid(64);
  const auto circle = builtin_shape(CircleShape{2.0}, grid);
  for (double v : circle.values()) CHECK(v == 0.5);
  const auto f = builtin_shape(FourierShape{{1.0, {{2, 0.1, 0.0}}}}, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(f[j] == doctest::Approx(1.0 / (1.0 - 0.3 * std::cos(2 * grid.node(j)))).epsilon(1e-14));
  }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(validate_shape(CircleShape{0.0}), ConfigError);
  CHECK_THROWS_AS(validate_shape(EllipseShape{1.0, -1.0}), ConfigError);
  CHECK_THROWS_AS(validate_shape(FourierShape{{1.0, {{1, 0.1, 0.0}}}}), ConfigError);
  CHECK_THROWS_AS(validate_shape(FourierShape{{-1.0, {}}}), ConfigError);
  CHECK_NOTHROW(validate_shape(EllipseShape{2.0, 1.0}));
}

TEST_CASE("closing residual") {
  const auto one = CurvatureProfile(ThetaGrid(64), std::vector<double>(64, 1.0));
  CHECK(closing_residual(one) < 1e-14);

  const auto shifted = from_rho(256, [](double t) { return 1.0 + 0.2 * std::cos(t); });
  CHECK(closing_residual(shifted) == doctest::Approx(0.2 * kPi).epsilon(1e-13));

  const ThetaGrid grid(64);
  const auto fourier = builtin_shape(FourierShape{{1.0, {{2, 0.05, 0.02}, {3, 0.01, -0.01}}}}, grid);
  CHECK(closing_residual(fourier) <= 1e-12 * 64 * (1.0 / fourier.min()));
  CHECK(closing_residual(fourier) <= 1e-10);
  CHECK(closing_tolerance(one) == doctest::Approx(1e-8 * 2 * kPi));
}

TEST_CASE("project closing") {
  const auto one = CurvatureProfile(ThetaGrid(32), std::vector<double>(32, 1.0));
  const auto fixed = project_closing(one);
  for (std::size_t j = 0; j < 32; ++j) CHECK(fixed[j] == one[j]);

  const auto shifted = from_rho(128, [](double t) { return 1.0 + 0.2 * std::cos(t) - 0.1 * std::sin(t); });
  const auto projected = project_closing(shifted);
  for (double v : projected.values()) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(closing_residual(projected) <= closing_tolerance(projected));

  // Idempotence.
  const auto mixed = from_rho(128, [](double t) { return 1.0 + 0.2 * std::cos(t) + 0.1 * std::cos(2 * t); });
  const auto once = project_closing(mixed);
  const auto twice = project_closing(once);
  for (std::size_t j = 0; j < 128; ++j) CHECK(twice[j] == doctest::Approx(once[j]).epsilon(1e-15));

  // A narrow spike of radius of curvature: removing its first harmonic
  // pushes rho below zero at theta = pi/3.
  const auto bad = from_rho(64, [](double t) { return 0.01 + std::pow(std::max(std::cos(t), 0.0), 8); });
  try {
    project_closing(bad);
    FAIL("expected ProjectionError");
  } catch (const ProjectionError& e) {
    CHECK(std::string(e.what()).find("projection breaks convexity") != std::string::npos);
    CHECK(e.min_radius() <= 0.0);
  }
}

TEST_CASE("raw shape is projected then validated") {
  const ThetaGrid grid(64);
  std::vector<double> k(64);
  for (std::size_t j = 0; j < 64; ++j) k[j] = 1.0 / (2.0 + 0.3 * std::sin(grid.node(j)));
  const auto kappa = builtin_shape(RawShape{k}, grid);
  for (double v : kappa.values()) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(builtin_shape(RawShape{std::vector<double>(10, 1.0)}, grid), GridError);
}

TEST_CASE("rotation covariance of raw support samples") {
  const ThetaGrid grid(128);
  std::mt19937_64 rng(11);
  const auto series = oracle::random_convex_series(rng);
  auto support = sample_support(grid, series);
  support.coefficients.reset();
  const auto base = support_to_curvature(support, StencilOrder::fourth);
  for (std::size_t m : {1u, 5u, 64u}) {
    SupportFunction rotated = support;
    std::rotate(rotated.h.begin(), rotated.h.begin() + static_cast<long>(m), rotated.h.end());
    const auto k = support_to_curvature(rotated, StencilOrder::fourth);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CHECK(k[j] == doctest::Approx(base[(j + m) % grid.size()]).epsilon(1e-12));
    }
  }
}
