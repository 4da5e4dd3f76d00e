#include <doctest.h>

#include <variant>

#include "areaflow/config.hpp"
#include "areaflow/errors.hpp"

using namespace areaflow;

namespace {

ConfigError config_error(const char* text) {
  try {
    load_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError for: " << text);
  return ConfigError("", "");
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
  const auto cfg = load_config("shape: circle R=1\nn: 64\n");
  REQUIRE(std::holds_alternative<CircleShape>(cfg.shape));
  CHECK(std::get<CircleShape>(cfg.shape).radius == 1.0);
  CHECK(cfg.n == 64);
  CHECK(cfg.stepper.cfl == 0.5);
  CHECK(cfg.stepper.stencil == StencilOrder::second);
  CHECK(cfg.stepper.projection_period == 100);
  CHECK(cfg.stepper.t_max == 60.0);
  CHECK(cfg.sample_interval == 0.1);
  CHECK(cfg.seed == 0);
  CHECK(cfg.tolerances.get("area_conservation") == 1e-6);

  const auto empty = load_config("");
  CHECK(empty.n == 256);
}

TEST_CASE("full config") {
  const auto cfg = load_config(R"(
n: 128
seed: 42
sample_interval: 0.25
output_dir: results/run1
snapshot_count: 3
shape:
  kind: fourier
  r0: 1.5
  harmonics:
    - [2, 0.1, 0.0]
    - [3, 0.0, -0.02]
stepper:
  cfl: 0.25
  stencil_order: 4
  projection_period: 50
  t_max: 10
  stop_uniformity: 1e-10
  stop_deficit: 1e-9
tolerances:
  area_conservation: 1e-5
  burn_in_fraction: 0.2
)");
  CHECK(cfg.n == 128);
  CHECK(cfg.seed == 42);
  CHECK(cfg.sample_interval == 0.25);
  CHECK(cfg.output_dir == "results/run1");
  CHECK(cfg.snapshot_count == 3);
  const auto& f = std::get<FourierShape>(cfg.shape).series;
  CHECK(f.r0 == 1.5);
  REQUIRE(f.harmonics.size() == 2);
  CHECK(f.harmonics[1].k == 3);
  CHECK(f.harmonics[1].b == -0.02);
  CHECK(cfg.stepper.cfl == 0.25);
  CHECK(cfg.stepper.stencil == StencilOrder::fourth);
  CHECK(cfg.stepper.projection_period == 50);
  CHECK(cfg.stepper.t_max == 10);
  CHECK(cfg.stepper.stop_uniformity == 1e-10);
  CHECK(cfg.stepper.stop_deficit == 1e-9);
  CHECK(cfg.tolerances.get("area_conservation") == 1e-5);
  CHECK(cfg.tolerances.get("burn_in_fraction") == 0.2);
}

TEST_CASE("shape forms") {
  const auto e = load_config("shape: ellipse a=2 b=1\n");
  CHECK(std::get<EllipseShape>(e.shape).a == 2.0);
  CHECK(std::get<EllipseShape>(e.shape).b == 1.0);
  const auto m = load_config("shape: {kind: ellipse, a: 3, b: 0.5}\n");
  CHECK(std::get<EllipseShape>(m.shape).b == 0.5);
  const auto raw = load_config("n: 8\nshape: {kind: raw, kappa: [1, 1, 1, 1, 1, 1, 1, 1]}\n");
  CHECK(std::get<RawShape>(raw.shape).kappa.size() == 8);
}

TEST_CASE("grid size validation") {
  const auto e = config_error("n: 7\n");
  CHECK(std::string(e.what()).find("grid size must be even and >= 8") != std::string::npos);
  CHECK(e.field() == "n");
  CHECK(e.line() == 1);
  CHECK(config_error("n: 4\n").field() == "n");
}

TEST_CASE("unknown keys are rejected by name") {
  const auto top = config_error("n: 64\nfoo: 1\n");
  CHECK(std::string(top.what()).find("foo") != std::string::npos);
  CHECK(top.field() == "foo");
  CHECK(top.line() == 2);
  CHECK(config_error("stepper:\n  cfl: 0.5\n  bar: 2\n").field() == "stepper.bar");
  CHECK(config_error("shape: {kind: circle, R: 1, a: 2}\n").field() == "shape.a");
  CHECK(config_error("tolerances:\n  not_a_claim: 1\n").field() == "tolerances.not_a_claim");
  CHECK(config_error("shape: circle R=1 q=2\n").field() == "shape.q");
}

TEST_CASE("validation errors name the field") {
  CHECK(config_error("stepper: {cfl: 1.5}\n").field() == "stepper.cfl");
  CHECK(config_error("stepper: {stencil_order: 3}\n").field() == "stepper.stencil_order");
  CHECK(config_error("stepper: {projection_period: 0}\n").field() == "stepper.projection_period");
  CHECK(config_error("sample_interval: 0\n").field() == "sample_interval");
  CHECK(config_error("shape: circle R=-1\n").field() == "shape.R");
  CHECK(config_error("shape: {kind: fourier, r0: 1, harmonics: [[1, 0.1, 0]]}\n").field() == "shape.harmonics");
  CHECK(config_error("shape: {kind: hexagon}\n").field() == "shape.kind");
  CHECK(config_error("n: many\n").field() == "n");
  CHECK(config_error("tolerances: {area_conservation: -1}\n").field() == "tolerances.area_conservation");
}

TEST_CASE("syntax errors carry a line number") {
  const auto e = config_error("n: 64\nshape: [unclosed\nseed: 1\n");
  CHECK(e.line() >= 2);
  CHECK(std::string(e.what()).find("line") != std::string::npos);
}

TEST_CASE("tolerance files") {
  const auto bare = load_tolerances("lambda_monotone: 1e-6\n");
  CHECK(bare.get("lambda_monotone") == 1e-6);
  const auto nested = load_tolerances("tolerances:\n  limit_radii: 0.01\n");
  CHECK(nested.get("limit_radii") == 0.01);
  CHECK_THROWS_AS(load_tolerances("bogus: 1\n"), ConfigError);
}

TEST_CASE("missing config file") {
  CHECK_THROWS_AS(load_config_file("/nonexistent/areaflow.yaml"), IoError);
}
