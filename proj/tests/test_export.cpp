#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "areaflow/errors.hpp"
#include "areaflow/export.hpp"
#include "areaflow/solver.hpp"

using namespace areaflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const char* name) {
  const auto dir = fs::temp_directory_path() / "areaflow_test_export" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

const Trajectory& ellipse_run() {
  static const Trajectory traj = [] {
    StepperConfig cfg;
    cfg.stencil = StencilOrder::fourth;
    cfg.t_max = 0.5;
    cfg.stop_uniformity = 0.0;
    return run(builtin_shape(EllipseShape{2.0, 1.0}, ThetaGrid(64)), cfg, RunOptions{0.1, 0});
  }();
  return traj;
}

}  // namespace

TEST_CASE("timeseries layout") {
  const CurvatureProfile one(ThetaGrid(32), std::vector<double>(32, 1.0));
  FlowState s = initial_state(one);
  std::vector<DiagnosticsRecord> records;
  StepperConfig cfg;
  for (int i = 0; i < 3; ++i) {
    records.push_back(snapshot_metrics(s));
    s = step(s, cfg);
  }
  const auto lines = lines_of(format_timeseries(records));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == kTimeseriesHeader);
  CHECK(split(lines[0]).size() == 17);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    REQUIRE(cells.size() == 17);
    CHECK(std::abs(std::stod(cells[4])) < 1e-12);
  }
  CHECK(format_timeseries(records).find('\r') == std::string::npos);
}

TEST_CASE("timeseries refuses an empty trajectory") {
  const auto dir = scratch_dir("empty");
  try {
    write_timeseries({}, dir / "ts.csv");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("nothing to write") != std::string::npos);
  }
  CHECK_FALSE(fs::exists(dir / "ts.csv"));
}

TEST_CASE("timeseries round trip preserves doubles and verdicts") {
  const auto& traj = ellipse_run();
  const auto dir = scratch_dir("roundtrip");
  write_timeseries(traj.records, dir / "ts.csv");
  const auto back = read_timeseries(dir / "ts.csv");
  REQUIRE(back.size() == traj.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& a = traj.records[i];
    const auto& b = back[i];
    CHECK(same_bits(a.t, b.t));
    CHECK(same_bits(a.summary.length, b.summary.length));
    CHECK(same_bits(a.summary.area, b.summary.area));
    CHECK(same_bits(a.summary.lambda, b.summary.lambda));
    CHECK(same_bits(a.summary.kappa_star, b.summary.kappa_star));
    CHECK(same_bits(a.residuals.bonnesen, b.residuals.bonnesen));
    CHECK(same_bits(a.closing_residual, b.closing_residual));
  }
  CHECK(format_report_json(verify(traj.records)) == format_report_json(verify(back)));
}

TEST_CASE("timeseries parse errors") {
  CHECK_THROWS_AS(parse_timeseries("t,L\n1,2\n"), IoError);
  CHECK_THROWS_AS(parse_timeseries(std::string(kTimeseriesHeader) + "\n1,2,3\n"), IoError);
  CHECK_THROWS_AS(read_timeseries("/nonexistent/ts.csv"), IoError);
}

TEST_CASE("snapshot round trip is bit-identical") {
  const auto& state = ellipse_run().states.back();
  const auto poly = reconstruct(state.kappa, state.anchor);
  const auto dir = scratch_dir("snapshot");
  write_snapshot(state, poly, dir / "s.json");
  const auto back = read_snapshot(dir / "s.json");
  CHECK(same_bits(back.t, state.t));
  REQUIRE(back.kappa.size() == state.kappa.size());
  REQUIRE(back.x.size() == poly.points.size());
  for (std::size_t j = 0; j < back.kappa.size(); ++j) {
    CHECK(same_bits(back.kappa[j], state.kappa[j]));
    CHECK(same_bits(back.x[j], poly.points[j].x));
    CHECK(same_bits(back.y[j], poly.points[j].y));
  }
  CHECK(same_bits(back.anchor[0], state.anchor.c1));
  CHECK(same_bits(back.anchor[1], state.anchor.c2));
}

TEST_CASE("circle snapshot at t = 0") {
  const CurvatureProfile one(ThetaGrid(16), std::vector<double>(16, 1.0));
  const auto s = initial_state(one);
  const auto dir = scratch_dir("circle");
  write_snapshot(s, reconstruct(one), dir / "c.json");
  const auto back = read_snapshot(dir / "c.json");
  CHECK(back.t == 0.0);
  for (double k : back.kappa) CHECK(k == 1.0);
}

TEST_CASE("svg overlay") {
  const auto& traj = ellipse_run();
  std::vector<SvgCurve> curves;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& s = traj.states[i];
    curves.push_back({s.t, reconstruct(s.kappa, s.anchor)});
  }
  const auto svg = format_svg(curves);
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++c;
    return c;
  };
  CHECK(count("<path") == 5);
  CHECK(count("<circle") == 1);
  CHECK(count("<path") + count("<circle") == 6);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);

  const auto dir = scratch_dir("svg");
  CHECK_THROWS_AS(render_svg({}, dir / "none.svg"), IoError);
  render_svg(curves, dir / "curves.svg");
  CHECK(fs::file_size(dir / "curves.svg") == svg.size());
}

TEST_CASE("report formats") {
  const auto report = verify(ellipse_run().records);
  const auto json = format_report_json(report);
  CHECK(json.find("\"all_pass\"") != std::string::npos);
  for (const auto& v : report.verdicts) CHECK(json.find("\"" + v.id + "\"") != std::string::npos);
  const auto text = lines_of(format_report_text(report));
  CHECK(text.size() == report.verdicts.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    CHECK(text[i].rfind(report.verdicts[i].pass ? "PASS " : "FAIL ", 0) == 0);
    CHECK(text[i].find(report.verdicts[i].id) != std::string::npos);
  }

  const auto dir = scratch_dir("report");
  write_report(report, dir / "verdict.json");
  std::ifstream in(dir / "verdict.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == json);
  // A regular file in the parent chain makes the path unwritable.
  CHECK_THROWS_AS(write_report(report, dir / "verdict.json" / "inner.json"), IoError);
}
