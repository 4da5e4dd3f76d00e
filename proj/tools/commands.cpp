#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "areaflow/config.hpp"
#include "areaflow/errors.hpp"
#include "areaflow/export.hpp"
#include "areaflow/solver.hpp"
#include "areaflow/spectral.hpp"

namespace areaflow::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Indices of `count` states spread evenly from first to last.
std::vector<std::size_t> pick_snapshots(std::size_t total, std::size_t count) {
  std::vector<std::size_t> picked;
  if (total == 0) return picked;
  count = std::min(count, total);
  if (count == 1) return {total - 1};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t idx = (i * (total - 1) + (count - 1) / 2) / (count - 1);
    if (picked.empty() || picked.back() != idx) picked.push_back(idx);
  }
  return picked;
}

// Sup-norms of the first few spectral derivatives of kappa. Printed for
// information; no claim is attached to them.
void print_derivative_norms(const CurvatureProfile& kappa, std::ostream& out) {
  std::vector<spectral::Complex> f(kappa.values().begin(), kappa.values().end());
  out << "derivative sup-norms at the final state (informational):";
  for (int order = 1; order <= 4; ++order) {
    f = spectral::derivative(f);
    double sup = 0.0;
    for (const auto& v : f) sup = std::max(sup, std::abs(v.real()));
    char buf[48];
    std::snprintf(buf, sizeof buf, " |d%d kappa| = %.3e", order, sup);
    out << buf;
  }
  out << '\n';
}

}  // namespace

int cmd_run(const std::filesystem::path& config_path, const std::optional<std::filesystem::path>& output_dir,
            std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = load_config_file(config_path);
    if (output_dir) cfg.output_dir = *output_dir;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') cfg.output_dir = env;

    const CurvatureProfile initial = builtin_shape(cfg.shape, make_theta_grid(cfg.n));
    const Trajectory traj = run(initial, cfg.stepper, RunOptions{cfg.sample_interval, cfg.seed});

    const auto& dir = cfg.output_dir;
    std::filesystem::create_directories(dir / "snapshots");
    write_timeseries(traj.records, dir / "timeseries.csv");

    std::vector<SvgCurve> curves;
    const auto picked = pick_snapshots(traj.states.size(), cfg.snapshot_count);
    for (std::size_t i = 0; i < picked.size(); ++i) {
      const FlowState& state = traj.states[picked[i]];
      Polyline poly = reconstruct(state.kappa, state.anchor);
      char name[48];
      std::snprintf(name, sizeof name, "snapshot_%03zu.json", i);
      write_snapshot(state, poly, dir / "snapshots" / name);
      curves.push_back({state.t, std::move(poly)});
    }
    render_svg(curves, dir / "curves.svg");

    const VerdictReport report = verify(traj.records, cfg.tolerances);
    write_report(report, dir / "verdict.json");

    out << "stopped at t = " << traj.states.back().t << " (" << to_string(traj.stop) << "), "
        << traj.records.size() << " samples\n";
    print_derivative_norms(traj.states.back().kappa, out);
    out << format_report_text(report);
    out << "outputs written to " << dir.string() << '\n';
    return report.all_pass() ? kAllPass : kClaimFailed;
  } catch (const FlowBreakdown& e) {
    err << "error: flow broke down after t = " << e.last_good().t << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

int cmd_report(const std::filesystem::path& timeseries, const std::optional<std::filesystem::path>& tolerances,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out, std::ostream& err) {
  try {
    const auto records = read_timeseries(timeseries);
    const ToleranceTable table = tolerances ? load_tolerances(read_file(*tolerances)) : ToleranceTable{};
    const VerdictReport report = verify(records, table);
    if (report_path) write_report(report, *report_path);
    out << format_report_text(report);
    return report.all_pass() ? kAllPass : kClaimFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and claim checker for the area-preserving non-local curvature flow of convex curves"};
  app.require_subcommand(1);

  std::filesystem::path config;
  std::optional<std::filesystem::path> output_dir;
  auto* run_cmd = app.add_subcommand("run", "Run the flow and write time series, snapshots, SVG and verdict report");
  run_cmd->add_option("--config,-c", config, "YAML run configuration")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--output-dir,-o", output_dir,
                      std::string("Output directory (overrides the config; ") + kOutputDirEnv + " overrides both)");

  std::filesystem::path timeseries;
  std::optional<std::filesystem::path> tolerances;
  std::optional<std::filesystem::path> report_path;
  auto* report_cmd = app.add_subcommand("report", "Re-verify the claims on an existing timeseries.csv");
  report_cmd->add_option("--timeseries,-t", timeseries, "CSV written by `run`")->required()->check(CLI::ExistingFile);
  report_cmd->add_option("--tolerances", tolerances, "YAML tolerance table (claim id -> tolerance)")
      ->check(CLI::ExistingFile);
  report_cmd->add_option("--out", report_path, "Also write the verdict report as JSON to this path");

  app.footer("Exit status: 0 when every claim passes, 1 when any claim fails, 2 on configuration or runtime error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kError;
  }
  if (run_cmd->parsed()) return cmd_run(config, output_dir, out, err);
  return cmd_report(timeseries, tolerances, report_path, out, err);
}

}  // namespace areaflow::cli
