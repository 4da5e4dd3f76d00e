#pragma once

// File formats: diagnostics CSV, per-snapshot JSON, SVG overlay, verdict report.
// Floating-point values are written with 17 significant digits so that
// reading them back reproduces the same doubles.

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "areaflow/diagnostics.hpp"
#include "areaflow/flow_state.hpp"
#include "areaflow/reconstruction.hpp"

namespace areaflow {

/// Exact CSV header line (without the trailing newline).
inline constexpr const char* kTimeseriesHeader =
    "t,L,A,lambda,deficit,ratio,kappa_min,kappa_max,kappa_star,r_in,r_out,sobolev,gage,pan_yang,bonnesen,"
    "consistency_gap,closing_residual";

std::string format_timeseries(std::span<const DiagnosticsRecord> records);

/// Throws IoError("nothing to write") for an empty trajectory, or naming the path on I/O failure.
void write_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path);

/// Inverse of write_timeseries. Fields that are not columns are rebuilt:
/// the isoperimetric residual equals the deficit and the bound margins are
/// measured against the first row.
std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path);
std::vector<DiagnosticsRecord> parse_timeseries(const std::string& text);

struct SnapshotData {
  double t = 0.0;
  std::vector<double> kappa;
  std::vector<double> x;
  std::vector<double> y;
  std::array<double, 2> anchor{};
};

/// {"t", "kappa", "x", "y", "anchor"}; arrays in grid order.
std::string format_snapshot(const FlowState& state, const Polyline& poly);
void write_snapshot(const FlowState& state, const Polyline& poly, const std::filesystem::path& path);
SnapshotData read_snapshot(const std::filesystem::path& path);

struct SvgCurve {
  double t = 0.0;
  Polyline poly;
};

/// Overlays every curve plus the limit circle of radius sqrt(A(0)/pi)
/// (A(0) from the first curve) centered at the last curve's centroid, in a
/// fixed 1000x1000 equal-aspect viewport. Throws IoError for no curves.
std::string format_svg(std::span<const SvgCurve> curves);
void render_svg(std::span<const SvgCurve> curves, const std::filesystem::path& path);

std::string format_report_json(const VerdictReport& report);
void write_report(const VerdictReport& report, const std::filesystem::path& path);

/// One human-readable line per claim.
std::string format_report_text(const VerdictReport& report);

}  // namespace areaflow
