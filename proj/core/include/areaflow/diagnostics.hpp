#pragma once

// Monitors and verdicts for the flow's quantitative claims.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "areaflow/flow_state.hpp"
#include "areaflow/geometry.hpp"

namespace areaflow {

struct DiagnosticsRecord {
  double t = 0.0;
  GeometricSummary summary;
  InequalityResiduals residuals;
  double lambda_bound_margin = 0.0;  // pi/A(0) - lambda
  double kmin_bound_margin = 0.0;    // kappa_min - kappa_min(0) exp(-mu t), mu = pi/A(0) + 1
  double kstar_margin = 0.0;         // L/A - kappa*
  double consistency_gap = 0.0;      // |L_ode - length(kappa)|
  double closing_residual = 0.0;
};

/// Monitors on one state. The bound margins are taken against the state
/// itself; call apply_reference() to measure them against t = 0.
DiagnosticsRecord snapshot_metrics(const FlowState& state, StencilOrder stencil = StencilOrder::second,
                                   std::uint64_t seed = 0);

/// Initial area and minimum curvature that the time-dependent bounds refer to.
struct Reference {
  double area0 = 0.0;
  double kappa_min0 = 0.0;
};

Reference reference_of(const DiagnosticsRecord& first);

/// Recomputes the three bound margins of `record` against `ref`.
void apply_reference(DiagnosticsRecord& record, const Reference& ref);

/// Least-squares slope of ln(deficit) against t over the later half of the
/// samples whose deficit exceeds `floor`. Empty when fewer than ten do.
std::optional<double> decay_rate(std::span<const std::pair<double, double>> series, double floor);

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
};

/// Fixed claim registry, in report order.
std::span<const ClaimInfo> claim_registry();

/// Per-claim tolerances plus the two shared knobs `burn_in_fraction` and
/// `deficit_floor`. Unknown keys are rejected.
class ToleranceTable {
 public:
  ToleranceTable();

  double get(std::string_view key) const;
  /// Throws ConfigError for unknown keys or negative values.
  void set(std::string_view key, double value);
  const std::map<std::string, double, std::less<>>& values() const noexcept { return values_; }

 private:
  std::map<std::string, double, std::less<>> values_;
};

struct Verdict {
  std::string id;
  std::string statement;
  bool pass = false;
  double worst_margin = 0.0;  // normalized; PASS when >= -tolerance
  double worst_time = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerdictReport {
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  const Verdict& at(std::string_view id) const;
};

/// One verdict per registered claim. Records must be in time order; bound
/// margins are recomputed against the first record.
VerdictReport verify(std::span<const DiagnosticsRecord> records, const ToleranceTable& tolerances = {});

}  // namespace areaflow
