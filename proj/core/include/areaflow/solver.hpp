#pragma once

// Explicit time integration of the curvature equation
//
//   kappa_t = (kappa^2 + lambda) kappa_thth - (2 lambda / kappa) kappa_th^2 + kappa^3 - lambda kappa,
//   lambda  = 2 pi / int kappa^-2 dtheta,
//
// together with the length equation dL/dt = -int kappa dtheta + lambda L.
// The discretization (central differences, classical RK4, parabolic step
// cap, periodic closing projection) is this library's choice.

#include <cstdint>
#include <string>
#include <vector>

#include "areaflow/diagnostics.hpp"
#include "areaflow/errors.hpp"
#include "areaflow/flow_state.hpp"

namespace areaflow {

struct StepperConfig {
  double cfl = 0.5;                 // in (0, 1]
  StencilOrder stencil = StencilOrder::second;
  int projection_period = 100;      // steps between closing projections
  double t_max = 60.0;
  double stop_uniformity = 1e-12;   // stop once kappa_max/kappa_min - 1 falls below
  double stop_deficit = 0.0;        // stop once L^2 - 4 pi A falls below; 0 disables
};

/// Throws ConfigError naming the offending field.
void validate(const StepperConfig& cfg);

/// Pointwise right-hand side of the curvature equation, lambda recomputed from `kappa`.
std::vector<double> curvature_rhs(const CurvatureProfile& kappa,
                                  StencilOrder stencil = StencilOrder::second);

/// cfl * dtheta^2 / (2 max_j (kappa_j^2 + lambda)).
double stable_dt(const CurvatureProfile& kappa, const StepperConfig& cfg);

/// One RK4 step of size stable_dt().
FlowState step(const FlowState& state, const StepperConfig& cfg);

/// One RK4 step of the given size. Throws PositivityError naming t and the
/// node when a sample becomes non-positive or non-finite.
FlowState step(const FlowState& state, const StepperConfig& cfg, double dt);

enum class StopReason { time_limit, uniformity, deficit };

std::string to_string(StopReason reason);

struct RunOptions {
  double sample_interval = 0.1;
  std::uint64_t seed = 0;
};

struct Trajectory {
  std::vector<FlowState> states;          // one per recorded sample
  std::vector<DiagnosticsRecord> records;  // aligned with states
  StopReason stop = StopReason::time_limit;
};

/// Raised when the flow breaks down mid-run; carries the last good state.
class FlowBreakdown : public Error {
 public:
  FlowBreakdown(const std::string& what, FlowState last_good)
      : Error(what), last_good_(std::move(last_good)) {}
  const FlowState& last_good() const noexcept { return last_good_; }

 private:
  FlowState last_good_;
};

/// Steps until t_max, uniformity, or deficit threshold; records diagnostics
/// at t = 0, every sample_interval, and at the final state.
Trajectory run(const CurvatureProfile& initial, const StepperConfig& cfg, const RunOptions& options = {});

}  // namespace areaflow
