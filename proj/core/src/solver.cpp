#include "areaflow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "areaflow/geometry.hpp"
#include "areaflow/reconstruction.hpp"

namespace areaflow {
namespace {

struct Rates {
  std::vector<double> kappa;
  double length = 0.0;
};

// Right-hand sides on raw samples; RK stages may leave the admissible set
// transiently, so no positivity validation here.
Rates evaluate(std::span<const double> k, double length_value, double h, StencilOrder stencil) {
  const std::size_t n = k.size();
  double inv_sq = 0.0;
  double total = 0.0;
  for (double v : k) {
    inv_sq += 1.0 / (v * v);
    total += v;
  }
  const double lambda = 2.0 * std::numbers::pi / (inv_sq * h);
  const auto d1 = derivative(k, h, 1, stencil);
  const auto d2 = derivative(k, h, 2, stencil);
  Rates r;
  r.kappa.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double kj = k[j];
    r.kappa[j] = (kj * kj + lambda) * d2[j] - 2.0 * lambda / kj * d1[j] * d1[j] + kj * kj * kj - lambda * kj;
  }
  r.length = -total * h + lambda * length_value;
  return r;
}

std::vector<double> axpy(std::span<const double> x, double a, std::span<const double> y) {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + a * y[j];
  return out;
}

}  // namespace

FlowState initial_state(const CurvatureProfile& kappa) {
  return FlowState{0.0, kappa, length(kappa), Anchor{}, 0};
}

void validate(const StepperConfig& cfg) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]", "stepper.cfl");
  if (cfg.projection_period < 1) {
    throw ConfigError("projection_period must be >= 1", "stepper.projection_period");
  }
  if (!(cfg.t_max >= 0.0) || !std::isfinite(cfg.t_max)) {
    throw ConfigError("t_max must be finite and non-negative", "stepper.t_max");
  }
  if (!(cfg.stop_uniformity >= 0.0)) {
    throw ConfigError("stop_uniformity must be non-negative", "stepper.stop_uniformity");
  }
  if (!(cfg.stop_deficit >= 0.0)) throw ConfigError("stop_deficit must be non-negative", "stepper.stop_deficit");
}

std::vector<double> curvature_rhs(const CurvatureProfile& kappa, StencilOrder stencil) {
  return evaluate(kappa.values(), 0.0, kappa.grid().spacing(), stencil).kappa;
}

double stable_dt(const CurvatureProfile& kappa, const StepperConfig& cfg) {
  const double lambda = nonlocal_lambda(kappa);
  const double kmax = kappa.max();
  const double h = kappa.grid().spacing();
  return cfg.cfl * h * h / (2.0 * (kmax * kmax + lambda));
}

FlowState step(const FlowState& state, const StepperConfig& cfg) {
  return step(state, cfg, stable_dt(state.kappa, cfg));
}

FlowState step(const FlowState& state, const StepperConfig& cfg, double dt) {
  const double h = state.kappa.grid().spacing();
  const auto k0 = state.kappa.values();
  const double l0 = state.length;

  const Rates r1 = evaluate(k0, l0, h, cfg.stencil);
  const Rates r2 = evaluate(axpy(k0, 0.5 * dt, r1.kappa), l0 + 0.5 * dt * r1.length, h, cfg.stencil);
  const Rates r3 = evaluate(axpy(k0, 0.5 * dt, r2.kappa), l0 + 0.5 * dt * r2.length, h, cfg.stencil);
  const Rates r4 = evaluate(axpy(k0, dt, r3.kappa), l0 + dt * r3.length, h, cfg.stencil);

  const double t_next = state.t + dt;
  std::vector<double> k1(k0.size());
  for (std::size_t j = 0; j < k1.size(); ++j) {
    k1[j] = k0[j] + dt / 6.0 * (r1.kappa[j] + 2.0 * r2.kappa[j] + 2.0 * r3.kappa[j] + r4.kappa[j]);
    if (!(k1[j] > 0.0) || !std::isfinite(k1[j])) {
      std::ostringstream msg;
      msg << "curvature lost positivity at t=" << t_next << ", node " << j << " (value " << k1[j] << ")";
      throw PositivityError(msg.str(), t_next, j);
    }
  }
  const double l1 = l0 + dt / 6.0 * (r1.length + 2.0 * r2.length + 2.0 * r3.length + r4.length);

  FlowState next{t_next, CurvatureProfile(state.kappa.grid(), std::move(k1)), l1,
                 advance_anchor(state, dt, cfg.stencil), state.step_count + 1};
  if (next.step_count % cfg.projection_period == 0) next.kappa = project_closing(next.kappa);
  return next;
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::time_limit: return "time_limit";
    case StopReason::uniformity: return "uniformity";
    case StopReason::deficit: return "deficit";
  }
  return "unknown";
}

Trajectory run(const CurvatureProfile& initial, const StepperConfig& cfg, const RunOptions& options) {
  validate(cfg);
  if (!(options.sample_interval > 0.0)) throw ConfigError("sample_interval must be positive", "sample_interval");
  if (initial.max() / initial.min() > 1e6) {
    throw Error("initial curvature ratio kappa_max/kappa_min exceeds 1e6");
  }

  Trajectory traj;
  Reference ref{};
  auto record = [&](const FlowState& s) -> const DiagnosticsRecord& {
    auto rec = snapshot_metrics(s, cfg.stencil, options.seed);
    if (traj.records.empty()) ref = reference_of(rec);
    apply_reference(rec, ref);
    traj.states.push_back(s);
    traj.records.push_back(rec);
    return traj.records.back();
  };
  auto should_stop = [&](const FlowState& s, const DiagnosticsRecord& rec) -> std::optional<StopReason> {
    if (s.kappa.max() / s.kappa.min() - 1.0 < cfg.stop_uniformity) return StopReason::uniformity;
    if (cfg.stop_deficit > 0.0 && rec.summary.deficit < cfg.stop_deficit) return StopReason::deficit;
    return std::nullopt;
  };

  FlowState state = initial_state(initial);
  if (auto why = should_stop(state, record(state))) {
    traj.stop = *why;
    return traj;
  }

  std::int64_t sample_index = 1;
  while (state.t < cfg.t_max) {
    const double next_sample = static_cast<double>(sample_index) * options.sample_interval;
    const double target = std::min(next_sample, cfg.t_max);
    double dt = stable_dt(state.kappa, cfg);
    const bool lands = state.t + dt >= target;
    if (lands) dt = target - state.t;

    try {
      FlowState next = step(state, cfg, dt);
      state = std::move(next);
    } catch (const Error& e) {
      throw FlowBreakdown(e.what(), state);
    }
    if (!lands) continue;

    state.t = target;
    if (target == next_sample) ++sample_index;
    if (auto why = should_stop(state, record(state))) {
      traj.stop = *why;
      return traj;
    }
  }
  traj.stop = StopReason::time_limit;
  return traj;
}

}  // namespace areaflow
