#include "areaflow/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "areaflow/errors.hpp"
#include "areaflow/reconstruction.hpp"

namespace areaflow {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<ClaimInfo, 17> kClaims{{
    {"area_conservation", "A(t) = A(0)"},
    {"length_monotone", "dL/dt <= 0"},
    {"lambda_monotone", "d lambda/dt >= 0"},
    {"lambda_bound", "0 < lambda(t) <= pi/A(0)"},
    {"kappa_min_bound", "kappa_min(t) >= kappa_min(0) exp(-(pi/A(0) + 1) t)"},
    {"deficit_monotone", "L^2 - 4 pi A strictly decreasing"},
    {"deficit_rate", "L^2 - 4 pi A <= (L(0)^2 - 4 pi A(0)) exp(-pi t / (A L(0)))"},
    {"gage_inequality", "int kappa^2 ds >= pi L / A"},
    {"pan_yang_inequality", "int 1/kappa ds >= (L^2 - 2 pi A) / pi"},
    {"isoperimetric_inequality", "L^2 - 4 pi A >= 0"},
    {"bonnesen_inequality", "L^2 - 4 pi A >= pi^2 (r_out - r_in)^2"},
    {"median_curvature_bound", "kappa* < L / A"},
    {"sobolev_bounded", "int (kappa')^2 dtheta uniformly bounded"},
    {"closing_condition", "int exp(i theta) / kappa dtheta = 0"},
    {"limit_kappa", "kappa -> sqrt(pi / A(0))"},
    {"limit_lambda", "lambda -> pi / A(0)"},
    {"limit_radii", "r_in, r_out -> sqrt(A(0) / pi)"},
}};

// Claims that require a strictly positive margin when the tolerance is zero.
bool is_strict(std::string_view id) { return id == "deficit_monotone" || id == "median_curvature_bound"; }

// Running minimum of a margin series.
struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  double time = 0.0;
  bool seen = false;

  void add(double m, double t) {
    if (!seen || m < margin) {
      margin = m;
      time = t;
    }
    seen = true;
  }
};

}  // namespace

DiagnosticsRecord snapshot_metrics(const FlowState& state, StencilOrder stencil, std::uint64_t seed) {
  const Polyline poly = reconstruct(state.kappa, state.anchor);
  const GeometryReport geo = measure(state.kappa, poly, stencil, seed);
  DiagnosticsRecord rec;
  rec.t = state.t;
  rec.summary = geo.summary;
  rec.residuals = geo.residuals;
  rec.kstar_margin = rec.summary.length / rec.summary.area - rec.summary.kappa_star;
  rec.consistency_gap = std::abs(state.length - rec.summary.length);
  rec.closing_residual = closing_residual(state.kappa);
  apply_reference(rec, reference_of(rec));
  return rec;
}

Reference reference_of(const DiagnosticsRecord& first) {
  return {first.summary.area, first.summary.kappa_min};
}

void apply_reference(DiagnosticsRecord& record, const Reference& ref) {
  const double mu = kPi / ref.area0 + 1.0;
  record.lambda_bound_margin = kPi / ref.area0 - record.summary.lambda;
  record.kmin_bound_margin = record.summary.kappa_min - ref.kappa_min0 * std::exp(-mu * record.t);
  record.kstar_margin = record.summary.length / record.summary.area - record.summary.kappa_star;
}

std::optional<double> decay_rate(std::span<const std::pair<double, double>> series, double floor) {
  std::vector<std::pair<double, double>> usable;
  for (const auto& [t, d] : series) {
    if (d > floor && d > 0.0) usable.emplace_back(t, std::log(d));
  }
  if (usable.size() < 10) return std::nullopt;
  const std::size_t start = usable.size() / 2;
  const double count = static_cast<double>(usable.size() - start);
  double mt = 0.0, my = 0.0;
  for (std::size_t i = start; i < usable.size(); ++i) {
    mt += usable[i].first;
    my += usable[i].second;
  }
  mt /= count;
  my /= count;
  double sty = 0.0, stt = 0.0;
  for (std::size_t i = start; i < usable.size(); ++i) {
    const double dt = usable[i].first - mt;
    sty += dt * (usable[i].second - my);
    stt += dt * dt;
  }
  if (!(stt > 0.0)) return std::nullopt;
  return sty / stt;
}

std::span<const ClaimInfo> claim_registry() { return kClaims; }

ToleranceTable::ToleranceTable()
    : values_{
          {"area_conservation", 1e-6},
          {"length_monotone", 1e-9},
          {"lambda_monotone", 1e-9},
          {"lambda_bound", 1e-6},
          {"kappa_min_bound", 1e-3},
          {"deficit_monotone", 0.0},
          {"deficit_rate", 1e-3},
          {"gage_inequality", 1e-8},
          {"pan_yang_inequality", 1e-8},
          {"isoperimetric_inequality", 1e-8},
          {"bonnesen_inequality", 1e-8},
          {"median_curvature_bound", 0.0},
          {"sobolev_bounded", 0.05},
          {"closing_condition", 1e-8},
          {"limit_kappa", 1e-4},
          {"limit_lambda", 1e-4},
          {"limit_radii", 1e-3},
          {"burn_in_fraction", 0.1},
          {"deficit_floor", 1e-14},
      } {}

double ToleranceTable::get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown tolerance key '" + std::string(key) + "'", std::string(key));
  return it->second;
}

void ToleranceTable::set(std::string_view key, double value) {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    throw ConfigError("unknown tolerance key '" + std::string(key) + "'", "tolerances." + std::string(key));
  }
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError("tolerance '" + std::string(key) + "' must be finite and non-negative",
                      "tolerances." + std::string(key));
  }
  it->second = value;
}

bool VerdictReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict& VerdictReport::at(std::string_view id) const {
  for (const auto& v : verdicts) {
    if (v.id == id) return v;
  }
  throw std::out_of_range("no verdict for claim '" + std::string(id) + "'");
}

VerdictReport verify(std::span<const DiagnosticsRecord> input, const ToleranceTable& tolerances) {
  if (input.empty()) throw Error("cannot verify an empty trajectory");
  std::vector<DiagnosticsRecord> records(input.begin(), input.end());
  const Reference ref = reference_of(records.front());
  for (auto& r : records) apply_reference(r, ref);

  const auto& first = records.front();
  const auto& last = records.back();
  const double a0 = ref.area0;
  const double l0 = first.summary.length;
  const double lambda0 = first.summary.lambda;
  const double mu = kPi / a0 + 1.0;
  const double scale_l2 = l0 * l0;
  const double floor_abs = tolerances.get("deficit_floor") * scale_l2;

  std::map<std::string_view, Worst> worst;
  std::map<std::string_view, std::string> notes;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const auto& s = r.summary;
    const double t = r.t;
    worst["area_conservation"].add(-std::abs(s.area / a0 - 1.0), t);
    worst["lambda_bound"].add(r.lambda_bound_margin / (kPi / a0), t);
    worst["kappa_min_bound"].add(s.kappa_min / (ref.kappa_min0 * std::exp(-mu * t)) - 1.0, t);
    worst["gage_inequality"].add(r.residuals.gage / (kPi * s.length / s.area), t);
    worst["pan_yang_inequality"].add(r.residuals.pan_yang / ((s.length * s.length - 2.0 * kPi * s.area) / kPi), t);
    worst["isoperimetric_inequality"].add(s.deficit / (s.length * s.length), t);
    worst["bonnesen_inequality"].add(r.residuals.bonnesen / (s.length * s.length), t);
    worst["median_curvature_bound"].add(r.kstar_margin / (s.length / s.area), t);
    worst["closing_condition"].add(-r.closing_residual, t);

    if (i == 0) continue;
    const auto& p = records[i - 1].summary;
    worst["length_monotone"].add((p.length - s.length) / l0, t);
    worst["lambda_monotone"].add((s.lambda - p.lambda) / lambda0, t);
    if (p.deficit > floor_abs) {
      worst["deficit_monotone"].add((p.deficit - s.deficit) / scale_l2, t);
    } else if (s.deficit > floor_abs) {
      worst["deficit_monotone"].add((floor_abs - s.deficit) / scale_l2, t);
    }
  }

  // Decay rate of the deficit.
  {
    std::vector<std::pair<double, double>> series;
    series.reserve(records.size());
    for (const auto& r : records) series.emplace_back(r.t, r.summary.deficit);
    const auto slope = decay_rate(series, floor_abs);
    const double bound = -kPi / (a0 * l0);
    if (slope) {
      worst["deficit_rate"].add(bound - *slope, last.t);
      notes["deficit_rate"] = "fitted slope " + std::to_string(*slope) + ", bound " + std::to_string(bound);
    } else if (first.summary.deficit <= floor_abs) {
      notes["deficit_rate"] = "deficit at floor from the start";
    } else {
      worst["deficit_rate"].add(-std::numeric_limits<double>::infinity(), last.t);
      notes["deficit_rate"] = "fewer than ten samples above the deficit floor";
    }
  }

  // Sobolev energy against its maximum over the burn-in window.
  {
    const double t_burn = first.t + tolerances.get("burn_in_fraction") * (last.t - first.t);
    double burn_max = 0.0;
    for (const auto& r : records) {
      if (r.t <= t_burn) burn_max = std::max(burn_max, r.summary.sobolev);
    }
    const double denom = std::max(burn_max, 1e-12 * 2.0 * kPi * first.summary.kappa_max * first.summary.kappa_max);
    for (const auto& r : records) {
      if (r.t > t_burn) worst["sobolev_bounded"].add(1.0 - r.summary.sobolev / denom, r.t);
    }
  }

  // Terminal limits.
  {
    const double kappa_limit = std::sqrt(kPi / a0);
    const double radius_limit = std::sqrt(a0 / kPi);
    const auto& s = last.summary;
    worst["limit_kappa"].add(-std::max(std::abs(s.kappa_max - kappa_limit), std::abs(s.kappa_min - kappa_limit)),
                             last.t);
    worst["limit_lambda"].add(-std::abs(s.lambda - kPi / a0), last.t);
    worst["limit_radii"].add(-std::max(std::abs(s.r_in - radius_limit), std::abs(s.r_out - radius_limit)), last.t);
  }

  VerdictReport report;
  for (const auto& claim : kClaims) {
    Verdict v;
    v.id = std::string(claim.id);
    v.statement = std::string(claim.statement);
    v.tolerance = tolerances.get(claim.id);
    const auto it = worst.find(claim.id);
    if (it == worst.end() || !it->second.seen) {
      v.pass = true;
      v.worst_margin = 0.0;
      v.worst_time = last.t;
      if (notes.find(claim.id) == notes.end()) v.note = "no samples to compare";
    } else {
      v.worst_margin = it->second.margin;
      v.worst_time = it->second.time;
      v.pass = is_strict(claim.id) && v.tolerance == 0.0 ? v.worst_margin > 0.0 : v.worst_margin >= -v.tolerance;
    }
    if (const auto n = notes.find(claim.id); n != notes.end()) v.note = n->second;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace areaflow
