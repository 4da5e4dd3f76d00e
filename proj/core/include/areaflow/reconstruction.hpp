#pragma once

// Rebuilding the plane curve X(theta) = (C1, C2) + int_0^theta exp(i phi)/kappa(phi) dphi.
//
// Orientation: the tangent at theta is (cos theta, sin theta) and theta
// increases counterclockwise, so the curve is traversed counterclockwise and
// the inward normal is (-sin theta, cos theta).

#include <vector>

#include "areaflow/flow_state.hpp"

namespace areaflow {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Closed counterclockwise curve samples.
///
/// `end` is the cumulative point at theta = 2*pi; it coincides with the
/// first point exactly when the curve closes. `tangent_angles`, when not
/// empty, holds the tangent direction at every point.
struct Polyline {
  std::vector<Point> points;
  Point end;
  std::vector<double> tangent_angles;

  /// Closed polyline through `pts` (end = first point), no tangent data.
  static Polyline closed(std::vector<Point> pts);
};

Polyline reconstruct(const CurvatureProfile& kappa, const Anchor& anchor = {});

/// Euclidean gap between the cumulative end point and the start.
double closure_error(const Polyline& poly);

/// Explicit Euler update of the anchor integrals over `dt`:
/// c1 -= dt * d/dtheta(kappa - lambda/kappa) and c2 += dt * (kappa - lambda/kappa), both at theta = 0.
Anchor advance_anchor(const FlowState& state, double dt, StencilOrder stencil = StencilOrder::second);

}  // namespace areaflow
