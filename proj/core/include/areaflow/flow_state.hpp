#pragma once

#include <cstdint>

#include "areaflow/curve_model.hpp"

namespace areaflow {

/// Translation (C1, C2) added to the reconstructed curve. Starts at the origin.
struct Anchor {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// One frame of the flow: curvature samples, co-integrated length and anchor.
struct FlowState {
  double t = 0.0;
  CurvatureProfile kappa;
  double length = 0.0;  // integrated by dL/dt alongside kappa
  Anchor anchor;
  std::int64_t step_count = 0;
};

/// State at t = 0 with the length taken from the profile.
FlowState initial_state(const CurvatureProfile& kappa);

}  // namespace areaflow
