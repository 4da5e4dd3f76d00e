#include "areaflow/reconstruction.hpp"

#include <cmath>

#include "areaflow/geometry.hpp"
#include "areaflow/spectral.hpp"

namespace areaflow {

Polyline Polyline::closed(std::vector<Point> pts) {
  Polyline poly;
  poly.end = pts.empty() ? Point{} : pts.front();
  poly.points = std::move(pts);
  return poly;
}

Polyline reconstruct(const CurvatureProfile& kappa, const Anchor& anchor) {
  const ThetaGrid& grid = kappa.grid();
  const std::size_t n = kappa.size();
  std::vector<spectral::Complex> velocity(n);
  Polyline poly;
  poly.tangent_angles.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = grid.node(j);
    velocity[j] = spectral::Complex(std::cos(theta), std::sin(theta)) / kappa[j];
    poly.tangent_angles[j] = theta;
  }
  const auto position = spectral::antiderivative(velocity);
  poly.points.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    poly.points[j] = {anchor.c1 + position[j].real(), anchor.c2 + position[j].imag()};
  }
  const auto gap = closing_integral(kappa);
  poly.end = {poly.points[0].x + gap.real(), poly.points[0].y + gap.imag()};
  return poly;
}

double closure_error(const Polyline& poly) {
  if (poly.points.empty()) return 0.0;
  return std::hypot(poly.end.x - poly.points.front().x, poly.end.y - poly.points.front().y);
}

Anchor advance_anchor(const FlowState& state, double dt, StencilOrder stencil) {
  const auto& kappa = state.kappa;
  const double lambda = nonlocal_lambda(kappa);
  std::vector<double> speed(kappa.size());
  for (std::size_t j = 0; j < speed.size(); ++j) speed[j] = kappa[j] - lambda / kappa[j];
  const auto dspeed = derivative(speed, kappa.grid().spacing(), 1, stencil);
  Anchor next = state.anchor;
  next.c1 -= dt * dspeed[0];
  next.c2 += dt * speed[0];
  return next;
}

}  // namespace areaflow
