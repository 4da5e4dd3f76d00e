#include "areaflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "areaflow/enclosing.hpp"
#include "areaflow/errors.hpp"
#include "areaflow/spectral.hpp"

namespace areaflow {

double length(const CurvatureProfile& kappa) {
  double sum = 0.0;
  for (double k : kappa.values()) sum += 1.0 / k;
  return sum * kappa.grid().spacing();
}

double radius_square_integral(const CurvatureProfile& kappa) {
  double sum = 0.0;
  for (double k : kappa.values()) sum += 1.0 / (k * k);
  return sum * kappa.grid().spacing();
}

double nonlocal_lambda(const CurvatureProfile& kappa) {
  return 2.0 * std::numbers::pi / radius_square_integral(kappa);
}

double total_curvature(const CurvatureProfile& kappa) {
  double sum = 0.0;
  for (double k : kappa.values()) sum += k;
  return sum * kappa.grid().spacing();
}

double enclosed_area(const Polyline& poly) {
  const std::size_t n = poly.points.size();
  if (n < 3) return 0.0;
  std::vector<spectral::Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = {poly.points[j].x, poly.points[j].y};
  const auto dz = spectral::derivative(z);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += z[j].real() * dz[j].imag() - z[j].imag() * dz[j].real();
  }
  return 0.5 * sum * (2.0 * std::numbers::pi / static_cast<double>(n));
}

double polygon_area(const Polyline& poly) {
  const auto& p = poly.points;
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return 0.5 * sum;
}

double median_curvature(const CurvatureProfile& kappa) {
  const auto values = kappa.values();
  const std::size_t n = values.size();
  const std::size_t width = n / 2;
  // Sliding-window minimum over the doubled sequence.
  std::deque<std::size_t> window;
  double best = 0.0;
  for (std::size_t i = 0; i < n + width - 1; ++i) {
    const double v = values[i % n];
    while (!window.empty() && values[window.back() % n] >= v) window.pop_back();
    window.push_back(i);
    if (window.front() + width <= i) window.pop_front();
    if (i + 1 >= width) best = std::max(best, values[window.front() % n]);
  }
  return best;
}

Radii radii(const Polyline& poly, std::uint64_t seed) {
  const auto& pts = poly.points;
  if (pts.size() < 3) throw GeometryError("radii need at least three vertices");
  double extent = 0.0;
  for (const auto& p : pts) {
    extent = std::max(extent, std::hypot(p.x - pts[0].x, p.y - pts[0].y));
  }
  if (!(std::abs(polygon_area(poly)) > 1e-12 * extent * extent)) {
    throw GeometryError("degenerate polygon: vertices are collinear");
  }

  const Circle outer = smallest_enclosing_circle(pts, seed);

  std::vector<HalfPlane> planes;
  if (poly.tangent_angles.size() == pts.size()) {
    planes.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Point normal{std::sin(poly.tangent_angles[j]), -std::cos(poly.tangent_angles[j])};
      planes.push_back({normal, normal.x * pts[j].x + normal.y * pts[j].y});
    }
  } else {
    planes = edge_half_planes(pts);
  }
  const Circle inner = chebyshev_center(planes);
  return {inner.radius, outer.radius};
}

InequalityResiduals inequality_residuals(const CurvatureProfile& kappa, const Polyline& poly,
                                         std::uint64_t seed) {
  return measure(kappa, poly, StencilOrder::second, seed).residuals;
}

double sobolev_energy(const CurvatureProfile& kappa, StencilOrder stencil) {
  const double h = kappa.grid().spacing();
  const auto dk = derivative(kappa.values(), h, 1, stencil);
  double sum = 0.0;
  for (double d : dk) sum += d * d;
  return sum * h;
}

GeometryReport measure(const CurvatureProfile& kappa, const Polyline& poly, StencilOrder stencil,
                       std::uint64_t seed) {
  constexpr double pi = std::numbers::pi;
  GeometryReport out;
  auto& s = out.summary;
  s.length = length(kappa);
  s.area = enclosed_area(poly);
  const double rho2 = radius_square_integral(kappa);
  s.lambda = 2.0 * pi / rho2;
  s.deficit = s.length * s.length - 4.0 * pi * s.area;
  s.ratio = s.length * s.length / (4.0 * pi * s.area);
  s.kappa_min = kappa.min();
  s.kappa_max = kappa.max();
  s.kappa_star = median_curvature(kappa);
  const Radii r = radii(poly, seed);
  s.r_in = r.inner;
  s.r_out = r.outer;
  s.sobolev = sobolev_energy(kappa, stencil);

  auto& res = out.residuals;
  res.gage = total_curvature(kappa) - pi * s.length / s.area;
  res.pan_yang = rho2 - (s.length * s.length - 2.0 * pi * s.area) / pi;
  res.isoperimetric = s.deficit;
  const double spread = s.r_out - s.r_in;
  res.bonnesen = s.deficit - pi * pi * spread * spread;
  return out;
}

}  // namespace areaflow
