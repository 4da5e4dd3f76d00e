#pragma once

// Scalar geometry of a convex curve given by its curvature profile and its
// reconstruction. All theta integrals use the periodic trapezoid rule.

#include <cstdint>

#include "areaflow/curve_model.hpp"
#include "areaflow/reconstruction.hpp"

namespace areaflow {

/// L = int 1/kappa dtheta.
double length(const CurvatureProfile& kappa);

/// lambda = 2*pi / int 1/kappa^2 dtheta.
double nonlocal_lambda(const CurvatureProfile& kappa);

/// int kappa dtheta (equals the integral of kappa^2 ds).
double total_curvature(const CurvatureProfile& kappa);

/// int 1/kappa^2 dtheta (equals the integral of 1/kappa ds).
double radius_square_integral(const CurvatureProfile& kappa);

/// 1/2 of the integral of (x dy - y dx) over the trigonometric interpolant
/// through the vertices. Positive for counterclockwise curves.
double enclosed_area(const Polyline& poly);

/// Plain shoelace area of the vertex polygon.
double polygon_area(const Polyline& poly);

/// Largest alpha such that kappa > alpha on some theta-window of length pi:
/// the maximum over all n/2-sample windows of the window minimum.
double median_curvature(const CurvatureProfile& kappa);

struct Radii {
  double inner = 0.0;
  double outer = 0.0;
};

/// Outradius from the smallest circle enclosing the vertices. Inradius from
/// the Chebyshev center of the supporting half-planes: the tangent lines at
/// the vertices when the polyline carries tangent angles, otherwise its edges.
/// Throws GeometryError for degenerate (collinear) input.
Radii radii(const Polyline& poly, std::uint64_t seed = 0);

/// Each residual is LHS - RHS of its inequality, so validity means >= 0.
struct InequalityResiduals {
  double gage = 0.0;           // int kappa^2 ds - pi L / A
  double pan_yang = 0.0;       // int 1/kappa ds - (L^2 - 2 pi A) / pi
  double isoperimetric = 0.0;  // L^2 - 4 pi A
  double bonnesen = 0.0;       // L^2 - 4 pi A - pi^2 (r_out - r_in)^2
};

InequalityResiduals inequality_residuals(const CurvatureProfile& kappa, const Polyline& poly,
                                         std::uint64_t seed = 0);

/// int (kappa')^2 dtheta with kappa' from the periodic stencil.
double sobolev_energy(const CurvatureProfile& kappa, StencilOrder stencil = StencilOrder::second);

struct GeometricSummary {
  double length = 0.0;
  double area = 0.0;
  double lambda = 0.0;
  double deficit = 0.0;  // L^2 - 4 pi A
  double ratio = 0.0;    // L^2 / (4 pi A)
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  double kappa_star = 0.0;
  double r_in = 0.0;
  double r_out = 0.0;
  double sobolev = 0.0;
};

struct GeometryReport {
  GeometricSummary summary;
  InequalityResiduals residuals;
};

/// Every quantity above, evaluated once on shared samples.
GeometryReport measure(const CurvatureProfile& kappa, const Polyline& poly,
                       StencilOrder stencil = StencilOrder::second, std::uint64_t seed = 0);

}  // namespace areaflow
