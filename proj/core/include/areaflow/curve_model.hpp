#pragma once

// Convex curves represented by curvature as a function of tangent angle.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "areaflow/stencil.hpp"
#include "areaflow/theta_grid.hpp"

namespace areaflow {

/// Samples of kappa(theta_j) > 0 on a ThetaGrid.
///
/// The constructor enforces strict positivity only. Whether the samples
/// close up into a curve is a separate question answered by
/// closing_residual().
class CurvatureProfile {
 public:
  /// Throws ConvexityError naming the first non-positive or non-finite
  /// sample, GridError on a size mismatch.
  CurvatureProfile(ThetaGrid grid, std::vector<double> kappa);

  const ThetaGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return kappa_; }
  std::size_t size() const noexcept { return kappa_.size(); }
  double operator[](std::size_t j) const noexcept { return kappa_[j]; }

  double min() const;
  double max() const;

 private:
  ThetaGrid grid_;
  std::vector<double> kappa_;
};

/// One Fourier mode a*cos(k theta) + b*sin(k theta).
struct Harmonic {
  int k = 2;
  double a = 0.0;
  double b = 0.0;
};

/// h(theta) = r0 + sum of harmonics.
struct FourierSeries {
  double r0 = 1.0;
  std::vector<Harmonic> harmonics;
};

/// Support function samples, optionally with the Fourier coefficients they
/// were drawn from (then h'' is taken analytically).
struct SupportFunction {
  ThetaGrid grid;
  std::vector<double> h;
  std::optional<FourierSeries> coefficients;
};

SupportFunction sample_support(const ThetaGrid& grid, const FourierSeries& series);

struct CircleShape {
  double radius = 1.0;
};
struct EllipseShape {
  double a = 2.0;
  double b = 1.0;
};
struct FourierShape {
  FourierSeries series;
};
struct RawShape {
  std::vector<double> kappa;
};

using ShapeSpec = std::variant<CircleShape, EllipseShape, FourierShape, RawShape>;

/// Throws ConfigError when radii/semi-axes are non-positive or a harmonic has k < 2.
void validate_shape(const ShapeSpec& spec);

/// kappa = 1/(h + h''). Raw samples are differentiated with the periodic
/// stencil after their first harmonic (a pure translation) is removed.
CurvatureProfile support_to_curvature(const SupportFunction& support,
                                      StencilOrder stencil = StencilOrder::second);

/// Periodic trapezoid value of the integral of exp(i theta)/kappa.
std::complex<double> closing_integral(const CurvatureProfile& kappa);

/// Modulus of closing_integral(); zero exactly when the profile closes up.
double closing_residual(const CurvatureProfile& kappa);

/// Default closing tolerance 1e-8 * 2*pi/kappa_min.
double closing_tolerance(const CurvatureProfile& kappa);

/// Removes the first harmonic of rho = 1/kappa (returns `kappa` itself when
/// that harmonic is at rounding level). Throws ProjectionError when
/// the projected rho is not strictly positive.
CurvatureProfile project_closing(const CurvatureProfile& kappa);

CurvatureProfile builtin_shape(const ShapeSpec& spec, const ThetaGrid& grid);

}  // namespace areaflow
