#include "areaflow/curve_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "areaflow/errors.hpp"

namespace areaflow {
namespace {

struct FirstHarmonic {
  double a;
  double b;
};

// Coefficients of a*cos(theta) + b*sin(theta) in the samples.
FirstHarmonic first_harmonic(const ThetaGrid& grid, std::span<const double> f) {
  double a = 0.0;
  double b = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double theta = grid.node(j);
    a += f[j] * std::cos(theta);
    b += f[j] * std::sin(theta);
  }
  const double scale = 2.0 / static_cast<double>(f.size());
  return {a * scale, b * scale};
}

std::vector<double> without_first_harmonic(const ThetaGrid& grid, std::span<const double> f) {
  const auto [a, b] = first_harmonic(grid, f);
  std::vector<double> out(f.begin(), f.end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double theta = grid.node(j);
    out[j] -= a * std::cos(theta) + b * std::sin(theta);
  }
  return out;
}

}  // namespace

CurvatureProfile::CurvatureProfile(ThetaGrid grid, std::vector<double> kappa)
    : grid_(grid), kappa_(std::move(kappa)) {
  if (kappa_.size() != grid_.size()) {
    throw GridError("curvature sample count " + std::to_string(kappa_.size()) +
                    " does not match grid size " + std::to_string(grid_.size()));
  }
  for (std::size_t j = 0; j < kappa_.size(); ++j) {
    if (!(kappa_[j] > 0.0) || !std::isfinite(kappa_[j])) {
      throw ConvexityError("curvature must be positive and finite (node " + std::to_string(j) + ")", j);
    }
  }
}

double CurvatureProfile::min() const { return *std::min_element(kappa_.begin(), kappa_.end()); }
double CurvatureProfile::max() const { return *std::max_element(kappa_.begin(), kappa_.end()); }

SupportFunction sample_support(const ThetaGrid& grid, const FourierSeries& series) {
  std::vector<double> h(grid.size(), series.r0);
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double theta = grid.node(j);
    for (const auto& mode : series.harmonics) {
      h[j] += mode.a * std::cos(mode.k * theta) + mode.b * std::sin(mode.k * theta);
    }
  }
  return SupportFunction{grid, std::move(h), series};
}

void validate_shape(const ShapeSpec& spec) {
  std::visit(
      [](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, CircleShape>) {
          if (!(shape.radius > 0.0)) throw ConfigError("circle radius must be positive", "shape.R");
        } else if constexpr (std::is_same_v<T, EllipseShape>) {
          if (!(shape.a > 0.0)) throw ConfigError("ellipse semi-axis a must be positive", "shape.a");
          if (!(shape.b > 0.0)) throw ConfigError("ellipse semi-axis b must be positive", "shape.b");
        } else if constexpr (std::is_same_v<T, FourierShape>) {
          if (!(shape.series.r0 > 0.0)) throw ConfigError("fourier base radius must be positive", "shape.r0");
          for (const auto& mode : shape.series.harmonics) {
            if (mode.k < 2) throw ConfigError("fourier harmonics must have k >= 2", "shape.harmonics");
          }
        } else {
          if (shape.kappa.empty()) throw ConfigError("raw shape needs curvature samples", "shape.kappa");
        }
      },
      spec);
}

CurvatureProfile support_to_curvature(const SupportFunction& support, StencilOrder stencil) {
  const ThetaGrid& grid = support.grid;
  if (support.h.size() != grid.size()) {
    throw GridError("support function sample count does not match grid size");
  }
  std::vector<double> rho(grid.size());
  if (support.coefficients) {
    const auto& series = *support.coefficients;
    for (std::size_t j = 0; j < rho.size(); ++j) {
      const double theta = grid.node(j);
      double value = series.r0;
      for (const auto& mode : series.harmonics) {
        const double gain = 1.0 - static_cast<double>(mode.k) * mode.k;
        value += gain * (mode.a * std::cos(mode.k * theta) + mode.b * std::sin(mode.k * theta));
      }
      rho[j] = value;
    }
  } else {
    // The first harmonic of h is a translation; the stencil would not annihilate it exactly.
    const auto h = without_first_harmonic(grid, support.h);
    const auto h2 = derivative(h, grid.spacing(), 2, stencil);
    for (std::size_t j = 0; j < rho.size(); ++j) rho[j] = h[j] + h2[j];
  }

  std::vector<double> kappa(rho.size());
  for (std::size_t j = 0; j < rho.size(); ++j) {
    if (!(rho[j] > 0.0)) {
      throw ConvexityError("support function is not strictly convex: h + h'' <= 0 at node " +
                               std::to_string(j),
                           j);
    }
    kappa[j] = 1.0 / rho[j];
  }
  return CurvatureProfile(grid, std::move(kappa));
}

std::complex<double> closing_integral(const CurvatureProfile& kappa) {
  const ThetaGrid& grid = kappa.grid();
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < kappa.size(); ++j) {
    const double theta = grid.node(j);
    sum += std::complex<double>(std::cos(theta), std::sin(theta)) / kappa[j];
  }
  return sum * grid.spacing();
}

double closing_residual(const CurvatureProfile& kappa) { return std::abs(closing_integral(kappa)); }

double closing_tolerance(const CurvatureProfile& kappa) {
  return 1e-8 * 2.0 * std::numbers::pi / kappa.min();
}

CurvatureProfile project_closing(const CurvatureProfile& kappa) {
  const ThetaGrid& grid = kappa.grid();
  std::vector<double> rho(kappa.size());
  for (std::size_t j = 0; j < rho.size(); ++j) rho[j] = 1.0 / kappa[j];

  const auto [a, b] = first_harmonic(grid, rho);
  // A harmonic at rounding level means the profile already closes.
  const double rho_max = 1.0 / kappa.min();
  const double noise = static_cast<double>(rho.size()) * std::numeric_limits<double>::epsilon() * rho_max;
  if (std::hypot(a, b) <= noise) return kappa;

  double min_rho = rho[0];
  for (std::size_t j = 0; j < rho.size(); ++j) {
    const double theta = grid.node(j);
    rho[j] -= a * std::cos(theta) + b * std::sin(theta);
    min_rho = std::min(min_rho, rho[j]);
  }
  if (!(min_rho > 0.0)) {
    throw ProjectionError("projection breaks convexity (min radius of curvature " +
                              std::to_string(min_rho) + ")",
                          min_rho);
  }
  std::vector<double> out(rho.size());
  for (std::size_t j = 0; j < rho.size(); ++j) out[j] = 1.0 / rho[j];
  return CurvatureProfile(grid, std::move(out));
}

CurvatureProfile builtin_shape(const ShapeSpec& spec, const ThetaGrid& grid) {
  validate_shape(spec);
  return std::visit(
      [&](const auto& shape) -> CurvatureProfile {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, CircleShape>) {
          return CurvatureProfile(grid, std::vector<double>(grid.size(), 1.0 / shape.radius));
        } else if constexpr (std::is_same_v<T, EllipseShape>) {
          const double a2 = shape.a * shape.a;
          const double b2 = shape.b * shape.b;
          std::vector<double> kappa(grid.size());
          for (std::size_t j = 0; j < kappa.size(); ++j) {
            const double c = std::cos(grid.node(j));
            const double s = std::sin(grid.node(j));
            const double h = std::sqrt(a2 * c * c + b2 * s * s);
            kappa[j] = h * h * h / (a2 * b2);
          }
          return CurvatureProfile(grid, std::move(kappa));
        } else if constexpr (std::is_same_v<T, FourierShape>) {
          return support_to_curvature(sample_support(grid, shape.series));
        } else {
          auto projected = project_closing(CurvatureProfile(grid, shape.kappa));
          if (closing_residual(projected) > closing_tolerance(projected)) {
            throw Error("raw curvature samples do not satisfy the closing condition after projection");
          }
          return projected;
        }
      },
      spec);
}

}  // namespace areaflow
