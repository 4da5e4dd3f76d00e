#pragma once

#include <cstddef>
#include <numbers>

namespace areaflow {

/// Uniform periodic grid over the tangent angle, theta_j = 2*pi*j/n.
class ThetaGrid {
 public:
  /// Throws GridError unless n is even and at least 8.
  explicit ThetaGrid(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return 2.0 * std::numbers::pi / static_cast<double>(n_); }
  double node(std::size_t j) const noexcept { return spacing() * static_cast<double>(j); }

  friend bool operator==(const ThetaGrid&, const ThetaGrid&) = default;

 private:
  std::size_t n_;
};

ThetaGrid make_theta_grid(std::size_t n);

}  // namespace areaflow
