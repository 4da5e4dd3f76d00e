#include "areaflow/theta_grid.hpp"

#include "areaflow/errors.hpp"

namespace areaflow {

ThetaGrid::ThetaGrid(std::size_t n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw GridError("grid size must be even and >= 8 (got " + std::to_string(n) + ")");
  }
}

ThetaGrid make_theta_grid(std::size_t n) { return ThetaGrid(n); }

}  // namespace areaflow
