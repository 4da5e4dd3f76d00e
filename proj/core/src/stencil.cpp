#include "areaflow/stencil.hpp"

#include <stdexcept>

namespace areaflow {

std::vector<double> derivative(std::span<const double> f, double spacing, int order,
                               StencilOrder stencil) {
  if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  const std::size_t n = f.size();
  std::vector<double> out(n);
  if (n == 0) return out;
  auto at = [&](std::size_t j, long offset) {
    const long idx = (static_cast<long>(j) + offset) % static_cast<long>(n);
    return f[static_cast<std::size_t>(idx < 0 ? idx + static_cast<long>(n) : idx)];
  };

  if (stencil == StencilOrder::second) {
    if (order == 1) {
      const double scale = 1.0 / (2.0 * spacing);
      for (std::size_t j = 0; j < n; ++j) out[j] = (at(j, 1) - at(j, -1)) * scale;
    } else {
      const double scale = 1.0 / (spacing * spacing);
      for (std::size_t j = 0; j < n; ++j) out[j] = (at(j, 1) - 2.0 * f[j] + at(j, -1)) * scale;
    }
    return out;
  }

  if (order == 1) {
    const double scale = 1.0 / (12.0 * spacing);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = (-at(j, 2) + 8.0 * at(j, 1) - 8.0 * at(j, -1) + at(j, -2)) * scale;
    }
  } else {
    const double scale = 1.0 / (12.0 * spacing * spacing);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = (-at(j, 2) + 16.0 * at(j, 1) - 30.0 * f[j] + 16.0 * at(j, -1) - at(j, -2)) * scale;
    }
  }
  return out;
}

}  // namespace areaflow
