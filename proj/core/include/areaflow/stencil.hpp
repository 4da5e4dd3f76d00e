#pragma once

#include <span>
#include <vector>

namespace areaflow {

enum class StencilOrder { second = 2, fourth = 4 };

/// Periodic central difference of `f` (first or second derivative) on a
/// uniform grid with the given spacing.
std::vector<double> derivative(std::span<const double> f, double spacing, int order,
                               StencilOrder stencil = StencilOrder::second);

}  // namespace areaflow
