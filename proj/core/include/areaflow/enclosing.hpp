#pragma once

// Smallest enclosing circle and largest inscribed circle of planar point sets.

#include <cstdint>
#include <span>

#include "areaflow/reconstruction.hpp"

namespace areaflow {

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Smallest circle containing every point. Randomized incremental
/// construction; the shuffle is drawn from `seed`.
Circle smallest_enclosing_circle(std::span<const Point> points, std::uint64_t seed = 0);

/// A half-plane {p : normal . p <= offset} with unit normal.
struct HalfPlane {
  Point normal;
  double offset = 0.0;
};

/// Largest circle inside the intersection of half-planes whose normals are
/// ordered counterclockwise and surround the origin (as the outward edge
/// normals of a convex counterclockwise polygon do). Solved as the linear
/// program max r s.t. normal_i . c + r <= offset_i.
Circle chebyshev_center(std::span<const HalfPlane> planes);

/// Outward edge half-planes of a convex counterclockwise polygon; edges of
/// zero length are skipped.
std::vector<HalfPlane> edge_half_planes(std::span<const Point> polygon);

}  // namespace areaflow
