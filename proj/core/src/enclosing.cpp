#include "areaflow/enclosing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "areaflow/errors.hpp"

namespace areaflow {
namespace {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool contains(const Circle& c, Point q) {
  return distance(c.center, q) <= c.radius * (1.0 + 1e-12) + 1e-300;
}

Circle diameter_circle(Point a, Point b) {
  return {{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}, 0.5 * distance(a, b)};
}

Circle circumcircle(Point a, Point b, Point c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  const double scale = std::max({bx * bx + by * by, cx * cx + cy * cy});
  if (std::abs(d) <= 1e-14 * scale) {
    // Collinear: the widest pair spans the circle.
    Circle best = diameter_circle(a, b);
    for (const auto& cand : {diameter_circle(a, c), diameter_circle(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const Point center{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
  return {center, std::max({distance(center, a), distance(center, b), distance(center, c)})};
}

using Mat3 = std::array<std::array<double, 3>, 3>;

bool invert(const Mat3& m, Mat3& inv) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (std::abs(det) < 1e-300) return false;
  const double r = 1.0 / det;
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * r;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * r;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * r;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * r;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * r;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * r;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * r;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * r;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * r;
  return true;
}

}  // namespace

Circle smallest_enclosing_circle(std::span<const Point> points, std::uint64_t seed) {
  if (points.empty()) throw GeometryError("enclosing circle of an empty point set");
  std::vector<Point> p(points.begin(), points.end());
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);

  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (contains(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (contains(c, p[j])) continue;
      c = diameter_circle(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!contains(c, p[k])) c = circumcircle(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

std::vector<HalfPlane> edge_half_planes(std::span<const Point> polygon) {
  std::vector<HalfPlane> planes;
  planes.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point a = polygon[i];
    const Point b = polygon[(i + 1) % polygon.size()];
    const double len = distance(a, b);
    if (len == 0.0) continue;
    const Point normal{(b.y - a.y) / len, -(b.x - a.x) / len};
    planes.push_back({normal, normal.x * a.x + normal.y * a.y});
  }
  return planes;
}

// Revised simplex on the dual: min sum offset_i y_i subject to
// sum y_i (n_i, 1) = (0, 0, 1), y >= 0. The basis holds three half-planes;
// its simplex multipliers are the primal candidate (center, radius).
Circle chebyshev_center(std::span<const HalfPlane> planes) {
  const std::size_t m = planes.size();
  if (m < 3) throw GeometryError("inscribed circle needs at least three half-planes");

  // Work relative to the mean foot point for conditioning.
  Point origin{};
  for (const auto& hp : planes) {
    origin.x += hp.normal.x * hp.offset;
    origin.y += hp.normal.y * hp.offset;
  }
  origin.x /= static_cast<double>(m);
  origin.y /= static_cast<double>(m);
  std::vector<double> offset(m);
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    offset[i] = planes[i].offset - (planes[i].normal.x * origin.x + planes[i].normal.y * origin.y);
    scale = std::max(scale, std::abs(offset[i]));
  }
  if (!(scale > 0.0)) throw GeometryError("degenerate half-plane set");

  // Starting basis: three normals whose triangle contains the origin.
  const double base = std::atan2(planes[0].normal.y, planes[0].normal.x);
  auto rel_angle = [&](std::size_t i) {
    double a = std::atan2(planes[i].normal.y, planes[i].normal.x) - base;
    while (a < 0.0) a += 2.0 * std::numbers::pi;
    while (a >= 2.0 * std::numbers::pi) a -= 2.0 * std::numbers::pi;
    return a;
  };
  std::size_t below = 0, above = m;
  double best_below = -1.0, best_above = 10.0;
  for (std::size_t i = 1; i < m; ++i) {
    const double a = rel_angle(i);
    if (a < std::numbers::pi) {
      if (a > best_below) best_below = a, below = i;
    } else if (a < best_above) {
      best_above = a, above = i;
    }
  }
  if (below == 0 || above == m || best_above - best_below >= std::numbers::pi) {
    throw GeometryError("half-planes do not bound a region (degenerate polygon)");
  }

  std::array<std::size_t, 3> basis{0, below, above};
  auto column = [&](std::size_t i) {
    return std::array<double, 3>{planes[i].normal.x, planes[i].normal.y, 1.0};
  };

  const double tol = 1e-12 * scale;
  const std::size_t max_iter = 100 * m + 100;
  std::array<double, 3> pi{};
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_iter) throw GeometryError("inscribed-circle linear program did not converge");
    Mat3 rows{}, inv{};
    for (int k = 0; k < 3; ++k) rows[k] = column(basis[k]);
    if (!invert(rows, inv)) throw GeometryError("singular basis in inscribed-circle linear program");
    for (int r = 0; r < 3; ++r) {
      pi[r] = inv[r][0] * offset[basis[0]] + inv[r][1] * offset[basis[1]] + inv[r][2] * offset[basis[2]];
    }
    std::array<double, 3> weight{};
    for (int k = 0; k < 3; ++k) weight[k] = std::max(0.0, inv[2][k]);

    // Entering half-plane: most violated (Bland's smallest index once cycling is suspected).
    const bool bland = iter > 10 * m;
    std::size_t entering = m;
    double worst = -tol;
    for (std::size_t i = 0; i < m; ++i) {
      const double reduced = offset[i] - (planes[i].normal.x * pi[0] + planes[i].normal.y * pi[1] + pi[2]);
      if (reduced < worst) {
        entering = i;
        if (bland) break;
        worst = reduced;
      }
    }
    if (entering == m) break;

    const auto g = column(entering);
    std::array<double, 3> dir{};
    for (int k = 0; k < 3; ++k) dir[k] = inv[0][k] * g[0] + inv[1][k] * g[1] + inv[2][k] * g[2];
    int leaving = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
      if (dir[k] > 1e-14) {
        const double r = weight[k] / dir[k];
        if (r < ratio) ratio = r, leaving = k;
      }
    }
    if (leaving < 0) throw GeometryError("half-planes do not bound a region");
    basis[static_cast<std::size_t>(leaving)] = entering;
  }
  return {{pi[0] + origin.x, pi[1] + origin.y}, pi[2]};
}

}  // namespace areaflow
