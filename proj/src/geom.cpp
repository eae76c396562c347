// Copyright 2026 safemap contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "safemap/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "safemap/errors.hpp"

namespace safemap::geom {

size_t PixelMask::count() const {
  return static_cast<size_t>(std::count(bits.begin(), bits.end(), uint8_t{1}));
}

namespace {

// Exact test for p lying on segment [a,b]. No epsilon: "on the boundary"
// means exactly representable on it, which holds for the grid-aligned
// coordinates annotations are made of.
bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cross != 0.0) return false;
  const double dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  if (dot < 0.0) return false;
  const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot <= len2;
}

}  // namespace

bool point_in_polygon(const Point2& p, const SafetyMargin& ring) {
  const auto& v = ring.vertices;
  const size_t n = v.size();

  for (size_t i = 0; i < n; ++i) {
    if (on_segment(p, v[i], v[(i + 1) % n])) return true;
  }

  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

PixelMask rasterize_area(const SafetyMargin& m, int width, int height) {
  PixelMask mask(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (point_in_polygon({c + 0.5, r + 0.5}, m)) mask.set(c, r);
    }
  }
  return mask;
}

namespace {

// Appends the 8-connected Bresenham line from a to b (both endpoints
// included), skipping out-of-grid pixels and pixels already seen.
void bresenham(PixelCoord a, PixelCoord b, int width, int height, std::vector<uint8_t>& seen,
               std::vector<PixelCoord>& out) {
  int x0 = a.x, y0 = a.y;
  const int x1 = b.x, y1 = b.y;
  const int dx = std::abs(x1 - x0);
  const int sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0);
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    if (x0 >= 0 && x0 < width && y0 >= 0 && y0 < height) {
      uint8_t& s = seen[static_cast<size_t>(y0) * width + x0];
      if (!s) {
        s = 1;
        out.push_back({x0, y0});
      }
    }
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

PixelCoord round_to_pixel(const Point2& p) {
  return {static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))};
}

PixelSet rasterize_path(const std::vector<Point2>& pts, bool closed, int width, int height) {
  PixelSet set;
  if (pts.empty()) return set;
  std::vector<uint8_t> seen(static_cast<size_t>(width) * height, 0);
  const size_t n = pts.size();
  if (n == 1) {
    bresenham(round_to_pixel(pts[0]), round_to_pixel(pts[0]), width, height, seen, set.points);
    return set;
  }
  const size_t edges = closed ? n : n - 1;
  for (size_t i = 0; i < edges; ++i) {
    bresenham(round_to_pixel(pts[i]), round_to_pixel(pts[(i + 1) % n]), width, height, seen,
              set.points);
  }
  return set;
}

}  // namespace

PixelSet rasterize_ring(const SafetyMargin& m, int width, int height) {
  return rasterize_path(m.vertices, true, width, height);
}

PixelSet rasterize_polyline(const Trajectory& t, int width, int height) {
  return rasterize_path(t.points, false, width, height);
}

std::pair<Point2, double> nearest_point(const Point2& p, const PixelSet& s) {
  if (s.empty()) throw ArgumentError("nearest_point: empty pixel set");
  double best_d2 = std::numeric_limits<double>::infinity();
  PixelCoord best{};
  for (const PixelCoord& m : s.points) {
    const double dx = p.x - m.x;
    const double dy = p.y - m.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = m;
    }
  }
  return {Point2{static_cast<double>(best.x), static_cast<double>(best.y)}, std::sqrt(best_d2)};
}

double angular_difference(const Point2& ref_dir, const Point2& v) {
  if (ref_dir.x == 0.0 && ref_dir.y == 0.0) {
    throw ArgumentError("angular_difference: zero reference vector");
  }
  if (v.x == 0.0 && v.y == 0.0) {
    throw ArgumentError("angular_difference: zero vector");
  }
  const double cross = ref_dir.x * v.y - ref_dir.y * v.x;
  const double dot = ref_dir.x * v.x + ref_dir.y * v.y;
  return std::atan2(std::abs(cross), dot);
}

int angle_compare(long long rx, long long ry, long long ux, long long uy, long long vx,
                  long long vy) {
  const long long du = rx * ux + ry * uy;
  const long long dv = rx * vx + ry * vy;
  const int su = (du > 0) - (du < 0);
  const int sv = (dv > 0) - (dv < 0);
  // A positive dot product means an angle below pi/2, zero exactly pi/2,
  // negative above; only equal-sign cases need the cross-multiplied test.
  if (su != sv) return su > sv ? -1 : 1;
  if (su == 0) return 0;
  const long long cu = std::llabs(rx * uy - ry * ux);
  const long long cv = std::llabs(rx * vy - ry * vx);
  // Within one half-plane, angle(u) < angle(v) iff cu*dv < cv*du; the same
  // signed comparison covers the obtuse case (both dots negative).
  const __int128 lhs = static_cast<__int128>(cu) * dv;
  const __int128 rhs = static_cast<__int128>(cv) * du;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -1 : 1;
}

}  // namespace safemap::geom
