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

#ifndef SAFEMAP_GEOM_HPP_
#define SAFEMAP_GEOM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "safemap/types.hpp"

namespace safemap::geom {

/// Integer pixel coordinate, (col,row).
struct PixelCoord {
  int x = 0;
  int y = 0;
};

inline bool operator==(PixelCoord a, PixelCoord b) { return a.x == b.x && a.y == b.y; }

/// Row-major boolean grid.
struct PixelMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;

  PixelMask() = default;
  PixelMask(int w, int h) : width(w), height(h), bits(static_cast<size_t>(w) * h, 0) {}

  bool at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x] != 0; }
  void set(int x, int y) { bits[static_cast<size_t>(y) * width + x] = 1; }
  size_t count() const;
};

/// Deduplicated pixel list in a deterministic order (the order rasterization
/// emitted them). Tie-breaking in nearest/angular searches follows this order.
struct PixelSet {
  std::vector<PixelCoord> points;

  bool empty() const { return points.empty(); }
  size_t size() const { return points.size(); }
};

/// Even-odd point-in-polygon test. Points exactly on the boundary report
/// inside. Self-intersecting rings are accepted and interpreted even-odd.
bool point_in_polygon(const Point2& p, const SafetyMargin& ring);

/// Pixel (c,r) is set iff its center (c+0.5, r+0.5) passes point_in_polygon.
PixelMask rasterize_area(const SafetyMargin& m, int width, int height);

/// 8-connected Bresenham traversal of each ring edge (vertices rounded to
/// the nearest pixel), clipped to the grid and deduplicated. Order is edge
/// order, then along-edge order.
PixelSet rasterize_ring(const SafetyMargin& m, int width, int height);

/// Same as rasterize_ring but over an open polyline.
PixelSet rasterize_polyline(const Trajectory& t, int width, int height);

/// Member of s nearest to p (Euclidean), ties broken by set order.
/// Returns the winning pixel as a point plus its distance.
/// Throws ArgumentError when s is empty.
std::pair<Point2, double> nearest_point(const Point2& p, const PixelSet& s);

/// Unsigned angle between two direction vectors, in [0, pi].
/// Throws ArgumentError on a zero vector.
double angular_difference(const Point2& ref_dir, const Point2& v);

/// Squared Euclidean distance between lattice points, exact in int64.
inline long long dist2(PixelCoord a, PixelCoord b) {
  const long long dx = a.x - b.x;
  const long long dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Exact three-way comparison of two angles given as (dot, |cross|) pairs
/// against a common reference vector. Returns -1 when the first angle is
/// smaller. Integer-only, so candidate selection is reproducible
/// bit-for-bit (no atan2 rounding).
inline int angle_compare_parts(long long du, long long cu, long long dv, long long cv) {
  const int su = (du > 0) - (du < 0);
  const int sv = (dv > 0) - (dv < 0);
  // A positive dot product means an angle below pi/2, zero exactly pi/2,
  // negative above; only equal-sign cases need the cross-multiplied test.
  if (su != sv) return su > sv ? -1 : 1;
  if (su == 0) return 0;
  // Within one half-plane, angle(u) < angle(v) iff cu*dv < cv*du; the same
  // signed comparison covers the obtuse case (both dots negative).
  const __int128 lhs = static_cast<__int128>(cu) * dv;
  const __int128 rhs = static_cast<__int128>(cv) * du;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -1 : 1;
}

/// Exact three-way comparison of angular_difference(ref,u) versus
/// angular_difference(ref,v) for integer vectors.
/// Returns -1 / 0 / +1. All vectors must be non-zero.
int angle_compare(long long rx, long long ry, long long ux, long long uy, long long vx,
                  long long vy);

}  // namespace safemap::geom

#endif  // SAFEMAP_GEOM_HPP_
