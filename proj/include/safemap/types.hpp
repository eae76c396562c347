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

#ifndef SAFEMAP_TYPES_HPP_
#define SAFEMAP_TYPES_HPP_

#include <string>
#include <vector>

namespace safemap {

/// 2-D point in pixel coordinates. Coordinates are reals: annotations start
/// on a pixel grid but resampling produces sub-pixel positions.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

/// Ordered 2-D polyline: the dissection trajectory (DT).
/// Valid when it has >= 2 points and every segment has positive length.
struct Trajectory {
  std::vector<Point2> points;
};

/// Closed ring bounding the dissection area; the last vertex implicitly
/// joins the first. Valid when it has >= 3 vertices and encloses area.
struct SafetyMargin {
  std::vector<Point2> vertices;
};

/// One annotated frame: trajectory polyline + safety-margin ring + the
/// pixel dimensions of the frame they were drawn on.
struct AnnotationRecord {
  std::string frame_id;
  int width = 0;
  int height = 0;
  Trajectory trajectory;
  SafetyMargin margin;
};

/// H x W grid of confidence values in [0,1], row-major.
struct ConfidenceMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  ConfidenceMap() = default;
  ConfidenceMap(int w, int h) : width(w), height(h), values(static_cast<size_t>(w) * h, 0.0) {}

  double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
  double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
};

}  // namespace safemap

#endif  // SAFEMAP_TYPES_HPP_
