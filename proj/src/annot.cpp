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

#include "safemap/annot.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "safemap/errors.hpp"
#include "safemap/geom.hpp"

namespace safemap::annot {

using nlohmann::json;

namespace {

bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::vector<Point2> parse_point_list(const json& arr, const std::string& who,
                                     const std::string& field) {
  if (!arr.is_array()) {
    throw ValidationError(who + ": field '" + field + "' must be an array of [x,y] pairs");
  }
  std::vector<Point2> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError(who + ": field '" + field + "' entries must be numeric [x,y] pairs");
    }
    pts.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return pts;
}

AnnotationRecord parse_record(const json& obj, size_t index) {
  const std::string fallback = "record[" + std::to_string(index) + "]";
  if (!obj.is_object()) throw ValidationError(fallback + ": must be a JSON object");

  AnnotationRecord r;
  if (!obj.contains("frame_id") || !obj["frame_id"].is_string()) {
    throw ValidationError(fallback + ": field 'frame_id' missing or not a string");
  }
  r.frame_id = obj["frame_id"].get<std::string>();
  const std::string who = "record '" + r.frame_id + "'";

  for (const char* field : {"width", "height"}) {
    if (!obj.contains(field) || !obj[field].is_number_integer()) {
      throw ValidationError(who + ": field '" + std::string(field) +
                            "' missing or not an integer");
    }
  }
  r.width = obj["width"].get<int>();
  r.height = obj["height"].get<int>();

  if (!obj.contains("trajectory")) throw ValidationError(who + ": field 'trajectory' missing");
  if (!obj.contains("safety_margin")) {
    throw ValidationError(who + ": field 'safety_margin' missing");
  }
  r.trajectory.points = parse_point_list(obj["trajectory"], who, "trajectory");
  r.margin.vertices = parse_point_list(obj["safety_margin"], who, "safety_margin");
  return r;
}

bool all_collinear(const std::vector<Point2>& v) {
  for (size_t i = 2; i < v.size(); ++i) {
    const double cross =
        (v[1].x - v[0].x) * (v[i].y - v[0].y) - (v[1].y - v[0].y) * (v[i].x - v[0].x);
    if (cross != 0.0) return false;
  }
  return true;
}

}  // namespace

void validate_record(const AnnotationRecord& r) {
  const std::string who = "record '" + r.frame_id + "'";
  if (r.width <= 0 || r.height <= 0) {
    throw ValidationError(who + ": width and height must be positive");
  }

  const auto& tp = r.trajectory.points;
  if (tp.size() < 2) throw ValidationError(who + ": trajectory length >= 2");
  for (const Point2& p : tp) {
    if (!is_finite(p)) throw ValidationError(who + ": trajectory points must be finite");
  }
  for (size_t i = 1; i < tp.size(); ++i) {
    if (tp[i] == tp[i - 1]) {
      throw ValidationError(who + ": consecutive trajectory points must be distinct");
    }
  }

  const auto& mv = r.margin.vertices;
  if (mv.size() < 3) throw ValidationError(who + ": safety margin needs >= 3 vertices");
  for (const Point2& p : mv) {
    if (!is_finite(p)) throw ValidationError(who + ": margin vertices must be finite");
  }
  if (all_collinear(mv)) {
    throw ValidationError(who + ": safety margin ring encloses zero area");
  }

  auto in_bounds = [&](const Point2& p) {
    return p.x >= 0.0 && p.x < r.width && p.y >= 0.0 && p.y < r.height;
  };
  for (const Point2& p : tp) {
    if (!in_bounds(p)) {
      throw ValidationError(who + ": trajectory point outside [0,width)x[0,height)");
    }
  }
  for (const Point2& p : mv) {
    if (!in_bounds(p)) {
      throw ValidationError(who + ": margin vertex outside [0,width)x[0,height)");
    }
  }

  // Boundary contact counts as inside: annotators may pin DT endpoints on
  // the margin.
  for (const Point2& p : tp) {
    if (!geom::point_in_polygon(p, r.margin)) {
      throw ValidationError(who + ": trajectory point outside the safety-margin ring");
    }
  }
}

std::vector<AnnotationRecord> parse_annotations_unchecked(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("annotation file: malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_array()) {
    throw ValidationError("annotation file: top level must be a JSON array of records");
  }
  std::vector<AnnotationRecord> records;
  records.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    records.push_back(parse_record(doc[i], i));
  }
  return records;
}

std::vector<AnnotationRecord> parse_annotations(std::string_view bytes) {
  std::vector<AnnotationRecord> records = parse_annotations_unchecked(bytes);
  for (const AnnotationRecord& r : records) validate_record(r);
  return records;
}

std::string serialize_annotations(const std::vector<AnnotationRecord>& records) {
  json arr = json::array();
  for (const AnnotationRecord& r : records) {
    json traj = json::array();
    for (const Point2& p : r.trajectory.points) traj.push_back(json::array({p.x, p.y}));
    json margin = json::array();
    for (const Point2& p : r.margin.vertices) margin.push_back(json::array({p.x, p.y}));
    arr.push_back(json{{"frame_id", r.frame_id},
                       {"width", r.width},
                       {"height", r.height},
                       {"trajectory", std::move(traj)},
                       {"safety_margin", std::move(margin)}});
  }
  return arr.dump(2) + "\n";
}

Trajectory resample_trajectory(const Trajectory& t, int n) {
  if (n < 2) throw ArgumentError("resample_trajectory: n must be >= 2");
  const auto& pts = t.points;
  if (pts.size() < 2) throw ArgumentError("resample_trajectory: trajectory needs >= 2 points");

  std::vector<double> cum(pts.size(), 0.0);
  for (size_t i = 1; i < pts.size(); ++i) {
    const double dx = pts[i].x - pts[i - 1].x;
    const double dy = pts[i].y - pts[i - 1].y;
    cum[i] = cum[i - 1] + std::sqrt(dx * dx + dy * dy);
  }
  const double total = cum.back();
  if (total <= 0.0) throw ArgumentError("resample_trajectory: zero-length trajectory");

  Trajectory out;
  out.points.reserve(n);
  out.points.push_back(pts.front());
  size_t seg = 0;
  for (int k = 1; k < n - 1; ++k) {
    const double s = total * k / (n - 1);
    // <= lands exact hits on the next segment's start point, keeping
    // already-uniform inputs fixed points of the resampler.
    while (seg + 2 < pts.size() && cum[seg + 1] <= s) ++seg;
    const double seg_len = cum[seg + 1] - cum[seg];
    const double local = seg_len > 0.0 ? (s - cum[seg]) / seg_len : 0.0;
    out.points.push_back({pts[seg].x + (pts[seg + 1].x - pts[seg].x) * local,
                          pts[seg].y + (pts[seg + 1].y - pts[seg].y) * local});
  }
  out.points.push_back(pts.back());
  return out;
}

}  // namespace safemap::annot
