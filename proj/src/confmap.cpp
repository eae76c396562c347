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

#include "safemap/confmap.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include <opencv2/imgcodecs.hpp>

#include "safemap/errors.hpp"
#include "safemap/geom.hpp"

namespace safemap::confmap {

namespace {

struct Raster {
  geom::PixelSet dt;
  geom::PixelSet margin;
  geom::PixelMask area;
  std::vector<uint8_t> dt_mask;
  std::vector<uint8_t> margin_mask;
};

Raster rasterize_inputs(const AnnotationRecord& a) {
  Raster r;
  r.dt = geom::rasterize_polyline(a.trajectory, a.width, a.height);
  if (r.dt.empty()) {
    throw GenerationError("record '" + a.frame_id + "': trajectory rasterizes to an empty set");
  }
  r.margin = geom::rasterize_ring(a.margin, a.width, a.height);
  r.area = geom::rasterize_area(a.margin, a.width, a.height);
  if (r.area.count() == 0) {
    throw GenerationError("record '" + a.frame_id + "': dissection-area mask is empty");
  }
  const size_t n = static_cast<size_t>(a.width) * a.height;
  r.dt_mask.assign(n, 0);
  r.margin_mask.assign(n, 0);
  for (const auto& p : r.dt.points) r.dt_mask[static_cast<size_t>(p.y) * a.width + p.x] = 1;
  for (const auto& p : r.margin.points) {
    r.margin_mask[static_cast<size_t>(p.y) * a.width + p.x] = 1;
  }
  return r;
}

// Margin pixels can double as area pixels when the ring is degenerate, so a
// usable interior needs at least one margin pixel to aim at. The rasterized
// ring of a valid margin is never empty once the area mask is non-empty.

double threshold_squared(const GenerationParams& p, long long d2_calib) {
  const double tau = p.distance_threshold;
  if (p.threshold_mode == ThresholdMode::kRelative) {
    return tau * tau * static_cast<double>(d2_calib);
  }
  return tau * tau;
}

double ratio_value(long long num2, long long den2) {
  // clamp(sqrt(num2/den2), 0, 1); num2 >= 0, so only the top clamp binds.
  return std::min(1.0, std::sqrt(static_cast<double>(num2) / static_cast<double>(den2)));
}

}  // namespace

ConfidenceMap generate(const AnnotationRecord& a, const GenerationParams& p) {
  const Raster r = rasterize_inputs(a);
  const int w = a.width;
  const int h = a.height;

  // Structure-of-arrays candidate tables keep the per-pixel scans tight.
  const size_t nd = r.dt.size();
  std::vector<int> tx(nd), ty(nd);
  for (size_t i = 0; i < nd; ++i) {
    tx[i] = r.dt.points[i].x;
    ty[i] = r.dt.points[i].y;
  }
  const size_t nm = r.margin.size();
  std::vector<int> mx(nm), my(nm);
  for (size_t i = 0; i < nm; ++i) {
    mx[i] = r.margin.points[i].x;
    my[i] = r.margin.points[i].y;
  }

  ConfidenceMap map(w, h);
  size_t idx = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x, ++idx) {
      if (r.dt_mask[idx]) {
        map.values[idx] = 1.0;
        continue;
      }
      if (r.margin_mask[idx] || !r.area.bits[idx]) {
        map.values[idx] = 0.0;
        continue;
      }
      if (nm == 0) {
        map.values[idx] = 0.0;
        continue;
      }

      // Calibration point: nearest trajectory pixel, first one on ties.
      long long best_d2 = LLONG_MAX;
      size_t ti = 0;
      for (size_t i = 0; i < nd; ++i) {
        const long long dx = tx[i] - x;
        const long long dy = ty[i] - y;
        const long long d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
          best_d2 = d2;
          ti = i;
        }
      }
      const long long rx = x - tx[ti];
      const long long ry = y - ty[ti];
      const double tau2 = threshold_squared(p, best_d2);

      // Angular search over margin pixels within the threshold; track the
      // nearest margin pixel as the fallback.
      long long near_d2 = LLONG_MAX;
      size_t near_j = 0;
      long long sel_dot = 0, sel_cross = 0;
      size_t sel_j = 0;
      bool have_sel = false;
      for (size_t j = 0; j < nm; ++j) {
        const long long vx = mx[j] - x;
        const long long vy = my[j] - y;
        const long long d2 = vx * vx + vy * vy;
        if (d2 < near_d2) {
          near_d2 = d2;
          near_j = j;
        }
        if (static_cast<double>(d2) > tau2) continue;
        const long long dot = rx * vx + ry * vy;
        const long long cross = std::llabs(rx * vy - ry * vx);
        if (!have_sel || geom::angle_compare_parts(dot, cross, sel_dot, sel_cross) < 0) {
          have_sel = true;
          sel_j = j;
          sel_dot = dot;
          sel_cross = cross;
          // An exactly collinear forward candidate is the global minimum;
          // later candidates can only tie and ties keep the earlier pixel.
          if (cross == 0 && dot > 0) break;
        }
      }
      const size_t ej = have_sel ? sel_j : near_j;

      const long long ex = mx[ej], ey = my[ej];
      const long long num2 = (ex - x) * (ex - x) + (ey - y) * (ey - y);
      const long long den2 = p.legacy_ratio
                                 ? best_d2
                                 : (ex - tx[ti]) * (ex - tx[ti]) + (ey - ty[ti]) * (ey - ty[ti]);
      map.values[idx] = ratio_value(num2, den2);
    }
  }
  return map;
}

ConfidenceMap oracle_generate(const AnnotationRecord& a, const GenerationParams& p) {
  const Raster r = rasterize_inputs(a);
  const int w = a.width;
  const int h = a.height;

  ConfidenceMap map(w, h);
  size_t idx = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x, ++idx) {
      if (r.dt_mask[idx]) {
        map.values[idx] = 1.0;
        continue;
      }
      if (r.margin_mask[idx] || !r.area.bits[idx]) {
        map.values[idx] = 0.0;
        continue;
      }
      if (r.margin.empty()) {
        map.values[idx] = 0.0;
        continue;
      }

      long long calib_d2 = LLONG_MAX;
      geom::PixelCoord t{};
      for (const auto& c : r.dt.points) {
        const long long d2 = geom::dist2(c, {x, y});
        if (d2 < calib_d2) {
          calib_d2 = d2;
          t = c;
        }
      }
      const long long rx = x - t.x;
      const long long ry = y - t.y;
      const double tau2 = threshold_squared(p, calib_d2);

      long long near_d2 = LLONG_MAX;
      geom::PixelCoord near{};
      bool have_sel = false;
      geom::PixelCoord sel{};
      for (const auto& e : r.margin.points) {
        const long long d2 = geom::dist2(e, {x, y});
        if (d2 < near_d2) {
          near_d2 = d2;
          near = e;
        }
        if (static_cast<double>(d2) > tau2) continue;
        if (!have_sel ||
            geom::angle_compare(rx, ry, e.x - x, e.y - y, sel.x - x, sel.y - y) < 0) {
          have_sel = true;
          sel = e;
        }
      }
      const geom::PixelCoord e = have_sel ? sel : near;

      const long long num2 = geom::dist2(e, {x, y});
      const long long den2 = p.legacy_ratio ? calib_d2 : geom::dist2(e, t);
      map.values[idx] = ratio_value(num2, den2);
    }
  }
  return map;
}

ConfidenceMap generate_naive(const AnnotationRecord& a) {
  const Raster r = rasterize_inputs(a);
  const int w = a.width;
  const int h = a.height;

  ConfidenceMap map(w, h);
  size_t idx = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x, ++idx) {
      if (r.dt_mask[idx]) {
        map.values[idx] = 1.0;
        continue;
      }
      if (r.margin_mask[idx] || !r.area.bits[idx]) {
        map.values[idx] = 0.0;
        continue;
      }
      if (r.margin.empty()) {
        map.values[idx] = 0.0;
        continue;
      }

      long long calib_d2 = LLONG_MAX;
      geom::PixelCoord t{};
      for (const auto& c : r.dt.points) {
        const long long d2 = geom::dist2(c, {x, y});
        if (d2 < calib_d2) {
          calib_d2 = d2;
          t = c;
        }
      }
      long long near_d2 = LLONG_MAX;
      geom::PixelCoord e{};
      for (const auto& m : r.margin.points) {
        const long long d2 = geom::dist2(m, {x, y});
        if (d2 < near_d2) {
          near_d2 = d2;
          e = m;
        }
      }
      map.values[idx] = ratio_value(near_d2, geom::dist2(e, t));
    }
  }
  return map;
}

std::vector<uint8_t> encode_png(const ConfidenceMap& m) {
  cv::Mat img(m.height, m.width, CV_8UC1);
  for (int y = 0; y < m.height; ++y) {
    uint8_t* row = img.ptr<uint8_t>(y);
    for (int x = 0; x < m.width; ++x) {
      row[x] = static_cast<uint8_t>(std::lround(255.0 * m.at(x, y)));
    }
  }
  std::vector<uint8_t> buf;
  if (!cv::imencode(".png", img, buf, {cv::IMWRITE_PNG_COMPRESSION, 6})) {
    throw FormatError("PNG encoding failed");
  }
  return buf;
}

ConfidenceMap decode_png(const std::vector<uint8_t>& bytes) {
  static const uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() < 8 || !std::equal(kPngMagic, kPngMagic + 8, bytes.begin())) {
    throw FormatError("confidence map: not a PNG file");
  }
  const cv::Mat img = cv::imdecode(bytes, cv::IMREAD_UNCHANGED);
  if (img.empty()) throw FormatError("confidence map: PNG decoding failed");
  if (img.type() != CV_8UC1) {
    throw FormatError("confidence map: expected an 8-bit single-channel PNG");
  }
  ConfidenceMap m(img.cols, img.rows);
  for (int y = 0; y < img.rows; ++y) {
    const uint8_t* row = img.ptr<uint8_t>(y);
    for (int x = 0; x < img.cols; ++x) {
      m.at(x, y) = row[x] / 255.0;
    }
  }
  return m;
}

}  // namespace safemap::confmap
