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

#ifndef SAFEMAP_CONFMAP_HPP_
#define SAFEMAP_CONFMAP_HPP_

#include <cstdint>
#include <vector>

#include "safemap/types.hpp"

namespace safemap::confmap {

enum class ThresholdMode {
  kRelative,  // candidate margin pixels within threshold * dist(calibration, pixel)
  kAbsolute,  // candidate margin pixels within threshold pixels
};

struct GenerationParams {
  double distance_threshold = 3.0;
  ThresholdMode threshold_mode = ThresholdMode::kRelative;
  // Divide by dist(calibration, pixel) instead of dist(calibration, margin).
  // That variant blows up at the trajectory and reaches 1 at the midpoint;
  // it is kept selectable for comparisons only.
  bool legacy_ratio = false;
};

/// Generates the ground-truth confidence map for one annotated frame.
///
/// Rules, evaluated per pixel in this order:
///   1. rasterized trajectory pixel            -> 1
///   2. rasterized margin pixel / outside area -> 0
///   3. interior: calibration point t = nearest trajectory pixel; among
///      margin pixels within the distance threshold, pick the one whose
///      direction from the pixel is angularly closest to the ray t->pixel
///      (falling back to the nearest margin pixel when none qualifies);
///      value = clamp(dist(pixel,e) / dist(t,e), 0, 1).
///
/// Throws GenerationError when the trajectory rasterizes to an empty set or
/// the area mask is empty.
ConfidenceMap generate(const AnnotationRecord& a, const GenerationParams& p);

/// Same as generate but the margin pixel is simply the Euclidean-nearest
/// one. Kept to demonstrate the opposite-side artifact of nearest-distance
/// search in curved areas.
ConfidenceMap generate_naive(const AnnotationRecord& a);

/// Reference implementation of generate: an unoptimized exhaustive scan over
/// all margin pixels for every area pixel. generate must match it
/// bit-exactly on every input.
ConfidenceMap oracle_generate(const AnnotationRecord& a, const GenerationParams& p);

/// 8-bit grayscale PNG; byte = round(255 * confidence).
std::vector<uint8_t> encode_png(const ConfidenceMap& m);

/// Inverse of encode_png (value = byte / 255). Throws FormatError unless the
/// input is an 8-bit single-channel PNG.
ConfidenceMap decode_png(const std::vector<uint8_t>& bytes);

}  // namespace safemap::confmap

#endif  // SAFEMAP_CONFMAP_HPP_
