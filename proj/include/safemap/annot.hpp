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

#ifndef SAFEMAP_ANNOT_HPP_
#define SAFEMAP_ANNOT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "safemap/types.hpp"

namespace safemap::annot {

// Annotation file schema: a JSON array of objects
//   { "frame_id": string, "width": int, "height": int,
//     "trajectory": [[x,y], ...], "safety_margin": [[x,y], ...] }
// where the margin ring is given without repeating the first vertex.

/// Parses and validates an annotation file. Throws ParseError (with a byte
/// offset) on malformed JSON, ValidationError on schema or invariant
/// violations. Every returned record satisfies all record invariants.
std::vector<AnnotationRecord> parse_annotations(std::string_view bytes);

/// Parses the schema without running invariant validation. Used by callers
/// that want to collect validation errors across all records.
std::vector<AnnotationRecord> parse_annotations_unchecked(std::string_view bytes);

/// Checks all AnnotationRecord invariants; throws ValidationError naming the
/// violated invariant and the record's frame_id.
void validate_record(const AnnotationRecord& r);

/// Serializes records back to the annotation file schema. Round-trips:
/// parse(serialize(parse(x))) yields records identical to parse(x).
std::string serialize_annotations(const std::vector<AnnotationRecord>& records);

/// Resamples a polyline to exactly n points uniformly spaced by arc length.
/// Endpoints and traversal direction are preserved. Throws ArgumentError for
/// n < 2 or a degenerate (zero-length) input.
Trajectory resample_trajectory(const Trajectory& t, int n);

}  // namespace safemap::annot

#endif  // SAFEMAP_ANNOT_HPP_
