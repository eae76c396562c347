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

#ifndef SAFEMAP_ERRORS_HPP_
#define SAFEMAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace safemap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to an API call (empty set, count out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input text is not well-formed (carries a byte offset in the message).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates the schema or a record invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Confidence-map generation cannot proceed (empty trajectory/area raster).
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Encoded image is not in the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace safemap

#endif  // SAFEMAP_ERRORS_HPP_
