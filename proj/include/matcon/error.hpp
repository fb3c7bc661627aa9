// Copyright 2026 The Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matcon {

enum class ErrorKind {
  kNotPrimePower,
  kInvalidArgument,
  kInvalidRegion,
  kSizeGuard,
  kOverlap,
  kNotPartition,
  kEmptyPart,
  kCutTooLarge,
  kNotNested,
  kHypothesisFail,
  kAmbientMismatch,
  kDimensionMismatch,
  kNotExactSeparation,
  kDisagreementBug,
  kNotCubic,
  kBadLabelling,
  kNotAPath,
  kParseError,
  kValidationError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long detail = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  // Kind-specific integer: the failing prefix index for kCutTooLarge, the
  // line number for kParseError, the offending size for kSizeGuard.
  long detail() const { return detail_; }

 private:
  ErrorKind kind_;
  long detail_;
};

// Size guards for the exponential operations. Each operation passes its
// documented default; MATROID_MAX_N (or set_size_limit_override) replaces
// every default at once.
std::size_t size_limit(std::size_t default_limit);
void set_size_limit_override(std::size_t limit);
void clear_size_limit_override();

// Throws kSizeGuard when value exceeds size_limit(default_limit).
void check_size(std::string_view what, std::size_t value, std::size_t default_limit);

}  // namespace matcon
