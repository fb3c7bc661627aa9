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

#include "matcon/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace matcon {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrimePower: return "NotPrimePower";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInvalidRegion: return "InvalidRegion";
    case ErrorKind::kSizeGuard: return "SizeGuard";
    case ErrorKind::kOverlap: return "Overlap";
    case ErrorKind::kNotPartition: return "NotPartition";
    case ErrorKind::kEmptyPart: return "EmptyPart";
    case ErrorKind::kCutTooLarge: return "CutTooLarge";
    case ErrorKind::kNotNested: return "NotNested";
    case ErrorKind::kHypothesisFail: return "HypothesisFail";
    case ErrorKind::kAmbientMismatch: return "AmbientMismatch";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotExactSeparation: return "NotExactSeparation";
    case ErrorKind::kDisagreementBug: return "DisagreementBug";
    case ErrorKind::kNotCubic: return "NotCubic";
    case ErrorKind::kBadLabelling: return "BadLabelling";
    case ErrorKind::kNotAPath: return "NotAPath";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kNoOverride = 0;

std::size_t env_override() {
  static const std::size_t value = [] {
    const char* raw = std::getenv("MATROID_MAX_N");
    if (raw == nullptr || *raw == '\0') return kNoOverride;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) return kNoOverride;
    return static_cast<std::size_t>(parsed);
  }();
  return value;
}

std::atomic<std::size_t> g_override{kNoOverride};

}  // namespace

std::size_t size_limit(std::size_t default_limit) {
  if (const std::size_t o = g_override.load(std::memory_order_relaxed); o != kNoOverride) return o;
  if (const std::size_t e = env_override(); e != kNoOverride) return e;
  return default_limit;
}

void set_size_limit_override(std::size_t limit) { g_override.store(limit, std::memory_order_relaxed); }

void clear_size_limit_override() { g_override.store(kNoOverride, std::memory_order_relaxed); }

void check_size(std::string_view what, std::size_t value, std::size_t default_limit) {
  const std::size_t limit = size_limit(default_limit);
  if (value > limit) {
    throw Error(ErrorKind::kSizeGuard,
                std::string(what) + " is " + std::to_string(value) + ", limit " + std::to_string(limit),
                static_cast<long>(value));
  }
}

}  // namespace matcon
