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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matcon/matroid.hpp"

namespace matcon {

struct VerifyOptions {
  // Exhaustive corpus: every matroid on at most max_n elements (capped at 8).
  int max_n = 6;
  // Seeded random linear matroids over GF(2) and GF(3).
  int random_count = 20;
  int random_max_n = 8;
  std::uint64_t seed = 1;
};

struct Counterexample {
  std::string matroid;  // matroid text format, loadable with --matroid
  std::string instance;
  std::string detail;
};

struct VerifyReport {
  std::string lemma;
  long instances = 0;
  long passes = 0;
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0;
  std::uint64_t seed = 0;

  bool ok() const { return passes == instances; }
};

std::vector<std::string> verify_lemma_ids();

// Runs one lemma check over its corpus. Failures are counted, not thrown;
// the first one is kept. Throws kInvalidArgument for an unknown id.
VerifyReport verify(std::string_view lemma, const VerifyOptions& opt);

// Named matroids, every matroid on at most opt.max_n elements, and the seeded
// random linear matroids, in that order.
std::vector<Matroid> verify_corpus(const VerifyOptions& opt);

// Command-line entry point; args excludes the program name. Exit codes: 0
// success, 1 verify found failures, 2 usage error, 3 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matcon
