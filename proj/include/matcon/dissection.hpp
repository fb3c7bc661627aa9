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

#include <optional>
#include <vector>

#include "matcon/connectivity.hpp"
#include "matcon/matroid.hpp"

namespace matcon {

// An ordered partition (A_0, ..., A_t) of E(M) whose prefix cuts all satisfy
// λ(A[0, i−1]) <= k. Its length is t.
struct Dissection {
  std::vector<Subset> parts;
  int k = 0;

  int length() const { return static_cast<int>(parts.size()) - 1; }
  // A[i, j]; empty when i > j.
  Subset range(int i, int j) const;
  bool operator==(const Dissection&) const = default;
};

// Throws kNotPartition, kEmptyPart, or kCutTooLarge (detail = first failing i).
Dissection validate(const Matroid& m, std::vector<Subset> parts, int k);

// A k-dissection of length t as t nested (k+1)-separations, A_i = A[0, i−1].
std::vector<Separation> to_nested(const Matroid& m, const Dissection& d);
// Inverse of to_nested. All separations must share the same k; throws
// kNotNested unless the left sides strictly increase.
Dissection from_nested(const Matroid& m, const std::vector<Separation>& seps);

// f with Y_i = X[f(i), f(i+1) − 1] and f(s+1) = t + 1.
struct ContainmentMap {
  std::vector<int> f;
  bool operator==(const ContainmentMap&) const = default;
};

// Witness that y is obtained from x by merging runs of consecutive blocks.
std::optional<ContainmentMap> contains(const Dissection& x, const Dissection& y);

// κ(A_0, A_t) = k.
bool is_linked(const Matroid& m, const Dissection& d);

// A linked l-dissection of length n, l <= k, extracted from a k-dissection of
// length at least n^{k+1}. Throws kHypothesisFail when d is too short.
Dissection extract_linked(const Matroid& m, const Dissection& d, int n);

// (S, T, C, D) partitions E(M) and S ⊆ X ⊆ E − T. If λ(X) = λ_{M/C\D}(S) = k
// then λ_{M/(C−X)\(D−X)}(X) = k.
LemmaCheck seqcon_check(const Matroid& m, Subset s, Subset t, Subset c, Subset d, Subset x, int k);

// A k-dissection of maximum length. Among optimal chains of prefix sets the
// one with numerically smallest sets (largest first) is returned. Guarded to
// |E| <= 12.
Dissection find_longest_dissection(const Matroid& m, int k);

// Largest number of nested k-separations, i.e. the length of a longest
// (k−1)-dissection.
int max_nested_kseps(const Matroid& m, int k);

}  // namespace matcon
