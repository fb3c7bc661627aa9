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
#include <string>
#include <vector>

#include "matcon/geometry.hpp"
#include "matcon/gf.hpp"
#include "matcon/matroid.hpp"

namespace matcon {

// Distinct field orders; a matroid is representable over the family when it
// is representable over at least one member.
struct FieldFamily {
  std::vector<int> orders;

  // Throws kInvalidArgument for an empty list or repeated orders and
  // kNotPrimePower for a bad order.
  explicit FieldFamily(std::vector<int> orders);
  int size() const { return static_cast<int>(orders.size()); }
  int max_order() const;
  std::string to_string() const;
};

// Exhaustive search for an r(M) x |E(M)| matrix over GF(q) whose column
// matroid equals M (columns in ground-set order). A greedy basis is pinned to
// the identity, the support of every other column is forced by its
// fundamental circuit, and a spanning forest of the support graph is scaled
// to 1; the remaining entries are backtracked over GF(q)*. Guarded to
// |E| <= 10 for q <= 3, 8 for q = 4 and 7 otherwise. Results are cached.
std::optional<Matrix> is_representable(const Matroid& m, int q);

// Every representation in the normalized form above, in search order.
// Distinct matrices may be projectively equivalent through automorphisms.
std::vector<Matrix> all_representations(const Matroid& m, int q);

bool is_family_representable(const Matroid& m, const FieldFamily& fam);

// Not family-representable while every single-element deletion and
// contraction is.
bool is_excluded_minor(const Matroid& m, const FieldFamily& fam);

// max_nested_kseps(M, 2) <= |F| + 1. Throws kHypothesisFail unless m is an
// excluded minor for fam.
bool lemma_2seps_check(const Matroid& m, const FieldFamily& fam);

// Nested k-separation count of an excluded minor against tower(q, q+k, k+1, 4)
// with q the largest order in the family.
struct NestedBoundReport {
  int k = 0;
  int count = 0;
  TowerValue bound;
  bool below = false;
};

NestedBoundReport nested_bound_report(const Matroid& m, const FieldFamily& fam, int k);

}  // namespace matcon
