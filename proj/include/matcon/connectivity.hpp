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

#include <vector>

#include "matcon/matroid.hpp"

namespace matcon {

// ⊓(X, Y) = r(X) + r(Y) − r(X ∪ Y).
int local_conn(const Matroid& m, Subset x, Subset y);

// λ(X) = ⊓(X, E − X).
int lambda(const Matroid& m, Subset x);

// (A, E − A) is a k-separation: both sides nonempty and λ(A) < k.
bool is_k_separation(const Matroid& m, Subset a, int k);
// A k-separation with λ(A) = k − 1.
bool is_exact_separation(const Matroid& m, Subset a, int k);

struct Separation {
  Subset a;
  Subset b;
  int k = 0;

  bool operator==(const Separation&) const = default;
};

struct KappaResult {
  int value = 0;
  // An optimal Z with X ⊆ Z ⊆ E − Y; the first one in increasing bit order.
  Subset witness;
};

// κ(X, Y) = min λ(Z) over X ⊆ Z ⊆ E − Y, by exhaustive search.
// Throws kOverlap when X ∩ Y ≠ ∅; guarded to |E − X − Y| <= 24.
KappaResult kappa(const Matroid& m, Subset x, Subset y);

struct LinkResult {
  // Independent set C ⊆ E − (X ∪ Y) with ⊓_{M/C}(X, Y) = κ(X, Y).
  Subset contract;
  int kappa = 0;
};

// Resolves the elements outside X ∪ Y one at a time, contracting when that
// keeps κ and deleting otherwise, then reduces the contracted set to a basis.
LinkResult tutte_link(const Matroid& m, Subset x, Subset y);

// ⊓_{M/C}(X, Y) <= κ(X, Y).
bool conn_upper_check(const Matroid& m, Subset x, Subset y, Subset c);

// Outcome of checking a conditional statement on one instance. A statement
// holds vacuously when its hypotheses fail.
struct LemmaCheck {
  bool applicable = false;
  bool holds = true;

  explicit operator bool() const { return holds; }
};

// Precomputed λ and κ for all disjoint pairs of subsets of a small ground set.
class KappaTable {
 public:
  // Guarded to |E| <= 12.
  explicit KappaTable(const Matroid& m);

  const SubsetIndexer& indexer() const { return idx_; }
  int lambda(Subset x) const { return lambda_[idx_.index(x)]; }
  int kappa(Subset x, Subset y) const { return kappa_by_index(idx_.index(x), idx_.index(y)); }
  int lambda_by_index(std::size_t x) const { return lambda_[x]; }
  int kappa_by_index(std::size_t x, std::size_t y) const { return kappa_[(x << idx_.size()) | y]; }

 private:
  SubsetIndexer idx_;
  std::vector<std::uint8_t> lambda_;
  std::vector<std::uint8_t> kappa_;
};

// If λ(A1 ∪ A2) = κ(A1, A3 ∪ A4) = κ(A1 ∪ A2, A4) = k then κ(A1, A4) = k.
// The four sets must partition the ground set.
LemmaCheck seq_check(const Matroid& m, Subset a1, Subset a2, Subset a3, Subset a4);
LemmaCheck seq_check(const KappaTable& t, Subset a1, Subset a2, Subset a3, Subset a4);

}  // namespace matcon
