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

#include "matcon/dissection.hpp"
#include "matcon/geometry.hpp"
#include "matcon/matroid.hpp"

namespace matcon {

// P(M, A): subsets X, Y of A are equivalent when ⊓(X, Z) = ⊓(Y, Z) for every
// Z ⊆ B = E − A. Classes are numbered by first occurrence in increasing
// subset order, so two partitions of the same side are equal exactly when
// their class vectors are equal.
class EquivPartition {
 public:
  EquivPartition(Subset side, Subset other, std::vector<int> class_of, std::vector<Subset> reps);

  Subset side() const { return idx_.set(); }
  Subset other() const { return other_; }
  int count() const { return static_cast<int>(reps_.size()); }
  int class_of(Subset x) const { return class_of_[idx_.index(x)]; }
  // Smallest member of each class.
  const std::vector<Subset>& reps() const { return reps_; }
  // Class ids indexed through SubsetIndexer(side()).
  const std::vector<int>& class_vector() const { return class_of_; }
  const SubsetIndexer& indexer() const { return idx_; }
  std::vector<Subset> members(int cls) const;

  bool operator==(const EquivPartition& o) const { return side() == o.side() && class_of_ == o.class_of_; }

 private:
  SubsetIndexer idx_;
  Subset other_;
  std::vector<int> class_of_;
  std::vector<Subset> reps_;
};

// Z ↦ r(X ∪ Z) − r(X) over Z ⊆ E − A, indexed through SubsetIndexer(E − A).
// Two subsets are equivalent iff these vectors agree.
std::vector<std::uint8_t> closure_fingerprint(const Matroid& m, Subset a, Subset x);

// Guarded to |E − A| <= 20.
bool equivalent(const Matroid& m, Subset a, Subset x, Subset y);
// Guarded to |A| <= 14 and |E − A| <= 20.
EquivPartition partition(const Matroid& m, Subset a);

// span(X) ∩ span(E − A) as a flat of the column space. m must carry a matrix.
Flat guts_fingerprint(const Matroid& m, Subset a, Subset x);

// |P(M, A)| <= tower(q, k − 1, 2). Throws kHypothesisFail unless m is a
// loopless linear matroid, k >= 2, and (A, E − A) is a k-separation.
bool classes1_bound(const Matroid& m, Subset a, int k);

// π over P(M, A) × P(M, B): ⊓ of any two representatives.
struct PiTable {
  int rows = 0;
  int cols = 0;
  std::vector<int> values;

  int at(int i, int j) const { return values[static_cast<std::size_t>(i) * cols + j]; }
  PiTable transposed() const;
  bool operator==(const PiTable&) const = default;
};

// Verifies representative independence over all members when |A|, |B| <= 8
// (kDisagreementBug on failure).
PiTable pi_table(const Matroid& m, const EquivPartition& left, const EquivPartition& right);
PiTable pi_table(const Matroid& m, Subset a);

struct Classes2Result {
  bool holds = true;
  // Every class of P(M, A) lies inside the meet of its classes in P(M\e, A)
  // and P(M/e, A).
  bool refines = true;
  // First class of P(M, A) that is not such a meet (when !holds).
  std::optional<Subset> counterexample;
  std::string detail;
};

// For every P in P(M, A) looks for P1 in P(M\e, A) and P2 in P(M/e, A) with
// P = P1 ∩ P2, compared extensionally over the subsets of A.
Classes2Result classes2_check(const Matroid& m, Subset a, int e);

// Searches the length-b dissections contained in d for one whose partitions
// are stable under the region minors: for 1 <= i < j <= b,
// P(M∘B[i, j−1], B[0, i−1]) = P(M, B[0, i−1]) and
// P(M∘B[i, j−1], B[j, b]) = P(M, B[j, b]).
// d must be linked with ctx partitioning A[1, t−1] and ⊓_{M/C}(A_0, A_t) = k
// (kHypothesisFail otherwise). Guarded to length(d) <= 16.
std::optional<Dissection> stable_contained_dissection(const Matroid& m, const Dissection& d, const MinorContext& ctx,
                                                      int b);

// The stability condition above for one dissection.
bool is_stable(const Matroid& m, const Dissection& d, const MinorContext& ctx);

}  // namespace matcon
