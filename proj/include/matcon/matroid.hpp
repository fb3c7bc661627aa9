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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matcon/gf.hpp"
#include "matcon/subset.hpp"

namespace matcon {

enum class MatroidKind { kLinear, kUniform, kBases, kGraphic, kMinor, kDual };

std::string_view kind_name(MatroidKind kind);

struct Edge {
  int u = 0;
  int v = 0;
};

namespace detail {
struct Node;
}

// A matroid exposed through its rank oracle.
//
// Elements are ids 0..universe()-1; the ground set is a subset of those ids.
// Concrete matroids use the whole universe. Minors and duals are lazy views
// over a parent and keep the parent's ids, so a set of elements means the same
// thing in M and in every minor of M. Values are immutable and cheap to copy.
class Matroid {
 public:
  static Matroid uniform(int r, int n, std::vector<std::string> labels = {});
  static Matroid free(int n, std::vector<std::string> labels = {}) { return uniform(n, n, std::move(labels)); }
  static Matroid linear(Matrix matrix, std::vector<std::string> labels = {});
  // Bases are validated (equal size, exchange axiom) when n <= 12; above that
  // the matroid is accepted with validated() == false.
  static Matroid from_bases(int n, std::vector<Subset> bases, std::vector<std::string> labels = {});
  static Matroid graphic(int vertices, std::vector<Edge> edges, std::vector<std::string> labels = {});
  // Rank table indexed by subset bit pattern over ids 0..n-1; stored as a
  // basis-list matroid. The table is trusted.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> ranks, std::vector<std::string> labels = {});

  MatroidKind kind() const;
  int universe() const;
  Subset ground() const;
  int size() const { return ground().size(); }
  // Requires x ⊆ ground().
  int rank(Subset x) const;
  int rank() const { return rank(ground()); }

  const std::vector<std::string>& labels() const;
  const std::string& label(int e) const { return labels()[e]; }
  // Element id for a label, or -1.
  int find(std::string_view label) const;

  const std::string& name() const;
  Matroid with_name(std::string name) const;

  // False only for basis lists too large to validate.
  bool validated() const;

  // Kind-specific payloads; null when the kind does not match.
  const Matrix* matrix() const;
  const std::vector<Subset>* bases() const;
  const std::vector<Edge>* edges() const;
  int vertex_count() const;
  // Parent of a minor or dual view.
  const Matroid* parent() const;
  // Contracted and deleted sets of a minor view (relative to parent()).
  Subset contracted() const;
  Subset deleted() const;

 private:
  explicit Matroid(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  friend Matroid dual(const Matroid& m);
  friend Matroid minor(const Matroid& m, Subset contract, Subset remove);

  std::shared_ptr<const detail::Node> node_;
};

Matroid dual(const Matroid& m);
// M / contract \ remove. The two sets must be disjoint subsets of the ground set.
Matroid minor(const Matroid& m, Subset contract, Subset remove);
inline Matroid contraction(const Matroid& m, Subset c) { return minor(m, c, Subset()); }
inline Matroid deletion(const Matroid& m, Subset d) { return minor(m, Subset(), d); }
inline Matroid restriction(const Matroid& m, Subset x) { return minor(m, Subset(), m.ground() - x); }

// The (C, D) split of a region used to form M∘X = M \ (D ∩ X) / (C ∩ X).
struct MinorContext {
  Subset contract;
  Subset remove;
};

// M∘X. Throws kInvalidRegion unless x ⊆ C ∪ D, and kInvalidArgument when C
// and D overlap.
Matroid minor_apply(const Matroid& m, const MinorContext& ctx, Subset x);

// Copy of the ground set relabelled onto ids 0..size()-1, stored as a rank
// table (basis list). Labels follow the ground-set elements in id order.
Matroid compact(const Matroid& m);

// Rank of every subset of the ground set, indexed through SubsetIndexer(ground).
std::vector<std::uint8_t> rank_table(const Matroid& m);

Subset closure(const Matroid& m, Subset x);
Subset coclosure(const Matroid& m, Subset x);
bool is_loop(const Matroid& m, int e);
bool is_coloop(const Matroid& m, int e);
bool is_independent(const Matroid& m, Subset x);
// Greedy basis of x, scanning ids in increasing order.
Subset basis_of(const Matroid& m, Subset x);
Subset loops(const Matroid& m);
// Parallel classes of the non-loop elements, each sorted, in order of first element.
std::vector<Subset> parallel_classes(const Matroid& m);
bool is_simple(const Matroid& m);

// Checks (R1)-(R3) over every subset (and pair of subsets) of the ground set.
bool satisfies_rank_axioms(const Matroid& m);

// Rank-oracle equality on ground sets of equal size, matching the elements of
// each ground set in id order.
bool same_rank_oracle(const Matroid& a, const Matroid& b);

// Isomorphism by backtracking over bijections, pruned by per-element rank
// signatures. Returns the image in b of each ground element of a (indexed by
// the position of that element in a's ground set).
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);
inline bool isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

// True iff some minor of m is isomorphic to n. Guarded to |E(m)| <= 12.
bool has_minor(const Matroid& m, const Matroid& n);

// Invariant under isomorphism; equal for isomorphic matroids.
std::size_t isomorphism_invariant(const Matroid& m);

// The same two operations on raw rank tables over ids 0..n-1.
std::optional<std::vector<int>> find_table_isomorphism(const std::vector<std::uint8_t>& ta,
                                                       const std::vector<std::uint8_t>& tb, int n);
std::size_t table_invariant(const std::vector<std::uint8_t>& t, int n);

// Parses "a,b,c" (labels or e<i> ids); the empty string is ∅.
Subset parse_subset(const Matroid& m, std::string_view text);
std::vector<std::string> subset_labels(const Matroid& m, Subset x);
std::string format_subset(const Matroid& m, Subset x);

std::vector<std::string> default_labels(int n);

}  // namespace matcon
