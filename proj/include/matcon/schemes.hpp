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

#include <set>
#include <string>
#include <vector>

#include "matcon/classes.hpp"
#include "matcon/geometry.hpp"
#include "matcon/gf.hpp"
#include "matcon/matroid.hpp"

namespace matcon {

// Guts flats assigned to each class of P(M, side). Flats are subspaces of
// GF(q)^(k−1), i.e. flats of N = PG(k−2, q).
struct Scheme {
  Subset side;
  int k = 0;
  FieldSpec field;
  std::vector<std::set<Flat>> assignment;  // indexed by class id of P(M, side)

  bool operator==(const Scheme& o) const {
    return side == o.side && k == o.k && field == o.field && assignment == o.assignment;
  }
  bool operator<(const Scheme& o) const;
  // {class-id: [flat, ...]} with flats in echelon form.
  std::string to_string() const;
};

// Matrix of an extension M′ of M|side by N. Columns 0..|side|−1 are the side
// elements in id order; the rest are the points of N in the order of
// projective_geometry(k − 1, q).
struct RealizabilityWitness {
  Matrix matrix;
  int dim = 0;
};

struct RealizedScheme {
  Scheme scheme;
  RealizabilityWitness witness;
};

// For every P1, P2 and F1 ∈ s1(P1), F2 ∈ s2(P2): ⊓_N(F1, F2) = π(P1, P2).
// Throws kDimensionMismatch when the schemes or the table do not fit together.
bool compatible(const Scheme& s1, const Scheme& s2, const PiTable& pi);

// Every scheme induced by an F-representable extension of M|A by
// PG(k−2, q), one witness each, sorted. (A, E − A) must be an exact
// k-separation; guarded to |A| <= 5, q <= 3, k <= 3.
std::vector<RealizedScheme> realizable_schemes(const Matroid& m, Subset a, int k, int q);

// Rebuilds M′ from the witness and checks M′|A = M|A, M′|E(N) = N, and that
// {cl_M′(X) ∩ E(N) : X ∈ P} is exactly s(P) for every class P.
bool replay_witness(const Matroid& m, const Scheme& s, const RealizabilityWitness& w);

struct MajicReport {
  int k = 0;
  bool representable = false;
  bool compatible_pair = false;
  int left_schemes = 0;   // schemes for (A, B), up to a change of coordinates on N
  int right_schemes = 0;  // schemes for (B, A)
};

// Decides F-representability of M twice: by direct search and by looking for
// a compatible pair of realizable schemes across (A, E − A), with k = λ(A) + 1.
// Throws kDisagreementBug if the answers differ. Guarded to |A|, |E − A| <= 5,
// q <= 3, k <= 3.
MajicReport majic_report(const Matroid& m, Subset a, int q);
bool majic_check(const Matroid& m, Subset a, int q);

}  // namespace matcon
