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

#include "matcon/classes.hpp"

#include <map>

#include "matcon/connectivity.hpp"
#include "matcon/error.hpp"

namespace matcon {

EquivPartition::EquivPartition(Subset side, Subset other, std::vector<int> class_of, std::vector<Subset> reps)
    : idx_(side), other_(other), class_of_(std::move(class_of)), reps_(std::move(reps)) {}

std::vector<Subset> EquivPartition::members(int cls) const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == cls) out.push_back(idx_.subset(i));
  }
  return out;
}

std::vector<std::uint8_t> closure_fingerprint(const Matroid& m, Subset a, Subset x) {
  const SubsetIndexer other(m.ground() - a);
  const int rx = m.rank(x);
  std::vector<std::uint8_t> out(other.count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(m.rank(x | other.subset(i)) - rx);
  return out;
}

bool equivalent(const Matroid& m, Subset a, Subset x, Subset y) {
  check_size("equivalence other side", static_cast<std::size_t>((m.ground() - a).size()), 20);
  return closure_fingerprint(m, a, x) == closure_fingerprint(m, a, y);
}

EquivPartition partition(const Matroid& m, Subset a) {
  if (!a.is_subset_of(m.ground())) throw Error(ErrorKind::kInvalidArgument, "side must lie in the ground set");
  check_size("partition side", static_cast<std::size_t>(a.size()), 14);
  check_size("partition other side", static_cast<std::size_t>((m.ground() - a).size()), 20);
  const SubsetIndexer idx(a);
  std::map<std::vector<std::uint8_t>, int> ids;
  std::vector<int> class_of(idx.count());
  std::vector<Subset> reps;
  for (std::size_t i = 0; i < idx.count(); ++i) {
    const Subset x = idx.subset(i);
    auto [it, fresh] = ids.emplace(closure_fingerprint(m, a, x), static_cast<int>(reps.size()));
    if (fresh) reps.push_back(x);
    class_of[i] = it->second;
  }
  return EquivPartition(a, m.ground() - a, std::move(class_of), std::move(reps));
}

Flat guts_fingerprint(const Matroid& m, Subset a, Subset x) {
  const Matrix* mat = m.matrix();
  if (mat == nullptr) throw Error(ErrorKind::kInvalidArgument, "guts_fingerprint needs a linear matroid");
  if (!x.is_subset_of(a)) throw Error(ErrorKind::kInvalidArgument, "X must lie in A");
  const Field& f = mat->field();
  std::vector<Vector> vx, vb;
  for (int e : x) vx.push_back(mat->column(e));
  for (int e : m.ground() - a) vb.push_back(mat->column(e));
  return flat_meet(span_flat(f, mat->rows(), vx), span_flat(f, mat->rows(), vb));
}

bool classes1_bound(const Matroid& m, Subset a, int k) {
  const Matrix* mat = m.matrix();
  if (mat == nullptr) throw Error(ErrorKind::kHypothesisFail, "classes1 needs a linear matroid");
  if (k < 2) throw Error(ErrorKind::kHypothesisFail, "classes1 needs k >= 2");
  if (!loops(m).empty()) throw Error(ErrorKind::kHypothesisFail, "classes1 needs a loopless matroid");
  if (!is_k_separation(m, a, k)) throw Error(ErrorKind::kHypothesisFail, "(A, E − A) is not a k-separation");
  const int q = mat->field().q();
  const TowerValue bound = tower({static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k - 1), 2});
  return tower_exceeds(bound, partition(m, a).count() - 1);
}

PiTable PiTable::transposed() const {
  PiTable t{cols, rows, std::vector<int>(values.size())};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t.values[static_cast<std::size_t>(j) * rows + i] = at(i, j);
  }
  return t;
}

PiTable pi_table(const Matroid& m, const EquivPartition& left, const EquivPartition& right) {
  if (left.other() != right.side() || right.other() != left.side()) {
    throw Error(ErrorKind::kInvalidArgument, "partitions must be of opposite sides of one separation");
  }
  PiTable t{left.count(), right.count(), {}};
  t.values.resize(static_cast<std::size_t>(t.rows) * t.cols);
  for (int i = 0; i < t.rows; ++i) {
    for (int j = 0; j < t.cols; ++j) {
      t.values[static_cast<std::size_t>(i) * t.cols + j] = local_conn(m, left.reps()[i], right.reps()[j]);
    }
  }
  if (left.side().size() <= 8 && right.side().size() <= 8) {
    const SubsetIndexer li(left.side()), ri(right.side());
    for (std::size_t x = 0; x < li.count(); ++x) {
      for (std::size_t y = 0; y < ri.count(); ++y) {
        const Subset sx = li.subset(x), sy = ri.subset(y);
        if (local_conn(m, sx, sy) != t.at(left.class_of(sx), right.class_of(sy))) {
          throw Error(ErrorKind::kDisagreementBug, "π depends on the choice of representatives");
        }
      }
    }
  }
  return t;
}

PiTable pi_table(const Matroid& m, Subset a) { return pi_table(m, partition(m, a), partition(m, m.ground() - a)); }

Classes2Result classes2_check(const Matroid& m, Subset a, int e) {
  const Subset b = m.ground() - a;
  if (!b.contains(e)) throw Error(ErrorKind::kInvalidArgument, "e must lie in E − A");
  const Subset one = Subset::single(e);
  const EquivPartition p = partition(m, a);
  const EquivPartition p1 = partition(deletion(m, one), a);
  const EquivPartition p2 = partition(contraction(m, one), a);
  Classes2Result out;
  const auto& cv = p.class_vector();
  const auto& c1 = p1.class_vector();
  const auto& c2 = p2.class_vector();
  for (int cls = 0; cls < p.count(); ++cls) {
    const std::size_t rep = p.indexer().index(p.reps()[cls]);
    for (std::size_t y = 0; y < cv.size(); ++y) {
      const bool in_p = cv[y] == cls;
      const bool in_meet = c1[y] == c1[rep] && c2[y] == c2[rep];
      if (in_p && !in_meet) out.refines = false;
      if (in_p != in_meet && out.holds) {
        out.holds = false;
        out.counterexample = p.reps()[cls];
        out.detail = "class of " + format_subset(m, p.reps()[cls]) + " differs from the meet at " +
                     format_subset(m, p.indexer().subset(y));
      }
    }
  }
  return out;
}

namespace {

bool stable_for(const Matroid& m, const Dissection& d, const MinorContext& ctx, std::vector<std::optional<EquivPartition>>& left,
                std::vector<std::optional<EquivPartition>>& right) {
  const int b = d.length();
  for (int i = 1; i <= b; ++i) {
    for (int j = i + 1; j <= b; ++j) {
      const Matroid mo = minor_apply(m, ctx, d.range(i, j - 1));
      if (!left[i]) left[i] = partition(m, d.range(0, i - 1));
      if (!right[j]) right[j] = partition(m, d.range(j, b));
      if (!(partition(mo, d.range(0, i - 1)) == *left[i])) return false;
      if (!(partition(mo, d.range(j, b)) == *right[j])) return false;
    }
  }
  return true;
}

void check_stability_context(const Matroid& m, const Dissection& d, const MinorContext& ctx) {
  const Subset interior = d.range(1, d.length() - 1);
  if (ctx.contract.intersects(ctx.remove) || (ctx.contract | ctx.remove) != interior) {
    throw Error(ErrorKind::kHypothesisFail, "(C, D) must partition A[1, t−1]");
  }
  if (!is_linked(m, d)) throw Error(ErrorKind::kHypothesisFail, "dissection is not linked");
  if (local_conn(contraction(m, ctx.contract), d.parts.front(), d.parts.back()) != d.k) {
    throw Error(ErrorKind::kHypothesisFail, "⊓_{M/C}(A_0, A_t) differs from k");
  }
}

}  // namespace

bool is_stable(const Matroid& m, const Dissection& d, const MinorContext& ctx) {
  std::vector<std::optional<EquivPartition>> left(d.length() + 1), right(d.length() + 1);
  return stable_for(m, d, ctx, left, right);
}

std::optional<Dissection> stable_contained_dissection(const Matroid& m, const Dissection& d, const MinorContext& ctx,
                                                      int b) {
  const int t = d.length();
  check_size("stable search dissection length", static_cast<std::size_t>(t), 16);
  check_stability_context(m, d, ctx);
  if (b < 1 || b > t) return std::nullopt;
  // A length-b coarsening keeps b of the t cuts; cuts[i] is the first part of block i + 1.
  std::vector<int> cuts(b);
  for (int i = 0; i < b; ++i) cuts[i] = i + 1;
  while (true) {
    Dissection y{{d.range(0, cuts[0] - 1)}, d.k};
    for (int i = 0; i < b; ++i) y.parts.push_back(d.range(cuts[i], i + 1 < b ? cuts[i + 1] - 1 : t));
    if (is_stable(m, y, ctx)) return y;
    int i = b - 1;
    while (i >= 0 && cuts[i] == t - b + 1 + i) --i;
    if (i < 0) break;
    ++cuts[i];
    for (int j = i + 1; j < b; ++j) cuts[j] = cuts[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace matcon
