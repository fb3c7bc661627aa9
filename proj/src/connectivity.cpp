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

#include "matcon/connectivity.hpp"

#include <algorithm>

#include "matcon/error.hpp"

namespace matcon {

int local_conn(const Matroid& m, Subset x, Subset y) { return m.rank(x) + m.rank(y) - m.rank(x | y); }

int lambda(const Matroid& m, Subset x) { return local_conn(m, x, m.ground() - x); }

bool is_k_separation(const Matroid& m, Subset a, int k) {
  const Subset b = m.ground() - a;
  return !a.empty() && !b.empty() && a.is_subset_of(m.ground()) && lambda(m, a) < k;
}

bool is_exact_separation(const Matroid& m, Subset a, int k) {
  return is_k_separation(m, a, k) && lambda(m, a) == k - 1;
}

KappaResult kappa(const Matroid& m, Subset x, Subset y) {
  if (x.intersects(y)) throw Error(ErrorKind::kOverlap, "kappa needs disjoint sets");
  const Subset g = m.ground();
  const Subset free = g - x - y;
  check_size("kappa free set", static_cast<std::size_t>(free.size()), 24);
  KappaResult best{-1, Subset()};
  for_each_subset(free, [&](Subset z) {
    const int v = lambda(m, x | z);
    if (best.value < 0 || v < best.value) best = {v, x | z};
  });
  return best;
}

LinkResult tutte_link(const Matroid& m, Subset x, Subset y) {
  const int target = kappa(m, x, y).value;
  Matroid current = m;
  Subset contracted;
  for (int e : m.ground() - x - y) {
    const Subset one = Subset::single(e);
    Matroid con = contraction(current, one);
    if (kappa(con, x, y).value == target) {
      current = std::move(con);
      contracted = contracted.with(e);
      continue;
    }
    Matroid del = deletion(current, one);
    if (kappa(del, x, y).value != target) {
      throw Error(ErrorKind::kDisagreementBug, "neither deleting nor contracting an element preserves kappa");
    }
    current = std::move(del);
  }
  const Subset c = basis_of(m, contracted);
  if (local_conn(contraction(m, c), x, y) != target) {
    throw Error(ErrorKind::kDisagreementBug, "linking set does not attain kappa");
  }
  return {c, target};
}

bool conn_upper_check(const Matroid& m, Subset x, Subset y, Subset c) {
  if (c.intersects(x | y)) throw Error(ErrorKind::kInvalidArgument, "C must avoid X and Y");
  return local_conn(contraction(m, c), x, y) <= kappa(m, x, y).value;
}

KappaTable::KappaTable(const Matroid& m) : idx_(m.ground()) {
  const int n = idx_.size();
  check_size("kappa table ground set", static_cast<std::size_t>(n), 12);
  const std::size_t count = idx_.count();
  const std::size_t full = count - 1;
  std::vector<int> ranks(count);
  for (std::size_t i = 0; i < count; ++i) ranks[i] = m.rank(idx_.subset(i));
  lambda_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    lambda_[i] = static_cast<std::uint8_t>(ranks[i] + ranks[full & ~i] - ranks[full]);
  }
  kappa_.assign(count * count, 0xFF);
  for (std::size_t x = 0; x < count; ++x) {
    const std::size_t rest = full & ~x;
    // y ranges over subsets of rest; Z over subsets of rest − y.
    for (std::size_t y = rest;; y = (y - 1) & rest) {
      const std::size_t free = rest & ~y;
      std::uint8_t best = 0xFF;
      for (std::size_t z = free;; z = (z - 1) & free) {
        best = std::min(best, lambda_[x | z]);
        if (z == 0) break;
      }
      kappa_[(x << n) | y] = best;
      if (y == 0) break;
    }
  }
}

namespace {

bool is_partition(Subset g, Subset a1, Subset a2, Subset a3, Subset a4) {
  return (a1 | a2 | a3 | a4) == g && a1.size() + a2.size() + a3.size() + a4.size() == g.size();
}

}  // namespace

LemmaCheck seq_check(const Matroid& m, Subset a1, Subset a2, Subset a3, Subset a4) {
  if (!is_partition(m.ground(), a1, a2, a3, a4)) throw Error(ErrorKind::kNotPartition, "seq_check needs a partition");
  const int k = lambda(m, a1 | a2);
  if (kappa(m, a1, a3 | a4).value != k || kappa(m, a1 | a2, a4).value != k) return {};
  return {true, kappa(m, a1, a4).value == k};
}

LemmaCheck seq_check(const KappaTable& t, Subset a1, Subset a2, Subset a3, Subset a4) {
  if (!is_partition(t.indexer().set(), a1, a2, a3, a4)) {
    throw Error(ErrorKind::kNotPartition, "seq_check needs a partition");
  }
  const int k = t.lambda(a1 | a2);
  if (t.kappa(a1, a3 | a4) != k || t.kappa(a1 | a2, a4) != k) return {};
  return {true, t.kappa(a1, a4) == k};
}

}  // namespace matcon
