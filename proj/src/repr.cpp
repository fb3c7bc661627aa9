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

#include "matcon/repr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "matcon/dissection.hpp"
#include "matcon/error.hpp"

namespace matcon {

FieldFamily::FieldFamily(std::vector<int> o) : orders(std::move(o)) {
  if (orders.empty()) throw Error(ErrorKind::kInvalidArgument, "a field family needs at least one field");
  std::set<int> seen;
  for (int q : orders) {
    field_create(q);
    if (!seen.insert(q).second) throw Error(ErrorKind::kInvalidArgument, "repeated field order in family");
  }
}

int FieldFamily::max_order() const { return *std::max_element(orders.begin(), orders.end()); }

std::string FieldFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? ",GF(" : "GF(") + std::to_string(orders[i]) + ")";
  return out + "}";
}

namespace {

std::size_t representability_limit(int q) {
  if (q <= 3) return 10;
  if (q == 4) return 8;
  return 7;
}

class ReprSearch {
 public:
  ReprSearch(const Matroid& m, int q, bool find_all)
      : f_(Field::get(q)), find_all_(find_all) {
    const Matroid c = compact(m);
    n_ = c.size();
    r_ = c.rank();
    dim_ = std::max(r_, 1);
    table_ = rank_table(c);
    const Subset basis = basis_of(c, c.ground());
    for (int e : basis) order_.push_back(e);
    for (int e : c.ground() - basis) order_.push_back(e);
    // Support of each non-basis column: basis rows whose element lies in the
    // fundamental circuit.
    support_.assign(n_, {});
    for (int p = r_; p < n_; ++p) {
      const int e = order_[p];
      if (table_[std::size_t{1} << e] == 0) continue;
      for (int i = 0; i < r_; ++i) {
        const std::size_t swapped = (basis.bits() & ~(std::uint64_t{1} << order_[i])) | (std::uint64_t{1} << e);
        if (table_[swapped] == r_) support_[p].push_back(i);
      }
    }
    // Spanning forest of the bipartite support graph: those entries are 1.
    std::vector<int> parent(r_ + n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    fixed_.assign(n_, {});
    for (int p = r_; p < n_; ++p) {
      for (int i : support_[p]) {
        const int a = find(i), b = find(r_ + p);
        const bool tree = a != b;
        if (tree) parent[a] = b;
        fixed_[p].push_back(tree);
      }
    }
    cols_.assign(n_, Vector(dim_, 0));
    for (int i = 0; i < r_; ++i) cols_[i][i] = 1;
    spans_.assign(std::size_t{1} << n_, SpanBuilder(f_, dim_));
    // Spans over subsets of the pinned basis.
    for (std::size_t x = 1; x < (std::size_t{1} << r_); ++x) {
      const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(x));
      spans_[x] = spans_[x & ~(std::size_t{1} << top)];
      spans_[x].add(cols_[top]);
    }
  }

  void run() { rec(r_); }

  const std::vector<Matrix>& results() const { return results_; }

 private:
  // Rank of a set of positions, read from the id-indexed table.
  int rank_of(std::size_t positions) const {
    std::size_t ids = 0;
    for (std::size_t rest = positions; rest; rest &= rest - 1) ids |= std::size_t{1} << order_[std::countr_zero(rest)];
    return table_[ids];
  }

  bool consistent(int p, const Vector& v) const {
    const std::size_t bit = std::size_t{1} << p;
    for (std::size_t x = 0; x < bit; ++x) {
      const bool in_span = spans_[x].contains(v);
      const bool in_closure = rank_of(x | bit) == rank_of(x);
      if (in_span != in_closure) return false;
    }
    return true;
  }

  void rec(int p) {
    if (done_) return;
    if (p == n_) {
      Matrix m(f_, dim_, n_);
      for (int q = 0; q < n_; ++q) {
        for (int i = 0; i < dim_; ++i) m.set(i, order_[q], cols_[q][i]);
      }
      results_.push_back(std::move(m));
      if (!find_all_) done_ = true;
      return;
    }
    const auto& sup = support_[p];
    std::vector<int> free_slots;
    for (std::size_t s = 0; s < sup.size(); ++s) {
      if (!fixed_[p][s]) free_slots.push_back(static_cast<int>(s));
    }
    std::vector<Element> values(free_slots.size(), 1);
    const int q = f_.q();
    while (true) {
      Vector v(dim_, 0);
      for (std::size_t s = 0; s < sup.size(); ++s) v[sup[s]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) v[sup[free_slots[s]]] = values[s];
      if (consistent(p, v)) {
        cols_[p] = v;
        const std::size_t bit = std::size_t{1} << p;
        for (std::size_t x = 0; x < bit; ++x) {
          spans_[x | bit] = spans_[x];
          spans_[x | bit].add(v);
        }
        rec(p + 1);
        if (done_) return;
      }
      std::size_t pos = values.size();
      while (pos > 0 && ++values[pos - 1] == q) values[--pos] = 1;
      if (pos == 0) break;
    }
  }

  const Field& f_;
  bool find_all_;
  bool done_ = false;
  int n_ = 0, r_ = 0, dim_ = 1;
  std::vector<std::uint8_t> table_;
  std::vector<int> order_;
  std::vector<std::vector<int>> support_;
  std::vector<std::vector<bool>> fixed_;
  std::vector<Vector> cols_;
  std::vector<SpanBuilder> spans_;
  std::vector<Matrix> results_;
};

void verify_witness(const Matroid& m, const Matrix& w) {
  if (!same_rank_oracle(compact(m), Matroid::linear(w))) {
    throw Error(ErrorKind::kDisagreementBug, "representation does not reproduce the rank oracle");
  }
}

}  // namespace

std::optional<Matrix> is_representable(const Matroid& m, int q) {
  field_create(q);
  check_size("representability ground set", static_cast<std::size_t>(m.size()), representability_limit(q));
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<std::uint8_t>>, std::optional<Matrix>> cache;
  auto key = std::make_pair(q, rank_table(m));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ReprSearch search(m, q, false);
  search.run();
  std::optional<Matrix> out;
  if (!search.results().empty()) {
    out = search.results().front();
    verify_witness(m, *out);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), out);
  return out;
}

std::vector<Matrix> all_representations(const Matroid& m, int q) {
  field_create(q);
  check_size("representability ground set", static_cast<std::size_t>(m.size()), representability_limit(q));
  ReprSearch search(m, q, true);
  search.run();
  for (const Matrix& w : search.results()) verify_witness(m, w);
  return search.results();
}

bool is_family_representable(const Matroid& m, const FieldFamily& fam) {
  for (int q : fam.orders) {
    if (is_representable(m, q)) return true;
  }
  return false;
}

bool is_excluded_minor(const Matroid& m, const FieldFamily& fam) {
  if (is_family_representable(m, fam)) return false;
  for (int e : m.ground()) {
    const Subset one = Subset::single(e);
    if (!is_family_representable(deletion(m, one), fam)) return false;
    if (!is_family_representable(contraction(m, one), fam)) return false;
  }
  return true;
}

bool lemma_2seps_check(const Matroid& m, const FieldFamily& fam) {
  if (!is_excluded_minor(m, fam)) throw Error(ErrorKind::kHypothesisFail, "matroid is not an excluded minor for the family");
  return max_nested_kseps(m, 2) <= fam.size() + 1;
}

NestedBoundReport nested_bound_report(const Matroid& m, const FieldFamily& fam, int k) {
  NestedBoundReport out;
  out.k = k;
  out.count = max_nested_kseps(m, k);
  const auto q = static_cast<std::uint64_t>(fam.max_order());
  const auto kk = static_cast<std::uint64_t>(k);
  out.bound = tower({q, q + kk, kk + 1, 4});
  out.below = tower_exceeds(out.bound, out.count);
  return out;
}

}  // namespace matcon
