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

#include "matcon/dissection.hpp"

#include <string>

#include "matcon/error.hpp"

namespace matcon {

Subset Dissection::range(int i, int j) const {
  Subset out;
  for (int p = i; p <= j; ++p) out |= parts[p];
  return out;
}

Dissection validate(const Matroid& m, std::vector<Subset> parts, int k) {
  if (parts.empty()) throw Error(ErrorKind::kNotPartition, "a dissection has at least one part");
  Subset seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::kEmptyPart, "part " + std::to_string(i) + " is empty", static_cast<long>(i));
    if (parts[i].intersects(seen) || !parts[i].is_subset_of(m.ground())) {
      throw Error(ErrorKind::kNotPartition, "parts overlap or leave the ground set");
    }
    seen |= parts[i];
  }
  if (seen != m.ground()) throw Error(ErrorKind::kNotPartition, "parts do not cover the ground set");
  Subset prefix;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    prefix |= parts[i - 1];
    const int l = lambda(m, prefix);
    if (l > k) {
      throw Error(ErrorKind::kCutTooLarge,
                  "prefix cut " + std::to_string(i) + " has connectivity " + std::to_string(l) + " > " + std::to_string(k),
                  static_cast<long>(i));
    }
  }
  return {std::move(parts), k};
}

std::vector<Separation> to_nested(const Matroid& m, const Dissection& d) {
  std::vector<Separation> out;
  Subset prefix;
  for (int i = 1; i <= d.length(); ++i) {
    prefix |= d.parts[i - 1];
    out.push_back({prefix, m.ground() - prefix, d.k + 1});
  }
  return out;
}

Dissection from_nested(const Matroid& m, const std::vector<Separation>& seps) {
  if (seps.empty()) throw Error(ErrorKind::kInvalidArgument, "from_nested needs at least one separation");
  const int k = seps.front().k;
  std::vector<Subset> parts;
  Subset prev;
  for (const Separation& s : seps) {
    if (s.k != k) throw Error(ErrorKind::kInvalidArgument, "separations have different orders");
    if (s.b != m.ground() - s.a) throw Error(ErrorKind::kNotPartition, "separation sides do not partition E");
    if (!prev.is_subset_of(s.a) || prev == s.a) throw Error(ErrorKind::kNotNested, "left sides are not strictly increasing");
    parts.push_back(s.a - prev);
    prev = s.a;
  }
  parts.push_back(m.ground() - prev);
  return validate(m, std::move(parts), k - 1);
}

std::optional<ContainmentMap> contains(const Dissection& x, const Dissection& y) {
  if (x.k != y.k) return std::nullopt;
  ContainmentMap map;
  int next = 0;
  const int t = x.length();
  for (const Subset& block : y.parts) {
    if (next > t) return std::nullopt;
    map.f.push_back(next);
    Subset acc;
    while (next <= t && acc != block) {
      if (!x.parts[next].is_subset_of(block)) return std::nullopt;
      acc |= x.parts[next++];
    }
    if (acc != block) return std::nullopt;
  }
  if (next != t + 1) return std::nullopt;
  return map;
}

bool is_linked(const Matroid& m, const Dissection& d) {
  return kappa(m, d.parts.front(), d.parts.back()).value == d.k;
}

namespace {

long long ipow(long long base, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) {
    out *= base;
    if (out > (1LL << 40)) return 1LL << 40;
  }
  return out;
}

// Merges consecutive parts across every cut i with keep[i] false.
Dissection coarsen(const Dissection& d, const std::vector<bool>& keep, int k) {
  Dissection out{{d.parts.front()}, k};
  for (int i = 1; i <= d.length(); ++i) {
    if (keep[i]) {
      out.parts.push_back(d.parts[i]);
    } else {
      out.parts.back() |= d.parts[i];
    }
  }
  return out;
}

// Dissection with the given strictly increasing prefix sets.
Dissection from_chain(const Matroid& m, const std::vector<Subset>& chain, int k) {
  Dissection out{{}, k};
  Subset prev;
  for (Subset z : chain) {
    out.parts.push_back(z - prev);
    prev = z;
  }
  out.parts.push_back(m.ground() - prev);
  return out;
}

Dissection extract(const Matroid& m, const Dissection& d, int n) {
  const int k = d.k;
  // Cuts of connectivity below k give a (k−1)-dissection by merging.
  std::vector<bool> low(d.length() + 1, false);
  int low_count = 0;
  Subset prefix;
  for (int i = 1; i <= d.length(); ++i) {
    prefix |= d.parts[i - 1];
    if (lambda(m, prefix) < k) {
      low[i] = true;
      ++low_count;
    }
  }
  if (k > 0 && low_count >= ipow(n, k)) return extract(m, coarsen(d, low, k - 1), n);

  std::vector<bool> exact(low.size());
  for (std::size_t i = 1; i < low.size(); ++i) exact[i] = !low[i];
  const Dissection a = coarsen(d, exact, k);
  const int t = a.length();

  // Unmarked indices carry witnesses Z_i with A[0,i−1] ⊆ Z_i ⊂ A[0,i] and
  // λ(Z_i) < k; they form a strictly increasing chain.
  std::vector<bool> marked(t + 1, false);
  std::vector<Subset> witnesses;
  for (int i = 1; i < t; ++i) {
    const KappaResult r = kappa(m, a.range(0, i - 1), a.range(i + 1, t));
    if (r.value == k) {
      marked[i] = true;
    } else {
      witnesses.push_back(r.witness);
    }
  }
  if (k > 0 && static_cast<long long>(witnesses.size()) >= ipow(n, k)) {
    return extract(m, from_chain(m, witnesses, k - 1), n);
  }

  // n − 1 consecutive marked indices i+1..i+n−1 give the linked dissection
  // (A[0,i], A_{i+1}, ..., A_{i+n−1}, A[i+n,t]).
  for (int i = 0; i + n <= t; ++i) {
    bool run = true;
    for (int j = i + 1; j <= i + n - 1 && run; ++j) run = marked[j];
    if (!run) continue;
    Dissection out{{a.range(0, i)}, k};
    for (int j = i + 1; j <= i + n - 1; ++j) out.parts.push_back(a.parts[j]);
    out.parts.push_back(a.range(i + n, t));
    if (!is_linked(m, out)) {
      throw Error(ErrorKind::kDisagreementBug, "merged flanks are not linked");
    }
    return out;
  }
  throw Error(ErrorKind::kDisagreementBug, "no run of marked cuts found");
}

}  // namespace

Dissection extract_linked(const Matroid& m, const Dissection& d, int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "extract_linked needs n >= 1");
  if (d.length() < ipow(n, d.k + 1)) {
    throw Error(ErrorKind::kHypothesisFail, "dissection length " + std::to_string(d.length()) + " is below n^(k+1)");
  }
  return extract(m, d, n);
}

LemmaCheck seqcon_check(const Matroid& m, Subset s, Subset t, Subset c, Subset d, Subset x, int k) {
  const Subset g = m.ground();
  if ((s | t | c | d) != g || s.size() + t.size() + c.size() + d.size() != g.size()) {
    throw Error(ErrorKind::kNotPartition, "S, T, C, D must partition E");
  }
  if (!s.is_subset_of(x) || !x.is_subset_of(g - t)) throw Error(ErrorKind::kInvalidArgument, "need S ⊆ X ⊆ E − T");
  if (lambda(m, x) != k || lambda(minor(m, c, d), s) != k) return {};
  return {true, lambda(minor(m, c - x, d - x), x) == k};
}

Dissection find_longest_dissection(const Matroid& m, int k) {
  const Subset g = m.ground();
  const int n = g.size();
  check_size("longest dissection ground set", static_cast<std::size_t>(n), 12);
  const SubsetIndexer idx(g);
  const std::size_t count = idx.count();
  const std::size_t full = count - 1;
  // best[z] = longest chain of good sets ending at z (0 when z is not good).
  std::vector<int> best(count, 0);
  std::vector<std::size_t> pred(count, 0);
  const int r = m.rank();
  std::vector<int> ranks(count);
  for (std::size_t i = 0; i < count; ++i) ranks[i] = m.rank(idx.subset(i));
  std::size_t top = 0;
  for (std::size_t z = 1; z < full; ++z) {
    if (ranks[z] + ranks[full & ~z] - r > k) continue;
    best[z] = 1;
    for (std::size_t w = (z - 1) & z; w != 0; w = (w - 1) & z) {
      if (best[w] + 1 > best[z] || (best[w] + 1 == best[z] && best[z] > 1 && w < pred[z])) {
        best[z] = best[w] + 1;
        pred[z] = w;
      }
    }
    if (best[z] > best[top]) top = z;
  }
  std::vector<Subset> chain;
  for (std::size_t z = top; z != 0; z = pred[z]) chain.insert(chain.begin(), idx.subset(z));
  return from_chain(m, chain, k);
}

int max_nested_kseps(const Matroid& m, int k) {
  if (k < 1) return 0;
  return find_longest_dissection(m, k - 1).length();
}

}  // namespace matcon
