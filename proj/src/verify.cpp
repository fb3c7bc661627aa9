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

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "matcon/branchwidth.hpp"
#include "matcon/classes.hpp"
#include "matcon/cli.hpp"
#include "matcon/connectivity.hpp"
#include "matcon/corpus.hpp"
#include "matcon/dissection.hpp"
#include "matcon/error.hpp"
#include "matcon/geometry.hpp"
#include "matcon/io.hpp"
#include "matcon/repr.hpp"
#include "matcon/schemes.hpp"

namespace matcon {

namespace {

class Tally {
 public:
  explicit Tally(VerifyReport& r) : r_(r) {}

  // describe() returns {instance, detail} and is only called for the first
  // failure.
  void record(bool ok, const Matroid& m, const std::function<std::pair<std::string, std::string>()>& describe) {
    ++r_.instances;
    if (ok) {
      ++r_.passes;
      return;
    }
    if (!r_.counterexample) {
      auto [instance, detail] = describe();
      r_.counterexample = Counterexample{serialize_matroid(m), std::move(instance), std::move(detail)};
    }
  }

 private:
  VerifyReport& r_;
};

std::string sets(const Matroid& m, std::initializer_list<std::pair<const char*, Subset>> named) {
  std::string out;
  for (const auto& [name, s] : named) {
    if (!out.empty()) out += " ";
    out += std::string(name) + "=" + format_subset(m, s);
  }
  return out;
}

// Calls f(parts) for every assignment of the ground elements to `count`
// labelled parts (parts may be empty).
void for_each_assignment(Subset ground, int count, const std::function<void(const std::vector<Subset>&)>& f) {
  const std::vector<int> ids = ground.elements();
  std::vector<int> digit(ids.size(), 0);
  while (true) {
    std::vector<Subset> parts(count);
    for (std::size_t i = 0; i < ids.size(); ++i) parts[digit[i]] = parts[digit[i]].with(ids[i]);
    f(parts);
    std::size_t pos = ids.size();
    while (pos > 0 && ++digit[pos - 1] == count) digit[--pos] = 0;
    if (pos == 0) break;
  }
}

void check_rank_axioms(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    tally.record(satisfies_rank_axioms(m), m, [] { return std::make_pair(std::string(), std::string("rank axioms fail")); });
  }
}

void check_submodularity(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    const auto t = rank_table(m);
    const std::size_t full = t.size() - 1;
    const int n = m.size();
    std::vector<int> lam(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) lam[x] = t[x] + t[full & ~x] - t[full];
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    if (n <= 12) {
      for (std::size_t x = 0; x < t.size() && !bad; ++x) {
        for (std::size_t y = x + 1; y < t.size(); ++y) {
          if (lam[x] + lam[y] < lam[x & y] + lam[x | y]) {
            bad = {x, y};
            break;
          }
        }
      }
    } else {
      // Local form, equivalent for any set function.
      for (std::size_t x = 0; x < t.size() && !bad; ++x) {
        for (int e = 0; e < n && !bad; ++e) {
          for (int f = e + 1; f < n; ++f) {
            const std::size_t be = std::size_t{1} << e, bf = std::size_t{1} << f;
            if ((x & be) || (x & bf)) continue;
            if (lam[x | be] + lam[x | bf] < lam[x] + lam[x | be | bf]) {
              bad = {x | be, x | bf};
              break;
            }
          }
        }
      }
    }
    const SubsetIndexer idx(m.ground());
    tally.record(!bad, m, [&] {
      return std::make_pair(sets(m, {{"X", idx.subset(bad->first)}, {"Y", idx.subset(bad->second)}}),
                            std::string("λ(X) + λ(Y) < λ(X ∩ Y) + λ(X ∪ Y)"));
    });
  }
}

void check_contraction(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() > 10) continue;
    for_each_subset(m.ground(), [&](Subset y) {
      const Matroid my = contraction(m, y);
      for_each_subset(m.ground() - y, [&](Subset x) {
        const int lhs = lambda(my, x);
        const int rhs = lambda(m, x) - local_conn(m, x, y);
        tally.record(lhs == rhs, m, [&] {
          return std::make_pair(sets(m, {{"X", x}, {"Y", y}}),
                                "λ_{M/Y}(X) = " + std::to_string(lhs) + ", λ(X) − ⊓(X,Y) = " + std::to_string(rhs));
        });
      });
    });
  }
}

void check_conn_upper(const VerifyOptions& opt, Tally& tally) {
  std::mt19937_64 rng(opt.seed);
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() < 2 || m.size() > 12) continue;
    const std::vector<int> ids = m.ground().elements();
    for (int trial = 0; trial < 10; ++trial) {
      Subset x, y, c;
      for (int e : ids) {
        switch (rng() % 4) {
          case 0: x = x.with(e); break;
          case 1: y = y.with(e); break;
          case 2: c = c.with(e); break;
          default: break;
        }
      }
      tally.record(conn_upper_check(m, x, y, c), m, [&] {
        return std::make_pair(sets(m, {{"X", x}, {"Y", y}, {"C", c}}), std::string("⊓_{M/C}(X,Y) > κ(X,Y)"));
      });
    }
  }
}

void check_tutte_link(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() > 9) continue;
    for_each_assignment(m.ground(), 3, [&](const std::vector<Subset>& p) {
      const Subset x = p[0], y = p[1];
      if (x.empty() || y.empty()) return;
      const LinkResult link = tutte_link(m, x, y);
      const int k = kappa(m, x, y).value;
      const bool ok = !link.contract.intersects(x | y) && is_independent(m, link.contract) && link.kappa == k &&
                      local_conn(contraction(m, link.contract), x, y) == k;
      tally.record(ok, m, [&] {
        return std::make_pair(sets(m, {{"X", x}, {"Y", y}, {"C", link.contract}}),
                              "κ = " + std::to_string(k) + ", linking set fails");
      });
    });
  }
}

void check_seq(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() > 12) continue;
    const KappaTable t(m);
    for_each_assignment(m.ground(), 4, [&](const std::vector<Subset>& p) {
      const LemmaCheck c = seq_check(t, p[0], p[1], p[2], p[3]);
      if (!c.applicable) return;
      tally.record(c.holds, m, [&] {
        return std::make_pair(sets(m, {{"A1", p[0]}, {"A2", p[1]}, {"A3", p[2]}, {"A4", p[3]}}),
                              std::string("κ(A1, A4) differs from λ(A1 ∪ A2)"));
      });
    });
  }
}

void check_seqcon(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() > 6) continue;
    for_each_assignment(m.ground(), 4, [&](const std::vector<Subset>& p) {
      const Subset s = p[0], t = p[1], c = p[2], d = p[3];
      for_each_subset(c | d, [&](Subset extra) {
        const Subset x = s | extra;
        const LemmaCheck r = seqcon_check(m, s, t, c, d, x, lambda(m, x));
        if (!r.applicable) return;
        tally.record(r.holds, m, [&] {
          return std::make_pair(sets(m, {{"S", s}, {"T", t}, {"C", c}, {"D", d}, {"X", x}}),
                                std::string("λ_{M/(C−X)\\(D−X)}(X) differs from λ(X)"));
        });
      });
    });
  }
}

struct LinkedInput {
  Matroid m;
  Dissection d;
  int n;
};

Matroid uniform_blocks(const std::vector<std::pair<int, int>>& blocks) {
  std::vector<Matroid> parts;
  for (const auto& [r, n] : blocks) parts.push_back(uniform_linear(r, n, 5));
  return direct_sum(parts);
}

std::vector<Subset> singletons(const Matroid& m) {
  std::vector<Subset> out;
  for (int e : m.ground()) out.push_back(Subset::single(e));
  return out;
}

// Fifty dissections of length at least n^(k+1), k <= 2, n <= 3: free
// matroids from graphic paths, cycles, and direct sums of uniform blocks.
std::vector<LinkedInput> linked_inputs() {
  std::vector<LinkedInput> out;
  auto add = [&](const Matroid& m, std::vector<Subset> parts, int k, int n) {
    int need = 1;
    for (int i = 0; i <= k; ++i) need *= n;
    if (static_cast<int>(parts.size()) - 1 < need) return;
    out.push_back({m, validate(m, std::move(parts), k), n});
  };
  for (int n = 2; n <= 3; ++n) {
    for (int extra = 0; extra < 3; ++extra) {
      for (int k = 0; k <= 2; ++k) {
        int need = 1;
        for (int i = 0; i <= k; ++i) need *= n;
        const Matroid path = graphic_path(need + 1 + extra);
        add(path, singletons(path), k, n);
        if (k >= 1) {
          const Matroid cycle = graphic_cycle(need + 1 + extra);
          add(cycle, singletons(cycle), k, n);
        }
      }
      // Singletons of U_{2,4} blocks give cuts with λ <= 2.
      const int blocks = n == 2 ? 3 + extra : 7 + extra;
      const Matroid u = uniform_blocks(std::vector<std::pair<int, int>>(blocks, {2, 4}));
      add(u, singletons(u), 2, n);
      // Whole blocks as parts give a 0-dissection.
      std::vector<std::pair<int, int>> mixed;
      for (int b = 0; b < n + 2 + extra; ++b) mixed.push_back(b % 2 ? std::make_pair(1, 2) : std::make_pair(2, 3));
      const Matroid mix = uniform_blocks(mixed);
      std::vector<Subset> parts;
      int next = 0;
      for (const auto& [r, size] : mixed) {
        parts.push_back(Subset::range(next + size) - Subset::range(next));
        next += size;
      }
      add(mix, parts, 0, n);
      // Singletons of alternating U_{1,2} and U_{2,3} blocks: λ <= 1 at every cut.
      const int mixed_blocks = n == 2 ? 3 + extra : 6 + extra;
      std::vector<std::pair<int, int>> alt;
      for (int b = 0; b < mixed_blocks; ++b) alt.push_back(b % 2 ? std::make_pair(1, 2) : std::make_pair(2, 3));
      const Matroid am = uniform_blocks(alt);
      add(am, singletons(am), 1, n);
      add(am, singletons(am), 2, n);
    }
  }
  // Longer paths fill the list up to fifty.
  for (int extra = 3; out.size() < 50; ++extra) {
    const Matroid path = graphic_path(5 + extra);
    add(path, singletons(path), 1, 2);
  }
  out.resize(50, out.front());
  return out;
}

void check_linked(const VerifyOptions&, Tally& tally) {
  for (const LinkedInput& in : linked_inputs()) {
    std::string why;
    bool ok = true;
    try {
      const Dissection got = extract_linked(in.m, in.d, in.n);
      validate(in.m, got.parts, got.k);
      if (got.length() != in.n) {
        ok = false;
        why = "length " + std::to_string(got.length());
      } else if (got.k > in.d.k) {
        ok = false;
        why = "parameter " + std::to_string(got.k) + " exceeds k";
      } else if (!is_linked(in.m, got)) {
        ok = false;
        why = "output is not linked";
      } else if (!contains(in.d, Dissection{got.parts, in.d.k})) {
        // An l-dissection with l <= k is also a k-dissection.
        ok = false;
        why = "output is not contained in the input";
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    tally.record(ok, in.m, [&] {
      std::string parts;
      for (Subset p : in.d.parts) parts += (parts.empty() ? "" : "/") + format_subset(in.m, p);
      return std::make_pair("k=" + std::to_string(in.d.k) + " n=" + std::to_string(in.n) + " parts=" + parts, why);
    });
  }
}

// Linear versions over GF(2) and GF(3) of the loopless corpus matroids.
std::vector<std::pair<Matroid, int>> linear_corpus(const VerifyOptions& opt) {
  std::vector<std::pair<Matroid, int>> out;
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() < 2 || m.size() > 10 || !loops(m).empty()) continue;
    for (int q : {2, 3}) {
      if (m.matrix() && m.matrix()->field().q() == q) {
        out.emplace_back(m, q);
      } else if (const auto w = is_representable(m, q)) {
        out.emplace_back(Matroid::linear(*w, compact(m).labels()).with_name(m.name()), q);
      }
    }
  }
  return out;
}

void check_classes1(const VerifyOptions& opt, Tally& tally) {
  for (const auto& [m, q] : linear_corpus(opt)) {
    const Subset g = m.ground();
    for_each_subset(g, [&](Subset a) {
      if (a.empty() || a == g || a.size() > 8) return;
      const int lam = lambda(m, a);
      if (lam >= 3) return;
      const EquivPartition part = partition(m, a);
      // Equal guts flats force equivalence.
      std::map<Flat, int> class_of_flat;
      std::optional<Subset> clash;
      for_each_subset(a, [&](Subset x) {
        const auto [it, fresh] = class_of_flat.emplace(guts_fingerprint(m, a, x), part.class_of(x));
        if (!fresh && it->second != part.class_of(x) && !clash) clash = x;
      });
      for (int k = std::max(2, lam + 1); k <= 3; ++k) {
        const bool bound = classes1_bound(m, a, k);
        tally.record(bound && !clash, m, [&] {
          return std::make_pair(sets(m, {{"A", a}}) + " k=" + std::to_string(k) + " q=" + std::to_string(q),
                                clash ? "equal guts flats in different classes at " + format_subset(m, *clash)
                                      : std::to_string(part.count()) + " classes exceed the bound");
        });
      }
    });
  }
}

void check_classes2(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() > 7) continue;
    const Subset g = m.ground();
    for_each_subset(g, [&](Subset a) {
      if (a.empty() || a == g) return;
      for (int e : g - a) {
        const Classes2Result r = classes2_check(m, a, e);
        tally.record(r.holds, m, [&] {
          return std::make_pair(sets(m, {{"A", a}}) + " e=" + m.label(e), r.detail);
        });
      }
    });
  }
}

void check_majic(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    const Subset g = m.ground();
    if (m.size() < 2 || m.size() > 8) continue;
    for_each_subset(g, [&](Subset a) {
      const Subset b = g - a;
      if (a.empty() || b.empty() || a.size() > 4 || b.size() > 5 || lambda(m, a) > 2) return;
      for (int q : {2, 3}) {
        std::string why;
        bool ok = true;
        try {
          majic_check(m, a, q);
        } catch (const Error& e) {
          ok = false;
          why = e.what();
        }
        tally.record(ok, m, [&] { return std::make_pair(sets(m, {{"A", a}}) + " q=" + std::to_string(q), why); });
      }
    });
  }
}

void check_2seps(const VerifyOptions& opt, Tally& tally) {
  const std::vector<std::pair<std::string, std::vector<int>>> named{
      {"u24", {2}}, {"fano", {3}}, {"fano-dual", {3}}, {"u25", {3}}, {"u35", {3}}};
  for (const auto& [name, orders] : named) {
    const Matroid m = named_matroid(name);
    const FieldFamily fam(orders);
    const bool ok = is_excluded_minor(m, fam) && lemma_2seps_check(m, fam);
    tally.record(ok, m, [&] { return std::make_pair("F=" + fam.to_string(), std::string("not an excluded minor or too many nested 2-separations")); });
  }
  for (int n = 0; n <= std::min(opt.max_n, 7); ++n) {
    for (const Matroid& m : all_matroids(n)) {
      for (int q : {2, 3}) {
        const FieldFamily fam({q});
        if (!is_excluded_minor(m, fam)) continue;
        tally.record(lemma_2seps_check(m, fam), m, [&] {
          return std::make_pair("F=" + fam.to_string(), "max nested 2-separations " + std::to_string(max_nested_kseps(m, 2)));
        });
      }
    }
  }
}

void check_flats(const VerifyOptions&, Tally& tally) {
  const Matroid none = Matroid::uniform(0, 0);
  for (int q = 2; q <= kMaxFieldOrder; ++q) {
    try {
      field_create(q);
    } catch (const Error&) {
      continue;
    }
    long long power = q;
    for (int k = 1; power <= (1 << 16); ++k, power *= q) {
      tally.record(flats_bound_holds(k, q), none, [&] {
        return std::make_pair("k=" + std::to_string(k) + " q=" + std::to_string(q), flat_count(k, q).get_str() + " flats");
      });
    }
  }
}

void check_leafbound(const VerifyOptions&, Tally& tally) {
  const Matroid none = Matroid::uniform(0, 0);
  for (int leaves = 2; leaves <= 14; ++leaves) {
    for (const BranchTree& t : cubic_trees(leaves)) {
      tally.record(leafbound_check(t), none, [&] {
        return std::make_pair("shape " + t.canonical_shape(), "longest path " + std::to_string(t.longest_path()));
      });
    }
  }
}

void check_bw_nested(const VerifyOptions& opt, Tally& tally) {
  for (const Matroid& m : verify_corpus(opt)) {
    if (m.size() < 2 || m.size() > 8) continue;
    const BranchWidthResult bw = branch_width(m);
    const BranchTree& t = bw.tree;
    const int v = t.vertex_count();
    // Paths from every vertex by depth-first search.
    for (int s = 0; s < v; ++s) {
      std::vector<int> parent_edge(v, -1), parent(v, -1);
      std::vector<int> stack{s};
      std::vector<bool> seen(v, false);
      seen[s] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int i = 0; i < static_cast<int>(t.edges().size()); ++i) {
          const auto [p, q] = t.edges()[i];
          const int y = p == x ? q : (q == x ? p : -1);
          if (y < 0 || seen[y]) continue;
          seen[y] = true;
          parent[y] = x;
          parent_edge[y] = i;
          stack.push_back(y);
        }
      }
      for (int target = s + 1; target < v; ++target) {
        std::vector<int> path;
        for (int y = target; y != s; y = parent[y]) path.push_back(parent_edge[y]);
        std::reverse(path.begin(), path.end());
        const auto seps = nested_from_path(m, t, path);
        bool ok = width(m, t) == bw.width && !seps.empty();
        for (std::size_t i = 0; i < seps.size(); ++i) {
          ok = ok && is_k_separation(m, seps[i].a, bw.width) && seps[i].k == bw.width;
          if (i) ok = ok && seps[i - 1].a.is_subset_of(seps[i].a) && seps[i - 1].a != seps[i].a;
        }
        tally.record(ok, m, [&] {
          return std::make_pair("tree " + format_branch_tree(m, t), "path from vertex " + std::to_string(s) + " to " +
                                                                       std::to_string(target));
        });
      }
    }
  }
}

using Checker = void (*)(const VerifyOptions&, Tally&);

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> list{
      {"rank-axioms", check_rank_axioms},   {"submodularity", check_submodularity},
      {"contraction", check_contraction},   {"conn-upper", check_conn_upper},
      {"tutte-link", check_tutte_link},     {"seq", check_seq},
      {"seqcon", check_seqcon},             {"linked", check_linked},
      {"classes1", check_classes1},         {"classes2", check_classes2},
      {"majic", check_majic},               {"2seps", check_2seps},
      {"flats", check_flats},               {"leafbound", check_leafbound},
      {"bw-nested", check_bw_nested},
  };
  return list;
}

}  // namespace

std::vector<std::string> verify_lemma_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : checkers()) out.push_back(id);
  return out;
}

std::vector<Matroid> verify_corpus(const VerifyOptions& opt) {
  std::vector<Matroid> out;
  for (const char* name : {"u24", "u25", "u35", "u36", "fano", "fano-dual", "k4"}) out.push_back(named_matroid(name));
  for (int n = 0; n <= std::min(opt.max_n, 8); ++n) {
    const auto& all = all_matroids(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.random_count; ++i) {
    const int q = i % 2 ? 3 : 2;
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, opt.random_max_n - 1)));
    const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    out.push_back(random_linear(q, r, n, rng).with_name("random" + std::to_string(i)));
  }
  return out;
}

VerifyReport verify(std::string_view lemma, const VerifyOptions& opt) {
  for (const auto& [id, fn] : checkers()) {
    if (id != lemma) continue;
    VerifyReport report;
    report.lemma = id;
    report.seed = opt.seed;
    const auto start = std::chrono::steady_clock::now();
    Tally tally(report);
    fn(opt, tally);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown lemma '" + std::string(lemma) + "'");
}

}  // namespace matcon
