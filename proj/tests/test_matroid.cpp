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
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "matcon/corpus.hpp"
#include "matcon/error.hpp"
#include "matcon/matroid.hpp"

using namespace matcon;

namespace {

// Graph rank by counting connected components with a plain DFS.
int graph_rank_oracle(int vertices, const std::vector<Edge>& edges, Subset x) {
  std::vector<std::vector<int>> adj(vertices);
  for (int e : x) {
    adj[edges[e].u].push_back(edges[e].v);
    adj[edges[e].v].push_back(edges[e].u);
  }
  std::vector<bool> seen(vertices, false);
  int components = 0;
  for (int s = 0; s < vertices; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return vertices - components;
}

}  // namespace

TEST_SUITE("matroid") {
  TEST_CASE("uniform U24 ranks") {
    const Matroid m = named_u24();
    CHECK(m.size() == 4);
    CHECK(m.rank() == 2);
    CHECK(m.rank(parse_subset(m, "a")) == 1);
    CHECK(m.rank(parse_subset(m, "a,b,c")) == 2);
    CHECK(m.rank(Subset()) == 0);
    CHECK(is_simple(m));
    CHECK(closure(m, parse_subset(m, "a,b")) == m.ground());
  }

  TEST_CASE("Fano ranks and lines") {
    const Matroid f = named_fano();
    CHECK(f.rank() == 3);
    CHECK(f.rank(parse_subset(f, "a,b,d")) == 2);
    CHECK(f.rank(parse_subset(f, "a,b,c")) == 3);
    int lines = 0;
    for_each_subset(f.ground(), [&](Subset x) {
      if (x.size() == 3 && f.rank(x) == 2) ++lines;
    });
    CHECK(lines == 7);
  }

  TEST_CASE("dual rank formula") {
    for (const Matroid& m : {named_u24(), named_fano(), graphic_complete(4), Matroid::uniform(3, 6)}) {
      const Matroid d = dual(m);
      const int r = m.rank();
      bool ok = true;
      for_each_subset(m.ground(), [&](Subset x) {
        ok = ok && d.rank(x) == x.size() - r + m.rank(m.ground() - x);
      });
      CHECK(ok);
      CHECK(same_rank_oracle(dual(d), m));
    }
    CHECK(isomorphic(compact(dual(named_fano())), named_fano_dual()));
  }

  TEST_CASE("minor rank formula and flattening") {
    const Matroid f = named_fano();
    const Subset c = parse_subset(f, "a");
    const Subset d = parse_subset(f, "g");
    const Matroid m = minor(f, c, d);
    CHECK(m.ground() == f.ground() - c - d);
    bool ok = true;
    for_each_subset(m.ground(), [&](Subset x) { ok = ok && m.rank(x) == f.rank(x | c) - f.rank(c); });
    CHECK(ok);
    const Matroid mm = minor(m, parse_subset(f, "b"), Subset());
    CHECK(mm.parent() != nullptr);
    CHECK(mm.parent()->kind() == MatroidKind::kLinear);
    CHECK(mm.contracted() == parse_subset(f, "a,b"));
    CHECK_THROWS_AS(minor(f, c, c), Error);
  }

  TEST_CASE("minor_apply region checks") {
    const Matroid f = named_fano();
    const MinorContext ctx{parse_subset(f, "a,b"), parse_subset(f, "c")};
    const Matroid m = minor_apply(f, ctx, parse_subset(f, "a,c"));
    CHECK(m.contracted() == parse_subset(f, "a"));
    CHECK(m.deleted() == parse_subset(f, "c"));
    try {
      minor_apply(f, ctx, parse_subset(f, "d"));
      FAIL("expected InvalidRegion");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidRegion);
    }
  }

  TEST_CASE("graphic rank agrees with component count") {
    const Matroid g = graphic_grid(3, 3);
    const auto& edges = *g.edges();
    bool ok = true;
    for_each_subset(g.ground(), [&](Subset x) { ok = ok && g.rank(x) == graph_rank_oracle(9, edges, x); });
    CHECK(ok);
    CHECK(graphic_path(5).rank() == 5);
    CHECK(graphic_cycle(5).rank() == 4);
  }

  TEST_CASE("from_bases validation") {
    CHECK_NOTHROW(Matroid::from_bases(3, {Subset(0b011), Subset(0b101), Subset(0b110)}));
    // {0,1} and {2,3} alone violate basis exchange.
    CHECK_THROWS_AS(Matroid::from_bases(4, {Subset(0b0011), Subset(0b1100)}), Error);
    CHECK_THROWS_AS(Matroid::from_bases(3, {Subset(0b001), Subset(0b110)}), Error);
  }

  TEST_CASE("uniform_linear is uniform") {
    for (auto [r, n, q] : {std::tuple{2, 4, 3}, std::tuple{3, 5, 4}, std::tuple{2, 6, 5}, std::tuple{3, 8, 7}}) {
      const Matroid m = uniform_linear(r, n, q);
      bool ok = true;
      for_each_subset(m.ground(), [&](Subset x) { ok = ok && m.rank(x) == std::min(x.size(), r); });
      CHECK(ok);
    }
  }

  TEST_CASE("direct sum ranks add") {
    const Matroid a = uniform_linear(2, 4, 3);
    const Matroid s = direct_sum({a, a, a});
    CHECK(s.size() == 12);
    CHECK(s.rank() == 6);
    CHECK(s.rank(Subset(0b000100010001)) == 3);
    CHECK(s.rank(Subset(0b000000000111)) == 2);
    CHECK(s.label(4) == "e02");
  }

  TEST_CASE("exhaustive enumeration counts") {
    const std::vector<std::size_t> expected{1, 2, 4, 8, 17, 38, 98, 306};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
      CAPTURE(n);
      CHECK(all_matroids(n).size() == expected[n]);
    }
  }

  TEST_CASE("enumerated matroids satisfy the axioms and are pairwise non-isomorphic") {
    for (int n = 1; n <= 6; ++n) {
      const auto& ms = all_matroids(n);
      bool ok = true;
      for (const Matroid& m : ms) ok = ok && satisfies_rank_axioms(m);
      CHECK(ok);
      bool distinct = true;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) distinct = distinct && !isomorphic(ms[i], ms[j]);
      }
      CHECK(distinct);
    }
  }

  TEST_CASE("isomorphism under relabelling") {
    const Matroid f = named_fano();
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(3);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix m(Field::get(2), 3, 7);
    for (int c = 0; c < 7; ++c) {
      for (int r = 0; r < 3; ++r) m.set(r, perm[c], f.matrix()->at(r, c));
    }
    const Matroid g = Matroid::linear(m);
    const auto iso = find_isomorphism(f, g);
    REQUIRE(iso.has_value());
    bool ok = true;
    for_each_subset(f.ground(), [&](Subset x) {
      Subset y;
      for (int e : x) y = y.with((*iso)[e]);
      ok = ok && f.rank(x) == g.rank(y);
    });
    CHECK(ok);
    CHECK_FALSE(isomorphic(f, named_fano_dual()));
    CHECK_FALSE(isomorphic(named_u24(), graphic_cycle(4)));
  }

  TEST_CASE("has_minor") {
    CHECK(has_minor(Matroid::uniform(2, 5), named_u24()));
    CHECK(has_minor(Matroid::uniform(3, 5), named_u24()));
    CHECK_FALSE(has_minor(named_fano(), named_u24()));
    CHECK_FALSE(has_minor(graphic_complete(4), named_u24()));
    CHECK(has_minor(named_fano(), graphic_cycle(3)));
  }

  TEST_CASE("closure, loops, coloops") {
    const Matroid p = graphic_path(3);
    for (int e = 0; e < 3; ++e) CHECK(is_coloop(p, e));
    const Matroid l = Matroid::linear(Matrix(Field::get(2), {{1, 0, 1, 1}}));
    CHECK(loops(l) == Subset::single(1));
    CHECK(parallel_classes(l) == std::vector<Subset>{Subset(0b1101)});
    CHECK_FALSE(is_simple(l));
    CHECK(closure(l, Subset::single(0)) == Subset(0b1111));
    CHECK(basis_of(named_fano(), named_fano().ground()) == Subset(0b0000111));
  }

  TEST_CASE("subset parsing and formatting") {
    const Matroid m = named_u24();
    CHECK(parse_subset(m, "a, c") == Subset(0b101));
    CHECK(parse_subset(m, "") == Subset());
    CHECK(format_subset(m, Subset(0b1010)) == "{b,d}");
    CHECK_THROWS_AS(parse_subset(m, "z"), Error);
  }

  TEST_CASE("size guard override") {
    CHECK_THROWS_AS(all_matroids(9), Error);
    set_size_limit_override(9);
    CHECK_NOTHROW(check_size("probe", 9, 8));
    clear_size_limit_override();
    CHECK_THROWS_AS(check_size("probe", 9, 8), Error);
  }
}
