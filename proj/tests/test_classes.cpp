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

#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "matcon/classes.hpp"
#include "matcon/connectivity.hpp"
#include "matcon/corpus.hpp"
#include "matcon/error.hpp"

using namespace matcon;

namespace {

// Class vector of P(M, A) computed from the literal definition: X ~ Y iff
// ⊓(X, Z) = ⊓(Y, Z) for all Z ⊆ B.
std::vector<int> literal_classes(const Matroid& m, Subset a) {
  const SubsetIndexer ia(a), ib(m.ground() - a);
  std::map<std::vector<int>, int> ids;
  std::vector<int> out;
  for (std::size_t i = 0; i < ia.count(); ++i) {
    std::vector<int> key;
    for (std::size_t z = 0; z < ib.count(); ++z) key.push_back(local_conn(m, ia.subset(i), ib.subset(z)));
    auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("equivalent") {
    const Matroid u = named_u24();
    const Subset a = parse_subset(u, "a,b");
    CHECK(equivalent(u, a, parse_subset(u, "a"), parse_subset(u, "a")));
    CHECK(equivalent(u, a, parse_subset(u, "a"), parse_subset(u, "b")));
    CHECK_FALSE(equivalent(u, a, Subset(), parse_subset(u, "a")));
  }

  TEST_CASE("partition examples") {
    const Matroid u = named_u24();
    const EquivPartition p = partition(u, parse_subset(u, "a,b"));
    CHECK(p.count() == 3);
    CHECK(p.reps() == std::vector<Subset>{Subset(), parse_subset(u, "a"), parse_subset(u, "a,b")});
    CHECK(p.members(1) == std::vector<Subset>{parse_subset(u, "a"), parse_subset(u, "b")});
    const Matroid loopy = Matroid::linear(Matrix(Field::get(2), {{0, 0, 1, 1}}));
    CHECK(partition(loopy, Subset(0b11)).count() == 1);
    CHECK(partition(Matroid::free(6), Subset(0b111)).count() == 1);
  }

  TEST_CASE("fingerprint partition equals the literal definition") {
    for (int n = 1; n <= 7; ++n) {
      bool ok = true;
      for (const Matroid& m : all_matroids(n)) {
        for_each_subset(m.ground(), [&](Subset a) { ok = ok && partition(m, a).class_vector() == literal_classes(m, a); });
      }
      CHECK(ok);
    }
  }

  TEST_CASE("guts fingerprint") {
    const Matroid u = uniform_linear(2, 4, 3);
    const Subset a = Subset(0b0011);
    CHECK(guts_fingerprint(u, a, Subset()).dim() == 0);
    const Flat g = guts_fingerprint(u, a, Subset(0b0001));
    CHECK(g.dim() == 1);
    CHECK(g.contains(u.matrix()->column(0)));
    CHECK(guts_fingerprint(u, a, a).dim() == 2);
  }

  TEST_CASE("equal guts fingerprints imply equivalence") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const int q = trial % 2 ? 3 : 2;
      const Matroid m = random_linear(q, 3 + static_cast<int>(rng() % 2), 8, rng);
      Subset a;
      for (int e = 0; e < 8; ++e) {
        if (rng() % 2) a = a.with(e);
      }
      const EquivPartition p = partition(m, a);
      const SubsetIndexer idx(a);
      std::vector<Flat> flats;
      for (std::size_t i = 0; i < idx.count(); ++i) flats.push_back(guts_fingerprint(m, a, idx.subset(i)));
      bool ok = true;
      for (std::size_t i = 0; i < idx.count(); ++i) {
        for (std::size_t j = i + 1; j < idx.count(); ++j) {
          if (flats[i] == flats[j]) ok = ok && p.class_of(idx.subset(i)) == p.class_of(idx.subset(j));
        }
      }
      CHECK(ok);
    }
  }

  TEST_CASE("classes1 bound") {
    const Matroid u = uniform_linear(2, 4, 3);
    CHECK(classes1_bound(u, Subset(0b0011), 3));
    CHECK(partition(u, Subset(0b0011)).count() == 3);
    // Exact 2-separation of a binary matroid: two triangles sharing the edge
    // 02, split off the two other edges of one of them.
    const Matroid g = as_linear(Matroid::graphic(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 0}}), 2);
    const Subset side = Subset(0b00011);
    REQUIRE(is_exact_separation(g, side, 2));
    CHECK(classes1_bound(g, side, 2));
    CHECK(partition(g, side).count() <= 2);
    // A single element in the closure of the other side: {∅} and {a}.
    CHECK(partition(u, Subset(0b0001)).count() == 2);
    CHECK_THROWS_AS(classes1_bound(u, Subset(0b0011), 2), Error);
    CHECK_THROWS_AS(classes1_bound(named_u24(), Subset(0b0011), 3), Error);
  }

  TEST_CASE("pi table") {
    const Matroid u = named_u24();
    const Subset a = parse_subset(u, "a,b");
    const EquivPartition pa = partition(u, a), pb = partition(u, u.ground() - a);
    const PiTable t = pi_table(u, pa, pb);
    for (int j = 0; j < t.cols; ++j) CHECK(t.at(pa.class_of(Subset()), j) == 0);
    CHECK(t.at(pa.class_of(parse_subset(u, "a")), pb.class_of(parse_subset(u, "c"))) == 0);
    CHECK(t.at(pa.class_of(parse_subset(u, "a,b")), pb.class_of(parse_subset(u, "c"))) == 1);
    CHECK(pi_table(u, u.ground() - a) == t.transposed());
  }

  TEST_CASE("classes2 counterexample and refinement") {
    // U_{1,2}: A = {a}, e parallel to a.
    const Matroid m = Matroid::uniform(1, 2);
    const Classes2Result r = classes2_check(m, Subset(0b01), 1);
    CHECK_FALSE(r.holds);
    CHECK(r.refines);
    REQUIRE(r.counterexample.has_value());
    CHECK(partition(m, Subset(0b01)).count() == 2);
    CHECK(partition(deletion(m, Subset(0b10)), Subset(0b01)).count() == 1);
    CHECK(partition(contraction(m, Subset(0b10)), Subset(0b01)).count() == 1);

    // A loop e leaves every partition unchanged.
    const Matroid loopy = Matroid::linear(Matrix(Field::get(2), {{1, 1, 0, 1}, {0, 1, 0, 1}}));
    CHECK(classes2_check(loopy, Subset(0b0011), 2).holds);
  }

  TEST_CASE("every class refines the meet") {
    for (int n = 2; n <= 6; ++n) {
      bool ok = true;
      for (const Matroid& m : all_matroids(n)) {
        for_each_subset(m.ground(), [&](Subset a) {
          for (int e : m.ground() - a) ok = ok && classes2_check(m, a, e).refines;
        });
      }
      CHECK(ok);
    }
  }

  TEST_CASE("stable contained dissections") {
    const Matroid c = graphic_cycle(7);
    std::vector<Subset> parts;
    for (int e = 0; e < 7; ++e) parts.push_back(Subset::single(e));
    const Dissection d = validate(c, parts, 1);
    REQUIRE(is_linked(c, d));
    const auto link = tutte_link(c, d.parts.front(), d.parts.back());
    const MinorContext ctx{link.contract, d.range(1, 5) - link.contract};
    const auto one = stable_contained_dissection(c, d, ctx, 1);
    REQUIRE(one.has_value());
    CHECK(one->length() == 1);
    CHECK(one->parts.front() == d.parts.front());
    const auto three = stable_contained_dissection(c, d, ctx, 3);
    REQUIRE(three.has_value());
    CHECK(contains(d, *three).has_value());
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        const Matroid mo = minor_apply(c, ctx, three->range(i, j - 1));
        CHECK(partition(mo, three->range(0, i - 1)) == partition(c, three->range(0, i - 1)));
        CHECK(partition(mo, three->range(j, 3)) == partition(c, three->range(j, 3)));
      }
    }

    const Matroid p = graphic_path(5);
    const Dissection dp = validate(p, {Subset(1), Subset(2), Subset(4), Subset(8), Subset(16)}, 0);
    const MinorContext pctx{Subset(2), Subset(12)};
    CHECK(stable_contained_dissection(p, dp, pctx, 4).has_value());
    CHECK_THROWS_AS(stable_contained_dissection(p, dp, MinorContext{Subset(2), Subset(4)}, 2), Error);
  }
}
