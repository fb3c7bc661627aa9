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

#include <set>
#include <vector>

#include "doctest.h"
#include "matcon/connectivity.hpp"
#include "matcon/corpus.hpp"
#include "matcon/error.hpp"
#include "matcon/repr.hpp"
#include "matcon/schemes.hpp"

using namespace matcon;

namespace {

using Assignment = std::vector<std::set<Flat>>;

// Literal search: every assignment of vectors of GF(q)^d to A, for each d in
// [max(r(A), k−1), r(A)+k−1], with N fixed as the first k−1 coordinates.
std::set<Assignment> brute_schemes(const Matroid& m, Subset a, int k, int q) {
  const Field& f = Field::get(q);
  const SubsetIndexer idx(a);
  const int n = idx.size();
  const int r = m.rank(a);
  const EquivPartition part = partition(m, a);
  const ProjectiveGeometry pg = projective_geometry(k - 1, q);
  std::set<Assignment> out;
  for (int d = std::max(r, k - 1); d <= r + k - 1; ++d) {
    const int cells = n * d;
    std::vector<int> digit(cells, 0);
    while (true) {
      Matrix mat(f, std::max(d, 1), std::max(n, 1));
      for (int c = 0; c < cells; ++c) mat.set(c % d, c / d, static_cast<Element>(digit[c]));
      bool ok = true;
      for (std::size_t x = 0; x < idx.count() && ok; ++x) ok = column_rank(mat, Subset(x)) == m.rank(idx.subset(x));
      if (ok) {
        Assignment s(part.count());
        for (std::size_t x = 0; x < idx.count(); ++x) {
          SpanBuilder span(f, d);
          for (int e : Subset(x)) span.add(mat.column(e));
          std::vector<Vector> pts;
          for (const Vector& p : pg.points) {
            Vector emb(d, 0);
            std::copy(p.begin(), p.end(), emb.begin());
            if (span.contains(emb)) pts.push_back(p);
          }
          s[part.class_of(idx.subset(x))].insert(span_flat(f, k - 1, pts));
        }
        out.insert(std::move(s));
      }
      int pos = cells;
      while (pos > 0 && ++digit[pos - 1] == q) digit[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

std::set<Assignment> assignments(const std::vector<RealizedScheme>& v) {
  std::set<Assignment> out;
  for (const auto& rs : v) out.insert(rs.scheme.assignment);
  return out;
}

Subset labels(const Matroid& m, const char* text) { return parse_subset(m, text); }

}  // namespace

TEST_SUITE("schemes") {
  TEST_CASE("compatible trivial cases") {
    const Field& f = Field::get(2);
    Scheme s1{Subset(0b0011), 3, f.spec(), Assignment(2)};
    Scheme s2{Subset(0b1100), 3, f.spec(), Assignment(3)};
    PiTable pi{2, 3, {0, 1, 2, 1, 1, 0}};
    CHECK(compatible(s1, s2, pi));

    // Every pair of flats meets in dimension π.
    const Flat p1(f, 2, {{1, 0}});
    const Flat p2(f, 2, {{0, 1}});
    const Flat line = full_flat(f, 2);
    Scheme t1{Subset(0b01), 3, f.spec(), {{p1}, {line}}};
    Scheme t2{Subset(0b10), 3, f.spec(), {{p2}}};
    CHECK(compatible(t1, t2, PiTable{2, 1, {0, 1}}));
    CHECK_FALSE(compatible(t1, t2, PiTable{2, 1, {1, 1}}));
    CHECK(compatible(t2, t1, PiTable{1, 2, {0, 1}}));
  }

  TEST_CASE("compatible dimension mismatch") {
    const Field& f = Field::get(2);
    Scheme s1{Subset(0b01), 3, f.spec(), Assignment(1)};
    Scheme s2{Subset(0b10), 2, f.spec(), Assignment(1)};
    CHECK_THROWS_AS(compatible(s1, s2, PiTable{1, 1, {0}}), Error);
    s2.k = 3;
    CHECK(compatible(s1, s2, PiTable{1, 1, {0}}));
    CHECK_THROWS_AS(compatible(s1, s2, PiTable{2, 1, {0, 0}}), Error);
    Scheme s3{Subset(0b10), 3, Field::get(3).spec(), Assignment(1)};
    CHECK_THROWS_AS(compatible(s1, s3, PiTable{1, 1, {0}}), Error);
    Scheme s4{Subset(0b11), 3, f.spec(), Assignment(1)};
    CHECK_THROWS_AS(compatible(s1, s4, PiTable{1, 1, {0}}), Error);
    Scheme bad{Subset(0b10), 3, f.spec(), {{full_flat(f, 3)}}};
    CHECK_THROWS_AS(compatible(s1, bad, PiTable{1, 1, {0}}), Error);
  }

  TEST_CASE("single element next to a point") {
    const Matroid m = Matroid::uniform(2, 3);
    const Subset a = Subset::single(0);
    const auto got = realizable_schemes(m, a, 2, 2);
    const Field& f = Field::get(2);
    const Flat zero = empty_flat(f, 1);
    const Flat point = full_flat(f, 1);
    const std::set<Assignment> expect{{{zero}, {zero}}, {{zero}, {point}}};
    CHECK(assignments(got) == expect);
    CHECK(assignments(got) == brute_schemes(m, a, 2, 2));
  }

  TEST_CASE("u24 schemes") {
    const Matroid m = named_u24();
    const Subset a = labels(m, "a,b");
    const Subset b = m.ground() - a;
    const auto s3 = realizable_schemes(m, a, 3, 3);
    CHECK_FALSE(s3.empty());
    CHECK(assignments(s3) == brute_schemes(m, a, 3, 3));
    const auto s2 = realizable_schemes(m, a, 3, 2);
    CHECK(assignments(s2) == brute_schemes(m, a, 3, 2));

    // Binary: no compatible pair at all. Ternary: at least one.
    const PiTable pi = pi_table(m, a);
    const auto t2 = realizable_schemes(m, b, 3, 2);
    int pairs = 0;
    for (const auto& x : s2) {
      for (const auto& y : t2) pairs += compatible(x.scheme, y.scheme, pi);
    }
    CHECK(pairs == 0);
    const auto t3 = realizable_schemes(m, b, 3, 3);
    pairs = 0;
    for (const auto& x : s3) {
      for (const auto& y : t3) pairs += compatible(x.scheme, y.scheme, pi);
    }
    CHECK(pairs > 0);
  }

  TEST_CASE("side independent of the guts") {
    // A = {a} is a coloop-free element of a free part: the only scheme sends
    // both classes to the empty flat.
    const Matroid m = direct_sum({as_linear(Matroid::free(1), 3), uniform_linear(2, 4, 3)});
    const Subset a = Subset::single(0);
    CHECK(lambda(m, a) == 0);
    const auto got = realizable_schemes(m, a, 1, 2);
    REQUIRE(got.size() == 1);
    for (const auto& flats : got.front().scheme.assignment) {
      REQUIRE(flats.size() == 1);
      CHECK(flats.begin()->dim() == 0);
    }
  }

  TEST_CASE("realizable schemes match the literal search on small matroids") {
    for (int n = 2; n <= 4; ++n) {
      for (const Matroid& m : all_matroids(n)) {
        for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
          const Subset a(bits);
          const int k = lambda(m, a) + 1;
          if (k > 3) continue;
          for (int q : {2, 3}) {
            if (q == 3 && a.size() > 2) continue;
            const auto got = realizable_schemes(m, a, k, q);
            INFO(m.name(), " A=", format_subset(m, a), " q=", q);
            CHECK(assignments(got) == brute_schemes(m, a, k, q));
          }
        }
      }
    }
  }

  TEST_CASE("every witness replays") {
    std::vector<std::pair<Matroid, Subset>> cases;
    cases.emplace_back(named_u24(), Subset(0b0011));
    cases.emplace_back(named_fano(), parse_subset(named_fano(), "a,b,d"));
    cases.emplace_back(graphic_cycle(5), Subset(0b00011));
    for (const auto& [m, a] : cases) {
      const int k = lambda(m, a) + 1;
      for (int q : {2, 3}) {
        for (const auto& rs : realizable_schemes(m, a, k, q)) {
          CHECK(rs.witness.dim >= std::max(m.rank(a), k - 1));
          CHECK(rs.witness.dim <= m.rank(a) + k - 1);
          CHECK(replay_witness(m, rs.scheme, rs.witness));
          // An extra flat in one class is no longer exact.
          Scheme more = rs.scheme;
          more.assignment.back().insert(full_flat(Field::get(q), k - 1));
          if (more.assignment.back().size() != rs.scheme.assignment.back().size()) {
            CHECK_FALSE(replay_witness(m, more, rs.witness));
          }
        }
      }
    }
  }

  TEST_CASE("compatible is symmetric under transposition") {
    const Matroid m = named_u24();
    const Subset a = Subset(0b0011), b = Subset(0b1100);
    const PiTable pi = pi_table(m, a);
    for (int q : {2, 3}) {
      const auto left = realizable_schemes(m, a, 3, q);
      const auto right = realizable_schemes(m, b, 3, q);
      for (const auto& x : left) {
        for (const auto& y : right) {
          CHECK(compatible(x.scheme, y.scheme, pi) == compatible(y.scheme, x.scheme, pi.transposed()));
        }
      }
    }
  }

  TEST_CASE("majic examples") {
    const Matroid u24 = named_u24();
    const Subset a = labels(u24, "a,b");
    const MajicReport r2 = majic_report(u24, a, 2);
    CHECK(r2.k == 3);
    CHECK_FALSE(r2.representable);
    CHECK_FALSE(r2.compatible_pair);
    CHECK(majic_check(u24, a, 3));
    const Matroid c5 = graphic_cycle(5);
    CHECK(majic_check(c5, Subset(0b00111), 2));
    const Matroid fano = named_fano();
    CHECK(majic_check(fano, parse_subset(fano, "a,b,d"), 2));
    CHECK_FALSE(majic_check(fano, parse_subset(fano, "a,b,d"), 3));
  }

  TEST_CASE("majic agrees on the exhaustive corpus") {
    int checked = 0;
    for (int n = 2; n <= 6; ++n) {
      for (const Matroid& m : all_matroids(n)) {
        for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
          const Subset a(bits);
          if (a.size() > 5 || n - a.size() > 5 || lambda(m, a) >= 3) continue;
          for (int q : {2, 3}) {
            INFO(m.name(), " A=", format_subset(m, a), " q=", q);
            CHECK_NOTHROW(majic_check(m, a, q));
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("guards and preconditions") {
    const Matroid m = named_u24();
    CHECK_THROWS_AS(realizable_schemes(m, Subset(0b0011), 2, 2), Error);
    CHECK_THROWS_AS(realizable_schemes(m, Subset(0b0011), 3, 4), Error);
    CHECK_THROWS_AS(realizable_schemes(Matroid::free(7), Subset(0b111111), 1, 2), Error);
    CHECK_THROWS_AS(majic_check(m, Subset(), 2), Error);
    CHECK_THROWS_AS(majic_check(m, m.ground(), 2), Error);
    try {
      realizable_schemes(m, Subset(0b0001), 3, 2);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNotExactSeparation);
    }
  }
}
