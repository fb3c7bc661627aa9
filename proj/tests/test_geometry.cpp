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

#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "matcon/error.hpp"
#include "matcon/geometry.hpp"

using namespace matcon;

namespace {

// Vectors of GF(q)^k indexed by their base-q digits (first coordinate most significant).
struct SmallSpace {
  const Field& f;
  int k;
  int size;

  Vector vec(int index) const {
    Vector v(k);
    for (int j = k - 1; j >= 0; --j) {
      v[j] = static_cast<Element>(index % f.q());
      index /= f.q();
    }
    return v;
  }
  int index(const Vector& v) const {
    int out = 0;
    for (int j = 0; j < k; ++j) out = out * f.q() + v[j];
    return out;
  }
  int add_scaled(int a, int b, Element c) const {
    Vector va = vec(a), vb = vec(b);
    for (int j = 0; j < k; ++j) va[j] = f.add(va[j], f.mul(c, vb[j]));
    return index(va);
  }
  // Closure of a set of vectors (bit mask over indices) under linear combination.
  std::uint64_t span_with(std::uint64_t s, int v) const {
    std::uint64_t out = s;
    for (int a = 0; a < size; ++a) {
      if (!((s >> a) & 1U)) continue;
      for (int c = 0; c < f.q(); ++c) out |= std::uint64_t{1} << add_scaled(a, v, static_cast<Element>(c));
    }
    return out;
  }
  std::uint64_t mask_of(const Flat& fl) const {
    std::uint64_t s = 1;  // the zero vector
    for (const Vector& r : fl.rows()) s = span_with(s, index(r));
    return s;
  }
};

std::set<std::uint64_t> all_subspaces(const SmallSpace& sp) {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    const std::uint64_t s = frontier.back();
    frontier.pop_back();
    for (int v = 0; v < sp.size; ++v) {
      if ((s >> v) & 1U) continue;
      const std::uint64_t t = sp.span_with(s, v);
      if (seen.insert(t).second) frontier.push_back(t);
    }
  }
  return seen;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("tower small values") {
    CHECK(tower({2, 3}).value == 8);
    CHECK(tower({2, 2, 2}).value == 16);
    CHECK(tower({3, 2, 2}).value == 81);
    CHECK(tower({7}).value == 7);
    CHECK(tower({2, 3, 2}).value == 512);
    CHECK(tower({1, 1000, 1000, 1000}).value == 1);
    CHECK(tower({0, 0}).value == 1);
    CHECK(tower({0, 5}).value == 0);
    CHECK_THROWS_AS(tower(std::span<const std::uint64_t>()), Error);
    const TowerValue t = tower({2, 2, 3});
    CHECK(t.to_string() == "256");
  }

  TEST_CASE("tower above the guard") {
    const TowerValue big = tower({2, 5, 4, 4});
    CHECK(big.over_guard);
    CHECK(big.expression == "2^(5^256)");
    CHECK(tower_exceeds(big, mpz_class("1000000000000000000000000")));
    const TowerValue mid = tower({2, 4, 3, 4});
    CHECK(mid.over_guard);
    CHECK(mid.expression == "2^5846006549323611672814739330865132078623730171904");
    // 2^(2^16) has 19729 digits and is materialized exactly.
    const TowerValue exact = tower({2, 2, 2, 2, 2});
    CHECK_FALSE(exact.over_guard);
    CHECK(decimal_digits(exact.value) == 19729);
    CHECK(exact.expression == "2^65536");
    CHECK_FALSE(tower_exceeds(tower({2, 3}), 8));
    CHECK(tower_exceeds(tower({2, 3}), 7));
  }

  TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(flat_count(2, 2) == 5);
    CHECK(flat_count(3, 2) == 16);
  }

  TEST_CASE("projective geometry points") {
    for (auto [k, q] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 2}}) {
      const auto pg = projective_geometry(k, q);
      int expected = 0, power = 1;
      for (int i = 0; i < k; ++i) {
        expected += power;
        power *= q;
      }
      CHECK(static_cast<int>(pg.points.size()) == expected);
      std::set<Vector> distinct(pg.points.begin(), pg.points.end());
      CHECK(distinct.size() == pg.points.size());
    }
  }

  TEST_CASE("enumerate_flats matches brute-force subspace enumeration") {
    for (auto [k, q] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2},
                        std::pair{6, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}, std::pair{3, 4},
                        std::pair{2, 5}, std::pair{2, 7}, std::pair{2, 8}}) {
      CAPTURE(k);
      CAPTURE(q);
      const Field& f = Field::get(q);
      int size = 1;
      for (int i = 0; i < k; ++i) size *= q;
      const SmallSpace sp{f, k, size};
      const auto oracle = all_subspaces(sp);
      const auto flats = enumerate_flats(k, q);
      CHECK(mpz_class(static_cast<unsigned long>(flats.size())) == flat_count(k, q));
      std::set<std::uint64_t> got;
      for (const Flat& fl : flats) got.insert(sp.mask_of(fl));
      CHECK(got == oracle);
      std::set<Flat> distinct(flats.begin(), flats.end());
      CHECK(distinct.size() == flats.size());
    }
  }

  TEST_CASE("enumerate_flats guard") {
    CHECK_THROWS_AS(enumerate_flats(21, 2), Error);
    CHECK_THROWS_AS(enumerate_flats(12, 2), Error);
  }

  TEST_CASE("span_flat and local connectivity") {
    const Field& f2 = Field::get(2);
    CHECK(span_flat(f2, 3, {}).dim() == 0);
    const std::vector<Vector> std_basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(span_flat(f2, 3, std_basis) == full_flat(f2, 3));
    const std::vector<Vector> plane{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    const Flat p = span_flat(f2, 3, plane);
    CHECK(p.dim() == 2);
    CHECK(p.rows() == std::vector<Vector>{{1, 0, 0}, {0, 1, 0}});
    CHECK(flat_local_conn(p, p) == 2);
    const std::vector<Vector> l1{{1, 0, 0, 0}, {0, 1, 0, 0}}, l2{{0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(flat_local_conn(span_flat(f2, 4, l1), span_flat(f2, 4, l2)) == 0);
    // Two lines of PG(2,2) through the point (1,0,0).
    const std::vector<Vector> m1{{1, 0, 0}, {0, 1, 0}}, m2{{1, 0, 0}, {0, 0, 1}};
    CHECK(flat_local_conn(span_flat(f2, 3, m1), span_flat(f2, 3, m2)) == 1);
    CHECK_THROWS_AS(flat_local_conn(span_flat(f2, 3, m1), span_flat(f2, 4, l1)), Error);
    CHECK_THROWS_AS(flat_local_conn(span_flat(f2, 3, m1), empty_flat(Field::get(3), 3)), Error);
  }

  TEST_CASE("meet and join agree with subspace masks") {
    for (auto [k, q] : {std::pair{4, 2}, std::pair{3, 3}}) {
      const Field& f = Field::get(q);
      int size = 1;
      for (int i = 0; i < k; ++i) size *= q;
      const SmallSpace sp{f, k, size};
      const auto flats = enumerate_flats(k, q);
      bool ok = true;
      for (const Flat& a : flats) {
        for (const Flat& b : flats) {
          const std::uint64_t ma = sp.mask_of(a), mb = sp.mask_of(b);
          ok = ok && sp.mask_of(flat_meet(a, b)) == (ma & mb);
          const Flat j = flat_join(a, b);
          ok = ok && a.is_subflat_of(j) && b.is_subflat_of(j);
          ok = ok && flat_local_conn(a, b) == flat_meet(a, b).dim();
          ok = ok && flat_local_conn(a, b) == flat_local_conn(b, a);
          ok = ok && flat_local_conn(a, b) <= std::min(a.dim(), b.dim());
        }
      }
      CHECK(ok);
    }
  }

  TEST_CASE("flats bound") {
    CHECK(flats_bound_holds(2, 2));
    int checked = 0;
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      for (int k = 1;; ++k) {
        mpz_class cells;
        mpz_ui_pow_ui(cells.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
        if (cells > 65536) break;
        CHECK(flats_bound_holds(k, q));
        ++checked;
      }
    }
    CHECK(checked > 20);
  }
}
