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

#include <vector>

#include "doctest.h"
#include "matcon/corpus.hpp"
#include "matcon/dissection.hpp"
#include "matcon/error.hpp"
#include "matcon/repr.hpp"

using namespace matcon;

namespace {

bool reproduces(const Matroid& m, const Matrix& w) {
  const Matroid c = compact(m);
  bool ok = w.cols() == c.size();
  for_each_subset(c.ground(), [&](Subset x) { ok = ok && column_rank(w, x) == c.rank(x); });
  return ok;
}

}  // namespace

TEST_SUITE("repr") {
  TEST_CASE("single-field examples") {
    CHECK_FALSE(is_representable(named_u24(), 2).has_value());
    const auto w3 = is_representable(named_u24(), 3);
    REQUIRE(w3.has_value());
    CHECK(reproduces(named_u24(), *w3));
    const auto fano2 = is_representable(named_fano(), 2);
    REQUIRE(fano2.has_value());
    CHECK(reproduces(named_fano(), *fano2));
    CHECK_FALSE(is_representable(named_fano(), 3).has_value());
    CHECK_FALSE(is_representable(named_fano_dual(), 3).has_value());
    CHECK(is_representable(Matroid::uniform(2, 5), 4).has_value());
    CHECK_FALSE(is_representable(Matroid::uniform(2, 5), 3).has_value());
    CHECK(is_representable(Matroid::uniform(0, 3), 2).has_value());
  }

  TEST_CASE("guards") {
    CHECK_THROWS_AS(is_representable(Matroid::free(11), 2), Error);
    CHECK_THROWS_AS(is_representable(Matroid::free(9), 4), Error);
    CHECK_THROWS_AS(is_representable(Matroid::free(8), 5), Error);
    CHECK_THROWS_AS(is_representable(Matroid::free(3), 6), Error);
  }

  TEST_CASE("families") {
    CHECK_FALSE(is_family_representable(named_u24(), FieldFamily({2})));
    CHECK(is_family_representable(named_u24(), FieldFamily({2, 3})));
    CHECK(is_family_representable(Matroid::free(5), FieldFamily({2})));
    CHECK_THROWS_AS(FieldFamily({2, 2}), Error);
    CHECK_THROWS_AS(FieldFamily({}), Error);
    CHECK_THROWS_AS(FieldFamily({6}), Error);
  }

  TEST_CASE("excluded minors") {
    CHECK(is_excluded_minor(named_u24(), FieldFamily({2})));
    CHECK(is_excluded_minor(named_fano(), FieldFamily({3})));
    CHECK_FALSE(is_excluded_minor(named_fano(), FieldFamily({2})));
    CHECK(is_excluded_minor(Matroid::uniform(2, 5), FieldFamily({2, 3})));
    CHECK_FALSE(is_excluded_minor(Matroid::uniform(2, 6), FieldFamily({2, 3})));
  }

  TEST_CASE("binary iff no U24 minor") {
    for (int n = 0; n <= 7; ++n) {
      bool ok = true;
      for (const Matroid& m : all_matroids(n)) ok = ok && is_representable(m, 2).has_value() == !has_minor(m, named_u24());
      CHECK(ok);
    }
  }

  TEST_CASE("ternary iff no U25, U35, F7, F7* minor") {
    const std::vector<Matroid> excluded{Matroid::uniform(2, 5), Matroid::uniform(3, 5), named_fano(), named_fano_dual()};
    for (int n = 0; n <= 7; ++n) {
      bool ok = true;
      for (const Matroid& m : all_matroids(n)) {
        bool has = false;
        for (const Matroid& x : excluded) has = has || has_minor(m, x);
        const auto w = is_representable(m, 3);
        ok = ok && w.has_value() == !has;
        if (w) ok = ok && reproduces(m, *w);
      }
      CHECK(ok);
    }
  }

  TEST_CASE("all_representations") {
    const auto reps = all_representations(named_u24(), 3);
    CHECK(!reps.empty());
    for (const Matrix& w : reps) CHECK(reproduces(named_u24(), w));
    CHECK(all_representations(named_u24(), 2).empty());
    // Normalized U_{2,4} over GF(5): e1, e2, (1,1), then (1,x) with x ∉ {0, 1}.
    CHECK(all_representations(named_u24(), 5).size() == 3);
  }

  TEST_CASE("nested separations and excluded-minor bounds") {
    CHECK(max_nested_kseps(named_u24(), 2) == 2);
    CHECK(max_nested_kseps(Matroid::free(5), 1) == 4);
    CHECK(max_nested_kseps(named_u24(), 1) == 0);
    CHECK(lemma_2seps_check(named_u24(), FieldFamily({2})));
    CHECK(lemma_2seps_check(named_fano(), FieldFamily({3})));
    CHECK(max_nested_kseps(named_fano(), 2) <= 2);
    CHECK(lemma_2seps_check(Matroid::uniform(2, 5), FieldFamily({2, 3})));
    CHECK_THROWS_AS(lemma_2seps_check(named_fano(), FieldFamily({2})), Error);
    for (int k = 1; k <= 3; ++k) {
      const auto rep = nested_bound_report(named_u24(), FieldFamily({2}), k);
      CHECK(rep.below);
      CHECK(rep.count >= 0);
    }
  }
}
