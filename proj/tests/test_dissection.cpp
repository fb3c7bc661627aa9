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

#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "matcon/corpus.hpp"
#include "matcon/dissection.hpp"
#include "matcon/error.hpp"

using namespace matcon;

namespace {

std::vector<Subset> parts_of(const Matroid& m, std::initializer_list<const char*> blocks) {
  std::vector<Subset> out;
  for (const char* b : blocks) out.push_back(parse_subset(m, b));
  return out;
}

// Longest strictly increasing chain of proper nonempty sets with λ <= k, by
// depth-first search from each prefix.
int longest_chain_oracle(const Matroid& m, int k) {
  const Subset g = m.ground();
  std::function<int(Subset)> depth = [&](Subset p) {
    int best = 0;
    for_each_subset(g - p, [&](Subset add) {
      const Subset z = p | add;
      if (add.empty() || z == g || lambda(m, z) > k) return;
      best = std::max(best, 1 + depth(z));
    });
    return best;
  };
  return depth(Subset());
}

// Every ordered partition of g into nonempty blocks.
void for_each_ordered_partition(Subset g, std::vector<Subset>& acc, const std::function<void(const std::vector<Subset>&)>& f) {
  if (g.empty()) {
    f(acc);
    return;
  }
  for_each_subset(g, [&](Subset b) {
    if (b.empty()) return;
    acc.push_back(b);
    for_each_ordered_partition(g - b, acc, f);
    acc.pop_back();
  });
}

}  // namespace

TEST_SUITE("dissection") {
  TEST_CASE("validate") {
    const Matroid p = graphic_path(4);
    CHECK(validate(p, {Subset(1), Subset(2), Subset(4), Subset(8)}, 0).length() == 3);
    const Matroid u = named_u24();
    CHECK(validate(u, parts_of(u, {"a", "b,c", "d"}), 1).length() == 2);
    try {
      validate(u, parts_of(u, {"a", "b", "c,d"}), 1);
      FAIL("expected CutTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kCutTooLarge);
      CHECK(e.detail() == 2);
    }
    try {
      validate(u, {parse_subset(u, "a,b"), Subset(), parse_subset(u, "c,d")}, 3);
      FAIL("expected EmptyPart");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kEmptyPart);
    }
    CHECK_THROWS_AS(validate(u, parts_of(u, {"a,b", "b,c,d"}), 3), Error);
    CHECK_THROWS_AS(validate(u, parts_of(u, {"a,b", "c"}), 3), Error);
  }

  TEST_CASE("nested round trip") {
    const Matroid u = named_u24();
    const Dissection d = validate(u, parts_of(u, {"a", "b,c", "d"}), 1);
    const auto seps = to_nested(u, d);
    REQUIRE(seps.size() == 2);
    CHECK(seps[0].a == parse_subset(u, "a"));
    CHECK(seps[1].a == parse_subset(u, "a,b,c"));
    CHECK(seps[0].k == 2);
    CHECK(from_nested(u, seps) == d);
    const Dissection one = validate(u, parts_of(u, {"a", "b,c,d"}), 1);
    CHECK(to_nested(u, one).size() == 1);
    CHECK(from_nested(u, to_nested(u, one)) == one);
    std::vector<Separation> bad{seps[1], seps[0]};
    try {
      from_nested(u, bad);
      FAIL("expected NotNested");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNotNested);
    }
  }

  TEST_CASE("containment") {
    const Matroid p = graphic_path(4);
    const Dissection x = validate(p, {Subset(1), Subset(2), Subset(4), Subset(8)}, 0);
    const Dissection y = validate(p, {Subset(1), Subset(6), Subset(8)}, 0);
    const auto f = contains(x, y);
    REQUIRE(f.has_value());
    CHECK(f->f == std::vector<int>{0, 1, 3});
    CHECK(contains(x, x)->f == std::vector<int>{0, 1, 2, 3});
    const Dissection z = validate(p, {Subset(2), Subset(5), Subset(8)}, 0);
    CHECK_FALSE(contains(x, z).has_value());
    CHECK_FALSE(contains(y, x).has_value());
  }

  TEST_CASE("is_linked") {
    const Matroid u = named_u24();
    CHECK(is_linked(u, validate(u, parts_of(u, {"a", "b,c", "d"}), 1)));
    const Matroid p = graphic_path(4);
    CHECK(is_linked(p, validate(p, {Subset(1), Subset(2), Subset(4), Subset(8)}, 0)));
    // U24 ⊕ U24 with the ends in one component: κ <= 1 < 2.
    const Matroid s = direct_sum({uniform_linear(2, 4, 3), uniform_linear(2, 4, 3)});
    const Dissection d = validate(s, {Subset(0b1), Subset(0b1111110), Subset(0b10000000)}, 2);
    CHECK_FALSE(is_linked(s, d));
  }

  TEST_CASE("containment preserves linkedness") {
    for (int n = 2; n <= 5; ++n) {
      for (const Matroid& m : all_matroids(n)) {
        for (int k = 0; k <= 2; ++k) {
          std::vector<Subset> acc;
          for_each_ordered_partition(m.ground(), acc, [&](const std::vector<Subset>& parts) {
            if (parts.size() < 2) return;
            Dissection x;
            try {
              x = validate(m, parts, k);
            } catch (const Error&) {
              return;
            }
            if (!is_linked(m, x)) return;
            // Every coarsening that keeps a subset of the cuts.
            const int t = x.length();
            for (std::uint32_t keep = 0; keep < (1U << t); ++keep) {
              std::vector<bool> kept(t + 1, false);
              for (int i = 1; i <= t; ++i) kept[i] = (keep >> (i - 1)) & 1U;
              Dissection y{{x.parts[0]}, k};
              for (int i = 1; i <= t; ++i) {
                if (kept[i]) {
                  y.parts.push_back(x.parts[i]);
                } else {
                  y.parts.back() |= x.parts[i];
                }
              }
              if (y.length() < 1) continue;
              REQUIRE(contains(x, y).has_value());
              CHECK(is_linked(m, y));
            }
          });
        }
      }
    }
  }

  TEST_CASE("find_longest_dissection examples") {
    const Matroid u = named_u24();
    const Dissection d = find_longest_dissection(u, 1);
    CHECK(d.length() == 2);
    CHECK(d.parts == parts_of(u, {"a", "b,c", "d"}));
    CHECK(find_longest_dissection(u, 0).length() == 0);
    CHECK(find_longest_dissection(Matroid::free(6), 0).length() == 5);
    CHECK(max_nested_kseps(u, 2) == 2);
    CHECK_THROWS_AS(find_longest_dissection(graphic_path(13), 0), Error);
  }

  TEST_CASE("find_longest_dissection matches chain search") {
    for (int n = 1; n <= 6; ++n) {
      for (const Matroid& m : all_matroids(n)) {
        for (int k = 0; k <= 2; ++k) {
          const Dissection d = find_longest_dissection(m, k);
          CHECK(d.length() == longest_chain_oracle(m, k));
          CHECK_NOTHROW(validate(m, d.parts, k));
        }
      }
    }
  }

  TEST_CASE("extract_linked on a path") {
    const Matroid p = graphic_path(8);
    std::vector<Subset> parts;
    for (int e = 0; e < 8; ++e) parts.push_back(Subset::single(e));
    const Dissection d = validate(p, parts, 1);
    const Dissection out = extract_linked(p, d, 2);
    CHECK(out.length() == 2);
    CHECK(out.k <= 1);
    CHECK_NOTHROW(validate(p, out.parts, out.k));
    CHECK(is_linked(p, out));
    CHECK_THROWS_AS(extract_linked(p, validate(p, {Subset(0b11), Subset(0b11111100)}, 1), 2), Error);
  }

  TEST_CASE("extract_linked keeps an already linked dissection linked") {
    const Matroid u = uniform_linear(2, 4, 3);
    const Matroid s = direct_sum({u, u, u});
    // Blocks {0}, {1,2}, {3}: each U24 contributes a λ = 1 chain inside the sum.
    std::vector<Subset> parts;
    for (int b = 0; b < 3; ++b) {
      parts.push_back(Subset::single(4 * b));
      parts.push_back(Subset::single(4 * b + 1));
      parts.push_back(Subset::single(4 * b + 2));
      parts.push_back(Subset::single(4 * b + 3));
    }
    const Dissection d = validate(s, parts, 2);
    for (int n = 1; n <= 3; ++n) {
      if (d.length() < n * n * n) continue;
      const Dissection out = extract_linked(s, d, n);
      CHECK(out.length() == n);
      CHECK(out.k <= 2);
      CHECK_NOTHROW(validate(s, out.parts, out.k));
      CHECK(is_linked(s, out));
    }
  }

  TEST_CASE("seqcon_check") {
    for (int n = 1; n <= 5; ++n) {
      for (const Matroid& m : all_matroids(n)) {
        const Subset g = m.ground();
        // Assign each element to S, T, C or D; then every X between S and E − T.
        const int total = 1 << (2 * n);
        bool ok = true;
        int applicable = 0;
        for (int code = 0; code < total; ++code) {
          Subset parts[4];
          int shift = 0;
          for (int el : g) {
            Subset& part = parts[(code >> shift) & 3];
            part = part.with(el);
            shift += 2;
          }
          const Subset s = parts[0], t = parts[1], c = parts[2], d = parts[3];
          for_each_subset(c | d, [&](Subset extra) {
            for (int k = 0; k <= 2; ++k) {
              const LemmaCheck r = seqcon_check(m, s, t, c, d, s | extra, k);
              applicable += r.applicable;
              ok = ok && r.holds;
            }
          });
        }
        CHECK(ok);
        CHECK(applicable > 0);
      }
    }
    const Matroid f = Matroid::free(3);
    CHECK(seqcon_check(f, Subset(1), Subset(2), Subset(4), Subset(), Subset(1), 0).holds);
  }
}
