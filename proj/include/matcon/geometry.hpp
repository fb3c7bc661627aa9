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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "matcon/gf.hpp"

namespace matcon {

// Result of tower(): exact below the magnitude guard, symbolic above it.
struct TowerValue {
  // Exact value; meaningful only when !over_guard.
  mpz_class value;
  // Set when the value has more than kTowerDigitGuard decimal digits.
  bool over_guard = false;
  // Compact right-associated form, e.g. "2^(5^256)"; the decimal value when short.
  std::string expression;

  std::string to_string() const;
};

inline constexpr std::uint64_t kTowerDigitGuard = 1000000;

// tower(a) = a, tower(a, rest...) = a^tower(rest...). Requires a nonempty list.
TowerValue tower(std::span<const std::uint64_t> args);
TowerValue tower(std::initializer_list<std::uint64_t> args);

// True iff x < t (exact in both regimes: a value over the guard exceeds every
// materializable integer below 10^kTowerDigitGuard).
bool tower_exceeds(const TowerValue& t, const mpz_class& x);

// Number of decimal digits of |x| (1 for zero).
std::uint64_t decimal_digits(const mpz_class& x);

// A linear subspace of GF(q)^k stored as its reduced row-echelon basis, so
// equal subspaces have identical encodings. The zero subspace is the empty flat.
class Flat {
 public:
  Flat(const Field& field, int ambient, std::vector<Vector> echelon_rows);

  const Field& field() const { return *field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& rows() const { return rows_; }
  bool contains(std::span<const Element> v) const;
  bool is_subflat_of(const Flat& other) const;

  bool operator==(const Flat& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  std::strong_ordering operator<=>(const Flat& o) const;

  // Rows as "[1 0 2; 0 1 1]" (or "[]" for the empty flat).
  std::string to_string() const;

 private:
  const Field* field_;
  int ambient_;
  std::vector<Vector> rows_;
};

Flat span_flat(const Field& f, int ambient, std::span<const Vector> vectors);
Flat empty_flat(const Field& f, int ambient);
Flat full_flat(const Field& f, int ambient);

// F1 ∨ F2 and F1 ∩ F2. Throw kAmbientMismatch for different fields or ambient dimensions.
Flat flat_join(const Flat& a, const Flat& b);
Flat flat_meet(const Flat& a, const Flat& b);

// dim(F1) + dim(F2) − dim(F1 ∨ F2).
int flat_local_conn(const Flat& a, const Flat& b);

// Points of PG(k−1, q): nonzero vectors whose first nonzero coordinate is 1.
struct ProjectiveGeometry {
  int k = 0;
  FieldSpec field;
  std::vector<Vector> points;
};

ProjectiveGeometry projective_geometry(int k, int q);

// Gaussian binomial [k choose i]_q.
mpz_class gaussian_binomial(int k, int i, int q);
// Number of subspaces of GF(q)^k, counting the zero subspace.
mpz_class flat_count(int k, int q);

// Every subspace of GF(q)^k in canonical form, ordered by dimension, then
// pivot columns, then free entries. Guarded to q^k <= 2^20 and to at most
// 2^22 flats in total.
std::vector<Flat> enumerate_flats(int k, int q);
// The d-dimensional subspaces of GF(q)^k in the same order. Same guards.
std::vector<Flat> enumerate_subspaces(int k, int q, int d);

// Number of flats of PG(k−1, q) is at most tower(q, k, k).
bool flats_bound_holds(int k, int q);

}  // namespace matcon
