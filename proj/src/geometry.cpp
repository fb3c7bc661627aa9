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

#include "matcon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "matcon/error.hpp"

namespace matcon {

std::string TowerValue::to_string() const { return over_guard ? expression : value.get_str(); }

std::uint64_t decimal_digits(const mpz_class& x) {
  if (x == 0) return 1;
  return static_cast<std::uint64_t>(mpz_class(abs(x)).get_str().size());
}

namespace {

constexpr std::size_t kShortDigits = 60;

std::string wrap(const std::string& s) {
  return s.find('^') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

TowerValue tower(std::span<const std::uint64_t> args) {
  if (args.empty()) throw Error(ErrorKind::kInvalidArgument, "tower needs at least one argument");
  TowerValue cur;
  cur.value = mpz_class(std::to_string(args.back()));
  cur.expression = cur.value.get_str();
  for (std::size_t i = args.size() - 1; i-- > 0;) {
    const std::uint64_t a = args[i];
    TowerValue next;
    const std::string base = std::to_string(a);
    if (a <= 1) {
      // 1^x = 1; 0^x = 0 for x > 0 and 0^0 = 1.
      const bool zero_exp = !cur.over_guard && cur.value == 0;
      next.value = (a == 1 || zero_exp) ? 1 : 0;
      next.expression = next.value.get_str();
      cur = std::move(next);
      continue;
    }
    const std::string inner = cur.value.get_str().size() <= kShortDigits && !cur.over_guard ? cur.value.get_str() : cur.expression;
    next.expression = base + "^" + wrap(inner);
    bool over = cur.over_guard;
    if (!over) {
      // digits(a^e) ~ e * log10(a); decide before materializing.
      if (!cur.value.fits_ulong_p()) {
        over = true;
      } else {
        const double e = static_cast<double>(cur.value.get_ui());
        over = e * std::log10(static_cast<double>(a)) > static_cast<double>(kTowerDigitGuard) + 1;
      }
    }
    if (over) {
      next.over_guard = true;
    } else {
      mpz_pow_ui(next.value.get_mpz_t(), mpz_class(base).get_mpz_t(), cur.value.get_ui());
      if (decimal_digits(next.value) > kTowerDigitGuard) {
        next.over_guard = true;
        next.value = 0;
      } else if (next.value.get_str().size() <= kShortDigits) {
        next.expression = next.value.get_str();
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TowerValue tower(std::initializer_list<std::uint64_t> args) {
  return tower(std::span<const std::uint64_t>(args.begin(), args.size()));
}

bool tower_exceeds(const TowerValue& t, const mpz_class& x) {
  if (!t.over_guard) return x < t.value;
  return decimal_digits(x) <= kTowerDigitGuard || x < 0;
}

Flat::Flat(const Field& field, int ambient, std::vector<Vector> echelon_rows)
    : field_(&field), ambient_(ambient), rows_(std::move(echelon_rows)) {}

bool Flat::contains(std::span<const Element> v) const {
  SpanBuilder b(*field_, ambient_);
  for (const Vector& r : rows_) b.add(r);
  return b.contains(v);
}

bool Flat::is_subflat_of(const Flat& other) const {
  for (const Vector& r : rows_) {
    if (!other.contains(r)) return false;
  }
  return true;
}

std::strong_ordering Flat::operator<=>(const Flat& o) const {
  if (auto c = field_->q() <=> o.field_->q(); c != 0) return c;
  if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  return rows_ <=> o.rows_;
}

std::string Flat::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << "; ";
    for (int j = 0; j < ambient_; ++j) out << (j ? " " : "") << static_cast<int>(rows_[i][j]);
  }
  out << "]";
  return out.str();
}

Flat span_flat(const Field& f, int ambient, std::span<const Vector> vectors) {
  for (const Vector& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::kDimensionMismatch, "vector length differs from ambient dimension");
  }
  return Flat(f, ambient, echelon_basis(f, ambient, vectors));
}

Flat empty_flat(const Field& f, int ambient) { return Flat(f, ambient, {}); }

Flat full_flat(const Field& f, int ambient) {
  std::vector<Vector> rows(ambient, Vector(ambient, 0));
  for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
  return Flat(f, ambient, std::move(rows));
}

namespace {

void check_same_ambient(const Flat& a, const Flat& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw Error(ErrorKind::kAmbientMismatch, "flats live in different spaces");
  }
}

}  // namespace

Flat flat_join(const Flat& a, const Flat& b) {
  check_same_ambient(a, b);
  std::vector<Vector> all = a.rows();
  all.insert(all.end(), b.rows().begin(), b.rows().end());
  return span_flat(a.field(), a.ambient(), all);
}

Flat flat_meet(const Flat& a, const Flat& b) {
  check_same_ambient(a, b);
  // Zassenhaus: reduce [u | u] for u in a and [w | 0] for w in b; rows whose
  // left half vanishes carry a basis of the intersection in their right half.
  const int k = a.ambient();
  const Field& f = a.field();
  const int rows = a.dim() + b.dim();
  if (rows == 0) return empty_flat(f, k);
  Matrix m(f, rows, 2 * k);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < k; ++j) {
      m.set(i, j, a.rows()[i][j]);
      m.set(i, k + j, a.rows()[i][j]);
    }
  }
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < k; ++j) m.set(a.dim() + i, j, b.rows()[i][j]);
  }
  const auto red = m.rref();
  std::vector<Vector> meet;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] < k) continue;
    Vector v(k);
    for (int j = 0; j < k; ++j) v[j] = red.matrix.at(static_cast<int>(i), k + j);
    meet.push_back(std::move(v));
  }
  return span_flat(f, k, meet);
}

int flat_local_conn(const Flat& a, const Flat& b) { return a.dim() + b.dim() - flat_join(a, b).dim(); }

ProjectiveGeometry projective_geometry(int k, int q) {
  const Field& f = Field::get(q);
  check_size("projective geometry q^k", static_cast<std::size_t>(std::min(std::pow(q, k), 1e18)), std::size_t{1} << 20);
  ProjectiveGeometry pg{k, f.spec(), {}};
  // Enumerate vectors with leading coordinate 1 after a run of zeros.
  for (int lead = 0; lead < k; ++lead) {
    const int free = k - lead - 1;
    std::size_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
      Vector v(k, 0);
      v[lead] = 1;
      std::size_t c = code;
      for (int j = k - 1; j > lead; --j) {
        v[j] = static_cast<Element>(c % q);
        c /= q;
      }
      pg.points.push_back(std::move(v));
    }
  }
  return pg;
}

mpz_class gaussian_binomial(int k, int i, int q) {
  if (i < 0 || i > k) return 0;
  mpz_class num = 1, den = 1, qq = q;
  for (int j = 0; j < i; ++j) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(k - j));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(j + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

mpz_class flat_count(int k, int q) {
  mpz_class total = 0;
  for (int i = 0; i <= k; ++i) total += gaussian_binomial(k, i, q);
  return total;
}

namespace {

// Appends every d-dimensional subspace of GF(q)^k: pivot column sets in
// lexicographic order, then free entries.
void append_subspaces(const Field& f, int k, int d, std::vector<Flat>& out) {
  const int q = f.q();
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    // Free positions: row i, columns after piv[i] that are not pivots.
    std::vector<std::pair<int, int>> cells_free;
    for (int i = 0; i < d; ++i) {
      for (int c = piv[i] + 1; c < k; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) cells_free.emplace_back(i, c);
      }
    }
    std::vector<int> digit(cells_free.size(), 0);
    while (true) {
      std::vector<Vector> rows(d, Vector(k, 0));
      for (int i = 0; i < d; ++i) rows[i][piv[i]] = 1;
      for (std::size_t c = 0; c < cells_free.size(); ++c) {
        rows[cells_free[c].first][cells_free[c].second] = static_cast<Element>(digit[c]);
      }
      out.emplace_back(f, k, std::move(rows));
      std::size_t pos = cells_free.size();
      while (pos > 0 && ++digit[pos - 1] == q) digit[--pos] = 0;
      if (pos == 0) break;
    }
    int i = d - 1;
    while (i >= 0 && piv[i] == k - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

void check_flat_total(const mpz_class& count, const char* what) {
  const std::size_t limit = size_limit(std::size_t{1} << 22);
  if (count > mpz_class(std::to_string(limit))) {
    throw Error(ErrorKind::kSizeGuard, std::string(what) + " would produce " + count.get_str() + " flats");
  }
}

void check_cells(int k, int q, const char* what) {
  const double cells = std::pow(static_cast<double>(q), k);
  check_size(what, static_cast<std::size_t>(std::min(cells, 1e18)), std::size_t{1} << 20);
}

}  // namespace

std::vector<Flat> enumerate_flats(int k, int q) {
  const Field& f = Field::get(q);
  check_cells(k, q, "enumerate_flats q^k");
  const mpz_class count = flat_count(k, q);
  check_flat_total(count, "enumerate_flats");
  std::vector<Flat> out;
  out.reserve(count.get_ui());
  for (int d = 0; d <= k; ++d) append_subspaces(f, k, d, out);
  return out;
}

std::vector<Flat> enumerate_subspaces(int k, int q, int d) {
  const Field& f = Field::get(q);
  check_cells(k, q, "enumerate_subspaces q^k");
  std::vector<Flat> out;
  if (d < 0 || d > k) return out;
  const mpz_class count = gaussian_binomial(k, d, q);
  check_flat_total(count, "enumerate_subspaces");
  out.reserve(count.get_ui());
  append_subspaces(f, k, d, out);
  return out;
}

bool flats_bound_holds(int k, int q) {
  const TowerValue bound = tower({static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k)});
  const mpz_class count = flat_count(k, q);
  return tower_exceeds(bound, count - 1);
}

}  // namespace matcon
