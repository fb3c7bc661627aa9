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

#include "matcon/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "matcon/error.hpp"

namespace matcon {

namespace {

struct ModulusEntry {
  int q;
  std::vector<int> coeffs;  // constant term first, monic
};

// Conway polynomials for the non-prime orders up to 256.
const std::vector<ModulusEntry>& modulus_table() {
  static const std::vector<ModulusEntry> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {243, {1, 2, 0, 0, 0, 1}},
      {25, {2, 4, 1}},
      {125, {3, 3, 0, 1}},
      {49, {3, 6, 1}},
      {121, {2, 7, 1}},
      {169, {2, 12, 1}},
  };
  return table;
}

// Polynomial product modulo the field modulus, on base-p digit encodings.
int poly_mulmod(int a, int b, const FieldSpec& s) {
  std::array<int, 16> prod{};
  std::array<int, 8> da{}, db{};
  for (int i = 0; i < s.m; ++i) {
    da[i] = a % s.p;
    a /= s.p;
    db[i] = b % s.p;
    b /= s.p;
  }
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
  }
  for (int d = 2 * s.m - 2; d >= s.m; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    // x^d = x^(d-m) * x^m and x^m = -(modulus lower terms)
    for (int i = 0; i <= s.m; ++i) {
      prod[d - s.m + i] = ((prod[d - s.m + i] - c * s.modulus[i]) % s.p + s.p) % s.p;
    }
  }
  int out = 0;
  for (int i = s.m - 1; i >= 0; --i) out = out * s.p + prod[i];
  return out;
}

int poly_add(int a, int b, const FieldSpec& s) {
  int out = 0, scale = 1;
  for (int i = 0; i < s.m; ++i) {
    out += ((a % s.p + b % s.p) % s.p) * scale;
    a /= s.p;
    b /= s.p;
    scale *= s.p;
  }
  return out;
}

}  // namespace

FieldSpec field_create(int q) {
  if (q < 2) throw Error(ErrorKind::kInvalidArgument, "field order must be at least 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw Error(ErrorKind::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw Error(ErrorKind::kInvalidArgument, "field order above " + std::to_string(kMaxFieldOrder));
  FieldSpec spec{p, m, q, {}};
  if (m == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  for (const auto& entry : modulus_table()) {
    if (entry.q == q) {
      spec.modulus = entry.coeffs;
      return spec;
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "no modulus tabulated for q = " + std::to_string(q));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q) {
  const int q = q_;
  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (spec_.m == 1) {
        add_[a * q + b] = static_cast<Element>((a + b) % q);
        mul_[a * q + b] = static_cast<Element>((a * b) % q);
      } else {
        add_[a * q + b] = static_cast<Element>(poly_add(a, b, spec_));
        mul_[a * q + b] = static_cast<Element>(poly_mulmod(a, b, spec_));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Element>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Element>(b);
    }
  }
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard lock(mu);
  auto it = fields.find(q);
  if (it == fields.end()) {
    FieldSpec spec = field_create(q);
    it = fields.emplace(q, std::unique_ptr<Field>(new Field(std::move(spec)))).first;
  }
  return *it->second;
}

Element mul(Element a, Element b, const FieldSpec& f) { return Field::get(f.q).mul(a, b); }
Element add(Element a, Element b, const FieldSpec& f) { return Field::get(f.q).add(a, b); }

Matrix::Matrix(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

Matrix::Matrix(const Field& field, const std::vector<std::vector<int>>& rows)
    : Matrix(field, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols_) {
      throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
    }
    for (int c = 0; c < cols_; ++c) {
      const int v = rows[r][c];
      if (v < 0 || v >= field.q()) {
        throw Error(ErrorKind::kInvalidArgument, "entry " + std::to_string(v) + " outside GF(" + std::to_string(field.q()) + ")");
      }
      set(r, c, static_cast<Element>(v));
    }
  }
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Matrix::Reduced Matrix::rref() const {
  Matrix m = *this;
  const Field& f = *field_;
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int pr = -1;
    for (int r = lead; r < rows_; ++r) {
      if (m.at(r, c) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != lead) {
      for (int j = 0; j < cols_; ++j) {
        const Element t = m.at(pr, j);
        m.set(pr, j, m.at(lead, j));
        m.set(lead, j, t);
      }
    }
    const Element s = f.inv(m.at(lead, c));
    for (int j = 0; j < cols_; ++j) m.set(lead, j, f.mul(s, m.at(lead, j)));
    for (int r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      const Element factor = m.at(r, c);
      if (factor == 0) continue;
      for (int j = 0; j < cols_; ++j) m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(lead, j))));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

int column_rank(const Matrix& mat, Subset cols) {
  SpanBuilder span(mat.field(), mat.rows());
  Vector v(mat.rows());
  for (int c : cols) {
    for (int r = 0; r < mat.rows(); ++r) v[r] = mat.at(r, c);
    span.add(v);
    if (span.rank() == mat.rows()) break;
  }
  return span.rank();
}

std::vector<Vector> echelon_basis(const Field& f, int dim, std::span<const Vector> vectors) {
  Matrix m(f, static_cast<int>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (int j = 0; j < dim; ++j) m.set(static_cast<int>(i), j, vectors[i][j]);
  }
  const auto red = m.rref();
  std::vector<Vector> out;
  out.reserve(red.pivots.size());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) out.push_back(red.matrix.row(static_cast<int>(i)));
  return out;
}

bool SpanBuilder::reduce(Element* v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Element c = v[pivots_[i]];
    if (c == 0) continue;
    const Element* row = rows_.data() + i * dim_;
    for (int j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
  }
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) return false;
  }
  return true;
}

bool SpanBuilder::contains(std::span<const Element> v) const {
  std::array<Element, 64> buf{};
  std::vector<Element> heap;
  Element* w = buf.data();
  if (dim_ > static_cast<int>(buf.size())) {
    heap.resize(dim_);
    w = heap.data();
  }
  std::copy(v.begin(), v.begin() + dim_, w);
  return reduce(w);
}

bool SpanBuilder::add(std::span<const Element> v) {
  const std::size_t base = rows_.size();
  rows_.insert(rows_.end(), v.begin(), v.begin() + dim_);
  Element* w = rows_.data() + base;
  if (reduce(w)) {
    rows_.resize(base);
    return false;
  }
  int pivot = 0;
  while (w[pivot] == 0) ++pivot;
  const Field& f = *field_;
  const Element s = f.inv(w[pivot]);
  for (int j = 0; j < dim_; ++j) w[j] = f.mul(s, w[j]);
  pivots_.push_back(pivot);
  return true;
}

}  // namespace matcon
