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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matcon/subset.hpp"

namespace matcon {

// Field element: the integer in [0, q) whose base-p digits are the
// coefficients of the residue polynomial, constant term first.
using Element = std::uint8_t;
using Vector = std::vector<Element>;

struct FieldSpec {
  int p = 0;
  int m = 0;
  int q = 0;
  // Monic irreducible polynomial over GF(p) of degree m, constant term first
  // (m + 1 coefficients). For m = 1 this is x.
  std::vector<int> modulus;

  bool operator==(const FieldSpec&) const = default;
};

// Largest supported field order.
inline constexpr int kMaxFieldOrder = 256;

// Throws kNotPrimePower for q with two distinct prime factors, and
// kInvalidArgument for q < 2 or q outside the compiled modulus table.
FieldSpec field_create(int q);

// Arithmetic tables for GF(q). Instances are immutable and interned: get(q)
// always returns the same object.
class Field {
 public:
  static const Field& get(int q);

  const FieldSpec& spec() const { return spec_; }
  int q() const { return spec_.q; }
  int p() const { return spec_.p; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  // Multiplicative inverse; a must be nonzero.
  Element inv(Element a) const { return inv_[a]; }

  bool operator==(const Field& o) const { return this == &o; }

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  int q_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

Element mul(Element a, Element b, const FieldSpec& f);
Element add(Element a, Element b, const FieldSpec& f);

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(const Field& field, int rows, int cols);
  Matrix(const Field& field, const std::vector<std::vector<int>>& rows);

  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Element at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Element v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v; }
  Vector column(int c) const;
  Vector row(int r) const;

  struct Reduced;
  // Reduced row-echelon form; pivots are the leftmost possible columns.
  Reduced rref() const;
  int rank() const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  const Field* field_;
  int rows_;
  int cols_;
  std::vector<Element> data_;
};

struct Matrix::Reduced {
  Matrix matrix;
  std::vector<int> pivots;
};

// Rank of the column submatrix indexed by cols.
int column_rank(const Matrix& mat, Subset cols);

// Reduced echelon basis of span(vectors) in GF(q)^dim: each row has a leading
// 1 at its pivot and zeros in every other row's pivot column; rows sorted by
// pivot.
std::vector<Vector> echelon_basis(const Field& f, int dim, std::span<const Vector> vectors);

// Incremental reduction against an echelon basis built in insertion order.
// Used by the searches that assign vectors one element at a time.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, int dim) : field_(&f), dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  // Reduces v in place; returns true when v lies in the span.
  bool reduce(Element* v) const;
  bool contains(std::span<const Element> v) const;
  // Adds v; returns false (and leaves the span unchanged) if v is dependent.
  bool add(std::span<const Element> v);

 private:
  const Field* field_;
  int dim_;
  std::vector<Element> rows_;
  std::vector<int> pivots_;
};

}  // namespace matcon
