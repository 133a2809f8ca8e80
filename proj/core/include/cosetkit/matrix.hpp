// Copyright 2026 The cosetkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cosetkit/field.hpp"

namespace cosetkit {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr field, std::size_t k);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  bool is_zero() const;

  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return *a.field_ == *b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Row rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Indices of the first maximal linearly independent subset of rows, scanning
/// in row order.
std::vector<std::size_t> independent_rows(const Matrix& m);

/// m restricted to independent_rows(m).
Matrix remove_dependent_rows(const Matrix& m);

/// Reduced row echelon form (zero rows dropped).
Matrix row_reduce(const Matrix& m);

/// Basis (as rows) of { v : m * v^T = 0 }.
Matrix null_space(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// [a; b]
Matrix vstack(const Matrix& a, const Matrix& b);

/// Hamming weight of a vector.
std::size_t weight(std::span<const Elem> v);

}  // namespace cosetkit
