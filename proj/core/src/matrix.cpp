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

#include "cosetkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetkit {
namespace {

// dst -= c * src over the tail starting at column `from`.
void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c, std::size_t from) {
  if (c == 0) return;
  const Elem nc = f.neg(c);
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(nc, src[j]));
  }
}

void scale(const Field& f, std::span<Elem> v, Elem c, std::size_t from) {
  for (std::size_t j = from; j < v.size(); ++j) v[j] = f.mul(v[j], c);
}

// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    scale(f, m.row(r), f.inv(m(r, c)), c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r) axpy(f, m.row(i), m.row(r), m(i, c), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t k) {
  Matrix m(std::move(field), k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(field_, 0, cols_);
  out.data_.reserve(indices.size() * cols_);
  for (std::size_t i : indices) out.append_row(row(i));
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
  if (!(*a.field_ == *b.field_)) throw std::invalid_argument("matrices over different fields");
  const Field& f = *a.field_;
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref_in_place(work).size();
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
  const Field& f = m.field();
  // Echelon basis of the rows accepted so far, each normalised at its pivot.
  std::vector<std::vector<Elem>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> kept;
  std::vector<Elem> v(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), v.begin());
    for (std::size_t b = 0; b < basis.size(); ++b) axpy(f, v, basis[b], v[pivots[b]], pivots[b]);
    const auto nz = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (nz == v.end()) continue;
    const auto p = static_cast<std::size_t>(nz - v.begin());
    scale(f, v, f.inv(v[p]), p);
    basis.push_back(v);
    pivots.push_back(p);
    kept.push_back(r);
  }
  return kept;
}

Matrix remove_dependent_rows(const Matrix& m) {
  const auto keep = independent_rows(m);
  return m.select_rows(keep);
}

Matrix row_reduce(const Matrix& m) {
  Matrix work = m;
  const auto pivots = rref_in_place(work);
  std::vector<std::size_t> idx(pivots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return work.select_rows(idx);
}

Matrix null_space(const Matrix& m) {
  const Field& f = m.field();
  Matrix work = m;
  const auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Matrix basis(m.field_ptr(), 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(work(r, free));
    basis.append_row(v);
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t k = m.rows();
  Matrix aug(m.field_ptr(), k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < k || pivots[k - 1] != k - 1) return std::nullopt;
  Matrix out(m.field_ptr(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = aug(i, k + j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

}  // namespace cosetkit
