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

#include "cosetkit/gf.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "cosetkit/cosets.hpp"

namespace cosetkit {

Poly minimal_polynomial(const ExtensionField& ext, std::uint64_t i) {
  if (i >= ext.n()) throw std::out_of_range(fmt::format("exponent {} outside [0, {})", i, ext.n()));
  const Field& E = ext.ext();
  const Coset c = coset_of(ext.q(), ext.m(), static_cast<std::int64_t>(i));

  // Running product over GF(q^m), lowest degree first.
  std::vector<Elem> prod{1};
  for (std::uint64_t j : c.elements) {
    const Elem root = E.neg(E.exp(j));
    std::vector<Elem> next(prod.size() + 1, 0);
    for (std::size_t d = 0; d < prod.size(); ++d) {
      next[d + 1] = E.add(next[d + 1], prod[d]);
      next[d] = E.add(next[d], E.mul(prod[d], root));
    }
    prod = std::move(next);
  }

  std::vector<Elem> coeffs(prod.size());
  for (std::size_t d = 0; d < prod.size(); ++d) {
    const auto b = ext.restrict_to_base(prod[d]);
    if (!b) throw std::logic_error(fmt::format("minimal polynomial of alpha^{} left the base field", i));
    coeffs[d] = *b;
  }
  return Poly(ext.base_ptr(), std::move(coeffs));
}

Matrix expand_matrix(const ExtensionField& ext, const Matrix& m, const std::optional<std::vector<Elem>>& basis) {
  if (!(m.field() == ext.ext())) throw std::invalid_argument("matrix is not over the extension field");
  const std::uint32_t deg = ext.m();

  // Coordinates in a custom basis are P^{-1} times polynomial-basis
  // coordinates, where column j of P holds the coordinates of basis[j].
  std::optional<Matrix> to_basis;
  if (basis) {
    if (basis->size() != deg) {
      throw std::invalid_argument(fmt::format("basis has {} elements, expected {}", basis->size(), deg));
    }
    Matrix p(ext.base_ptr(), deg, deg);
    for (std::uint32_t j = 0; j < deg; ++j) {
      const Elem b = (*basis)[j];
      if (!ext.ext().contains(b)) throw std::invalid_argument("basis element outside the field");
      const auto co = ext.coordinates(b);
      for (std::uint32_t i = 0; i < deg; ++i) p(i, j) = co[i];
    }
    to_basis = inverse(p);
    if (!to_basis) throw std::invalid_argument("basis is not linearly independent over the base field");
  }

  const Field& B = ext.base();
  Matrix out(ext.base_ptr(), m.rows() * deg, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto co = ext.coordinates(m(r, c));
      for (std::uint32_t j = 0; j < deg; ++j) {
        Elem v = co[j];
        if (to_basis) {
          v = 0;
          for (std::uint32_t i = 0; i < deg; ++i) v = B.add(v, B.mul((*to_basis)(j, i), co[i]));
        }
        out(r * deg + j, c) = v;
      }
    }
  }
  return out;
}

}  // namespace cosetkit
