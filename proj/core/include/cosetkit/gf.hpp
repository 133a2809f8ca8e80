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

#include <cstdint>
#include <optional>
#include <vector>

#include "cosetkit/field.hpp"
#include "cosetkit/matrix.hpp"
#include "cosetkit/poly.hpp"

namespace cosetkit {

/// Minimal polynomial of alpha^i over GF(q): the product of (x - alpha^j)
/// over the q-coset of i, returned with coefficients in the base field.
/// Throws std::out_of_range unless 0 <= i < n.
Poly minimal_polynomial(const ExtensionField& ext, std::uint64_t i);

/// Rewrites a matrix over GF(q^m) as a matrix over GF(q).  Row r of `m`
/// becomes rows r*m .. r*m + m - 1, row r*m + j holding the j-th coordinate
/// of each entry in `basis` (the polynomial basis 1, alpha, ..., alpha^{m-1}
/// when omitted).  Throws std::invalid_argument for a dependent basis or a
/// matrix over the wrong field.
Matrix expand_matrix(const ExtensionField& ext, const Matrix& m,
                     const std::optional<std::vector<Elem>>& basis = std::nullopt);

}  // namespace cosetkit
