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
#include <string>
#include <string_view>
#include <vector>

#include "cosetkit/cyclic.hpp"

namespace cosetkit {

enum class CssFamily { kPair, kGood1, kGood2, kGood3, kLadder };

std::string_view family_name(CssFamily f);
/// Inverse of family_name; throws std::invalid_argument.
CssFamily css_family_from_name(std::string_view name);

/// CSS code from nested cyclic codes C2 (inner) inside C1 (outer).
struct CssParams {
  CssFamily family = CssFamily::kPair;
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::optional<std::uint64_t> c{};

  std::uint64_t n = 0;
  /// K = k1 - k2, from the actual defining-set sizes.
  std::uint64_t k = 0;
  std::uint64_t outer_bch = 0;       // BCH bound of C1
  std::uint64_t inner_dual_bch = 0;  // BCH bound of C2^perp
  /// min(outer_bch, inner_dual_bch)
  std::uint64_t d_lb = 0;

  /// Closed-form values a family promises; empty for plain pairs.
  std::optional<std::uint64_t> claimed_k{};
  std::optional<std::uint64_t> claimed_d{};

  CyclicCode outer;
  CyclicCode inner;
  std::vector<std::string> warnings{};

  bool matches_claims() const;
  /// The distance printed in the bracket: the claimed value when it is
  /// backed by the computed bound, otherwise the computed bound.
  std::uint64_t reported_distance() const;
  /// "[[n, k, d >= D]]_q"
  std::string bracket() const;
};

/// Throws std::invalid_argument unless nested(outer, inner).
CssParams css_from_pair(const CyclicCode& outer, const CyclicCode& inner);

/// C1 from cosets 0..q-2; C2 drops the cosets of q+1, ..., 2q-1.
/// Promises [[q^2 - 1, q^2 - 4q + 5, d >= q]]_q.
CssParams family_good1(std::uint64_t q);

/// C1 from cosets 0..c-2; C2 drops the cosets of q+1, ..., q+c-1.
/// Promises [[q^2 - 1, q^2 - 4c + 5, d >= c]]_q for 2 <= c < q.  c = q is
/// accepted with a warning and coincides with family_good1.
CssParams family_good2(std::uint64_t q, std::uint64_t c);

/// Even m.  C1 from cosets 0..c-2; C2 drops the cosets of q^{m/2}+1, ...,
/// q^{m/2}+c-1.  Promises [[n, n - 2m(c-2) - m/2 - 1, d >= c]]_q.
CssParams family_good3(std::uint64_t q, std::uint32_t m, std::uint64_t c);

/// C1 from cosets 0..c-2; C2 drops the ladder cosets of q+1, 2q+1, ...,
/// (c-1)q+1.  Promises [[n, n - m(2c-3) - 1, d >= c]]_q.
CssParams family_es(std::uint64_t q, std::uint32_t m, std::uint64_t c);

}  // namespace cosetkit
