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

#include "cosetkit/css.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "cosetkit/cosets.hpp"
#include "cosetkit/field.hpp"
#include "cosetkit/integer.hpp"

namespace cosetkit {
namespace {

void require_prime_power(std::uint64_t q, std::uint64_t min_q) {
  if (!prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
  if (q < min_q) throw std::invalid_argument(fmt::format("q = {} is below the minimum {}", q, min_q));
}

void require_c(std::uint64_t q, std::uint64_t c) {
  if (c < 2 || c > q) throw std::invalid_argument(fmt::format("c = {} outside [2, {}]", c, q));
}

std::vector<std::int64_t> range_exponents(std::uint64_t first, std::uint64_t last, std::uint64_t step = 1) {
  std::vector<std::int64_t> out;
  for (std::uint64_t x = first; x <= last; x += step) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

// C1 = cosets 0..c-2, C2 = everything except the cosets of `dropped`.
CssParams family_pair(std::uint64_t q, std::uint32_t m, std::uint64_t c, const std::vector<std::int64_t>& dropped) {
  const auto ext = make_extension(q, m);
  const auto outer_z = DefiningSet::from_exponents(q, m, range_exponents(0, c - 2));
  const auto inner_z = DefiningSet::from_exponents(q, m, dropped).complement();
  return css_from_pair(CyclicCode(ext, outer_z), CyclicCode(ext, inner_z));
}

}  // namespace

std::string_view family_name(CssFamily f) {
  switch (f) {
    case CssFamily::kPair:
      return "pair";
    case CssFamily::kGood1:
      return "good1";
    case CssFamily::kGood2:
      return "good2";
    case CssFamily::kGood3:
      return "good3";
    case CssFamily::kLadder:
      return "es";
  }
  return "pair";
}

CssFamily css_family_from_name(std::string_view name) {
  for (CssFamily f : {CssFamily::kPair, CssFamily::kGood1, CssFamily::kGood2, CssFamily::kGood3, CssFamily::kLadder}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument(fmt::format("unknown CSS family '{}'", name));
}

bool CssParams::matches_claims() const {
  return (!claimed_k || *claimed_k == k) && (!claimed_d || *claimed_d <= d_lb);
}

std::uint64_t CssParams::reported_distance() const {
  return claimed_d && *claimed_d <= d_lb ? *claimed_d : d_lb;
}

std::string CssParams::bracket() const {
  return fmt::format("[[{}, {}, d >= {}]]_{}", n, k, reported_distance(), q);
}

CssParams css_from_pair(const CyclicCode& outer, const CyclicCode& inner) {
  if (!nested(outer, inner)) throw std::invalid_argument("inner code is not contained in the outer code");
  CssParams p{.outer = outer, .inner = inner};
  p.q = outer.q();
  p.m = outer.m();
  p.n = outer.n();
  p.k = outer.dimension() - inner.dimension();
  p.outer_bch = outer.bch_bound();
  p.inner_dual_bch = bch_bound(dual_defining_set(inner.defining_set()));
  p.d_lb = std::min(p.outer_bch, p.inner_dual_bch);
  return p;
}

CssParams family_good1(std::uint64_t q) {
  require_prime_power(q, 3);
  CssParams p = family_pair(q, 2, q, range_exponents(q + 1, 2 * q - 1));
  p.family = CssFamily::kGood1;
  p.c = q;
  p.claimed_k = q * q - 4 * q + 5;
  p.claimed_d = q;
  return p;
}

CssParams family_good2(std::uint64_t q, std::uint64_t c) {
  require_prime_power(q, 3);
  require_c(q, c);
  CssParams p = family_pair(q, 2, c, range_exponents(q + 1, q + c - 1));
  p.family = CssFamily::kGood2;
  p.c = c;
  p.claimed_k = q * q + 5 - 4 * c;
  p.claimed_d = c;
  if (c == q) p.warnings.push_back(fmt::format("c = q = {} is the endpoint covered by good1", q));
  return p;
}

CssParams family_good3(std::uint64_t q, std::uint32_t m, std::uint64_t c) {
  require_prime_power(q, 2);
  if (m < 2 || m % 2 != 0) throw std::invalid_argument(fmt::format("good3 needs even m >= 2, got {}", m));
  require_c(q, c);
  const std::uint64_t half = *checked_pow(q, m / 2);
  if (half + c - 1 >= 2 * half) throw std::invalid_argument("c too large for the disjointness range");
  const std::uint64_t n = coset_modulus(q, m);
  CssParams p = family_pair(q, m, c, range_exponents(half + 1, half + c - 1));
  p.family = CssFamily::kGood3;
  p.c = c;
  p.claimed_k = n - 2 * m * (c - 2) - m / 2 - 1;
  p.claimed_d = c;
  return p;
}

CssParams family_es(std::uint64_t q, std::uint32_t m, std::uint64_t c) {
  require_prime_power(q, 3);
  require_c(q, c);
  if (!ladder_admissible(q, m, c - 1)) {
    throw std::invalid_argument(fmt::format("es needs (c-1)q + 1 < q^ceil(m/2) - 1, got q={}, m={}, c={}", q, m, c));
  }
  const std::uint64_t n = coset_modulus(q, m);
  CssParams p = family_pair(q, m, c, range_exponents(q + 1, (c - 1) * q + 1, q));
  p.family = CssFamily::kLadder;
  p.c = c;
  p.claimed_k = n - m * (2 * c - 3) - 1;
  p.claimed_d = c;
  return p;
}

}  // namespace cosetkit
