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

#include "cosetkit/cosets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "cosetkit/integer.hpp"

namespace cosetkit {
namespace {

void require_base(std::uint64_t q, std::uint32_t m) {
  if (q < 2) throw std::invalid_argument(fmt::format("q must be at least 2, got {}", q));
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

std::uint64_t ceil_half_power(std::uint64_t q, std::uint32_t m) {
  const auto v = checked_pow(q, (m + 1) / 2);
  if (!v) throw std::overflow_error("q^{ceil(m/2)} overflows");
  return *v;
}

// Orbit of a under x -> qx mod n, rotated to start at its minimum.
Coset make_coset(std::uint64_t q, std::uint32_t m, std::uint64_t n, std::uint64_t a) {
  Coset c{q, m, n, a, {}};
  std::uint64_t x = a;
  do {
    c.elements.push_back(x);
    x = mulmod(x, q, n);
  } while (x != a);
  const auto it = std::min_element(c.elements.begin(), c.elements.end());
  std::rotate(c.elements.begin(), it, c.elements.end());
  c.representative = c.elements.front();
  return c;
}

}  // namespace

std::uint64_t coset_modulus(std::uint64_t q, std::uint32_t m) {
  require_base(q, m);
  const auto qm = checked_pow(q, m);
  if (!qm || *qm > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error(fmt::format("{}^{} does not fit in 63 bits", q, m));
  }
  return *qm - 1;
}

bool Coset::contains(std::uint64_t x) const {
  if (n == 0) return false;
  return std::find(elements.begin(), elements.end(), x % n) != elements.end();
}

Coset coset_of(std::uint64_t q, std::uint32_t m, std::int64_t a) {
  const std::uint64_t n = coset_modulus(q, m);
  if (n == 0) throw std::invalid_argument("modulus q^m - 1 is zero");
  return make_coset(q, m, n, reduce_mod(a, n));
}

CosetPartition::CosetPartition(std::uint64_t q, std::uint32_t m, std::uint64_t cap)
    : q_(q), m_(m), n_(coset_modulus(q, m)) {
  if (n_ > cap) throw std::length_error(fmt::format("modulus {} exceeds the coset cap {}", n_, cap));
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  index_.assign(n_, kUnassigned);
  for (std::uint64_t s = 0; s < n_; ++s) {
    if (index_[s] != kUnassigned) continue;
    Coset c = make_coset(q, m, n_, s);
    const auto id = static_cast<std::uint32_t>(cosets_.size());
    for (std::uint64_t x : c.elements) index_[x] = id;
    cosets_.push_back(std::move(c));
  }
}

std::vector<Coset> all_cosets(std::uint64_t q, std::uint32_t m, std::uint64_t cap) {
  return CosetPartition(q, m, cap).cosets();
}

Parity parity_class(const Coset& c) {
  if (c.q % 2 == 0) throw std::domain_error(fmt::format("parity classes need odd q, got {}", c.q));
  const bool even = c.representative % 2 == 0;
  for (std::uint64_t x : c.elements) {
    if ((x % 2 == 0) != even) {
      throw std::logic_error(fmt::format("coset of {} mixes parities (q={}, n={})", c.representative, c.q, c.n));
    }
  }
  return even ? Parity::kEven : Parity::kOdd;
}

GapStat gap_stat(const Coset& c) {
  GapStat g{c.representative, std::nullopt};
  if (c.size() < 2) return g;
  std::vector<std::uint64_t> sorted = c.elements;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 1; i < sorted.size(); ++i) best = std::min(best, sorted[i] - sorted[i - 1]);
  g.gap = best;
  return g;
}

Coset complementary(const Coset& c) {
  return make_coset(c.q, c.m, c.n, (c.n - c.representative) % c.n);
}

Coset coset_oplus(const Coset& c1, const Coset& c2bar) {
  if (c1.q != c2bar.q || c1.n != c2bar.n) throw std::invalid_argument("cosets over different moduli");
  const std::uint64_t s = c1.representative;
  for (std::uint64_t w : c2bar.elements) {
    if ((s + w) % c1.n == 0) return make_coset(c1.q, c1.m, c1.n, (s + w) % c1.n);
  }
  throw std::invalid_argument(fmt::format(
      "coset of {} is not complementary to the coset of {}: no element w satisfies {} + w = 0 mod {}",
      c2bar.representative, s, s, c1.n));
}

std::uint64_t disjointness_range(std::uint64_t q, std::uint32_t m) {
  const std::uint64_t n = coset_modulus(q, m);
  if (m % 2 == 0) return 2 * *checked_pow(q, m / 2);
  return std::min(ceil_half_power(q, m) - 1, n - 1);
}

std::uint64_t full_size_range(std::uint64_t q, std::uint32_t m) {
  coset_modulus(q, m);
  return ceil_half_power(q, m);
}

Coset special_coset(std::uint64_t q, std::uint32_t m) {
  if (m % 2 != 0) throw std::invalid_argument(fmt::format("special coset needs even m, got {}", m));
  const std::uint64_t n = coset_modulus(q, m);
  return make_coset(q, m, n, (*checked_pow(q, m / 2) + 1) % n);
}

bool ladder_admissible(std::uint64_t q, std::uint32_t m, std::uint64_t c) {
  const std::uint64_t bound = ceil_half_power(q, m);
  return c * q + 1 + 1 < bound;
}

Ladder ladder_cosets(std::uint64_t q, std::uint32_t m, std::uint64_t c) {
  const std::uint64_t n = coset_modulus(q, m);
  if (!ladder_admissible(q, m, c)) {
    throw std::invalid_argument(
        fmt::format("ladder needs cq + 1 < q^ceil(m/2) - 1, got q={}, m={}, c={}", q, m, c));
  }
  Ladder out;
  std::uint64_t qm1 = 1;
  for (std::uint32_t i = 0; i + 1 < m; ++i) qm1 = mulmod(qm1, q, n);
  for (std::uint64_t j = 1; j <= c; ++j) {
    const std::uint64_t start = j * q + 1;
    out.cosets.push_back(make_coset(q, m, n, start % n));
    out.last.push_back(mulmod(start % n, qm1, n));
  }
  return out;
}

}  // namespace cosetkit
