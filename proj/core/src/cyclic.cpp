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

#include "cosetkit/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "cosetkit/cosets.hpp"
#include "cosetkit/gf.hpp"
#include "cosetkit/integer.hpp"

namespace cosetkit {

DefiningSet::DefiningSet(std::uint64_t q, std::uint32_t m)
    : DefiningSet(q, m, std::vector<bool>(coset_modulus(q, m), false)) {}

DefiningSet::DefiningSet(std::uint64_t q, std::uint32_t m, std::vector<bool> mask)
    : q_(q), m_(m), n_(coset_modulus(q, m)), mask_(std::move(mask)) {
  if (n_ == 0) throw std::invalid_argument("modulus q^m - 1 is zero");
  for (std::uint64_t x = 0; x < n_; ++x) {
    if (mask_[x]) exponents_.push_back(x);
  }
}

DefiningSet DefiningSet::from_exponents(std::uint64_t q, std::uint32_t m, std::span<const std::int64_t> exponents) {
  const std::uint64_t n = coset_modulus(q, m);
  if (n == 0) throw std::invalid_argument("modulus q^m - 1 is zero");
  std::vector<bool> mask(n, false);
  for (std::int64_t e : exponents) {
    std::uint64_t x = reduce_mod(e, n);
    while (!mask[x]) {
      mask[x] = true;
      x = mulmod(x, q, n);
    }
  }
  return DefiningSet(q, m, std::move(mask));
}

DefiningSet DefiningSet::from_exponents(std::uint64_t q, std::uint32_t m,
                                        std::initializer_list<std::int64_t> exponents) {
  return from_exponents(q, m, std::span<const std::int64_t>(exponents.begin(), exponents.size()));
}

DefiningSet DefiningSet::full(std::uint64_t q, std::uint32_t m) {
  return DefiningSet(q, m, std::vector<bool>(coset_modulus(q, m), true));
}

std::vector<std::uint64_t> DefiningSet::representatives() const {
  std::vector<std::uint64_t> reps;
  std::vector<bool> seen(n_, false);
  for (std::uint64_t x : exponents_) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (std::uint64_t y = x; !seen[y]; y = mulmod(y, q_, n_)) seen[y] = true;
  }
  return reps;
}

DefiningSet DefiningSet::negated() const {
  std::vector<bool> mask(n_, false);
  for (std::uint64_t x : exponents_) mask[(n_ - x) % n_] = true;
  return DefiningSet(q_, m_, std::move(mask));
}

DefiningSet DefiningSet::complement() const {
  std::vector<bool> mask = mask_;
  mask.flip();
  return DefiningSet(q_, m_, std::move(mask));
}

void DefiningSet::require_compatible(const DefiningSet& other) const {
  if (q_ != other.q_ || n_ != other.n_) {
    throw std::invalid_argument(
        fmt::format("defining sets over different moduli: (q={}, n={}) vs (q={}, n={})", q_, n_, other.q_, other.n_));
  }
}

DefiningSet DefiningSet::united(const DefiningSet& other) const {
  require_compatible(other);
  std::vector<bool> mask = mask_;
  for (std::uint64_t x : other.exponents_) mask[x] = true;
  return DefiningSet(q_, m_, std::move(mask));
}

DefiningSet DefiningSet::minus(const DefiningSet& other) const {
  require_compatible(other);
  std::vector<bool> mask = mask_;
  for (std::uint64_t x : other.exponents_) mask[x] = false;
  return DefiningSet(q_, m_, std::move(mask));
}

bool DefiningSet::subset_of(const DefiningSet& other) const {
  require_compatible(other);
  return std::all_of(exponents_.begin(), exponents_.end(), [&](std::uint64_t x) { return other.mask_[x]; });
}

bool DefiningSet::disjoint_from(const DefiningSet& other) const {
  require_compatible(other);
  return std::none_of(exponents_.begin(), exponents_.end(), [&](std::uint64_t x) { return other.mask_[x]; });
}

Run longest_run(const DefiningSet& z) {
  const std::uint64_t n = z.n();
  if (z.empty()) return {};
  if (z.size() == n) return {0, n};
  // Start scanning just after a gap so that wrapping runs are seen whole.
  std::uint64_t gap = 0;
  while (z.contains(gap)) ++gap;
  Run best;
  std::uint64_t len = 0;
  std::uint64_t start = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t x = (gap + i) % n;
    if (z.contains(x)) {
      if (len == 0) start = x;
      ++len;
      continue;
    }
    if (len > best.length || (len == best.length && len > 0 && start < best.start)) best = {start, len};
    len = 0;
  }
  return best;
}

std::uint64_t bch_bound(const DefiningSet& z) { return longest_run(z).length + 1; }

CyclicCode::CyclicCode(ExtensionPtr ext, DefiningSet z, std::optional<std::uint64_t> offset)
    : ext_(std::move(ext)), z_(std::move(z)), offset_(offset), generator_(ext_->base_ptr(), {1}) {
  if (ext_->q() != z_.q() || ext_->m() != z_.m()) {
    throw std::invalid_argument("defining set does not match the field pair");
  }
  for (std::uint64_t r : z_.representatives()) generator_ = generator_ * minimal_polynomial(*ext_, r);
}

CyclicCode code_from_cosets(std::uint64_t q, std::uint32_t m, std::span<const std::int64_t> exponents) {
  return CyclicCode(make_extension(q, m), DefiningSet::from_exponents(q, m, exponents));
}

CyclicCode code_from_cosets(std::uint64_t q, std::uint32_t m, std::initializer_list<std::int64_t> exponents) {
  return code_from_cosets(q, m, std::span<const std::int64_t>(exponents.begin(), exponents.size()));
}

DefiningSet dual_defining_set(const DefiningSet& z) { return z.negated().complement(); }

CyclicCode dual_code(const CyclicCode& code) {
  return CyclicCode(code.ext_ptr(), dual_defining_set(code.defining_set()));
}

bool dual_containing_by_negation(const DefiningSet& z) { return z.disjoint_from(z.negated()); }

bool dual_containing_by_complements(const DefiningSet& z) {
  for (std::uint64_t r : z.representatives()) {
    const Coset bar = complementary(coset_of(z.q(), z.m(), static_cast<std::int64_t>(r)));
    for (std::uint64_t x : bar.elements) {
      if (z.contains(x)) return false;
    }
  }
  return true;
}

bool contains_dual(const CyclicCode& code) {
  const bool a = dual_containing_by_negation(code.defining_set());
  const bool b = dual_containing_by_complements(code.defining_set());
  if (a != b) throw std::logic_error("dual-containment criteria disagree");
  return a;
}

bool nested(const CyclicCode& outer, const CyclicCode& inner) {
  if (outer.n() != inner.n() || outer.q() != inner.q()) throw std::invalid_argument("codes have different (n, q)");
  return outer.defining_set().subset_of(inner.defining_set());
}

Matrix parity_check_matrix(const CyclicCode& code, std::span<const std::uint64_t> rows) {
  const Field& E = code.ext().ext();
  const std::uint64_t n = code.n();
  Matrix h(code.ext().ext_ptr(), 0, n);
  std::vector<Elem> row(n);
  for (std::uint64_t i : rows) {
    if (i >= n) throw std::out_of_range(fmt::format("row exponent {} outside [0, {})", i, n));
    for (std::uint64_t j = 0; j < n; ++j) row[j] = E.exp(mulmod(i, j, n));
    h.append_row(row);
  }
  return remove_dependent_rows(expand_matrix(code.ext(), h));
}

Matrix parity_check_matrix(const CyclicCode& code) {
  const auto reps = code.defining_set().representatives();
  return parity_check_matrix(code, reps);
}

Matrix generator_matrix(const CyclicCode& code) {
  const std::size_t k = code.dimension();
  const std::uint64_t n = code.n();
  Matrix g(code.base_ptr(), k, n);
  const auto& coeffs = code.generator().coefficients();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) g(i, i + j) = coeffs[j];
  }
  return g;
}

Poly check_polynomial(const CyclicCode& code) {
  const auto [h, r] = divmod(Poly::x_pow_minus_one(code.base_ptr(), code.n()), code.generator());
  if (!r.is_zero()) throw std::logic_error("generator polynomial does not divide x^n - 1");
  return h;
}

Matrix check_matrix_from_h(const CyclicCode& code) {
  const Poly h = check_polynomial(code);
  const std::size_t k = code.dimension();
  const std::uint64_t n = code.n();
  Matrix out(code.base_ptr(), n - k, n);
  for (std::size_t i = 0; i < n - k; ++i) {
    for (std::size_t j = 0; j <= k; ++j) out(i, i + j) = h.coeff(k - j);
  }
  return out;
}

std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message) {
  if (message.size() != code.dimension()) {
    throw std::invalid_argument(fmt::format("message has {} symbols, expected {}", message.size(), code.dimension()));
  }
  const Field& f = *code.base_ptr();
  const auto& g = code.generator().coefficients();
  std::vector<Elem> c(code.n(), 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(message[i], g[j]));
  }
  return c;
}

}  // namespace cosetkit
