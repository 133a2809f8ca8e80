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

#include "cosetkit/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "cosetkit/integer.hpp"

namespace cosetkit {
namespace {

// Full addition tables are kept for odd-characteristic fields up to this size.
constexpr std::uint32_t kAddTableMaxOrder = 1024;

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

// Walks the powers of x modulo f.  Returns true (and fills antilog) iff x has
// multiplicative order p^e - 1, i.e. f is primitive.
bool walk_powers(const std::vector<std::uint32_t>& f, std::uint32_t p, std::uint32_t order,
                 std::vector<Elem>& antilog) {
  const std::size_t e = f.size() - 1;
  std::vector<std::uint32_t> state(e, 0);
  state[0] = 1;
  const std::uint32_t group = order - 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    antilog[k] = encode(state, p);
    const std::uint32_t top = state[e - 1];
    for (std::size_t i = e - 1; i > 0; --i) {
      state[i] = (state[i - 1] + (p - (top * f[i]) % p)) % p;
    }
    state[0] = (p - (top * f[0]) % p) % p;
    const bool back_at_one = state[0] == 1 && std::all_of(state.begin() + 1, state.end(),
                                                          [](std::uint32_t d) { return d == 0; });
    if (back_at_one) return k + 1 == group;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

Field::Field(std::uint32_t p, std::uint32_t e, std::uint64_t max_order) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument(fmt::format("field characteristic {} is not prime", p));
  if (e < 1) throw std::invalid_argument("field extension degree must be at least 1");
  const auto order = checked_pow(p, e);
  if (!order || *order > max_order || *order > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::length_error(fmt::format("GF({}^{}) exceeds the field size cap of {} elements", p, e, max_order));
  }
  order_ = static_cast<std::uint32_t>(*order);

  // Candidates in lexicographic order of (f_0, ..., f_{e-1}); f_0 varies slowest.
  std::vector<Elem> antilog(order_ - 1);
  std::vector<std::uint32_t> f(e + 1, 0);
  f[e] = 1;
  bool found = false;
  for (std::uint32_t t = 0; t < order_ && !found; ++t) {
    std::uint32_t rest = t;
    for (std::size_t i = e; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    if (f[0] == 0) continue;
    found = walk_powers(f, p, order_, antilog);
  }
  if (!found) throw std::logic_error(fmt::format("no primitive polynomial found for GF({}^{})", p, e));
  modulus_ = f;

  const std::uint32_t group = order_ - 1;
  antilog_.resize(2 * static_cast<std::size_t>(group));
  log_.assign(order_, kLogOfZero);
  for (std::uint32_t k = 0; k < group; ++k) {
    antilog_[k] = antilog[k];
    antilog_[k + group] = antilog[k];
    log_[antilog[k]] = k;
  }

  neg_.resize(order_);
  for (Elem a = 0; a < order_; ++a) {
    Elem r = 0;
    Elem scale = 1;
    for (Elem v = a; v != 0; v /= p_) {
      r += ((p_ - v % p_) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = r;
  }

  if (p_ != 2 && e_ > 1 && order_ <= kAddTableMaxOrder) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) add_table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
    }
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem r = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t group = order_ - 1;
  return antilog_[(group - log_[a]) % group];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t group = order_ - 1;
  const std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (k % group)) % group;
  return antilog_[static_cast<std::size_t>((l + group) % group)];
}

std::uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t group = order_ - 1;
  return group / std::gcd<std::uint64_t>(log_[a], group);
}

std::string Field::format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  if (a == 1) return "1";
  return fmt::format("a^{}", log_[a]);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint64_t max_order) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, e});
  if (it != cache.end()) {
    if (it->second->order() > max_order) {
      throw std::length_error(fmt::format("GF({}^{}) exceeds the field size cap of {} elements", p, e, max_order));
    }
    return it->second;
  }
  auto field = std::make_shared<const Field>(p, e, max_order);
  cache.emplace(std::make_pair(p, e), field);
  return field;
}

FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t max_order) {
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument(fmt::format("{} is not a prime power", q));
  return make_field(pe->first, pe->second, max_order);
}

ExtensionField::ExtensionField(std::uint64_t q, std::uint32_t m, std::uint64_t max_order) : m_(m) {
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument(fmt::format("{} is not a prime power", q));
  if (m < 1) throw std::invalid_argument("extension degree m must be at least 1");
  base_ = make_field(pe->first, pe->second, max_order);
  ext_ = make_field(pe->first, pe->second * m, max_order);

  const Field& B = *base_;
  const Field& E = *ext_;
  const std::uint64_t group = E.order() - 1;
  const std::uint64_t step = group / (q - 1);

  // A root of the base field's modulus inside GF(q^m) with order q - 1.
  std::optional<std::uint64_t> root_log;
  for (std::uint64_t j = 1; j < std::max<std::uint64_t>(q, 2) && !root_log; ++j) {
    if (std::gcd(j, q - 1) != 1) continue;
    const Elem beta = E.exp(j * step);
    Elem acc = 0;
    for (std::size_t i = B.modulus().size(); i-- > 0;) acc = E.add(E.mul(acc, beta), B.modulus()[i]);
    if (acc == 0) root_log = j * step;
  }
  if (!root_log) throw std::logic_error(fmt::format("GF({}) does not embed into GF({}^{})", q, q, m));

  embed_.assign(B.order(), 0);
  restrict_.assign(E.order(), kLogOfZero);
  restrict_[0] = 0;
  for (std::uint64_t k = 0; k + 1 < B.order(); ++k) {
    const Elem image = E.exp(k * *root_log);
    embed_[B.exp(k)] = image;
    restrict_[image] = B.exp(k);
  }

  std::vector<Elem> basis(m);
  for (std::uint32_t j = 0; j < m; ++j) basis[j] = E.exp(j);
  coords_.assign(static_cast<std::size_t>(E.order()) * m, 0);
  std::vector<bool> seen(E.order(), false);
  std::vector<Elem> digits(m, 0);
  for (std::uint64_t idx = 0; idx < E.order(); ++idx) {
    std::uint64_t rest = idx;
    Elem x = 0;
    for (std::uint32_t j = 0; j < m; ++j) {
      digits[j] = static_cast<Elem>(rest % q);
      rest /= q;
      x = E.add(x, E.mul(embed_[digits[j]], basis[j]));
    }
    if (seen[x]) throw std::logic_error("polynomial basis is not a basis");
    seen[x] = true;
    std::copy(digits.begin(), digits.end(), coords_.begin() + static_cast<std::ptrdiff_t>(x) * m);
  }
}

std::optional<Elem> ExtensionField::restrict_to_base(Elem x) const {
  const std::uint32_t r = restrict_[x];
  if (r == kLogOfZero) return std::nullopt;
  return r;
}

ExtensionPtr make_extension(std::uint64_t q, std::uint32_t m, std::uint64_t max_order) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, ExtensionPtr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({q, m});
    if (it != cache.end()) {
      if (it->second->ext().order() > max_order) {
        throw std::length_error(fmt::format("GF({}^{}) exceeds the field size cap of {} elements", q, m, max_order));
      }
      return it->second;
    }
  }
  auto ext = std::make_shared<const ExtensionField>(q, m, max_order);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(q, m), ext).first->second;
}

}  // namespace cosetkit
