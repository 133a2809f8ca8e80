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
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cosetkit {

/// A field element in its integer encoding: the coefficient vector of the
/// residue polynomial over GF(p), read as base-p digits (constant term is the
/// least significant digit).  Zero encodes as 0 and one as 1.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

/// Discrete log of zero.  Never present in the antilog table.
inline constexpr std::uint32_t kLogOfZero = std::numeric_limits<std::uint32_t>::max();

bool is_prime(std::uint64_t p);

/// Splits q into (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(p^e) realised as GF(p)[x]/(f) for the lexicographically smallest
/// primitive f, so x itself is the primitive element alpha.
///
/// Candidates are monic of degree e and compared by the tuple
/// (f_0, f_1, ..., f_{e-1}), constant term first.  For e = 1 this picks
/// f = x + c with the smallest c whose root -c generates GF(p)^*.
///
/// Multiplication goes through log/antilog tables; addition uses a full
/// table for small orders and digit-wise arithmetic otherwise.  Immutable
/// after construction.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t e, std::uint64_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return order_; }

  /// Monic defining polynomial over GF(p), lowest degree first (size e + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem alpha() const { return antilog_[1 % (order_ - 1)]; }

  bool contains(Elem a) const { return a < order_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    if (e_ == 1) {
      const Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t k) const;

  /// alpha^k for any k (reduced mod order - 1).
  Elem exp(std::uint64_t k) const { return antilog_[k % (order_ - 1)]; }
  /// log_alpha(a) in [0, order - 2], or kLogOfZero for a = 0.
  std::uint32_t log(Elem a) const { return log_[a]; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem a) const;

  /// Decimal value in a prime field, otherwise "0" or "a^k".
  std::string format(Elem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  // antilog_ is stored twice over so mul() can skip the modular reduction.
  std::vector<Elem> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// make_field(p, e): shared, cached instance.
FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint64_t max_order = kDefaultMaxFieldOrder);

/// make_field for a prime power q.
FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t max_order = kDefaultMaxFieldOrder);

/// The pair GF(q) ⊂ GF(q^m) together with the embedding of the base field
/// and the coordinate map of GF(q^m) onto GF(q)^m in the polynomial basis
/// {1, alpha, ..., alpha^{m-1}}.
class ExtensionField {
 public:
  ExtensionField(std::uint64_t q, std::uint32_t m, std::uint64_t max_order = kDefaultMaxFieldOrder);

  const Field& base() const { return *base_; }
  const Field& ext() const { return *ext_; }
  const FieldPtr& base_ptr() const { return base_; }
  const FieldPtr& ext_ptr() const { return ext_; }

  std::uint64_t q() const { return base_->order(); }
  std::uint32_t m() const { return m_; }
  /// Code length q^m - 1.
  std::uint64_t n() const { return ext_->order() - 1; }

  Elem embed(Elem base_elem) const { return embed_[base_elem]; }
  std::optional<Elem> restrict_to_base(Elem x) const;

  /// Coordinates of x over GF(q) in the polynomial basis.
  std::span<const Elem> coordinates(Elem x) const {
    return {coords_.data() + static_cast<std::size_t>(x) * m_, m_};
  }

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::uint32_t m_;
  std::vector<Elem> embed_;
  std::vector<std::uint32_t> restrict_;
  std::vector<Elem> coords_;
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

/// Shared, cached GF(q) ⊂ GF(q^m).
ExtensionPtr make_extension(std::uint64_t q, std::uint32_t m, std::uint64_t max_order = kDefaultMaxFieldOrder);

}  // namespace cosetkit
