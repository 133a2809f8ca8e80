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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cosetkit/field.hpp"
#include "cosetkit/matrix.hpp"
#include "cosetkit/poly.hpp"

namespace cosetkit {

/// A union of q-cyclotomic cosets modulo n = q^m - 1, stored as a membership
/// mask plus the sorted exponent list.
class DefiningSet {
 public:
  /// The empty set.
  DefiningSet(std::uint64_t q, std::uint32_t m);

  /// Closure of `exponents` under x -> qx mod n.  Entries may be negative
  /// and are reduced mod n.
  static DefiningSet from_exponents(std::uint64_t q, std::uint32_t m, std::span<const std::int64_t> exponents);
  static DefiningSet from_exponents(std::uint64_t q, std::uint32_t m, std::initializer_list<std::int64_t> exponents);
  /// Every exponent in [0, n).
  static DefiningSet full(std::uint64_t q, std::uint32_t m);

  std::uint64_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t n() const { return n_; }

  std::size_t size() const { return exponents_.size(); }
  bool empty() const { return exponents_.empty(); }
  bool contains(std::uint64_t x) const { return mask_[x % n_]; }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  /// Minimum element of each member coset, ascending.
  std::vector<std::uint64_t> representatives() const;

  /// {-z mod n : z in Z}
  DefiningSet negated() const;
  /// {0, ..., n-1} minus Z
  DefiningSet complement() const;
  DefiningSet united(const DefiningSet& other) const;
  DefiningSet minus(const DefiningSet& other) const;
  bool subset_of(const DefiningSet& other) const;
  bool disjoint_from(const DefiningSet& other) const;

  friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.mask_ == b.mask_;
  }

 private:
  DefiningSet(std::uint64_t q, std::uint32_t m, std::vector<bool> mask);
  void require_compatible(const DefiningSet& other) const;

  std::uint64_t q_;
  std::uint32_t m_;
  std::uint64_t n_;
  std::vector<bool> mask_;
  std::vector<std::uint64_t> exponents_;
};

struct Run {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
};

/// Longest run of consecutive exponents in Z, wrapping from n-1 to 0.  The
/// earliest start wins ties.
Run longest_run(const DefiningSet& z);

/// 1 + longest_run(z).length: 1 for the empty set, and n + 1 for the full
/// set (the zero code, whose distance is taken as infinite).
std::uint64_t bch_bound(const DefiningSet& z);

/// Cyclic code of length n = q^m - 1 over GF(q) with defining set Z.
class CyclicCode {
 public:
  CyclicCode(ExtensionPtr ext, DefiningSet z, std::optional<std::uint64_t> offset = std::nullopt);

  const ExtensionField& ext() const { return *ext_; }
  const ExtensionPtr& ext_ptr() const { return ext_; }
  const FieldPtr& base_ptr() const { return ext_->base_ptr(); }
  std::uint64_t q() const { return z_.q(); }
  std::uint32_t m() const { return z_.m(); }
  std::uint64_t n() const { return z_.n(); }

  const DefiningSet& defining_set() const { return z_; }
  std::size_t dimension() const { return static_cast<std::size_t>(n() - z_.size()); }
  std::uint64_t bch_bound() const { return cosetkit::bch_bound(z_); }
  std::optional<std::uint64_t> offset() const { return offset_; }

  /// Product of the distinct minimal polynomials of alpha^z, z in Z.
  const Poly& generator() const { return generator_; }

 private:
  ExtensionPtr ext_;
  DefiningSet z_;
  std::optional<std::uint64_t> offset_;
  Poly generator_;
};

/// Code whose defining set is the union of the cosets of `exponents`.
CyclicCode code_from_cosets(std::uint64_t q, std::uint32_t m, std::span<const std::int64_t> exponents);
CyclicCode code_from_cosets(std::uint64_t q, std::uint32_t m, std::initializer_list<std::int64_t> exponents);

/// Defining set of the Euclidean dual: complement of -Z.
DefiningSet dual_defining_set(const DefiningSet& z);
CyclicCode dual_code(const CyclicCode& code);

/// Z and -Z disjoint.
bool dual_containing_by_negation(const DefiningSet& z);
/// No member coset has its complementary coset inside Z.
bool dual_containing_by_complements(const DefiningSet& z);
/// Whether code contains its dual.  Computes both criteria above and throws
/// std::logic_error if they disagree.
bool contains_dual(const CyclicCode& code);

/// outer contains inner, i.e. Z(outer) is a subset of Z(inner).  Throws
/// std::invalid_argument when the codes have different (n, q).
bool nested(const CyclicCode& outer, const CyclicCode& inner);

/// Parity-check matrix over GF(q) built from the extension-field rows
/// (1, alpha^i, alpha^{2i}, ..., alpha^{(n-1)i}) for i in `rows`, expanded
/// over the polynomial basis, keeping the first maximal independent set of
/// rows.  Throws std::out_of_range for an exponent outside [0, n).
Matrix parity_check_matrix(const CyclicCode& code, std::span<const std::uint64_t> rows);
/// Same with rows = the coset representatives of Z.
Matrix parity_check_matrix(const CyclicCode& code);

/// k x n matrix whose rows are x^i g(x), i = 0..k-1.
Matrix generator_matrix(const CyclicCode& code);

/// h(x) = (x^n - 1) / g(x).
Poly check_polynomial(const CyclicCode& code);

/// (n-k) x n matrix whose rows are the shifts of the reciprocal of h(x).
Matrix check_matrix_from_h(const CyclicCode& code);

/// c(x) = u(x) g(x) as a length-n vector.
std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message);

}  // namespace cosetkit
