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

#include <string>
#include <utility>
#include <vector>

#include "cosetkit/field.hpp"

namespace cosetkit {

/// Univariate polynomial over a finite field, lowest degree first.  Trailing
/// zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field, std::vector<Elem> coeffs = {});

  /// c * x^deg
  static Poly monomial(FieldPtr field, Elem c, std::size_t deg);
  /// x^n - 1
  static Poly x_pow_minus_one(FieldPtr field, std::size_t n);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }

  Elem evaluate(Elem x) const;
  Poly monic() const;

  /// "x^2 + a^3*x + 1" style, highest degree first.
  std::string to_string(char var = 'x') const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Elem c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);

}  // namespace cosetkit
