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

#include "cosetkit/poly.hpp"

#include <stdexcept>

namespace cosetkit {
namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) throw std::invalid_argument("coefficient is not a field element");
  }
  trim();
}

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  v[0] = field->add(v[0], field->neg(1));
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::evaluate(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return field_->inv(leading()) * *this;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Elem c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = c != 1 || i == 0;
    if (show_coeff) out += field_->format(c);
    if (i > 0) {
      if (show_coeff) out += '*';
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = a.field();
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(a.field_, std::move(v));
}

Poly operator*(Elem c, const Poly& a) {
  const Field& f = a.field();
  std::vector<Elem> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(c, a.coeffs_[i]);
  return Poly(a.field_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> rem = a.coefficients();
  if (a.degree() < b.degree()) return {Poly(a.field_ptr()), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
  }
  rem.resize(db);
  return {Poly(a.field_ptr(), std::move(quot)), Poly(a.field_ptr(), std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace cosetkit
