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

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "cosetkit/field.hpp"
#include "cosetkit/matrix.hpp"
#include "cosetkit/poly.hpp"

namespace cosetkit {
namespace {

// Schoolbook arithmetic on digit vectors modulo the field's defining
// polynomial.  Shares nothing with the table-driven implementation.
struct NaiveField {
  std::uint32_t p;
  std::uint32_t e;
  std::vector<std::uint32_t> modulus;

  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(e);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  Elem pack(const std::vector<std::uint32_t>& d) const {
    Elem a = 0;
    for (std::size_t i = e; i-- > 0;) a = a * p + d[i];
    return a;
  }
  Elem add(Elem a, Elem b) const {
    auto x = digits(a);
    const auto y = digits(b);
    for (std::uint32_t i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  Elem mul(Elem a, Elem b) const {
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<std::uint64_t> prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::size_t d = 2 * e - 1; d >= e; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - modulus[i]) * c) % p;
    }
    std::vector<std::uint32_t> out(e);
    for (std::uint32_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }
};

NaiveField naive(const Field& f) { return {f.characteristic(), f.degree(), f.modulus()}; }

TEST(FieldTest, PrimePowerSplitting) {
  EXPECT_EQ(prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(prime_power(16), (std::pair<std::uint32_t, std::uint32_t>{2, 4}));
  EXPECT_EQ(prime_power(13), (std::pair<std::uint32_t, std::uint32_t>{13, 1}));
  EXPECT_FALSE(prime_power(6).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
}

TEST(FieldTest, SmallestPrimitiveRootOfThree) {
  const auto f = make_field(3, 1);
  EXPECT_EQ(f->order(), 3u);
  EXPECT_EQ(f->alpha(), 2u);
  EXPECT_EQ(f->element_order(2), 2u);
}

TEST(FieldTest, BinaryPrimeField) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(f->alpha(), 1u);
  EXPECT_EQ(f->order() - 1, 1u);
}

TEST(FieldTest, GF25HasPrimitiveQuadratic) {
  const auto f = make_field(5, 2);
  ASSERT_EQ(f->modulus().size(), 3u);
  // Irreducible: no root in GF(5).
  for (std::uint32_t x = 0; x < 5; ++x) {
    const std::uint32_t v = (f->modulus()[0] + f->modulus()[1] * x + x * x) % 5;
    EXPECT_NE(v, 0u) << "root " << x;
  }
  // x has order exactly 24, found by repeated naive multiplication.
  const auto nf = naive(*f);
  Elem acc = 1;
  std::set<Elem> seen;
  for (int k = 0; k < 24; ++k) {
    EXPECT_TRUE(seen.insert(acc).second);
    acc = nf.mul(acc, 5);  // 5 encodes the residue x
  }
  EXPECT_EQ(acc, 1u);
  EXPECT_EQ(seen.size(), 24u);
}

TEST(FieldTest, LexicographicallySmallestModulus) {
  // Enumerate degree-2 monic candidates over GF(3) in (f0, f1) order and
  // pick the first whose root has order 8.
  const auto f = make_field(3, 2);
  for (std::uint32_t f0 = 0; f0 < 3; ++f0) {
    for (std::uint32_t f1 = 0; f1 < 3; ++f1) {
      NaiveField nf{3, 2, {f0, f1}};
      Elem acc = 3;
      int order = 1;
      while (acc != 1 && acc != 0 && order < 9) {
        acc = nf.mul(acc, 3);
        ++order;
      }
      if (acc == 1 && order == 8) {
        EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{f0, f1, 1}));
        return;
      }
    }
  }
  FAIL() << "no primitive quadratic found";
}

TEST(FieldTest, RejectsBadArguments) {
  EXPECT_THROW(make_field(6, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 21), std::length_error);
  EXPECT_THROW(make_field_of_order(12), std::invalid_argument);
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxiomsTest, MatchesNaiveArithmeticAndAxioms) {
  const auto f = make_field_of_order(GetParam());
  const Field& F = *f;
  const auto nf = naive(F);
  const Elem q = F.order();
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      ASSERT_EQ(F.add(a, b), nf.add(a, b));
      ASSERT_EQ(F.mul(a, b), nf.mul(a, b));
      ASSERT_EQ(F.add(F.sub(a, b), b), a);
      if (b != 0) ASSERT_EQ(F.mul(F.div(a, b), b), a);
      for (Elem c = 0; c < q; ++c) {
        ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
        ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
  // log and antilog are mutually inverse bijections.
  std::set<Elem> powers;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    const Elem x = F.exp(k);
    ASSERT_NE(x, 0u);
    ASSERT_EQ(F.log(x), k);
    powers.insert(x);
  }
  EXPECT_EQ(powers.size(), q - 1);
  EXPECT_EQ(F.log(0), kLogOfZero);
  EXPECT_EQ(F.pow(F.alpha(), q - 1), 1u);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxiomsTest,
                         ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u));

TEST(ExtensionFieldTest, EmbeddingIsAFieldHomomorphism) {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 2}, {4, 2}, {5, 2}, {4, 3}}) {
    const auto ext = make_extension(q, m);
    const Field& B = ext->base();
    const Field& E = ext->ext();
    for (Elem a = 0; a < B.order(); ++a) {
      ASSERT_EQ(ext->restrict_to_base(ext->embed(a)), a);
      for (Elem b = 0; b < B.order(); ++b) {
        ASSERT_EQ(ext->embed(B.add(a, b)), E.add(ext->embed(a), ext->embed(b)));
        ASSERT_EQ(ext->embed(B.mul(a, b)), E.mul(ext->embed(a), ext->embed(b)));
      }
    }
    // Coordinates reconstruct every element.
    for (Elem x = 0; x < E.order(); ++x) {
      const auto co = ext->coordinates(x);
      Elem acc = 0;
      for (std::uint32_t j = 0; j < m; ++j) acc = E.add(acc, E.mul(ext->embed(co[j]), E.exp(j)));
      ASSERT_EQ(acc, x);
    }
  }
}

TEST(PolyTest, DivisionRoundTrip) {
  const auto f = make_field(7, 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Elem> coef(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> a(1 + trial % 9), b(1 + trial % 4);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    b.back() = 1 + trial % 6;
    const Poly pa(f, a), pb(f, b);
    const auto [quo, rem] = divmod(pa, pb);
    EXPECT_EQ(quo * pb + rem, pa);
    EXPECT_LT(rem.degree(), pb.degree());
  }
  EXPECT_THROW(divmod(Poly(f, {1}), Poly(f)), std::domain_error);
  EXPECT_EQ(Poly(f).degree(), -1);
  EXPECT_EQ(Poly(f, {1, 2, 0, 0}).degree(), 1);
}

TEST(PolyTest, GcdOfSharedFactor) {
  const auto f = make_field(5, 1);
  const Poly a(f, {1, 1});   // x + 1
  const Poly b(f, {2, 1});   // x + 2
  const Poly c(f, {3, 0, 1});
  EXPECT_EQ(gcd(a * b, a * c), a);
  EXPECT_EQ(Poly::x_pow_minus_one(f, 4).evaluate(2), 0u);
}

TEST(MatrixTest, RankOfZeroAndIdentity) {
  const auto g = make_field_of_order(4);
  EXPECT_EQ(rank(Matrix(g, 3, 5)), 0u);
  EXPECT_EQ(rank(Matrix::identity(g, 6)), 6u);
}

TEST(MatrixTest, NullSpaceAndInverseAgree) {
  const auto f = make_field_of_order(9);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Elem> coef(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a(f, 4, 7);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 7; ++c) a(r, c) = coef(rng);
    const Matrix ns = null_space(a);
    EXPECT_EQ(ns.rows() + rank(a), 7u);
    EXPECT_TRUE((a * ns.transpose()).is_zero());
    Matrix sq(f, 5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) sq(r, c) = coef(rng);
    const auto inv = inverse(sq);
    EXPECT_EQ(inv.has_value(), rank(sq) == 5);
    if (inv) EXPECT_EQ(sq * *inv, Matrix::identity(f, 5));
  }
}

TEST(MatrixTest, IndependentRowsKeepsFirstOccurrence) {
  const auto f = make_field(3, 1);
  Matrix a(f, 0, 3);
  a.append_row(std::vector<Elem>{1, 0, 0});
  a.append_row(std::vector<Elem>{2, 0, 0});
  a.append_row(std::vector<Elem>{0, 1, 1});
  a.append_row(std::vector<Elem>{1, 1, 1});
  a.append_row(std::vector<Elem>{0, 0, 2});
  EXPECT_EQ(independent_rows(a), (std::vector<std::size_t>{0, 2, 4}));
}

}  // namespace
}  // namespace cosetkit
