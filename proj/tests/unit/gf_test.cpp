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
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "cosetkit/cosets.hpp"
#include "cosetkit/gf.hpp"
#include "cosetkit/matrix.hpp"

namespace cosetkit {
namespace {

// Vandermonde-style rows (alpha^{ij})_j for each i in `exps`, over GF(q^m).
Matrix power_rows(const ExtensionField& ext, const std::vector<std::uint64_t>& exps) {
  const std::uint64_t n = ext.n();
  Matrix h(ext.ext_ptr(), 0, n);
  std::vector<Elem> row(n);
  for (std::uint64_t i : exps) {
    for (std::uint64_t j = 0; j < n; ++j) row[j] = ext.ext().exp(i * j);
    h.append_row(row);
  }
  return h;
}

TEST(MinimalPolynomialTest, OfOneIsXMinusOne) {
  const auto ext = make_extension(3, 2);
  const Poly mp = minimal_polynomial(*ext, 0);
  EXPECT_EQ(mp, Poly(ext->base_ptr(), {2, 1}));
}

TEST(MinimalPolynomialTest, SingletonCosetGivesLinearFactor) {
  const auto ext = make_extension(5, 2);
  const Poly mp = minimal_polynomial(*ext, 6);
  ASSERT_EQ(mp.degree(), 1);
  // Its root is alpha^6 viewed in GF(25).
  const Elem root = ext->ext().exp(6);
  const auto r = ext->restrict_to_base(root);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(mp.evaluate(*r), 0u);
}

TEST(MinimalPolynomialTest, QuadraticOverGF3) {
  const auto ext = make_extension(3, 2);
  const Poly mp = minimal_polynomial(*ext, 1);
  EXPECT_EQ(mp.degree(), 2);
  // Expand (x - a)(x - a^3) directly in GF(9) and compare.
  const Field& E = ext->ext();
  const Elem a = E.exp(1), a3 = E.exp(3);
  const Elem c1 = E.neg(E.add(a, a3));
  const Elem c0 = E.mul(a, a3);
  EXPECT_EQ(ext->embed(mp.coeff(0)), c0);
  EXPECT_EQ(ext->embed(mp.coeff(1)), c1);
  EXPECT_TRUE(mp.is_monic());
  EXPECT_THROW(minimal_polynomial(*ext, 8), std::out_of_range);
}

class MinimalPolynomialProductTest : public ::testing::TestWithParam<std::pair<std::uint64_t, std::uint32_t>> {};

TEST_P(MinimalPolynomialProductTest, ProductOverCosetsIsXnMinusOne) {
  const auto [q, m] = GetParam();
  const auto ext = make_extension(q, m);
  const Poly xn1 = Poly::x_pow_minus_one(ext->base_ptr(), ext->n());
  Poly prod(ext->base_ptr(), {1});
  for (const Coset& c : all_cosets(q, m)) {
    const Poly mp = minimal_polynomial(*ext, c.representative);
    EXPECT_EQ(mp.degree(), static_cast<int>(c.size()));
    EXPECT_TRUE(divmod(xn1, mp).second.is_zero());
    prod = prod * mp;
  }
  EXPECT_EQ(prod, xn1);
}

INSTANTIATE_TEST_SUITE_P(Pairs, MinimalPolynomialProductTest,
                         ::testing::Values(std::pair<std::uint64_t, std::uint32_t>{2, 4},
                                           std::pair<std::uint64_t, std::uint32_t>{3, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{3, 3},
                                           std::pair<std::uint64_t, std::uint32_t>{4, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{4, 3},
                                           std::pair<std::uint64_t, std::uint32_t>{5, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{7, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{9, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{16, 2}));

TEST(ExpandMatrixTest, IdentityEntry) {
  const auto ext = make_extension(3, 2);
  Matrix one(ext->ext_ptr(), 1, 1);
  one(0, 0) = 1;
  const Matrix e = expand_matrix(*ext, one);
  ASSERT_EQ(e.rows(), 2u);
  ASSERT_EQ(e.cols(), 1u);
  EXPECT_EQ(e(0, 0), 1u);
  EXPECT_EQ(e(1, 0), 0u);
}

TEST(ExpandMatrixTest, HeadRowsOfFourAryLengthFifteen) {
  const auto ext = make_extension(4, 2);
  const Matrix e = expand_matrix(*ext, power_rows(*ext, {0, 1, 2, 3}));
  EXPECT_EQ(e.rows(), 8u);
  EXPECT_EQ(rank(e), 7u);
  const Matrix full = expand_matrix(*ext, power_rows(*ext, {0, 1, 2, 3, 5, 6, 7}));
  EXPECT_EQ(rank(full), 12u);
}

TEST(ExpandMatrixTest, RejectsDependentBasis) {
  const auto ext = make_extension(3, 2);
  Matrix one(ext->ext_ptr(), 1, 1);
  one(0, 0) = 1;
  EXPECT_THROW(expand_matrix(*ext, one, std::vector<Elem>{1, ext->embed(2)}), std::invalid_argument);
  EXPECT_THROW(expand_matrix(*ext, one, std::vector<Elem>{1}), std::invalid_argument);
  Matrix base_matrix(ext->base_ptr(), 1, 1);
  EXPECT_THROW(expand_matrix(*ext, base_matrix), std::invalid_argument);
}

// Dot product over GF(q^m) of a GF(q)-vector with a GF(q^m)-row.
Elem ext_dot(const ExtensionField& ext, const std::vector<Elem>& v, std::span<const Elem> u) {
  Elem acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc = ext.ext().add(acc, ext.ext().mul(ext.embed(v[i]), u[i]));
  return acc;
}

Elem base_dot(const Field& f, const std::vector<Elem>& v, std::span<const Elem> u) {
  Elem acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], u[i]));
  return acc;
}

struct ExpandCase {
  std::uint64_t q;
  std::uint32_t m;
  std::size_t cols;
  bool custom_basis;
};

class ExpandNullSpaceTest : public ::testing::TestWithParam<ExpandCase> {};

TEST_P(ExpandNullSpaceTest, ExhaustiveKernelEquivalence) {
  const auto [q, m, cols, custom] = GetParam();
  const auto ext = make_extension(q, m);
  std::mt19937 rng(static_cast<unsigned>(q * 100 + cols));
  std::uniform_int_distribution<Elem> pick(0, ext->ext().order() - 1);
  Matrix h(ext->ext_ptr(), 2, cols);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < cols; ++c) h(r, c) = pick(rng);

  std::optional<std::vector<Elem>> basis;
  if (custom) {
    // alpha^1, ..., alpha^m is a basis too (a unit multiple of the polynomial basis).
    basis.emplace();
    for (std::uint32_t j = 1; j <= m; ++j) basis->push_back(ext->ext().exp(j));
  }
  const Matrix e = expand_matrix(*ext, h, basis);
  ASSERT_EQ(e.rows(), 2u * m);

  std::vector<Elem> v(cols, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cols; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& x : v) {
      x = static_cast<Elem>(rest % q);
      rest /= q;
    }
    const bool ext_zero = ext_dot(*ext, v, h.row(0)) == 0 && ext_dot(*ext, v, h.row(1)) == 0;
    bool base_zero = true;
    for (std::size_t r = 0; r < e.rows() && base_zero; ++r) base_zero = base_dot(ext->base(), v, e.row(r)) == 0;
    ASSERT_EQ(ext_zero, base_zero) << "vector index " << idx;
  }
}

INSTANTIATE_TEST_SUITE_P(SmallCases, ExpandNullSpaceTest,
                         ::testing::Values(ExpandCase{2, 4, 12, false}, ExpandCase{3, 2, 8, false},
                                           ExpandCase{4, 2, 7, false}, ExpandCase{4, 2, 7, true},
                                           ExpandCase{3, 3, 8, true}));

}  // namespace
}  // namespace cosetkit
