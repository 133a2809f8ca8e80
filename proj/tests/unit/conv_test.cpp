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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cosetkit/conv.hpp"
#include "cosetkit/field.hpp"

namespace cosetkit {
namespace {

// Size of the union of q-cyclotomic orbits of `seeds` mod n, by brute force.
std::size_t orbit_union_size(std::uint64_t q, std::uint64_t n, const std::vector<std::uint64_t>& seeds) {
  std::set<std::uint64_t> out;
  for (std::uint64_t s : seeds) {
    std::uint64_t x = s % n;
    while (out.insert(x).second) x = (x * q) % n;
  }
  return out.size();
}

std::vector<std::uint64_t> span_of(std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = a; x <= b; ++x) out.push_back(x);
  return out;
}

Matrix from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
  Matrix m(f, 0, rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

TEST(ConvFamilies, TableBrackets) {
  struct Row {
    ConvCode code;
    std::string bracket;
  };
  const std::vector<Row> rows = {
      {family_mainconv(4), "(15, 8, 5; 1, dfree >= 9)_4"},
      {family_mainconv(5), "(24, 15, 7; 1, dfree >= 11)_5"},
      {family_mainconv(7), "(48, 35, 11; 1, dfree >= 15)_7"},
      {family_mainconv(8), "(63, 48, 13; 1, dfree >= 17)_8"},
      {family_mainconv(9), "(80, 63, 15; 1, dfree >= 19)_9"},
      {family_mainconv(11), "(120, 99, 19; 1, dfree >= 23)_11"},
      {family_mainconv_b(4), "(15, 7, 4; 1, dfree >= 9)_4"},
      {family_mainconv_b(5), "(24, 14, 6; 1, dfree >= 11)_5"},
      {family_mainconv_b(11), "(120, 98, 18; 1, dfree >= 23)_11"},
      {family_mainconv_c(4, 1), "(15, 5, 2; 1, dfree >= 9)_4"},
      {family_mainconv_c(5, 1), "(24, 12, 4; 1, dfree >= 11)_5"},
      {family_mainconv_c(5, 2), "(24, 10, 2; 1, dfree >= 11)_5"},
      {family_mainconv_c(7, 1), "(48, 32, 8; 1, dfree >= 15)_7"},
      {family_mainconv_c(7, 4), "(48, 26, 2; 1, dfree >= 15)_7"},
      {family_mainconv_d(4, 1), "(15, 8, 3; 1, dfree >= 8)_4"},
      {family_mainconv_d(5, 1), "(24, 15, 3; 1, dfree >= 9)_5"},
      {family_mainconv_d(5, 2), "(24, 15, 5; 1, dfree >= 10)_5"},
      {family_mainconv_d(7, 4), "(48, 35, 9; 1, dfree >= 14)_7"},
  };
  for (const auto& r : rows) {
    EXPECT_EQ(r.code.bracket(), r.bracket) << r.code.family;
    EXPECT_TRUE(r.code.matches_claims()) << r.bracket;
  }
}

TEST(ConvFamilies, LargeFieldBrackets) {
  EXPECT_EQ(family_mainconv(16).bracket(), "(255, 224, 29; 1, dfree >= 33)_16");
  EXPECT_EQ(family_mainconv_c(16, 13).bracket(), "(255, 197, 2; 1, dfree >= 33)_16");
}

TEST(ConvFamilies, DimensionsMatchOrbitCounts) {
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const std::uint64_t n = q * q - 1;
    const auto main = family_mainconv(q);
    const auto head = span_of(0, q - 1);
    const auto tail = span_of(q + 1, 2 * q - 1);
    EXPECT_EQ(main.kappa, orbit_union_size(q, n, head));
    EXPECT_EQ(main.k, n - orbit_union_size(q, n, head));
    EXPECT_EQ(main.gamma, orbit_union_size(q, n, tail));
    EXPECT_EQ(main.split.h0.rows(), main.kappa);
    EXPECT_EQ(main.split.h1.rows(), orbit_union_size(q, n, tail));
    EXPECT_EQ(main.split.h1_padded.rows(), main.kappa);
    EXPECT_EQ(rank(main.split.h0), main.kappa);
    EXPECT_EQ(rank(main.split.h1), main.split.h1.rows());
    EXPECT_EQ(main.mu, 1u);

    for (std::uint64_t i = 1; i + 3 <= q; ++i) {
      const auto d = family_mainconv_d(q, i);
      EXPECT_EQ(d.gamma, orbit_union_size(q, n, span_of(q + 1, q + 1 + i)));
      const auto c = family_mainconv_c(q, i);
      auto c_head = head;
      for (std::uint64_t x = q + 1; x <= q + 1 + i; ++x) c_head.push_back(x);
      EXPECT_EQ(c.k, n - orbit_union_size(q, n, c_head));
      EXPECT_EQ(c.gamma, orbit_union_size(q, n, span_of(q + 2 + i, 2 * q - 1)));
      EXPECT_TRUE(c.matches_claims());
      EXPECT_TRUE(d.matches_claims());
    }
    EXPECT_TRUE(family_mainconv_b(q).matches_claims());
    EXPECT_TRUE(family_mainconv_e(q).matches_claims());
    EXPECT_EQ(family_mainconv_e(q).gamma, 1u);
  }
}

TEST(ConvFamilies, ComputedBoundAtLeastClaim) {
  const auto c = family_mainconv(4);
  // Z0 = {0,1,2,3,4,8,12}, Z1 = {5,6,7,9,13}, parent run 0..9.
  EXPECT_EQ(c.d0_lb, 6u);
  EXPECT_EQ(c.d1_lb, 4u);
  EXPECT_EQ(c.d_lb, 11u);
  EXPECT_EQ(c.dfree_lb, 10u);
  EXPECT_EQ(c.reported_dfree(), 9u);
}

TEST(ConvFamilies, RejectsBadArguments) {
  EXPECT_THROW(family_mainconv(3), std::invalid_argument);
  EXPECT_THROW(family_mainconv(6), std::invalid_argument);
  EXPECT_THROW(family_mainconv_c(4, 2), std::invalid_argument);
  EXPECT_THROW(family_mainconv_d(5, 0), std::invalid_argument);
}

TEST(ConvSplit, RejectsOverlapAndGaps) {
  const auto ext = make_extension(4, 2);
  const CyclicCode parent(ext, DefiningSet::from_exponents(4, 2, {0, 1, 2, 3, 5, 6, 7}));
  const std::vector<std::int64_t> head = {0, 1, 2, 3};
  const std::vector<std::int64_t> tail = {5, 6, 7};
  EXPECT_NO_THROW(split_parity(parent, head, tail));
  const std::vector<std::int64_t> overlapping = {3, 5, 6, 7};
  EXPECT_THROW(split_parity(parent, head, overlapping), std::invalid_argument);
  const std::vector<std::int64_t> short_tail = {5};
  EXPECT_THROW(split_parity(parent, head, short_tail), std::invalid_argument);
  // Swapping roles makes rank H1 exceed rank H0.
  const std::vector<std::int64_t> small_head = {5};
  const std::vector<std::int64_t> big_tail = {0, 1, 2, 3, 6, 7};
  EXPECT_THROW(split_parity(parent, small_head, big_tail), std::invalid_argument);
}

TEST(ConvBasic, AllFamiliesReducedAndBasic) {
  for (std::uint64_t q : {4, 5, 7, 8}) {
    std::vector<ConvCode> codes = {family_mainconv(q), family_mainconv_b(q), family_mainconv_e(q)};
    for (std::uint64_t i = 1; i + 3 <= q; ++i) {
      codes.push_back(family_mainconv_c(q, i));
      codes.push_back(family_mainconv_d(q, i));
    }
    for (const auto& c : codes) {
      const auto r = check_reduced_basic(c.generator);
      EXPECT_TRUE(r.passes()) << c.bracket();
    }
  }
}

TEST(ConvBasic, IdentityPaddedIsBasic) {
  const auto f = make_field_of_order(5);
  const Matrix g0 = from_rows(f, {{1, 0, 2}, {0, 1, 3}});
  const Matrix g1 = from_rows(f, {{0, 0, 1}, {0, 0, 4}});
  const auto r = check_reduced_basic(PolyMatrix({g0, g1}));
  EXPECT_TRUE(r.head_full_rank);
  EXPECT_TRUE(r.basic);
  EXPECT_TRUE(r.rank_drops.empty());
  // Row degrees are 1 and 1 with leading rows (0,0,1) and (0,0,4).
  EXPECT_FALSE(r.reduced);
}

TEST(ConvBasic, DuplicatedRowFails) {
  const auto f = make_field_of_order(4);
  const Matrix g0 = from_rows(f, {{1, 2, 3}, {1, 2, 3}});
  const Matrix g1 = from_rows(f, {{0, 1, 0}, {0, 1, 0}});
  const auto r = check_reduced_basic(PolyMatrix({g0, g1}));
  EXPECT_FALSE(r.head_full_rank);
  EXPECT_FALSE(r.basic);
  EXPECT_FALSE(r.passes());
  EXPECT_FALSE(r.failures().empty());
}

TEST(ConvBasic, DetectsFactorWithoutRoots) {
  // [1 + D + D^2, 0] over GF(2): full rank at every field element, yet the
  // gcd of maximal minors is the irreducible 1 + D + D^2.
  const auto f = make_field_of_order(2);
  const Matrix g0 = from_rows(f, {{1, 0}});
  const Matrix g1 = from_rows(f, {{1, 0}});
  const Matrix g2 = from_rows(f, {{1, 0}});
  const auto r = check_reduced_basic(PolyMatrix({g0, g1, g2}));
  EXPECT_TRUE(r.rank_drops.empty());
  EXPECT_FALSE(r.basic);
}

TEST(ConvBasic, DetectsRankDropAtRoot) {
  const auto f = make_field_of_order(3);
  const Matrix g0 = from_rows(f, {{1, 0}, {0, 1}});
  const Matrix g1 = from_rows(f, {{1, 0}, {0, 1}});
  const auto r = check_reduced_basic(PolyMatrix({g0, g1}));
  ASSERT_EQ(r.rank_drops.size(), 1u);
  EXPECT_EQ(r.rank_drops[0], 2u);  // 1 + D vanishes at D = -1
  EXPECT_FALSE(r.basic);
}

TEST(ConvPolyMatrix, DropsTrailingZerosAndEvaluates) {
  const auto f = make_field_of_order(3);
  const Matrix g0 = from_rows(f, {{1, 2}});
  const Matrix g1 = from_rows(f, {{0, 1}});
  const Matrix z(f, 1, 2);
  const PolyMatrix g({g0, g1, z});
  EXPECT_EQ(g.memory(), 1u);
  EXPECT_EQ(g.degree(), 1u);
  EXPECT_EQ(g.entry(0, 1), Poly(f, {2, 1}));
  const Matrix at2 = g.evaluate(2);
  EXPECT_EQ(at2(0, 0), 1u);
  EXPECT_EQ(at2(0, 1), 1u);  // 2 + 2 = 4 = 1
}

// y(D) solves the dual-side system iff D^mu G(1/D) y(D)^T = 0.
bool solves_reversed_product(const PolyMatrix& g, std::size_t max_degree, std::span<const Elem> y) {
  const auto f = g.field_ptr();
  const std::size_t n = g.cols(), mu = g.memory();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Poly acc(f);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Elem> rev(mu + 1), yc(max_degree + 1);
      for (std::size_t i = 0; i <= mu; ++i) rev[mu - i] = g.coefficient(i)(r, c);
      for (std::size_t t = 0; t <= max_degree; ++t) yc[t] = y[t * n + c];
      acc = acc + Poly(f, rev) * Poly(f, yc);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

TEST(ConvSliding, DualKernelMatchesPolynomialProduct) {
  const auto code = family_mainconv(4);
  const std::size_t L = 1;
  const Matrix check = sliding_check(code.generator, L);
  const Matrix basis = null_space(check);
  const Field& f = basis.field();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Elem> y(basis.cols(), 0);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const Elem c = pick(rng);
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.add(y[j], f.mul(c, basis(r, j)));
    }
    EXPECT_TRUE(solves_reversed_product(code.generator, L, y));
  }
  // A random vector outside the kernel fails.
  std::vector<Elem> z(basis.cols(), 0);
  z[0] = 1;
  EXPECT_FALSE(solves_reversed_product(code.generator, L, z));
}

TEST(ConvSliding, GeneratorShape) {
  const auto code = family_mainconv(4);
  const Matrix s = sliding_generator(code.generator, 2);
  EXPECT_EQ(s.rows(), code.kappa * 3);
  EXPECT_EQ(s.cols(), code.n * 4);
  EXPECT_EQ(rank(s), code.kappa * 3);
}

// With memory zero both sides reduce to block codes, checked by brute force.
TEST(ConvFreeDistance, MemoryZeroMatchesBlockCode) {
  const auto f = make_field_of_order(2);
  // Hamming [7, 4, 3] check matrix; its row space is the [7, 3, 4] simplex code.
  const Matrix h = from_rows(f, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
  const PolyMatrix g({h});
  std::uint64_t kernel_min = 99, span_min = 99;
  for (unsigned v = 1; v < 128; ++v) {
    std::vector<Elem> x(7);
    for (int j = 0; j < 7; ++j) x[j] = (v >> j) & 1;
    bool in_kernel = true;
    for (std::size_t r = 0; r < 3; ++r) {
      unsigned s = 0;
      for (int j = 0; j < 7; ++j) s ^= h(r, j) & x[j];
      in_kernel = in_kernel && s == 0;
    }
    if (in_kernel) kernel_min = std::min<std::uint64_t>(kernel_min, weight(x));
  }
  for (unsigned u = 1; u < 8; ++u) {
    std::vector<Elem> x(7, 0);
    for (std::size_t r = 0; r < 3; ++r) {
      if ((u >> r) & 1) {
        for (int j = 0; j < 7; ++j) x[j] ^= h(r, j);
      }
    }
    span_min = std::min<std::uint64_t>(span_min, weight(x));
  }
  FreeDistanceOptions dual;
  const auto a = free_distance_upper(g, 0, dual);
  ASSERT_TRUE(a.weight);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(*a.weight, kernel_min);
  FreeDistanceOptions gen;
  gen.side = ConvSide::kGenerated;
  const auto b = free_distance_upper(g, 0, gen);
  ASSERT_TRUE(b.weight);
  EXPECT_EQ(*b.weight, span_min);
}

TEST(ConvFreeDistance, SamplingWhenOverBudget) {
  const auto code = family_mainconv(4);
  FreeDistanceOptions opt;
  opt.budget.max_work = 10;
  opt.allow_sampling = false;
  EXPECT_THROW(free_distance_upper(code, 1, opt), BudgetExceeded);
  opt.allow_sampling = true;
  opt.samples = 1000;
  const auto r = free_distance_upper(code, 1, opt);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.work, 1000u);
  ASSERT_TRUE(r.weight);
  // Sampling is deterministic for a fixed seed.
  EXPECT_EQ(free_distance_upper(code, 1, opt).weight, r.weight);
}

TEST(ConvFreeDistance, ExactSearchAgreesWithClaim) {
  const auto code = family_mainconv(4);
  FreeDistanceOptions opt;
  opt.allow_sampling = false;
  for (std::size_t degree : {1, 2}) {
    const auto r = free_distance_upper(code, degree, opt);
    ASSERT_TRUE(r.exact);
    ASSERT_TRUE(r.weight);
    EXPECT_GE(*r.weight, 9u) << "degree " << degree;
  }
}

}  // namespace
}  // namespace cosetkit
