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

#include "cosetkit/cosets.hpp"
#include "cosetkit/cyclic.hpp"

namespace cosetkit {
namespace {

using Exps = std::vector<std::uint64_t>;

// Longest cyclic run by brute force over every start and length.
std::uint64_t naive_bch(const DefiningSet& z) {
  const std::uint64_t n = z.n();
  std::uint64_t best = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    std::uint64_t len = 0;
    while (len < n && z.contains((s + len) % n)) ++len;
    best = std::max(best, len);
  }
  return best + 1;
}

TEST(DefiningSetTest, ClosureAndAlgebra) {
  const auto z = DefiningSet::from_exponents(5, 2, {0, 1, 2, 3});
  EXPECT_EQ(z.exponents(), (Exps{0, 1, 2, 3, 5, 10, 15}));
  EXPECT_EQ(z.representatives(), (Exps{0, 1, 2, 3}));
  EXPECT_EQ(z.complement().size(), 24u - 7u);
  EXPECT_EQ(z.negated().negated(), z);
  EXPECT_TRUE(z.subset_of(DefiningSet::full(5, 2)));
  EXPECT_TRUE(z.disjoint_from(z.complement()));
  EXPECT_THROW(z.subset_of(DefiningSet(3, 2)), std::invalid_argument);
}

TEST(CodeFromCosetsTest, Examples) {
  const CyclicCode c = code_from_cosets(5, 2, {0, 1, 2, 3});
  EXPECT_EQ(c.defining_set().size(), 7u);
  EXPECT_EQ(c.dimension(), 17u);
  EXPECT_EQ(c.generator().degree(), 7);

  const CyclicCode full = code_from_cosets(5, 2, {});
  EXPECT_EQ(full.dimension(), 24u);
  EXPECT_EQ(full.generator(), Poly(full.base_ptr(), {1}));

  const CyclicCode small = code_from_cosets(3, 2, {1});
  EXPECT_EQ(small.defining_set().exponents(), (Exps{1, 3}));
  EXPECT_EQ(small.dimension(), 6u);
}

TEST(BchBoundTest, Examples) {
  EXPECT_EQ(bch_bound(DefiningSet::from_exponents(5, 2, {0, 1, 2, 3})), 5u);
  EXPECT_EQ(bch_bound(DefiningSet(5, 2)), 1u);
  EXPECT_EQ(bch_bound(DefiningSet::full(5, 2)), 25u);
  // A single coset C_{s+1} with s + 1 <= q - 2 has no two consecutive members.
  for (std::int64_t s1 = 1; s1 <= 3; ++s1) EXPECT_EQ(bch_bound(DefiningSet::from_exponents(5, 2, {s1})), 2u);
  // Wrapping run 23, 0, 1.
  const auto wrap = DefiningSet::from_exponents(5, 2, {0, 1, 19});
  EXPECT_EQ(longest_run(wrap).start, 23u);
  EXPECT_EQ(bch_bound(wrap), 4u);
}

TEST(BchBoundTest, MatchesNaiveOnRandomUnions) {
  std::mt19937 rng(3);
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}, {4, 2}, {5, 2}, {3, 3}, {2, 5}}) {
    const auto cosets = all_cosets(q, m);
    std::uniform_int_distribution<std::size_t> pick(0, cosets.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::int64_t> reps;
      for (int j = 0; j < trial % 6; ++j) reps.push_back(static_cast<std::int64_t>(cosets[pick(rng)].representative));
      const auto z = DefiningSet::from_exponents(q, m, reps);
      ASSERT_EQ(bch_bound(z), naive_bch(z));
    }
  }
}

TEST(BchBoundTest, ConsecutiveCosetsCapDesignedDistance) {
  // Union of C_{s+1}, ..., C_{s+c} with 1 <= s + c <= q - 2 has at most c + 1
  // consecutive members.
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    for (std::uint64_t c = 1; c + 2 <= q; ++c) {
      for (std::uint64_t s = 0; s + c <= q - 2; ++s) {
        std::vector<std::int64_t> reps;
        for (std::uint64_t j = 1; j <= c; ++j) reps.push_back(static_cast<std::int64_t>(s + j));
        EXPECT_LE(bch_bound(DefiningSet::from_exponents(q, 2, reps)), c + 2) << q << " " << s << " " << c;
      }
    }
  }
}

TEST(DualTest, Examples) {
  EXPECT_EQ(dual_defining_set(DefiningSet(5, 2)), DefiningSet::full(5, 2));
  // The dual of good1's inner code at q = 5 has the run 6..9 in its
  // complement, hence BCH bound at least 5 on the dual.
  std::vector<std::int64_t> excluded{6, 7, 8, 9};
  const auto e = DefiningSet::from_exponents(5, 2, excluded);
  const auto inner = e.complement();
  EXPECT_GE(bch_bound(dual_defining_set(inner)), 5u);

  // Self-reciprocal sets: dual defining set is the plain complement.
  const auto sym = DefiningSet::from_exponents(3, 2, {1, 7});
  ASSERT_EQ(sym.negated(), sym);
  EXPECT_EQ(dual_defining_set(sym), sym.complement());
}

TEST(ContainsDualTest, Examples) {
  EXPECT_TRUE(contains_dual(code_from_cosets(5, 2, {1})));
  EXPECT_FALSE(contains_dual(code_from_cosets(5, 2, {0})));
  EXPECT_FALSE(contains_dual(code_from_cosets(5, 2, {1, 19})));
}

TEST(NestedTest, Examples) {
  const CyclicCode outer = code_from_cosets(5, 2, {0, 1, 2, 3});
  const auto inner_z = DefiningSet::from_exponents(5, 2, {6, 7, 8, 9}).complement();
  const CyclicCode inner(make_extension(5, 2), inner_z);
  EXPECT_TRUE(nested(outer, inner));
  EXPECT_TRUE(nested(outer, outer));
  EXPECT_FALSE(nested(code_from_cosets(5, 2, {1}), code_from_cosets(5, 2, {2})));
  EXPECT_THROW(nested(outer, code_from_cosets(3, 2, {1})), std::invalid_argument);
}

TEST(ParityCheckMatrixTest, Ranks) {
  const CyclicCode c4 = code_from_cosets(4, 2, {0, 1, 2, 3, 5, 6, 7});
  EXPECT_EQ(parity_check_matrix(c4).rows(), 12u);
  const std::vector<std::uint64_t> zero{0};
  const Matrix ones = parity_check_matrix(c4, zero);
  ASSERT_EQ(ones.rows(), 1u);
  for (std::size_t j = 0; j < ones.cols(); ++j) EXPECT_EQ(ones(0, j), 1u);
  const std::vector<std::uint64_t> head{0, 1, 2, 3};
  EXPECT_EQ(parity_check_matrix(c4, head).rows(), 7u);
  // Every element of Z as a row still gives rank |Z|.
  EXPECT_EQ(parity_check_matrix(c4, c4.defining_set().exponents()).rows(), 12u);
  const std::vector<std::uint64_t> bad{15};
  EXPECT_THROW(parity_check_matrix(c4, bad), std::out_of_range);
}

TEST(ParityCheckMatrixTest, NullSpaceIsGeneratedCodeExhaustively) {
  // q^k small enough to list every codeword from g(x).
  for (auto [q, m, reps] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::vector<std::int64_t>>>{
           {3, 2, {1}}, {2, 4, {1, 3}}, {4, 2, {0, 1, 2, 3}}, {3, 3, {1, 2, 4, 5, 7, 13}}}) {
    const CyclicCode code = code_from_cosets(q, m, reps);
    const Matrix h = parity_check_matrix(code);
    const Field& f = *code.base_ptr();
    const std::size_t k = code.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    std::vector<Elem> u(k);
    std::set<std::vector<Elem>> words;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (auto& x : u) {
        x = static_cast<Elem>(rest % q);
        rest /= q;
      }
      const auto c = encode(code, u);
      for (std::size_t r = 0; r < h.rows(); ++r) {
        Elem acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j) acc = f.add(acc, f.mul(c[j], h(r, j)));
        ASSERT_EQ(acc, 0u);
      }
      words.insert(c);
    }
    EXPECT_EQ(words.size(), total);
    EXPECT_EQ(h.rows(), code.n() - k);
  }
}

TEST(CheckPolynomialTest, GeneratorTimesCheckIsXnMinusOne) {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}, {4, 2}, {5, 2}, {7, 2}, {8, 2}, {3, 4}}) {
    const auto cosets = all_cosets(q, m);
    for (std::size_t i = 0; i < cosets.size(); i += 3) {
      std::vector<std::int64_t> reps;
      for (std::size_t j = 0; j <= i; j += 2) reps.push_back(static_cast<std::int64_t>(cosets[j].representative));
      const CyclicCode code = code_from_cosets(q, m, reps);
      EXPECT_EQ(code.generator() * check_polynomial(code), Poly::x_pow_minus_one(code.base_ptr(), code.n()));
      const Matrix g = generator_matrix(code);
      const Matrix hh = check_matrix_from_h(code);
      EXPECT_TRUE((hh * g.transpose()).is_zero());
      EXPECT_EQ(rank(g), code.dimension());
      EXPECT_EQ(rank(hh), code.n() - code.dimension());
    }
  }
}

}  // namespace
}  // namespace cosetkit
