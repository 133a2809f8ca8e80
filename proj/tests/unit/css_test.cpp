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

#include <set>
#include <string>
#include <vector>

#include "cosetkit/css.hpp"
#include "cosetkit/oracle.hpp"

namespace cosetkit {
namespace {

std::set<std::uint64_t> closure(std::uint64_t q, std::uint64_t n, const std::vector<std::uint64_t>& seeds) {
  std::set<std::uint64_t> out;
  for (std::uint64_t s : seeds) {
    std::uint64_t x = s % n;
    while (out.insert(x).second) x = (x * q) % n;
  }
  return out;
}

std::vector<std::uint64_t> upto(std::uint64_t a, std::uint64_t b, std::uint64_t step = 1) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t x = a; x <= b; x += step) v.push_back(x);
  return v;
}

// K = |Z2| - |Z1| with Z1 = cosets 0..c-2 and Z2 the complement of the
// dropped cosets, counted by direct orbit enumeration.
std::uint64_t orbit_k(std::uint64_t q, std::uint64_t n, std::uint64_t c, const std::vector<std::uint64_t>& dropped) {
  return n - closure(q, n, dropped).size() - closure(q, n, upto(0, c - 2)).size();
}

TEST(CssFamilies, BracketExamples) {
  const std::vector<std::pair<CssParams, std::string>> rows = {
      {family_good1(5), "[[24, 10, d >= 5]]_5"},    {family_good1(7), "[[48, 26, d >= 7]]_7"},
      {family_good1(3), "[[8, 2, d >= 3]]_3"},      {family_good1(9), "[[80, 50, d >= 9]]_9"},
      {family_good2(4, 3), "[[15, 9, d >= 3]]_4"},  {family_good2(13, 11), "[[168, 130, d >= 11]]_13"},
      {family_good2(5, 2), "[[24, 22, d >= 2]]_5"}, {family_good1(4), "[[15, 5, d >= 4]]_4"},
      {family_good2(3, 2), "[[8, 6, d >= 2]]_3"},   {family_good2(8, 7), "[[63, 41, d >= 7]]_8"},
      {family_good1(13), "[[168, 122, d >= 13]]_13"},
      {family_good3(5, 4, 5), "[[624, 597, d >= 5]]_5"},
      {family_good3(4, 2, 3), "[[15, 9, d >= 3]]_4"},
      {family_good3(8, 2, 8), "[[63, 37, d >= 8]]_8"},
      {family_good3(4, 4, 4), "[[255, 236, d >= 4]]_4"},
      {family_es(5, 3, 5), "[[124, 102, d >= 5]]_5"},
      {family_es(7, 3, 7), "[[342, 308, d >= 7]]_7"},
      {family_es(4, 4, 3), "[[255, 242, d >= 3]]_4"},
      {family_es(5, 4, 5), "[[624, 595, d >= 5]]_5"},
  };
  for (const auto& [p, bracket] : rows) {
    EXPECT_EQ(p.bracket(), bracket);
    EXPECT_TRUE(p.matches_claims()) << bracket;
  }
}

TEST(CssFamilies, DimensionMatchesOrbitCount) {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    const std::uint64_t n = q * q - 1;
    EXPECT_EQ(family_good1(q).k, orbit_k(q, n, q, upto(q + 1, 2 * q - 1)));
    for (std::uint64_t c = 2; c < q; ++c) {
      EXPECT_EQ(family_good2(q, c).k, orbit_k(q, n, c, upto(q + 1, q + c - 1))) << q << " " << c;
    }
  }
  for (std::uint64_t q : {3, 4, 5}) {
    const std::uint64_t n = q * q * q * q - 1;
    for (std::uint64_t c = 2; c <= q; ++c) {
      EXPECT_EQ(family_good3(q, 4, c).k, orbit_k(q, n, c, upto(q * q + 1, q * q + c - 1)));
    }
  }
  for (std::uint64_t q : {5, 7}) {
    const std::uint64_t n = q * q * q - 1;
    for (std::uint64_t c = 2; c <= q; ++c) {
      EXPECT_EQ(family_es(q, 3, c).k, orbit_k(q, n, c, upto(q + 1, (c - 1) * q + 1, q)));
    }
  }
}

TEST(CssFamilies, Good2AtEndpointMatchesGood1) {
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const auto a = family_good2(q, q);
    const auto b = family_good1(q);
    EXPECT_EQ(a.bracket(), b.bracket());
    EXPECT_EQ(a.outer.defining_set(), b.outer.defining_set());
    EXPECT_EQ(a.inner.defining_set(), b.inner.defining_set());
    EXPECT_FALSE(a.warnings.empty());
    EXPECT_TRUE(b.warnings.empty());
  }
}

TEST(CssFamilies, RejectsBadArguments) {
  EXPECT_THROW(family_good1(2), std::invalid_argument);
  EXPECT_THROW(family_good1(6), std::invalid_argument);
  EXPECT_THROW(family_good2(5, 1), std::invalid_argument);
  EXPECT_THROW(family_good2(5, 6), std::invalid_argument);
  EXPECT_THROW(family_good3(5, 3, 3), std::invalid_argument);
  EXPECT_THROW(family_es(5, 2, 3), std::invalid_argument);
  EXPECT_THROW(css_family_from_name("nope"), std::invalid_argument);
  EXPECT_EQ(css_family_from_name("es"), CssFamily::kLadder);
}

TEST(CssPair, RejectsNonNestedPair) {
  const auto a = code_from_cosets(3, 2, {1});
  const auto b = code_from_cosets(3, 2, {2});
  EXPECT_THROW(css_from_pair(a, b), std::invalid_argument);
}

TEST(CssPair, BoundsFromBothSides) {
  const auto p = family_good1(4);
  EXPECT_EQ(p.outer_bch, p.outer.bch_bound());
  EXPECT_EQ(p.d_lb, std::min(p.outer_bch, p.inner_dual_bch));
  EXPECT_GE(p.d_lb, 4u);
  EXPECT_TRUE(nested(p.outer, p.inner));
}

TEST(CssTrueDistance, SmallFamilies) {
  const auto a = css_true_distance(family_good1(3));
  ASSERT_TRUE(a);
  EXPECT_GE(*a, 3u);
  const auto b = css_true_distance(family_good2(4, 3));
  ASSERT_TRUE(b);
  EXPECT_GE(*b, 3u);
}

TEST(CssTrueDistance, DegeneratePairIsUndefined) {
  const auto c = code_from_cosets(3, 2, {1, 2});
  EXPECT_FALSE(css_true_distance(css_from_pair(c, c)).has_value());
}

}  // namespace
}  // namespace cosetkit
