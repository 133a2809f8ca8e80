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
#include <optional>
#include <vector>

#include "cosetkit/budget.hpp"
#include "cosetkit/matrix.hpp"

namespace cosetkit {

/// A linear code given by both a generator and a parity-check matrix, with
/// an optional set of extra checks carving out a subcode.  Searches then
/// range over codewords that fail at least one extra check, i.e. over the
/// set difference between the code and the subcode.  With no extra checks
/// they range over all nonzero codewords.
struct WeightProblem {
  Matrix generator;  // rows span the code
  Matrix check;      // kernel is the code
  std::optional<Matrix> extra_checks;
};

enum class SearchRoute { kMessages, kInformationSets, kSupports };

struct WeightResult {
  /// Minimum weight, or nullopt when the searched set is empty.
  std::optional<std::uint64_t> weight;
  SearchRoute route = SearchRoute::kMessages;
  std::uint64_t work = 0;
};

/// Number of messages visited by the message route: (q^k - 1) / (q - 1),
/// saturating.
std::uint64_t message_route_cost(std::uint64_t q, std::size_t k);

/// Column subsets of size 1..w out of n, saturating.
std::uint64_t support_route_cost(std::size_t n, std::size_t w);

/// Exact minimum weight.  Uses message enumeration (one representative per
/// scalar class, modular Gray order) when it fits the budget.  Otherwise,
/// without extra checks, expands low-weight messages over disjoint
/// information sets until the lower bound meets the lightest word found.
/// The remaining budget then goes to growing column supports of the check
/// matrix one size at a time.  Throws BudgetExceeded when no route fits.
WeightResult exact_min_weight(const WeightProblem& p, const OracleBudget& budget);

/// Whether every vector of the searched set has weight >= bound.  Stops at
/// the first lighter vector; the support route only inspects supports
/// smaller than `bound`.  Throws BudgetExceeded when neither route fits.
struct BoundCheck {
  bool holds = false;
  /// Weight of the lighter vector found when the bound fails.
  std::optional<std::uint64_t> counterexample;
  SearchRoute route = SearchRoute::kMessages;
  std::uint64_t work = 0;
};

BoundCheck weight_at_least(const WeightProblem& p, std::uint64_t bound, const OracleBudget& budget);

}  // namespace cosetkit
