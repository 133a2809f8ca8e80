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
#include <span>
#include <string>
#include <vector>

#include "cosetkit/budget.hpp"
#include "cosetkit/conv.hpp"
#include "cosetkit/css.hpp"
#include "cosetkit/cyclic.hpp"

namespace cosetkit {

/// Exact minimum distance of a cyclic code.  Throws BudgetExceeded when no
/// exhaustive route fits the budget; no dual-based shortcut is attempted.
std::uint64_t min_distance_bruteforce(const CyclicCode& code, const OracleBudget& budget = {});

/// Whether every nonzero codeword has weight >= bound, stopping at the first
/// lighter one.  Throws BudgetExceeded.
bool verify_distance_at_least(const CyclicCode& code, std::uint64_t bound, const OracleBudget& budget = {});

/// Exact min weight over (C1 \ C2) u (C2^perp \ C1^perp); nullopt when both
/// differences are empty (C1 = C2).  Throws BudgetExceeded.
std::optional<std::uint64_t> css_true_distance(const CssParams& code, const OracleBudget& budget = {});

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view status_name(CheckStatus s);

/// One verified (or skipped) property for one set of inputs.
struct OracleCheck {
  std::string module;
  std::string check;
  std::string inputs;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

/// A claimed value contradicted by a computed one.
struct Discrepancy {
  std::string module;
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> warnings;

  std::size_t count(CheckStatus s) const;
  /// No failed check and no discrepancy.
  bool ok() const;
  void append(OracleReport other);
};

/// Every coset property for each (q, m) with n within budget.max_modulus:
///   parity-uniform, no-consecutive (odd q only, otherwise skipped with
///   "hypothesis: q odd"), gap-lower-bound, gap-attained-at-c1,
///   complement-unique, complement-size, complement-oplus-zero,
///   complement-gap, complement-involution, disjoint-range,
///   min-representative (even m), full-size-range, ladder-disjoint and
///   ladder-consecutive-last for every admissible c, designed-distance-cap.
/// Pairs are processed by up to `jobs` workers; output order is fixed.
OracleReport coset_theorem_sweep(std::span<const std::uint64_t> q_list, std::span<const std::uint32_t> m_list,
                                 const OracleBudget& budget = {}, unsigned jobs = 1);

/// Generator/check identities for cyclic codes of length n <= max_n over the
/// given q: g h = x^n - 1, kernel equivalence of the check matrices,
/// dimension, distance >= BCH bound within budget, and agreement of the two
/// dual-containing criteria over unions of up to four cosets.
OracleReport cyclic_identity_sweep(std::span<const std::uint64_t> q_list, std::uint64_t max_n,
                                   const OracleBudget& budget = {}, unsigned jobs = 1);

/// Brute-force distance checks of C1 and C2^perp against the claimed d, and
/// exact D where affordable, for every CSS family member at the given q
/// (m = 2 for good1/good2, plus good3/es at m = 2).
OracleReport css_family_sweep(std::span<const std::uint64_t> q_list, const OracleBudget& budget = {},
                              unsigned jobs = 1);

/// Claims, rank(H0) >= rank(H1), reduced-basic checks and exact
/// free-distance searches of the dual at input degree <= `max_degree` for
/// every convolutional family member at the given q.
OracleReport conv_family_sweep(std::span<const std::uint64_t> q_list, std::size_t max_degree = 1,
                               const OracleBudget& budget = {}, unsigned jobs = 1);

}  // namespace cosetkit
