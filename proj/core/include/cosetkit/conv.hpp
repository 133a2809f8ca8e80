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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosetkit/budget.hpp"
#include "cosetkit/cyclic.hpp"
#include "cosetkit/matrix.hpp"
#include "cosetkit/poly.hpp"

namespace cosetkit {

/// Polynomial matrix G(D) = G_0 + G_1 D + ... + G_mu D^mu over GF(q).
class PolyMatrix {
 public:
  /// Trailing all-zero coefficients are dropped; G_0 is always kept.
  explicit PolyMatrix(std::vector<Matrix> coefficients);

  const Field& field() const { return coeffs_.front().field(); }
  const FieldPtr& field_ptr() const { return coeffs_.front().field_ptr(); }
  std::size_t rows() const { return coeffs_.front().rows(); }
  std::size_t cols() const { return coeffs_.front().cols(); }

  /// Largest entry degree.
  std::size_t memory() const { return coeffs_.size() - 1; }
  const std::vector<Matrix>& coefficients() const { return coeffs_; }
  const Matrix& coefficient(std::size_t i) const { return coeffs_.at(i); }

  Poly entry(std::size_t r, std::size_t c) const;
  /// gamma_i: the largest degree in row i (0 for a zero row).
  std::vector<std::size_t> row_degrees() const;
  /// gamma = sum of row degrees.
  std::size_t degree() const;
  /// G(x) for a field element x.
  Matrix evaluate(Elem x) const;
  /// Row i holds the coefficient of D^{gamma_i} in row i.
  Matrix leading_row_coefficients() const;

 private:
  std::vector<Matrix> coeffs_;
};

/// Expanded, dependent-row-free check matrices of the head code C0 and the
/// tail code C1 of a split parent code.
struct SplitParity {
  Matrix h0;
  Matrix h1;
  /// h1 with zero rows appended at the bottom up to kappa rows.
  Matrix h1_padded;
  std::size_t kappa = 0;
};

/// Splits the parent's defining set into the cosets of `head` and `tail`.
/// Throws std::invalid_argument when the two overlap, do not cover the
/// parent's defining set, or rank(H1) > rank(H0).
SplitParity split_parity(const CyclicCode& parent, std::span<const std::int64_t> head,
                         std::span<const std::int64_t> tail);

/// Unit-memory code V generated by G(D) = H0 + H1~ D, reported through its
/// dual's parameters (n, n - kappa, gamma; mu, dfree >= D).
struct ConvCode {
  std::string family = "split";
  std::uint64_t q = 0;
  std::optional<std::uint64_t> i{};

  std::uint64_t n = 0;
  std::uint64_t k = 0;       // n - kappa
  std::uint64_t gamma = 0;   // degree of G(D)
  std::uint64_t mu = 0;      // memory of G(D)
  std::uint64_t kappa = 0;   // rank H0

  std::uint64_t d0_lb = 0;   // BCH bound of C0
  std::uint64_t d1_lb = 0;   // BCH bound of C1
  std::uint64_t d_lb = 0;    // BCH bound of the parent
  /// min(d0_lb + d1_lb, d_lb)
  std::uint64_t dfree_lb = 0;

  std::optional<std::uint64_t> claimed_k{};
  std::optional<std::uint64_t> claimed_gamma{};
  std::optional<std::uint64_t> claimed_dfree{};

  PolyMatrix generator;
  SplitParity split;
  CyclicCode parent;
  CyclicCode head;
  CyclicCode tail;

  bool matches_claims() const;
  /// The claimed free-distance bound when the computed bound backs it,
  /// otherwise the computed bound.
  std::uint64_t reported_dfree() const;
  /// "(n, k, g; m, dfree >= D)_q"
  std::string bracket() const;
};

/// Builds G(D) from a head code and a tail code with disjoint defining sets.
/// Throws std::invalid_argument when they overlap, differ in (n, q), or
/// rank(H1) > rank(H0).
ConvCode build_conv(const CyclicCode& head, const CyclicCode& tail);

/// n = q^2 - 1 families.  q >= 4 prime power, 1 <= i <= q - 3.
ConvCode family_mainconv(std::uint64_t q);
ConvCode family_mainconv_b(std::uint64_t q);
ConvCode family_mainconv_c(std::uint64_t q, std::uint64_t i);
ConvCode family_mainconv_d(std::uint64_t q, std::uint64_t i);
ConvCode family_mainconv_e(std::uint64_t q);

struct BasicReport {
  std::size_t kappa = 0;
  /// rank(G_0) == kappa
  bool head_full_rank = false;
  /// rank(G_i) <= kappa for every coefficient
  bool tail_ranks_ok = false;
  /// Field elements x where rank G(x) < kappa.
  std::vector<Elem> rank_drops;
  /// The leading row-coefficient matrix has full rank (reduced).
  bool reduced = false;
  /// All invariant factors of G(D) are units (basic).
  bool basic = false;

  bool passes() const { return head_full_rank && tail_ranks_ok && rank_drops.empty() && reduced && basic; }
  std::vector<std::string> failures() const;
};

BasicReport check_reduced_basic(const PolyMatrix& g);

enum class ConvSide { kGenerated, kDual };

struct FreeDistanceOptions {
  OracleBudget budget{};
  bool allow_sampling = true;
  std::uint64_t samples = 200'000;
  ConvSide side = ConvSide::kDual;
};

struct FreeDistanceResult {
  /// Smallest weight seen; nullopt when no nonzero sequence exists.
  std::optional<std::uint64_t> weight;
  /// True when every sequence of the requested degree was visited.
  bool exact = false;
  std::uint64_t work = 0;
};

/// Smallest weight of a nonzero sequence of degree <= max_degree: inputs
/// u(D) G(D) on the generated side, or sequences y(D) with
/// sum_i G_i y_{t+i} = 0 for every t on the dual side.  Any such weight is
/// an upper bound on the free distance.  Beyond the budget, random sampling
/// is used when allowed and BudgetExceeded is thrown otherwise.
FreeDistanceResult free_distance_upper(const PolyMatrix& g, std::size_t max_degree, const FreeDistanceOptions& options);
FreeDistanceResult free_distance_upper(const ConvCode& code, std::size_t max_degree,
                                       const FreeDistanceOptions& options = {});

/// The block matrices whose row space (generated side) or kernel (dual side)
/// holds the degree <= max_degree sequences.
Matrix sliding_generator(const PolyMatrix& g, std::size_t max_degree);
Matrix sliding_check(const PolyMatrix& g, std::size_t max_degree);

}  // namespace cosetkit
