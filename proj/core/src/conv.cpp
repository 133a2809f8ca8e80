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

#include "cosetkit/conv.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "cosetkit/field.hpp"
#include "cosetkit/weight.hpp"

namespace cosetkit {
namespace {

std::vector<std::int64_t> range_exponents(std::uint64_t first, std::uint64_t last) {
  std::vector<std::int64_t> out;
  for (std::uint64_t x = first; x <= last; ++x) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

void require_family_q(std::uint64_t q) {
  if (!prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
  if (q < 4) throw std::invalid_argument(fmt::format("convolutional families need q >= 4, got {}", q));
}

void require_family_i(std::uint64_t q, std::uint64_t i) {
  if (i < 1 || i + 3 > q) throw std::invalid_argument(fmt::format("i = {} outside [1, {}]", i, q - 3));
}

ConvCode family_code(std::uint64_t q, const std::vector<std::int64_t>& head, const std::vector<std::int64_t>& tail) {
  const auto ext = make_extension(q, 2);
  return build_conv(CyclicCode(ext, DefiningSet::from_exponents(q, 2, head)),
                    CyclicCode(ext, DefiningSet::from_exponents(q, 2, tail)));
}

// Whether every diagonal entry of a Smith-style diagonalisation of g over
// GF(q)[D] is a nonzero constant.  Row and column operations are
// unimodular, so this is the gcd-of-maximal-minors criterion.
bool unit_invariant_factors(const PolyMatrix& g) {
  const std::size_t rows = g.rows();
  const std::size_t cols = g.cols();
  if (rows > cols) return false;
  std::vector<std::vector<Poly>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r].push_back(g.entry(r, c));
  }
  for (std::size_t p = 0; p < rows; ++p) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      int best = -1;
      for (std::size_t i = p; i < rows; ++i) {
        for (std::size_t j = p; j < cols; ++j) {
          const int d = a[i][j].degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            bi = i;
            bj = j;
          }
        }
        if (best == 0) break;
      }
      if (best < 0) return false;  // rank deficient over GF(q)(D)
      std::swap(a[p], a[bi]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][p], a[i][bj]);

      bool clean = true;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (a[p][j].is_zero()) continue;
        const Poly quo = divmod(a[p][j], a[p][p]).first;
        for (std::size_t i = p; i < rows; ++i) {
          if (!a[i][p].is_zero()) a[i][j] = a[i][j] - quo * a[i][p];
        }
        if (!a[p][j].is_zero()) clean = false;
      }
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a[i][p].is_zero()) continue;
        const Poly quo = divmod(a[i][p], a[p][p]).first;
        for (std::size_t j = p; j < cols; ++j) {
          if (!a[p][j].is_zero()) a[i][j] = a[i][j] - quo * a[p][j];
        }
        if (!a[i][p].is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (a[p][p].degree() > 0) return false;
  }
  return true;
}

FreeDistanceResult sample_min_weight(const Matrix& gen, std::uint64_t samples, std::uint64_t seed) {
  const Field& f = gen.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  FreeDistanceResult out;
  std::vector<Elem> word(gen.cols());
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::fill(word.begin(), word.end(), 0);
    bool any = false;
    for (std::size_t r = 0; r < gen.rows(); ++r) {
      const Elem c = pick(rng);
      if (c == 0) continue;
      any = true;
      for (std::size_t j = 0; j < word.size(); ++j) word[j] = f.add(word[j], f.mul(c, gen(r, j)));
    }
    ++out.work;
    if (!any) continue;
    const std::uint64_t w = weight(word);
    if (w > 0 && (!out.weight || w < *out.weight)) out.weight = w;
  }
  return out;
}

}  // namespace

PolyMatrix::PolyMatrix(std::vector<Matrix> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial matrix needs at least one coefficient");
  for (const Matrix& m : coeffs_) {
    if (m.rows() != coeffs_.front().rows() || m.cols() != coeffs_.front().cols()) {
      throw std::invalid_argument("coefficient matrices differ in shape");
    }
  }
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly PolyMatrix::entry(std::size_t r, std::size_t c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i](r, c);
  return Poly(field_ptr(), std::move(v));
}

std::vector<std::size_t> PolyMatrix::row_degrees() const {
  std::vector<std::size_t> deg(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const auto row = coeffs_[i].row(r);
      if (std::any_of(row.begin(), row.end(), [](Elem e) { return e != 0; })) {
        deg[r] = i;
        break;
      }
    }
  }
  return deg;
}

std::size_t PolyMatrix::degree() const {
  const auto d = row_degrees();
  std::size_t total = 0;
  for (std::size_t x : d) total += x;
  return total;
}

Matrix PolyMatrix::evaluate(Elem x) const {
  const Field& f = field();
  Matrix out(field_ptr(), rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      Elem acc = 0;
      for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i](r, c));
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix PolyMatrix::leading_row_coefficients() const {
  const auto deg = row_degrees();
  Matrix out(field_ptr(), rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto src = coeffs_[deg[r]].row(r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

SplitParity split_parity(const CyclicCode& parent, std::span<const std::int64_t> head,
                         std::span<const std::int64_t> tail) {
  const auto hz = DefiningSet::from_exponents(parent.q(), parent.m(), head);
  const auto tz = DefiningSet::from_exponents(parent.q(), parent.m(), tail);
  if (!hz.disjoint_from(tz)) throw std::invalid_argument("head and tail defining sets overlap");
  if (!(hz.united(tz) == parent.defining_set())) {
    throw std::invalid_argument("head and tail do not cover the parent defining set");
  }
  const CyclicCode h(parent.ext_ptr(), hz);
  const CyclicCode t(parent.ext_ptr(), tz);
  SplitParity out{parity_check_matrix(h), parity_check_matrix(t), Matrix(parent.base_ptr(), 0, parent.n()), 0};
  out.kappa = out.h0.rows();
  if (out.h1.rows() > out.kappa) {
    throw std::invalid_argument(fmt::format("rank H1 = {} exceeds rank H0 = {}", out.h1.rows(), out.kappa));
  }
  out.h1_padded = Matrix(parent.base_ptr(), out.kappa, parent.n());
  for (std::size_t r = 0; r < out.h1.rows(); ++r) {
    std::copy(out.h1.row(r).begin(), out.h1.row(r).end(), out.h1_padded.row(r).begin());
  }
  return out;
}

ConvCode build_conv(const CyclicCode& head, const CyclicCode& tail) {
  if (head.n() != tail.n() || head.q() != tail.q()) throw std::invalid_argument("head and tail differ in (n, q)");
  if (!head.defining_set().disjoint_from(tail.defining_set())) {
    throw std::invalid_argument("head and tail defining sets overlap");
  }
  const CyclicCode parent(head.ext_ptr(), head.defining_set().united(tail.defining_set()));
  const auto hr = head.defining_set().representatives();
  const auto tr = tail.defining_set().representatives();
  const std::vector<std::int64_t> h(hr.begin(), hr.end());
  const std::vector<std::int64_t> t(tr.begin(), tr.end());
  SplitParity split = split_parity(parent, h, t);
  PolyMatrix g({split.h0, split.h1_padded});

  const std::uint64_t d0 = head.bch_bound();
  const std::uint64_t d1 = tail.bch_bound();
  const std::uint64_t d = parent.bch_bound();
  const std::uint64_t kappa = split.kappa;
  return ConvCode{
      .q = head.q(),
      .n = head.n(),
      .k = head.n() - kappa,
      .gamma = g.degree(),
      .mu = g.memory(),
      .kappa = kappa,
      .d0_lb = d0,
      .d1_lb = d1,
      .d_lb = d,
      .dfree_lb = std::min(d0 + d1, d),
      .generator = std::move(g),
      .split = std::move(split),
      .parent = parent,
      .head = head,
      .tail = tail,
  };
}

bool ConvCode::matches_claims() const {
  return (!claimed_k || *claimed_k == k) && (!claimed_gamma || *claimed_gamma == gamma) &&
         (!claimed_dfree || *claimed_dfree <= dfree_lb);
}

std::uint64_t ConvCode::reported_dfree() const {
  return claimed_dfree && *claimed_dfree <= dfree_lb ? *claimed_dfree : dfree_lb;
}

std::string ConvCode::bracket() const {
  return fmt::format("({}, {}, {}; {}, dfree >= {})_{}", n, k, gamma, mu, reported_dfree(), q);
}

ConvCode family_mainconv(std::uint64_t q) {
  require_family_q(q);
  ConvCode c = family_code(q, range_exponents(0, q - 1), range_exponents(q + 1, 2 * q - 1));
  c.family = "mainconv";
  c.claimed_k = c.n - 2 * q + 1;
  c.claimed_gamma = 2 * q - 3;
  c.claimed_dfree = 2 * q + 1;
  return c;
}

ConvCode family_mainconv_b(std::uint64_t q) {
  require_family_q(q);
  auto head = range_exponents(0, q - 1);
  head.push_back(static_cast<std::int64_t>(q + 1));
  ConvCode c = family_code(q, head, range_exponents(q + 2, 2 * q - 1));
  c.family = "mainconvB";
  c.claimed_k = c.n - 2 * q;
  c.claimed_gamma = 2 * q - 4;
  c.claimed_dfree = 2 * q + 1;
  return c;
}

ConvCode family_mainconv_c(std::uint64_t q, std::uint64_t i) {
  require_family_q(q);
  require_family_i(q, i);
  auto head = range_exponents(0, q - 1);
  const auto extra = range_exponents(q + 1, q + 1 + i);
  head.insert(head.end(), extra.begin(), extra.end());
  ConvCode c = family_code(q, head, range_exponents(q + 2 + i, 2 * q - 1));
  c.family = "mainconvC";
  c.i = i;
  c.claimed_k = c.n - 2 * (q + i);
  c.claimed_gamma = 2 * (q - 2 - i);
  c.claimed_dfree = 2 * q + 1;
  return c;
}

ConvCode family_mainconv_d(std::uint64_t q, std::uint64_t i) {
  require_family_q(q);
  require_family_i(q, i);
  ConvCode c = family_code(q, range_exponents(0, q - 1), range_exponents(q + 1, q + 1 + i));
  c.family = "mainconvD";
  c.i = i;
  c.claimed_k = c.n - 2 * q + 1;
  c.claimed_gamma = 2 * i + 1;
  c.claimed_dfree = q + i + 3;
  return c;
}

ConvCode family_mainconv_e(std::uint64_t q) {
  require_family_q(q);
  ConvCode c = family_code(q, range_exponents(0, q - 1), {static_cast<std::int64_t>(q + 1)});
  c.family = "mainconvE";
  c.claimed_k = c.n - 2 * q + 1;
  c.claimed_gamma = 1;
  c.claimed_dfree = q + 2;
  return c;
}

std::vector<std::string> BasicReport::failures() const {
  std::vector<std::string> out;
  if (!head_full_rank) out.push_back("G_0 does not have full row rank");
  if (!tail_ranks_ok) out.push_back("a coefficient matrix has rank above kappa");
  if (!rank_drops.empty()) out.push_back(fmt::format("G(x) loses rank at {} field element(s)", rank_drops.size()));
  if (!reduced) out.push_back("leading row coefficients are rank deficient (not reduced)");
  if (!basic) out.push_back("invariant factors are not all units (not basic)");
  return out;
}

BasicReport check_reduced_basic(const PolyMatrix& g) {
  BasicReport r;
  r.kappa = g.rows();
  r.head_full_rank = rank(g.coefficient(0)) == r.kappa;
  r.tail_ranks_ok = std::all_of(g.coefficients().begin(), g.coefficients().end(),
                                [&](const Matrix& m) { return rank(m) <= r.kappa; });
  for (Elem x = 0; x < g.field().order(); ++x) {
    if (rank(g.evaluate(x)) < r.kappa) r.rank_drops.push_back(x);
  }
  r.reduced = rank(g.leading_row_coefficients()) == r.kappa;
  r.basic = unit_invariant_factors(g);
  return r;
}

Matrix sliding_generator(const PolyMatrix& g, std::size_t max_degree) {
  const std::size_t k = g.rows(), n = g.cols(), mu = g.memory();
  Matrix out(g.field_ptr(), k * (max_degree + 1), n * (max_degree + mu + 1));
  for (std::size_t a = 0; a <= max_degree; ++a) {
    for (std::size_t i = 0; i <= mu; ++i) {
      const Matrix& gi = g.coefficient(i);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(a * k + r, (a + i) * n + c) = gi(r, c);
      }
    }
  }
  return out;
}

Matrix sliding_check(const PolyMatrix& g, std::size_t max_degree) {
  const std::size_t k = g.rows(), n = g.cols(), mu = g.memory();
  // Row block b stands for time s = b - mu and reads y_{s+i} through G_i.
  Matrix out(g.field_ptr(), k * (max_degree + mu + 1), n * (max_degree + 1));
  for (std::size_t b = 0; b <= max_degree + mu; ++b) {
    for (std::size_t i = 0; i <= mu; ++i) {
      if (b + i < mu || b + i - mu > max_degree) continue;
      const std::size_t t = b + i - mu;
      const Matrix& gi = g.coefficient(i);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(b * k + r, t * n + c) = gi(r, c);
      }
    }
  }
  return out;
}

FreeDistanceResult free_distance_upper(const PolyMatrix& g, std::size_t max_degree,
                                       const FreeDistanceOptions& options) {
  WeightProblem p{Matrix(g.field_ptr(), 0, 0), Matrix(g.field_ptr(), 0, 0), std::nullopt};
  if (options.side == ConvSide::kGenerated) {
    p.generator = sliding_generator(g, max_degree);
    p.check = null_space(p.generator);
  } else {
    p.check = sliding_check(g, max_degree);
    p.generator = null_space(p.check);
  }
  try {
    const WeightResult r = exact_min_weight(p, options.budget);
    return {r.weight, true, r.work};
  } catch (const BudgetExceeded&) {
    if (!options.allow_sampling) throw;
  }
  return sample_min_weight(p.generator, options.samples, options.budget.seed);
}

FreeDistanceResult free_distance_upper(const ConvCode& code, std::size_t max_degree,
                                       const FreeDistanceOptions& options) {
  return free_distance_upper(code.generator, max_degree, options);
}

}  // namespace cosetkit
