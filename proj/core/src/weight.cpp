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

#include "cosetkit/weight.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace cosetkit {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / i;
  }
  return r;
}

bool all_zero(const std::vector<Elem>& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

// Message route.  Visits one vector per scalar class: for each t the digit t
// is fixed to 1, higher digits are 0 and digits below t run through a
// modular Gray sequence, so each step changes a single digit by +1.
class MessageSearch {
 public:
  MessageSearch(const WeightProblem& p, std::optional<std::uint64_t> stop_below)
      : f_(p.generator.field()), g_(remove_dependent_rows(p.generator)), stop_below_(stop_below) {
    if (p.extra_checks) {
      const Matrix& e = *p.extra_checks;
      synd_ = g_ * e.transpose();  // row j: extra syndrome of generator row j
      has_extra_ = e.rows() > 0;
    }
  }

  WeightResult run() {
    const std::size_t k = g_.rows();
    const std::size_t n = g_.cols();
    const Elem q = f_.order();
    std::vector<Elem> word(n), synd(has_extra_ ? synd_.cols() : 0);
    std::vector<Elem> gray, counter;
    for (std::size_t t = k; t-- > 0 && !stopped_;) {
      std::copy(g_.row(t).begin(), g_.row(t).end(), word.begin());
      if (has_extra_) std::copy(synd_.row(t).begin(), synd_.row(t).end(), synd.begin());
      visit(word, synd);
      gray.assign(t, 0);
      counter.assign(t, 0);
      while (!stopped_) {
        std::size_t j = 0;
        while (j < t && counter[j] == q - 1) counter[j++] = 0;
        if (j == t) break;
        ++counter[j];
        const Elem old_digit = gray[j];
        gray[j] = (gray[j] + 1) % q;
        const Elem delta = f_.sub(gray[j], old_digit);
        axpy(word, g_.row(j), delta);
        if (has_extra_) axpy(synd, synd_.row(j), delta);
        visit(word, synd);
      }
    }
    return {best_, SearchRoute::kMessages, work_};
  }

 private:
  void axpy(std::vector<Elem>& dst, std::span<const Elem> src, Elem c) const {
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (src[i] != 0) dst[i] = f_.add(dst[i], f_.mul(c, src[i]));
    }
  }

  void visit(const std::vector<Elem>& word, const std::vector<Elem>& synd) {
    ++work_;
    if (has_extra_ && all_zero(synd)) return;
    const std::uint64_t w = weight(word);
    if (!best_ || w < *best_) best_ = w;
    if (stop_below_ && w < *stop_below_) stopped_ = true;
  }

  const Field& f_;
  Matrix g_;
  Matrix synd_{g_.field_ptr(), 0, 0};
  bool has_extra_ = false;
  std::optional<std::uint64_t> stop_below_;
  std::optional<std::uint64_t> best_;
  std::uint64_t work_ = 0;
  bool stopped_ = false;
};

// Incrementally maintained echelon basis of column vectors, with undo.
class ColumnBasis {
 public:
  ColumnBasis(const Field& f, std::size_t len) : f_(f), len_(len) {}

  // Adds v; returns whether it was independent of the current basis.
  bool push(std::vector<Elem> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Elem c = v[pivots_[b]];
      if (c == 0) continue;
      const Elem nc = f_.neg(c);
      for (std::size_t i = 0; i < len_; ++i) {
        if (basis_[b][i] != 0) v[i] = f_.add(v[i], f_.mul(nc, basis_[b][i]));
      }
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (nz == v.end()) {
      added_.push_back(false);
      return false;
    }
    const auto p = static_cast<std::size_t>(nz - v.begin());
    const Elem inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    added_.push_back(true);
    return true;
  }

  void pop() {
    if (added_.back()) {
      basis_.pop_back();
      pivots_.pop_back();
    }
    added_.pop_back();
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  const Field& f_;
  std::size_t len_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> added_;
};

// Support route.  A support S carries a searched vector iff the columns of
// the check matrix restricted to S admit more kernel than those of the
// check matrix stacked with the extra checks.
class SupportSearch {
 public:
  explicit SupportSearch(const WeightProblem& p)
      : f_(p.check.field()), h_(remove_dependent_rows(p.check)), n_(p.check.cols()) {
    full_ = h_;
    if (p.extra_checks && p.extra_checks->rows() > 0) {
      full_ = vstack(h_, *p.extra_checks);
      has_extra_ = true;
    }
    cols_h_.resize(n_);
    cols_full_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t r = 0; r < h_.rows(); ++r) cols_h_[j].push_back(h_(r, j));
      for (std::size_t r = 0; r < full_.rows(); ++r) cols_full_[j].push_back(full_(r, j));
    }
  }

  // Whether some support of exactly w columns qualifies.
  bool level(std::size_t w) {
    ColumnBasis bh(f_, h_.rows());
    ColumnBasis bf(f_, full_.rows());
    found_ = false;
    dfs(0, w, bh, bf);
    return found_;
  }

  std::uint64_t work() const { return work_; }
  std::size_t n() const { return n_; }

 private:
  void dfs(std::size_t from, std::size_t remaining, ColumnBasis& bh, ColumnBasis& bf) {
    if (found_) return;
    if (remaining == 0) {
      ++work_;
      const std::size_t size = depth_;
      const std::size_t ker_h = size - bh.rank();
      const std::size_t ker_full = has_extra_ ? size - bf.rank() : 0;
      if (ker_h > ker_full) found_ = true;
      return;
    }
    for (std::size_t j = from; j + remaining <= n_ && !found_; ++j) {
      bh.push(cols_h_[j]);
      if (has_extra_) bf.push(cols_full_[j]);
      ++depth_;
      dfs(j + 1, remaining - 1, bh, bf);
      --depth_;
      bh.pop();
      if (has_extra_) bf.pop();
    }
  }

  const Field& f_;
  Matrix h_;
  Matrix full_{h_};
  std::size_t n_;
  bool has_extra_ = false;
  std::vector<std::vector<Elem>> cols_h_;
  std::vector<std::vector<Elem>> cols_full_;
  std::size_t depth_ = 0;
  std::uint64_t work_ = 0;
  bool found_ = false;
};

// Information-set route for problems without extra checks.  The columns are
// split into disjoint information sets I_1, I_2, ... of ranks r_j, and the
// generator is put in systematic form on each.  After every message of
// weight <= w has been expanded in every form, an unseen codeword weighs at
// least sum_j max(0, w + 1 - (k - r_j)); the search ends once the lightest
// codeword seen is no heavier than that.
class InformationSetSearch {
 public:
  explicit InformationSetSearch(const WeightProblem& p) : f_(p.generator.field()) {
    const Matrix g = remove_dependent_rows(p.generator);
    k_ = g.rows();
    n_ = g.cols();
    std::vector<bool> used(n_, false);
    while (true) {
      Matrix work = g;
      std::size_t r = 0;
      for (std::size_t c = 0; c < n_ && r < k_; ++c) {
        if (used[c]) continue;
        std::size_t piv = r;
        while (piv < k_ && work(piv, c) == 0) ++piv;
        if (piv == k_) continue;
        if (piv != r) std::swap_ranges(work.row(piv).begin(), work.row(piv).end(), work.row(r).begin());
        const Elem inv = f_.inv(work(r, c));
        for (auto& x : work.row(r)) x = f_.mul(x, inv);
        for (std::size_t i = 0; i < k_; ++i) {
          if (i == r || work(i, c) == 0) continue;
          const Elem nc = f_.neg(work(i, c));
          for (std::size_t j = 0; j < n_; ++j) work(i, j) = f_.add(work(i, j), f_.mul(nc, work(r, j)));
        }
        used[c] = true;
        ++r;
      }
      if (r == 0) break;
      forms_.push_back(std::move(work));
      ranks_.push_back(r);
    }
  }

  WeightResult run(std::uint64_t max_work) {
    const std::uint64_t q = f_.order();
    std::vector<Elem> word(n_, 0);
    for (std::size_t w = 1; w <= k_; ++w) {
      std::uint64_t level_cost = binomial(k_, w);
      for (std::size_t i = 1; i < w; ++i) level_cost = level_cost > kSaturated / (q - 1) ? kSaturated : level_cost * (q - 1);
      for (std::size_t j = 0; j < forms_.size(); ++j) {
        const std::uint64_t needed = sat_add(work_, level_cost);
        if (needed > max_work) {
          throw BudgetExceeded(fmt::format("information-set search needs more than {} codewords", max_work), needed,
                               max_work);
        }
        std::fill(word.begin(), word.end(), 0);
        expand(forms_[j], 0, w, true, word);
      }
      std::uint64_t lower = 0;
      for (std::size_t r : ranks_) {
        if (w + 1 + r > k_) lower += w + 1 + r - k_;
      }
      if (best_ && *best_ <= lower) break;
    }
    return {best_, SearchRoute::kInformationSets, work_};
  }

  std::uint64_t work() const { return work_; }

 private:
  // All messages with `remaining` more nonzero digits at rows >= from; the
  // first nonzero digit of a message is fixed to 1.
  void expand(const Matrix& g, std::size_t from, std::size_t remaining, bool first, std::vector<Elem>& word) {
    if (remaining == 0) {
      ++work_;
      const std::uint64_t wt = weight(word);
      if (!best_ || wt < *best_) best_ = wt;
      return;
    }
    const Elem q = f_.order();
    for (std::size_t row = from; row + remaining <= k_; ++row) {
      for (Elem c = 1; c < (first ? 2 : q); ++c) {
        add_row(g, row, c, word);
        expand(g, row + 1, remaining - 1, false, word);
        add_row(g, row, f_.neg(c), word);
      }
    }
  }

  void add_row(const Matrix& g, std::size_t row, Elem c, std::vector<Elem>& word) const {
    const auto src = g.row(row);
    for (std::size_t i = 0; i < n_; ++i) {
      if (src[i] != 0) word[i] = f_.add(word[i], f_.mul(c, src[i]));
    }
  }

  const Field& f_;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<Matrix> forms_;
  std::vector<std::size_t> ranks_;
  std::optional<std::uint64_t> best_;
  std::uint64_t work_ = 0;
};

void validate(const WeightProblem& p) {
  if (p.generator.cols() != p.check.cols()) throw std::invalid_argument("generator and check lengths differ");
  if (p.extra_checks && p.extra_checks->cols() != p.check.cols()) {
    throw std::invalid_argument("extra checks have the wrong length");
  }
}

}  // namespace

std::uint64_t message_route_cost(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t pw = 1;
  for (std::size_t t = 0; t < k; ++t) {
    total = sat_add(total, pw);
    pw = pw > kSaturated / q ? kSaturated : pw * q;
  }
  return total;
}

std::uint64_t support_route_cost(std::size_t n, std::size_t w) {
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= w; ++s) total = sat_add(total, binomial(n, s));
  return total;
}

WeightResult exact_min_weight(const WeightProblem& p, const OracleBudget& budget) {
  validate(p);
  const std::uint64_t q = p.generator.field().order();
  const std::uint64_t k = rank(p.generator);
  const std::uint64_t msg_cost = message_route_cost(q, k);
  if (msg_cost <= budget.max_work) return MessageSearch(p, std::nullopt).run();

  std::uint64_t spent = 0;
  if (!p.extra_checks || p.extra_checks->rows() == 0) {
    InformationSetSearch isets(p);
    try {
      return isets.run(budget.max_work);
    } catch (const BudgetExceeded&) {
      spent = isets.work();
    }
  }

  SupportSearch search(p);
  for (std::size_t w = 1; w <= search.n(); ++w) {
    spent = sat_add(spent, binomial(search.n(), w));
    if (spent > budget.max_work) {
      throw BudgetExceeded(
          fmt::format("minimum weight search needs {} messages or more than {} supports", msg_cost, budget.max_work),
          std::min(msg_cost, spent), budget.max_work);
    }
    if (search.level(w)) return {w, SearchRoute::kSupports, search.work()};
  }
  return {std::nullopt, SearchRoute::kSupports, search.work()};
}

BoundCheck weight_at_least(const WeightProblem& p, std::uint64_t bound, const OracleBudget& budget) {
  validate(p);
  if (bound <= 1) return {true, std::nullopt, SearchRoute::kSupports, 0};
  const std::uint64_t q = p.generator.field().order();
  const std::uint64_t msg_cost = message_route_cost(q, rank(p.generator));
  const std::size_t n = p.check.cols();
  const std::size_t max_w = static_cast<std::size_t>(std::min<std::uint64_t>(bound - 1, n));
  const std::uint64_t sup_cost = support_route_cost(n, max_w);
  if (std::min(msg_cost, sup_cost) > budget.max_work) {
    throw BudgetExceeded(fmt::format("bound check needs {} messages or {} supports, budget {}", msg_cost, sup_cost,
                                     budget.max_work),
                         std::min(msg_cost, sup_cost), budget.max_work);
  }
  if (msg_cost <= sup_cost) {
    const WeightResult r = MessageSearch(p, bound).run();
    const bool holds = !r.weight || *r.weight >= bound;
    return {holds, holds ? std::nullopt : r.weight, SearchRoute::kMessages, r.work};
  }
  SupportSearch search(p);
  for (std::size_t w = 1; w <= max_w; ++w) {
    if (search.level(w)) return {false, w, SearchRoute::kSupports, search.work()};
  }
  return {true, std::nullopt, SearchRoute::kSupports, search.work()};
}

}  // namespace cosetkit
