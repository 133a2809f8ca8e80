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

#include "cosetkit/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cosetkit/cosets.hpp"
#include "cosetkit/integer.hpp"
#include "cosetkit/weight.hpp"
#include "parallel.hpp"

namespace cosetkit {
namespace {

constexpr std::string_view kZeroBudget = "budget 0: oracle checks skipped";

// Collects checks for one input tuple and turns failures into
// discrepancy records.
class Recorder {
 public:
  Recorder(std::string module, std::string inputs) : module_(std::move(module)), inputs_(std::move(inputs)) {}

  void pass(std::string_view check, std::string detail = {}) {
    report_.checks.push_back({module_, std::string(check), inputs_, CheckStatus::kPass, std::move(detail)});
  }
  void skip(std::string_view check, std::string detail) {
    report_.checks.push_back({module_, std::string(check), inputs_, CheckStatus::kSkipped, std::move(detail)});
  }
  void fail(std::string_view check, std::string expected, std::string actual) {
    report_.checks.push_back(
        {module_, std::string(check), inputs_, CheckStatus::kFail, fmt::format("expected {}, got {}", expected, actual)});
    report_.discrepancies.push_back({module_, std::string(check), inputs_, std::move(expected), std::move(actual)});
  }
  // Pass when `ok`, otherwise fail with the given values.
  void expect(std::string_view check, bool ok, std::string expected, std::string actual, std::string detail = {}) {
    if (ok) {
      pass(check, std::move(detail));
    } else {
      fail(check, std::move(expected), std::move(actual));
    }
  }

  OracleReport take() { return std::move(report_); }

 private:
  std::string module_;
  std::string inputs_;
  OracleReport report_;
};

OracleReport merge(std::vector<OracleReport> parts) {
  OracleReport out;
  for (auto& p : parts) out.append(std::move(p));
  return out;
}

// ---- cosets ---------------------------------------------------------------

// Orbit labels computed directly from the definition: label[x] is the
// smallest element of the orbit of x under multiplication by q mod n.
std::vector<std::uint64_t> orbit_labels(std::uint64_t q, std::uint64_t n) {
  std::vector<std::uint64_t> label(n, n);
  for (std::uint64_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::uint64_t x = s;
    do {
      label[x] = s;
      x = mulmod(x, q, n);
    } while (x != s);
  }
  return label;
}

std::vector<std::uint64_t> orbit(std::uint64_t q, std::uint64_t n, std::uint64_t s) {
  std::vector<std::uint64_t> out;
  std::uint64_t x = s % n;
  do {
    out.push_back(x);
    x = mulmod(x, q, n);
  } while (x != s % n);
  return out;
}

std::optional<std::uint64_t> raw_gap(const std::vector<std::uint64_t>& elems) {
  if (elems.size() < 2) return std::nullopt;
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      best = std::min(best, elems[i] > elems[j] ? elems[i] - elems[j] : elems[j] - elems[i]);
    }
  }
  return best;
}

const std::vector<std::string_view> kCosetChecks = {
    "partition",          "parity-uniform",     "no-consecutive",       "gap-lower-bound",
    "gap-attained-at-c1", "complement-unique",  "complement-size",      "complement-oplus-zero",
    "complement-gap",     "complement-involution", "disjoint-range",    "min-representative",
    "full-size-range",    "ladder-disjoint",    "ladder-consecutive-last", "designed-distance-cap"};

OracleReport sweep_one(std::uint64_t q, std::uint32_t m, const OracleBudget& budget) {
  Recorder rec("cosets", fmt::format("q={} m={}", q, m));
  std::uint64_t n = 0;
  try {
    n = coset_modulus(q, m);
  } catch (const std::overflow_error&) {
    for (auto c : kCosetChecks) rec.skip(c, "modulus overflows 64 bits");
    return rec.take();
  }
  if (budget.max_work == 0 || n > budget.max_modulus) {
    const std::string why = budget.max_work == 0 ? std::string(kZeroBudget)
                                                 : fmt::format("n = {} exceeds the modulus budget {}", n, budget.max_modulus);
    for (auto c : kCosetChecks) rec.skip(c, why);
    return rec.take();
  }

  const auto label = orbit_labels(q, n);
  const auto cosets = all_cosets(q, m, budget.max_modulus);
  const std::uint64_t half_up = *checked_pow(q, (m + 1) / 2);

  // partition
  {
    bool ok = true;
    std::string bad;
    std::uint64_t total = 0;
    std::uint64_t prev_rep = 0;
    for (std::size_t i = 0; i < cosets.size() && ok; ++i) {
      const Coset& c = cosets[i];
      total += c.size();
      const auto raw = orbit(q, n, c.representative);
      ok = c.elements == raw && label[c.representative] == c.representative && m % c.size() == 0 &&
           (i == 0 || c.representative > prev_rep);
      prev_rep = c.representative;
      if (!ok) bad = fmt::format("C_{}", c.representative);
    }
    ok = ok && total == n;
    rec.expect("partition", ok, "sorted orbit partition of [0, n)", bad.empty() ? fmt::format("{} elements", total) : bad,
               fmt::format("{} cosets", cosets.size()));
  }

  // parity-uniform, no-consecutive
  if (q % 2 == 0) {
    rec.skip("parity-uniform", "hypothesis: q odd");
    rec.skip("no-consecutive", "hypothesis: q odd");
  } else {
    std::string bad;
    for (const Coset& c : cosets) {
      const bool even = c.elements.front() % 2 == 0;
      const bool uniform = std::all_of(c.elements.begin(), c.elements.end(), [&](auto x) { return (x % 2 == 0) == even; });
      bool agrees = false;
      try {
        agrees = (parity_class(c) == Parity::kEven) == even;
      } catch (const std::logic_error&) {
        agrees = false;
      }
      if (!uniform || !agrees) {
        bad = fmt::format("C_{}", c.representative);
        break;
      }
    }
    rec.expect("parity-uniform", bad.empty(), "uniform parity in every coset", bad);
    std::string pair;
    for (std::uint64_t x = 0; x + 1 < n && pair.empty(); ++x) {
      if (label[x] == label[x + 1]) pair = fmt::format("{} and {} share C_{}", x, x + 1, label[x]);
    }
    rec.expect("no-consecutive", pair.empty(), "no coset holds consecutive integers", pair);
  }

  // gap statistics
  if (q < 3) {
    rec.skip("gap-lower-bound", "hypothesis: q >= 3");
    rec.skip("gap-attained-at-c1", "hypothesis: q >= 3");
  } else {
    std::string bad;
    for (const Coset& c : cosets) {
      const auto raw = raw_gap(c.elements);
      if (gap_stat(c).gap != raw || (raw && *raw < q - 1)) {
        bad = fmt::format("C_{}: L = {}", c.representative, raw ? fmt::to_string(*raw) : "none");
        break;
      }
    }
    rec.expect("gap-lower-bound", bad.empty(), fmt::format("L >= {}", q - 1), bad);
    if (m < 2) {
      rec.skip("gap-attained-at-c1", "C_1 is a singleton for m = 1");
    } else {
      const auto l1 = raw_gap(orbit(q, n, 1));
      rec.expect("gap-attained-at-c1", l1 == q - 1, fmt::to_string(q - 1), l1 ? fmt::to_string(*l1) : "none");
    }
  }

  // complementary cosets
  {
    std::string unique_bad, size_bad, oplus_bad, gap_bad, inv_bad;
    for (const Coset& c : cosets) {
      const std::uint64_t target = label[(n - c.representative) % n];
      for (std::uint64_t x : c.elements) {
        if (label[(n - x) % n] != target && unique_bad.empty()) unique_bad = fmt::format("C_{}", c.representative);
      }
      const Coset comp = complementary(c);
      if (comp.representative != target && unique_bad.empty()) unique_bad = fmt::format("C_{}", c.representative);
      if (comp.size() != c.size() && size_bad.empty()) size_bad = fmt::format("C_{}", c.representative);
      const Coset z = coset_oplus(c, comp);
      if ((z.representative != 0 || z.size() != 1) && oplus_bad.empty()) {
        oplus_bad = fmt::format("C_{} gives C_{}", c.representative, z.representative);
      }
      if (raw_gap(c.elements) != raw_gap(orbit(q, n, target)) && gap_bad.empty()) {
        gap_bad = fmt::format("C_{} vs C_{}", c.representative, target);
      }
      if (!(complementary(comp) == c) && inv_bad.empty()) inv_bad = fmt::format("C_{}", c.representative);
    }
    rec.expect("complement-unique", unique_bad.empty(), "one complementary coset", unique_bad);
    rec.expect("complement-size", size_bad.empty(), "equal cardinality", size_bad);
    rec.expect("complement-oplus-zero", oplus_bad.empty(), "{0}", oplus_bad);
    rec.expect("complement-gap", gap_bad.empty(), "equal L", gap_bad);
    rec.expect("complement-involution", inv_bad.empty(), "involution", inv_bad);
  }

  // disjointness and minimal representatives
  {
    const std::uint64_t expected_t =
        m % 2 == 0 ? 2 * *checked_pow(q, m / 2) : std::min(half_up - 1, n - 1);
    const std::uint64_t t = disjointness_range(q, m);
    std::string bad = t == expected_t ? "" : fmt::format("range {}", t);
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 1; x <= t && bad.empty(); ++x) {
      if (x % q == 0) continue;
      if (!seen.insert(label[x % n]).second) bad = fmt::format("{} repeats C_{}", x, label[x % n]);
    }
    rec.expect("disjoint-range", bad.empty(), fmt::format("distinct cosets on [1, {}]", expected_t), bad);
    if (m % 2 != 0) {
      rec.skip("min-representative", "hypothesis: m even");
    } else {
      std::string rep_bad;
      for (std::uint64_t x = 1; x <= t && x < n && rep_bad.empty(); ++x) {
        if (x % q != 0 && label[x] != x) rep_bad = fmt::format("{} lies in C_{}", x, label[x]);
      }
      rec.expect("min-representative", rep_bad.empty(), fmt::format("minimal on [1, {}]", t), rep_bad);
    }
  }

  // full size on [1, q^ceil(m/2)]
  {
    std::string bad = full_size_range(q, m) == half_up ? "" : fmt::format("range {}", full_size_range(q, m));
    for (std::uint64_t x = 1; x <= half_up && bad.empty(); ++x) {
      const auto size = orbit(q, n, x % n).size();
      if (size != m) bad = fmt::format("|C_{}| = {}", x, size);
    }
    rec.expect("full-size-range", bad.empty(), fmt::format("|C_x| = {} on [1, {}]", m, half_up), bad);
  }

  // ladder of C_{q+1}, ..., C_{cq+1}
  {
    std::uint64_t max_c = 0;
    std::string disjoint_bad, last_bad;
    for (std::uint64_t c = 1; c * q + 1 + 1 < half_up; ++c) {
      max_c = c;
      if (!ladder_admissible(q, m, c)) {
        disjoint_bad = fmt::format("c = {} reported inadmissible", c);
        break;
      }
      const Ladder lad = ladder_cosets(q, m, c);
      std::set<std::uint64_t> labels;
      std::set<std::uint64_t> low;
      for (std::uint64_t j = 1; j <= c; ++j) low.insert(label[j % n]);
      std::vector<std::uint64_t> last;
      for (std::uint64_t j = 1; j <= c; ++j) {
        const std::uint64_t s = (j * q + 1) % n;
        const auto o = orbit(q, n, s);
        if (o.size() != m || !labels.insert(label[s]).second || low.count(label[s]) != 0 ||
            !(lad.cosets[j - 1] == coset_of(q, m, static_cast<std::int64_t>(s)))) {
          if (disjoint_bad.empty()) disjoint_bad = fmt::format("c = {}, C_{}", c, s);
        }
        last.push_back(mulmod(s, *checked_pow(q, m - 1), n));
      }
      std::vector<std::uint64_t> sorted = last;
      std::sort(sorted.begin(), sorted.end());
      bool consecutive = true;
      for (std::size_t i = 1; i < sorted.size(); ++i) consecutive = consecutive && sorted[i] == sorted[i - 1] + 1;
      if ((!consecutive || lad.last != last) && last_bad.empty()) {
        last_bad = fmt::format("c = {}: {}", c, fmt::join(last, ","));
      }
    }
    if (ladder_admissible(q, m, max_c + 1) && disjoint_bad.empty()) {
      disjoint_bad = fmt::format("c = {} reported admissible", max_c + 1);
    }
    if (max_c == 0) {
      rec.skip("ladder-disjoint", "no admissible c");
      rec.skip("ladder-consecutive-last", "no admissible c");
    } else {
      const std::string range = fmt::format("c = 1..{}", max_c);
      rec.expect("ladder-disjoint", disjoint_bad.empty(), "disjoint full-size cosets", disjoint_bad, range);
      rec.expect("ladder-consecutive-last", last_bad.empty(), "consecutive last elements", last_bad, range);
    }
  }

  // designed distance of C_{s+1} u ... u C_{s+c} with s + c <= q - 2
  if (q < 3 || m < 2) {
    rec.skip("designed-distance-cap", "hypothesis: q >= 3, m >= 2");
  } else {
    std::string bad;
    std::uint64_t cases = 0;
    for (std::uint64_t c = 1; c + 2 <= q && bad.empty(); ++c) {
      for (std::uint64_t s = 0; s + c + 2 <= q && bad.empty(); ++s) {
        std::vector<bool> in(n, false);
        for (std::uint64_t j = 1; j <= c; ++j) {
          for (auto x : orbit(q, n, s + j)) in[x] = true;
        }
        // Longest cyclic run, scanning twice around.
        std::uint64_t best = 0, run = 0;
        for (std::uint64_t i = 0; i < 2 * n; ++i) {
          run = in[i % n] ? run + 1 : 0;
          best = std::max(best, std::min(run, n));
        }
        std::vector<std::int64_t> reps;
        for (std::uint64_t j = 1; j <= c; ++j) reps.push_back(static_cast<std::int64_t>(s + j));
        const std::uint64_t delta = bch_bound(DefiningSet::from_exponents(q, m, reps));
        ++cases;
        if (delta != best + 1 || delta > c + 2 || (c == 1 && delta != 2)) {
          bad = fmt::format("s = {}, c = {}: delta = {}", s, c, delta);
        }
      }
    }
    if (cases == 0) {
      rec.skip("designed-distance-cap", "no (s, c) with 1 <= s + c <= q - 2");
    } else {
      rec.expect("designed-distance-cap", bad.empty(), "delta <= c + 2", bad, fmt::format("{} cases", cases));
    }
  }
  return rec.take();
}

// ---- cyclic ---------------------------------------------------------------

std::string code_label(const DefiningSet& z) {
  return fmt::format("Z reps {{{}}}", fmt::join(z.representatives(), ","));
}

OracleReport cyclic_one(std::uint64_t q, std::uint32_t m, const OracleBudget& budget) {
  Recorder rec("cyclic", fmt::format("q={} m={}", q, m));
  const std::vector<std::string_view> ids = {"gh-identity", "kernel-equivalence", "dimension", "distance-vs-bch",
                                             "dual-containing-agreement"};
  if (budget.max_work == 0) {
    for (auto c : ids) rec.skip(c, std::string(kZeroBudget));
    return rec.take();
  }
  const auto ext = make_extension(q, m);
  const std::uint64_t n = ext->n();
  const auto cosets = all_cosets(q, m);

  std::vector<DefiningSet> sets;
  for (const Coset& c : cosets) {
    sets.push_back(DefiningSet::from_exponents(q, m, {static_cast<std::int64_t>(c.representative)}));
  }
  for (std::uint64_t d = 2; d <= n; ++d) {
    std::vector<std::int64_t> run;
    for (std::uint64_t x = 1; x < d; ++x) run.push_back(static_cast<std::int64_t>(x));
    auto z = DefiningSet::from_exponents(q, m, run);
    if (std::find(sets.begin(), sets.end(), z) == sets.end()) sets.push_back(std::move(z));
  }

  std::string gh_bad, ker_bad, dim_bad, dist_bad;
  std::uint64_t verified = 0, skipped = 0;
  for (const DefiningSet& z : sets) {
    const CyclicCode code(ext, z);
    const Poly gh = code.generator() * check_polynomial(code);
    if (!(gh == Poly::x_pow_minus_one(ext->base_ptr(), n)) && gh_bad.empty()) gh_bad = code_label(z);

    const std::uint64_t k = code.dimension();
    if ((k != n - z.size() || static_cast<std::uint64_t>(code.generator().degree()) != z.size()) && dim_bad.empty()) {
      dim_bad = code_label(z);
    }
    const Matrix g = generator_matrix(code);
    const Matrix h = parity_check_matrix(code);
    const Matrix h2 = check_matrix_from_h(code);
    const bool ker_ok = rank(g) == k && rank(h) == n - k && rank(h2) == n - k && (h * g.transpose()).is_zero() &&
                        (h2 * g.transpose()).is_zero();
    if (!ker_ok && ker_bad.empty()) ker_bad = code_label(z);

    if (k == 0) continue;
    try {
      const BoundCheck b = weight_at_least({g, h, std::nullopt}, code.bch_bound(), budget);
      ++verified;
      if (!b.holds && dist_bad.empty()) {
        dist_bad = fmt::format("{}: weight {} < {}", code_label(z), b.counterexample.value_or(0), code.bch_bound());
      }
    } catch (const BudgetExceeded&) {
      ++skipped;
    }
  }
  const std::string count = fmt::format("{} codes", sets.size());
  rec.expect("gh-identity", gh_bad.empty(), "g h = x^n - 1", gh_bad, count);
  rec.expect("kernel-equivalence", ker_bad.empty(), "G H^T = 0 with complementary ranks", ker_bad, count);
  rec.expect("dimension", dim_bad.empty(), "k = n - |Z|", dim_bad, count);
  if (verified == 0) {
    rec.skip("distance-vs-bch", fmt::format("{} codes beyond budget", skipped));
  } else {
    rec.expect("distance-vs-bch", dist_bad.empty(), "d >= BCH bound", dist_bad,
               fmt::format("{} verified, {} beyond budget", verified, skipped));
  }

  // Every union of at most four cosets.
  std::string dc_bad;
  std::uint64_t unions = 0;
  const std::size_t nc = cosets.size();
  std::vector<std::size_t> pick;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (!dc_bad.empty()) return;
    if (!pick.empty()) {
      std::vector<std::int64_t> reps;
      for (auto i : pick) reps.push_back(static_cast<std::int64_t>(cosets[i].representative));
      const auto z = DefiningSet::from_exponents(q, m, reps);
      ++unions;
      if (dual_containing_by_negation(z) != dual_containing_by_complements(z)) dc_bad = code_label(z);
    }
    if (pick.size() == 4) return;
    for (std::size_t i = from; i < nc; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  rec.expect("dual-containing-agreement", dc_bad.empty(), "both criteria agree", dc_bad,
             fmt::format("{} unions", unions));
  return rec.take();
}

// ---- css ------------------------------------------------------------------

std::vector<CssParams> css_instances(std::uint64_t q) {
  std::vector<CssParams> out;
  if (q < 3 || !prime_power(q)) return out;
  out.push_back(family_good1(q));
  for (std::uint64_t c = 2; c < q; ++c) out.push_back(family_good2(q, c));
  for (std::uint64_t c = 2; c <= q; ++c) {
    try {
      if (coset_modulus(q, 4) <= 255) out.push_back(family_good3(q, 4, c));
    } catch (const std::invalid_argument&) {
    }
    try {
      if (coset_modulus(q, 3) <= 255) out.push_back(family_es(q, 3, c));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

std::string css_inputs(const CssParams& p) {
  return fmt::format("{} q={} m={} c={}", family_name(p.family), p.q, p.m, p.c.value_or(0));
}

OracleReport css_one(const CssParams& p, const OracleBudget& budget) {
  Recorder rec("css", css_inputs(p));
  const std::vector<std::string_view> ids = {"claims", "outer-distance", "inner-dual-distance", "true-distance"};
  if (budget.max_work == 0) {
    for (auto c : ids) rec.skip(c, std::string(kZeroBudget));
    return rec.take();
  }
  rec.expect("claims", p.matches_claims(), fmt::format("k = {}, d >= {}", p.claimed_k.value_or(0), p.claimed_d.value_or(0)),
             fmt::format("k = {}, D_lb = {}", p.k, p.d_lb), p.bracket());
  const std::uint64_t d = p.claimed_d.value_or(p.d_lb);
  auto distance = [&](std::string_view id, const CyclicCode& code) {
    try {
      const std::uint64_t w = min_distance_bruteforce(code, budget);
      rec.expect(id, w >= d, fmt::format(">= {}", d), fmt::to_string(w), fmt::format("d = {}", w));
    } catch (const BudgetExceeded& e) {
      rec.skip(id, fmt::format("needs {} work items, budget {}", e.needed(), e.allowed()));
    }
  };
  distance("outer-distance", p.outer);
  distance("inner-dual-distance", dual_code(p.inner));
  try {
    const auto td = css_true_distance(p, budget);
    if (!td) {
      rec.skip("true-distance", "degenerate pair");
    } else {
      rec.expect("true-distance", *td >= d, fmt::format(">= {}", d), fmt::to_string(*td), fmt::format("D = {}", *td));
    }
  } catch (const BudgetExceeded& e) {
    rec.skip("true-distance", fmt::format("needs {} work items, budget {}", e.needed(), e.allowed()));
  }
  return rec.take();
}

// ---- conv -----------------------------------------------------------------

std::vector<ConvCode> conv_instances(std::uint64_t q) {
  std::vector<ConvCode> out;
  if (q < 4 || !prime_power(q)) return out;
  out.push_back(family_mainconv(q));
  out.push_back(family_mainconv_b(q));
  for (std::uint64_t i = 1; i + 3 <= q; ++i) out.push_back(family_mainconv_c(q, i));
  for (std::uint64_t i = 1; i + 3 <= q; ++i) out.push_back(family_mainconv_d(q, i));
  out.push_back(family_mainconv_e(q));
  return out;
}

OracleReport conv_one(const ConvCode& c, std::size_t max_degree, const OracleBudget& budget) {
  Recorder rec("conv", c.i ? fmt::format("{} q={} i={}", c.family, c.q, *c.i) : fmt::format("{} q={}", c.family, c.q));
  const std::vector<std::string_view> ids = {"claims", "rank-split", "reduced-basic", "free-distance"};
  if (budget.max_work == 0) {
    for (auto id : ids) rec.skip(id, std::string(kZeroBudget));
    return rec.take();
  }
  rec.expect("claims", c.matches_claims(),
             fmt::format("k = {}, gamma = {}, dfree >= {}", c.claimed_k.value_or(0), c.claimed_gamma.value_or(0),
                         c.claimed_dfree.value_or(0)),
             fmt::format("k = {}, gamma = {}, bound {}", c.k, c.gamma, c.dfree_lb), c.bracket());
  const std::size_t r0 = rank(c.split.h0), r1 = rank(c.split.h1);
  rec.expect("rank-split", r0 >= r1, "rank H0 >= rank H1", fmt::format("{} < {}", r0, r1),
             fmt::format("rank H0 = {}, rank H1 = {}", r0, r1));
  const BasicReport br = check_reduced_basic(c.generator);
  rec.expect("reduced-basic", br.passes(), "reduced and basic", fmt::format("{}", fmt::join(br.failures(), "; ")));
  FreeDistanceOptions opt;
  opt.budget = budget;
  opt.allow_sampling = false;
  try {
    const auto r = free_distance_upper(c, max_degree, opt);
    const std::uint64_t claim = c.claimed_dfree.value_or(c.dfree_lb);
    if (!r.weight) {
      rec.skip("free-distance", fmt::format("no nonzero sequence of degree <= {}", max_degree));
    } else {
      rec.expect("free-distance", *r.weight >= claim, fmt::format(">= {}", claim), fmt::to_string(*r.weight),
                 fmt::format("lightest degree <= {} sequence: {}", max_degree, *r.weight));
    }
  } catch (const BudgetExceeded& e) {
    rec.skip("free-distance", fmt::format("needs {} work items, budget {}", e.needed(), e.allowed()));
  }
  return rec.take();
}

}  // namespace

std::uint64_t min_distance_bruteforce(const CyclicCode& code, const OracleBudget& budget) {
  if (code.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
  const WeightResult r = exact_min_weight({generator_matrix(code), parity_check_matrix(code), std::nullopt}, budget);
  return *r.weight;
}

bool verify_distance_at_least(const CyclicCode& code, std::uint64_t bound, const OracleBudget& budget) {
  return weight_at_least({generator_matrix(code), parity_check_matrix(code), std::nullopt}, bound, budget).holds;
}

std::optional<std::uint64_t> css_true_distance(const CssParams& code, const OracleBudget& budget) {
  const Matrix g1 = generator_matrix(code.outer);
  const Matrix h1 = parity_check_matrix(code.outer);
  const Matrix g2 = generator_matrix(code.inner);
  const Matrix h2 = parity_check_matrix(code.inner);
  // C1 \ C2: words of C1 failing a check of C2.
  const auto a = exact_min_weight({g1, h1, h2}, budget);
  // C2^perp \ C1^perp: H2 spans C2^perp, G2 checks it, G1 checks C1^perp.
  const auto b = exact_min_weight({h2, g2, g1}, budget);
  if (!a.weight) return b.weight;
  if (!b.weight) return a.weight;
  return std::min(*a.weight, *b.weight);
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "skipped";
}

std::size_t OracleReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

bool OracleReport::ok() const { return count(CheckStatus::kFail) == 0 && discrepancies.empty(); }

void OracleReport::append(OracleReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& d : other.discrepancies) discrepancies.push_back(std::move(d));
  for (auto& w : other.warnings) {
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(std::move(w));
  }
}

OracleReport coset_theorem_sweep(std::span<const std::uint64_t> q_list, std::span<const std::uint32_t> m_list,
                                 const OracleBudget& budget, unsigned jobs) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  for (auto q : q_list) {
    if (!prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
    for (auto m : m_list) pairs.emplace_back(q, m);
  }
  auto out = merge(detail::parallel_map<OracleReport>(pairs.size(), jobs, [&](std::size_t i) {
    return sweep_one(pairs[i].first, pairs[i].second, budget);
  }));
  if (budget.max_work == 0) out.warnings.emplace_back(kZeroBudget);
  return out;
}

OracleReport cyclic_identity_sweep(std::span<const std::uint64_t> q_list, std::uint64_t max_n,
                                   const OracleBudget& budget, unsigned jobs) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  for (auto q : q_list) {
    if (!prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
    for (std::uint32_t m = 1;; ++m) {
      const auto n = checked_pow(q, m);
      if (!n || *n - 1 > max_n) break;
      if (*n - 1 >= 2) pairs.emplace_back(q, m);
    }
  }
  auto out = merge(detail::parallel_map<OracleReport>(pairs.size(), jobs, [&](std::size_t i) {
    return cyclic_one(pairs[i].first, pairs[i].second, budget);
  }));
  if (budget.max_work == 0) out.warnings.emplace_back(kZeroBudget);
  return out;
}

OracleReport css_family_sweep(std::span<const std::uint64_t> q_list, const OracleBudget& budget, unsigned jobs) {
  std::vector<CssParams> codes;
  for (auto q : q_list) {
    for (auto& p : css_instances(q)) codes.push_back(std::move(p));
  }
  auto out = merge(detail::parallel_map<OracleReport>(codes.size(), jobs, [&](std::size_t i) {
    return css_one(codes[i], budget);
  }));
  for (const auto& p : codes) {
    for (const auto& w : p.warnings) out.warnings.push_back(w);
  }
  if (budget.max_work == 0) out.warnings.emplace_back(kZeroBudget);
  return out;
}

OracleReport conv_family_sweep(std::span<const std::uint64_t> q_list, std::size_t max_degree,
                               const OracleBudget& budget, unsigned jobs) {
  std::vector<ConvCode> codes;
  for (auto q : q_list) {
    for (auto& c : conv_instances(q)) codes.push_back(std::move(c));
  }
  auto out = merge(detail::parallel_map<OracleReport>(codes.size(), jobs, [&](std::size_t i) {
    return conv_one(codes[i], max_degree, budget);
  }));
  if (budget.max_work == 0) out.warnings.emplace_back(kZeroBudget);
  return out;
}

}  // namespace cosetkit
