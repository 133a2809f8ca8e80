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

#include "cosetkit/tables.hpp"

#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "parallel.hpp"

namespace cosetkit {
namespace {

struct RowOutcome {
  TableRow row;
  std::vector<Discrepancy> discrepancies;
};

std::string row_inputs(const TableRow& r) {
  std::string s = fmt::format("{} q={}", r.family, r.q);
  if (r.m) s += fmt::format(" m={}", *r.m);
  if (r.c) s += fmt::format(" c={}", *r.c);
  if (r.i) s += fmt::format(" i={}", *r.i);
  return s;
}

void mark_mismatch(RowOutcome& out, std::string check, std::string expected, std::string actual) {
  out.row.status = RowStatus::kMismatch;
  out.row.detail = fmt::format("{}: expected {}, got {}", check, expected, actual);
  out.discrepancies.push_back({"tables", std::move(check), row_inputs(out.row), std::move(expected), std::move(actual)});
}

RowOutcome css_row(const CssParams& p, const TableOptions& opt) {
  RowOutcome out;
  TableRow& r = out.row;
  r.family = std::string(family_name(p.family));
  r.q = p.q;
  r.m = p.m;
  r.c = p.c;
  r.bracket = p.bracket();
  r.n = p.n;
  r.k = p.k;
  r.d = p.reported_distance();
  if (!p.matches_claims()) {
    mark_mismatch(out, "claims", fmt::format("k = {}, d >= {}", p.claimed_k.value_or(0), p.claimed_d.value_or(0)),
                  fmt::format("k = {}, D_lb = {}", p.k, p.d_lb));
    return out;
  }
  r.status = RowStatus::kFormulaMatch;
  if (!opt.verify) return out;
  if (opt.budget.max_work == 0) {
    r.status = RowStatus::kOracleSkipped;
    r.detail = "budget 0";
    return out;
  }
  const std::uint64_t want = r.d;
  try {
    const std::uint64_t d1 = min_distance_bruteforce(p.outer, opt.budget);
    const std::uint64_t d2 = min_distance_bruteforce(dual_code(p.inner), opt.budget);
    if (d1 < want || d2 < want) {
      mark_mismatch(out, "distance", fmt::format("d(C1), d(C2^perp) >= {}", want), fmt::format("{}, {}", d1, d2));
    } else {
      r.status = RowStatus::kOracleVerified;
      r.detail = fmt::format("d(C1) = {}, d(C2^perp) = {}", d1, d2);
    }
  } catch (const BudgetExceeded& e) {
    r.status = RowStatus::kOracleSkipped;
    r.detail = fmt::format("needs {} work items, budget {}", e.needed(), e.allowed());
  }
  return out;
}

RowOutcome conv_row(const ConvCode& c, const TableOptions& opt) {
  RowOutcome out;
  TableRow& r = out.row;
  r.family = c.family;
  r.q = c.q;
  r.i = c.i;
  r.bracket = c.bracket();
  r.n = c.n;
  r.k = c.k;
  r.d = c.reported_dfree();
  r.gamma = c.gamma;
  if (!c.matches_claims()) {
    mark_mismatch(out, "claims",
                  fmt::format("k = {}, gamma = {}, dfree >= {}", c.claimed_k.value_or(0), c.claimed_gamma.value_or(0),
                              c.claimed_dfree.value_or(0)),
                  fmt::format("k = {}, gamma = {}, bound {}", c.k, c.gamma, c.dfree_lb));
    return out;
  }
  r.status = RowStatus::kFormulaMatch;
  if (!opt.verify) return out;
  if (opt.budget.max_work == 0) {
    r.status = RowStatus::kOracleSkipped;
    r.detail = "budget 0";
    return out;
  }
  FreeDistanceOptions fo;
  fo.budget = opt.budget;
  fo.allow_sampling = false;
  try {
    const auto res = free_distance_upper(c, 1, fo);
    if (res.weight && *res.weight < r.d) {
      mark_mismatch(out, "free-distance", fmt::format(">= {}", r.d), fmt::to_string(*res.weight));
    } else {
      r.status = RowStatus::kOracleVerified;
      r.detail = res.weight ? fmt::format("lightest degree <= 1 sequence: {}", *res.weight) : "no degree <= 1 sequence";
    }
  } catch (const BudgetExceeded& e) {
    r.status = RowStatus::kOracleSkipped;
    r.detail = fmt::format("needs {} work items, budget {}", e.needed(), e.allowed());
  }
  return out;
}

using RowBuilder = std::function<RowOutcome(const TableOptions&)>;

RowBuilder css(std::function<CssParams()> make) {
  return [make](const TableOptions& o) { return css_row(make(), o); };
}

RowBuilder conv(std::function<ConvCode()> make) {
  return [make](const TableOptions& o) { return conv_row(make(), o); };
}

std::vector<RowBuilder> table1() {
  std::vector<RowBuilder> b;
  auto good2 = [&](std::uint64_t q, std::initializer_list<std::uint64_t> cs) {
    for (auto c : cs) b.push_back(css([q, c] { return family_good2(q, c); }));
  };
  auto good1 = [&](std::uint64_t q) { b.push_back(css([q] { return family_good1(q); })); };
  good2(5, {3});
  good1(5);
  good2(7, {3, 4, 5, 6});
  good1(7);
  good2(8, {3, 4, 5, 6, 7});
  good2(9, {8});
  good1(9);
  good2(11, {3, 5, 7, 9});
  good1(11);
  good2(13, {3, 5, 7, 9, 11});
  good1(13);
  return b;
}

std::vector<RowBuilder> table2() {
  std::vector<RowBuilder> b;
  auto good3 = [&](std::uint64_t q, std::uint32_t m, std::initializer_list<std::uint64_t> cs) {
    for (auto c : cs) b.push_back(css([q, m, c] { return family_good3(q, m, c); }));
  };
  auto es = [&](std::uint64_t q, std::uint32_t m, std::initializer_list<std::uint64_t> cs) {
    for (auto c : cs) b.push_back(css([q, m, c] { return family_es(q, m, c); }));
  };
  good3(4, 2, {3, 4});
  good3(5, 2, {3, 4, 5});
  good3(8, 2, {3, 4, 5, 6, 7, 8});
  good3(4, 4, {3, 4});
  good3(5, 4, {3, 4, 5});
  es(5, 3, {5});
  es(7, 3, {5, 6, 7});
  es(4, 4, {3, 4});
  es(5, 4, {3, 4, 5});
  return b;
}

std::vector<RowBuilder> table3() {
  std::vector<RowBuilder> b;
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) b.push_back(conv([q] { return family_mainconv(q); }));
  for (std::uint64_t q : {4, 5, 11, 13, 16}) b.push_back(conv([q] { return family_mainconv_b(q); }));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> c_rows = {
      {4, 1}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {16, 1}, {16, 2}, {16, 5}, {16, 7}, {16, 10}, {16, 13}};
  for (auto [q, i] : c_rows) b.push_back(conv([q, i] { return family_mainconv_c(q, i); }));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> d_rows = {{4, 1}, {5, 1}, {5, 2}, {7, 1},
                                                                       {7, 2}, {7, 3}, {7, 4}};
  for (auto [q, i] : d_rows) b.push_back(conv([q, i] { return family_mainconv_d(q, i); }));
  return b;
}

TableResult single(RowOutcome o, const TableOptions& options) {
  TableResult out;
  out.rows.push_back(std::move(o.row));
  out.discrepancies = std::move(o.discrepancies);
  if (options.verify && options.budget.max_work == 0) out.warnings.emplace_back("budget 0: oracle checks skipped");
  return out;
}

}  // namespace

TableResult css_table_row(const CssParams& code, const TableOptions& options) {
  TableResult out = single(css_row(code, options), options);
  for (const auto& w : code.warnings) out.warnings.push_back(w);
  return out;
}

TableResult conv_table_row(const ConvCode& code, const TableOptions& options) {
  return single(conv_row(code, options), options);
}

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::kFormulaMatch:
      return "formula-match";
    case RowStatus::kOracleVerified:
      return "oracle-verified";
    case RowStatus::kOracleSkipped:
      return "oracle-skipped";
    case RowStatus::kMismatch:
      return "mismatch";
  }
  return "mismatch";
}

RowStatus row_status_from_name(std::string_view name) {
  for (RowStatus s : {RowStatus::kFormulaMatch, RowStatus::kOracleVerified, RowStatus::kOracleSkipped,
                      RowStatus::kMismatch}) {
    if (row_status_name(s) == name) return s;
  }
  throw std::invalid_argument(fmt::format("unknown row status '{}'", name));
}

TableResult make_table(int which, const TableOptions& options) {
  std::vector<RowBuilder> builders;
  switch (which) {
    case 1:
      builders = table1();
      break;
    case 2:
      builders = table2();
      break;
    case 3:
      builders = table3();
      break;
    default:
      throw std::invalid_argument(fmt::format("no table {}; choose 1, 2 or 3", which));
  }
  const auto outcomes = detail::parallel_map<RowOutcome>(builders.size(), options.jobs,
                                                         [&](std::size_t i) { return builders[i](options); });
  TableResult out;
  for (const auto& o : outcomes) {
    out.rows.push_back(o.row);
    for (const auto& d : o.discrepancies) out.discrepancies.push_back(d);
  }
  if (options.verify && options.budget.max_work == 0) out.warnings.emplace_back("budget 0: oracle checks skipped");
  return out;
}

}  // namespace cosetkit
