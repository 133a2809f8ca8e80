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

// cosetkit command-line tool: coset listings, single codes, family members,
// table regeneration and oracle sweeps.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cosetkit/conv.hpp"
#include "cosetkit/cosets.hpp"
#include "cosetkit/css.hpp"
#include "cosetkit/cyclic.hpp"
#include "cosetkit/field.hpp"
#include "cosetkit/oracle.hpp"
#include "cosetkit/report.hpp"
#include "cosetkit/tables.hpp"

namespace ck = cosetkit;
using json = nlohmann::json;

namespace {

constexpr int kExitDiscrepancy = 1;
constexpr int kExitError = 2;

struct Settings {
  std::string format;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t budget = ck::OracleBudget{}.max_work;
  std::uint64_t seed = 1;
  std::uint64_t max_modulus = ck::OracleBudget{}.max_modulus;
  std::string config;

  // cosets
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  bool properties = false;

  // code
  std::vector<std::int64_t> exponents;
  bool dual = false;
  bool distance = false;

  // css / conv / table
  std::string family;
  std::uint32_t family_m = 0;
  std::uint64_t c = 0;
  std::uint64_t i = 0;
  bool verify = false;
  bool true_distance = false;
  bool basic = false;
  std::size_t free_degree = 0;
  int table = 0;

  // verify
  std::string scope;
  std::uint64_t qmax = 13;
  std::uint32_t mmax = 4;
  std::vector<std::uint64_t> q_list;
  std::uint64_t max_n = 80;
  std::size_t degree = 1;
  bool list = false;

  ck::OracleBudget oracle_budget() const {
    ck::OracleBudget b;
    b.max_work = budget;
    b.max_modulus = max_modulus;
    b.seed = seed;
    return b;
  }
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::string join(const std::vector<std::uint64_t>& v, std::string_view sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

std::string effective_format(const Settings& s) {
  if (!s.format.empty()) return s.format;
  return s.out.empty() ? "text" : "json";
}

void emit(const Settings& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", s.out));
  f << text;
  if (!f) throw std::runtime_error(fmt::format("write to '{}' failed", s.out));
}

// Per (module, check) counts in first-seen order.
std::string check_summary(const std::vector<ck::OracleCheck>& checks) {
  struct Counts {
    std::string module, check;
    std::size_t pass = 0, fail = 0, skipped = 0;
  };
  std::vector<Counts> rows;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& c : checks) {
    auto [it, fresh] = index.try_emplace({c.module, c.check}, rows.size());
    if (fresh) rows.push_back({c.module, c.check});
    auto& r = rows[it->second];
    if (c.status == ck::CheckStatus::kPass) ++r.pass;
    if (c.status == ck::CheckStatus::kFail) ++r.fail;
    if (c.status == ck::CheckStatus::kSkipped) ++r.skipped;
  }
  std::size_t wm = 6, wc = 5;
  for (const auto& r : rows) {
    wm = std::max(wm, r.module.size());
    wc = std::max(wc, r.check.size());
  }
  std::string out = fmt::format("{:<{}}  {:<{}}  {:>6}  {:>6}  {:>7}\n", "module", wm, "check", wc, "pass", "fail",
                                "skipped");
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}  {:<{}}  {:>6}  {:>6}  {:>7}\n", r.module, wm, r.check, wc, r.pass, r.fail, r.skipped);
  }
  return out;
}

std::string document_text(const ck::Document& doc, bool list_all) {
  std::string out;
  if (!doc.rows.empty()) out += ck::rows_to_text(doc.rows);
  if (!doc.checks.empty()) {
    if (!out.empty()) out += '\n';
    if (list_all) {
      out += ck::checks_to_text(doc.checks);
    } else {
      out += check_summary(doc.checks);
      std::vector<ck::OracleCheck> failing;
      for (const auto& c : doc.checks) {
        if (c.status == ck::CheckStatus::kFail) failing.push_back(c);
      }
      if (!failing.empty()) out += '\n' + ck::checks_to_text(failing);
    }
  }
  for (const auto& d : doc.discrepancies) {
    out += fmt::format("discrepancy: {} {} [{}]: expected {}, actual {}\n", d.module, d.check, d.inputs, d.expected,
                       d.actual);
  }
  for (const auto& w : doc.warnings) out += fmt::format("warning: {}\n", w);
  return out;
}

void emit_document(const Settings& s, const ck::Document& doc) {
  const std::string f = effective_format(s);
  if (f == "json") {
    emit(s, ck::to_json(doc) + "\n");
  } else if (f == "csv") {
    emit(s, doc.rows.empty() && !doc.checks.empty() ? ck::checks_to_csv(doc.checks) : ck::rows_to_csv(doc.rows));
  } else {
    emit(s, document_text(doc, s.list));
  }
}

// JSON output for commands whose payload is not a table row: the common
// document fields plus one extra key.
void emit_json_with(const Settings& s, const ck::Document& doc, const std::string& key, json payload) {
  json j = json::parse(ck::to_json(doc));
  j[key] = std::move(payload);
  emit(s, j.dump(2) + "\n");
}

int exit_status(const ck::Document& doc) { return doc.discrepancies.empty() ? 0 : kExitDiscrepancy; }

// ---- cosets ----------------------------------------------------------------

int run_cosets(const Settings& s, const std::string& command) {
  const auto cosets = ck::all_cosets(s.q, s.m, s.max_modulus);
  ck::Document doc;
  doc.command = command;
  const std::string f = effective_format(s);

  struct Info {
    const ck::Coset* coset;
    std::string gap, complement, parity;
  };
  std::vector<Info> infos;
  for (const auto& c : cosets) {
    Info info{&c, "", "", ""};
    if (s.properties) {
      const auto g = ck::gap_stat(c);
      info.gap = g.gap ? std::to_string(*g.gap) : "-";
      info.complement = std::to_string(ck::complementary(c).representative);
      // Parity classes are defined for odd q only.
      if (s.q % 2 == 1) {
        info.parity = ck::parity_class(c) == ck::Parity::kEven ? "even" : "odd";
      } else {
        info.parity = "-";
      }
    }
    infos.push_back(std::move(info));
  }

  if (f == "json") {
    json arr = json::array();
    for (const auto& info : infos) {
      json e = {{"representative", info.coset->representative},
                {"size", info.coset->size()},
                {"elements", info.coset->elements}};
      if (s.properties) {
        e["gap"] = info.gap == "-" ? json(nullptr) : json(std::stoull(info.gap));
        e["complement"] = std::stoull(info.complement);
        e["parity"] = info.parity == "-" ? json(nullptr) : json(info.parity);
      }
      arr.push_back(std::move(e));
    }
    emit_json_with(s, doc, "cosets", std::move(arr));
  } else if (f == "csv") {
    std::string out = s.properties ? "representative,size,elements,gap,complement,parity\r\n"
                                   : "representative,size,elements\r\n";
    for (const auto& info : infos) {
      out += fmt::format("{},{},{}", info.coset->representative, info.coset->size(),
                         ck::csv_field(join(info.coset->elements, " ")));
      if (s.properties) out += fmt::format(",{},{},{}", info.gap, info.complement, info.parity);
      out += "\r\n";
    }
    emit(s, out);
  } else {
    std::string out = fmt::format("n = {}, cosets: {}\n", ck::coset_modulus(s.q, s.m), cosets.size());
    for (const auto& info : infos) {
      out += fmt::format("C_{} = {{{}}}", info.coset->representative, join(info.coset->elements, ", "));
      if (s.properties) {
        out += fmt::format("  size={} gap={} complement=C_{} parity={}", info.coset->size(), info.gap,
                           info.complement, info.parity);
      }
      out += '\n';
    }
    emit(s, out);
  }
  return 0;
}

// ---- code ------------------------------------------------------------------

int run_code(const Settings& s, const std::string& command) {
  ck::CyclicCode code = ck::code_from_cosets(s.q, s.m, s.exponents);
  if (s.dual) code = ck::dual_code(code);
  const auto& z = code.defining_set();

  std::vector<std::pair<std::string, std::string>> fields = {
      {"q", std::to_string(code.q())},
      {"m", std::to_string(code.m())},
      {"n", std::to_string(code.n())},
      {"k", std::to_string(code.dimension())},
      {"defining_set_size", std::to_string(z.size())},
      {"coset_representatives", join(z.representatives(), " ")},
      {"bch_bound", std::to_string(code.bch_bound())},
      {"generator", code.generator().to_string()},
      {"contains_dual", ck::contains_dual(code) ? "true" : "false"},
  };
  ck::Document doc;
  doc.command = command;
  if (s.distance) {
    try {
      const auto d = ck::min_distance_bruteforce(code, s.oracle_budget());
      fields.emplace_back("min_distance", std::to_string(d));
    } catch (const ck::BudgetExceeded& e) {
      fields.emplace_back("min_distance", "-");
      doc.warnings.push_back(
          fmt::format("minimum distance skipped: needs {} work items, budget {}", e.needed(), e.allowed()));
    } catch (const std::domain_error& e) {
      fields.emplace_back("min_distance", "-");
      doc.warnings.emplace_back(e.what());
    }
  }

  const std::string f = effective_format(s);
  if (f == "json") {
    json obj = json::object();
    for (const auto& [k, v] : fields) {
      const bool numeric = !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char ch) { return std::isdigit(ch); });
      if (k == "contains_dual") {
        obj[k] = v == "true";
      } else if (k == "coset_representatives") {
        obj[k] = z.representatives();
      } else if (numeric) {
        obj[k] = std::stoull(v);
      } else if (v == "-") {
        obj[k] = nullptr;
      } else {
        obj[k] = v;
      }
    }
    emit_json_with(s, doc, "code", std::move(obj));
  } else if (f == "csv") {
    std::string out = "field,value\r\n";
    for (const auto& [k, v] : fields) out += fmt::format("{},{}\r\n", k, ck::csv_field(v));
    emit(s, out);
  } else {
    std::size_t w = 0;
    for (const auto& kv : fields) w = std::max(w, kv.first.size());
    std::string out;
    for (const auto& [k, v] : fields) out += fmt::format("{:<{}}  {}\n", k, w, v);
    for (const auto& warn : doc.warnings) out += fmt::format("warning: {}\n", warn);
    emit(s, out);
  }
  return 0;
}

// ---- css / conv ------------------------------------------------------------

ck::TableOptions table_options(const Settings& s) {
  ck::TableOptions o;
  o.verify = s.verify;
  o.budget = s.oracle_budget();
  o.jobs = s.jobs;
  return o;
}

void absorb(ck::Document& doc, ck::TableResult r) {
  for (auto& row : r.rows) doc.rows.push_back(std::move(row));
  for (auto& d : r.discrepancies) doc.discrepancies.push_back(std::move(d));
  for (auto& w : r.warnings) doc.warnings.push_back(std::move(w));
}

void require_set(std::uint64_t v, std::string_view flag, std::string_view family) {
  if (v == 0) throw std::invalid_argument(fmt::format("family {} needs {}", family, flag));
}

ck::CssParams make_css(const Settings& s) {
  const std::string fam = lower(s.family);
  if (fam == "good1") return ck::family_good1(s.q);
  if (fam == "good2") {
    require_set(s.c, "--c", fam);
    return ck::family_good2(s.q, s.c);
  }
  if (fam == "good3" || fam == "es") {
    require_set(s.family_m, "--m", fam);
    require_set(s.c, "--c", fam);
    return fam == "good3" ? ck::family_good3(s.q, s.family_m, s.c) : ck::family_es(s.q, s.family_m, s.c);
  }
  throw std::invalid_argument(fmt::format("unknown CSS family '{}'; choose good1, good2, good3 or es", s.family));
}

int run_css(const Settings& s, const std::string& command) {
  const ck::CssParams p = make_css(s);
  ck::Document doc;
  doc.command = command;
  absorb(doc, ck::css_table_row(p, table_options(s)));
  if (s.true_distance) {
    const auto& row = doc.rows.front();
    std::string inputs = fmt::format("{} q={} m={}", row.family, p.q, p.m);
    if (p.c) inputs += fmt::format(" c={}", *p.c);
    ck::OracleCheck chk{"css", "true-distance", inputs, ck::CheckStatus::kSkipped, ""};
    try {
      const auto td = ck::css_true_distance(p, s.oracle_budget());
      if (!td) {
        chk.detail = "degenerate pair";
      } else {
        const std::uint64_t want = p.reported_distance();
        chk.status = *td >= want ? ck::CheckStatus::kPass : ck::CheckStatus::kFail;
        chk.detail = fmt::format("D = {}", *td);
        if (*td < want) doc.discrepancies.push_back({"css", "true-distance", inputs, fmt::format(">= {}", want),
                                                     std::to_string(*td)});
      }
    } catch (const ck::BudgetExceeded& e) {
      chk.detail = fmt::format("needs {} work items, budget {}", e.needed(), e.allowed());
    }
    doc.checks.push_back(std::move(chk));
  }
  Settings listed = s;
  listed.list = true;
  emit_document(listed, doc);
  return exit_status(doc);
}

ck::ConvCode make_conv(const Settings& s) {
  const std::string fam = lower(s.family);
  if (fam == "mainconv") return ck::family_mainconv(s.q);
  if (fam == "mainconvb") return ck::family_mainconv_b(s.q);
  if (fam == "mainconvc" || fam == "mainconvd") {
    require_set(s.i, "--i", s.family);
    return fam == "mainconvc" ? ck::family_mainconv_c(s.q, s.i) : ck::family_mainconv_d(s.q, s.i);
  }
  if (fam == "mainconve") return ck::family_mainconv_e(s.q);
  throw std::invalid_argument(
      fmt::format("unknown convolutional family '{}'; choose mainconv, mainconvB, mainconvC, mainconvD or mainconvE",
                  s.family));
}

int run_conv(const Settings& s, const std::string& command) {
  const ck::ConvCode code = make_conv(s);
  ck::Document doc;
  doc.command = command;
  absorb(doc, ck::conv_table_row(code, table_options(s)));
  const std::string inputs = code.i ? fmt::format("{} q={} i={}", code.family, code.q, *code.i)
                                    : fmt::format("{} q={}", code.family, code.q);
  if (s.basic) {
    const auto br = ck::check_reduced_basic(code.generator);
    ck::OracleCheck chk{"conv", "reduced-basic", inputs, br.passes() ? ck::CheckStatus::kPass : ck::CheckStatus::kFail,
                        ""};
    const auto failures = br.failures();
    for (std::size_t k = 0; k < failures.size(); ++k) chk.detail += (k ? "; " : "") + failures[k];
    if (!br.passes()) doc.discrepancies.push_back({"conv", "reduced-basic", inputs, "reduced and basic", chk.detail});
    doc.checks.push_back(std::move(chk));
  }
  if (s.free_degree > 0) {
    ck::FreeDistanceOptions fo;
    fo.budget = s.oracle_budget();
    ck::OracleCheck chk{"conv", "free-distance", inputs, ck::CheckStatus::kSkipped, ""};
    try {
      const auto res = ck::free_distance_upper(code, s.free_degree, fo);
      const std::uint64_t want = code.reported_dfree();
      if (!res.weight) {
        chk.detail = fmt::format("no nonzero sequence of degree <= {}", s.free_degree);
      } else if (!res.exact && *res.weight >= want) {
        chk.detail = fmt::format("sampled {} sequences, lightest {}", res.work, *res.weight);
      } else {
        chk.status = *res.weight >= want ? ck::CheckStatus::kPass : ck::CheckStatus::kFail;
        chk.detail = fmt::format("lightest degree <= {} sequence: {}{}", s.free_degree, *res.weight,
                                 res.exact ? "" : " (sampled)");
        if (*res.weight < want) {
          doc.discrepancies.push_back({"conv", "free-distance", inputs, fmt::format(">= {}", want),
                                       std::to_string(*res.weight)});
        }
      }
    } catch (const ck::BudgetExceeded& e) {
      chk.detail = fmt::format("needs {} work items, budget {}", e.needed(), e.allowed());
    }
    doc.checks.push_back(std::move(chk));
  }
  Settings listed = s;
  listed.list = true;
  emit_document(listed, doc);
  return exit_status(doc);
}

// ---- table / verify --------------------------------------------------------

int run_table(const Settings& s, const std::string& command) {
  ck::Document doc;
  doc.command = command;
  absorb(doc, ck::make_table(s.table, table_options(s)));
  emit_document(s, doc);
  return exit_status(doc);
}

std::vector<std::uint64_t> prime_powers_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q) {
    if (ck::prime_power(q)) out.push_back(q);
  }
  return out;
}

int run_verify(const Settings& s, const std::string& command) {
  static const std::vector<std::string> kScopes = {"cosets", "cyclic", "css", "conv"};
  std::vector<std::string> scopes;
  if (s.scope == "all") {
    scopes = kScopes;
  } else {
    scopes = {s.scope};
  }
  const ck::OracleBudget budget = s.oracle_budget();
  const bool explicit_q = !s.q_list.empty();
  ck::OracleReport report;
  for (const auto& scope : scopes) {
    if (scope == "cosets") {
      const auto qs = explicit_q ? s.q_list : prime_powers_between(2, s.qmax);
      std::vector<std::uint32_t> ms;
      for (std::uint32_t m = 2; m <= s.mmax; ++m) ms.push_back(m);
      report.append(ck::coset_theorem_sweep(qs, ms, budget, s.jobs));
    } else if (scope == "cyclic") {
      const auto qs = explicit_q ? s.q_list : prime_powers_between(2, s.qmax);
      report.append(ck::cyclic_identity_sweep(qs, s.max_n, budget, s.jobs));
    } else if (scope == "css") {
      const auto qs = explicit_q ? s.q_list : std::vector<std::uint64_t>{3, 4, 5};
      report.append(ck::css_family_sweep(qs, budget, s.jobs));
    } else if (scope == "conv") {
      const auto qs = explicit_q ? s.q_list : std::vector<std::uint64_t>{4};
      report.append(ck::conv_family_sweep(qs, s.degree, budget, s.jobs));
    }
  }
  // Each sweep reports a zero budget on its own; keep one copy.
  std::vector<std::string> warnings;
  for (auto& w : report.warnings) {
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(std::move(w));
  }
  ck::Document doc;
  doc.command = command;
  doc.checks = std::move(report.checks);
  doc.discrepancies = std::move(report.discrepancies);
  doc.warnings = std::move(warnings);
  emit_document(s, doc);
  return exit_status(doc);
}

// ---- config ----------------------------------------------------------------

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument(fmt::format("config key '{}': '{}' is not a non-negative integer", key, v));
  }
}

// Applies config-file values to every setting whose flag was not given.
void apply_config(Settings& s, const std::map<std::string, CLI::Option*>& flags) {
  std::ifstream f(s.config);
  if (!f) throw std::runtime_error(fmt::format("cannot read config file '{}'", s.config));
  std::stringstream buf;
  buf << f.rdbuf();
  const auto cfg = ck::parse_config(buf.str());
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters = {
      {"format", [&](const auto&, const auto& v) { s.format = v; }},
      {"out", [&](const auto&, const auto& v) { s.out = v; }},
      {"jobs", [&](const auto& k, const auto& v) { s.jobs = static_cast<unsigned>(to_u64(k, v)); }},
      {"budget", [&](const auto& k, const auto& v) { s.budget = to_u64(k, v); }},
      {"seed", [&](const auto& k, const auto& v) { s.seed = to_u64(k, v); }},
      {"max_modulus", [&](const auto& k, const auto& v) { s.max_modulus = to_u64(k, v); }},
      {"qmax", [&](const auto& k, const auto& v) { s.qmax = to_u64(k, v); }},
      {"mmax", [&](const auto& k, const auto& v) { s.mmax = static_cast<std::uint32_t>(to_u64(k, v)); }},
      {"max_n", [&](const auto& k, const auto& v) { s.max_n = to_u64(k, v); }},
      {"degree", [&](const auto& k, const auto& v) { s.degree = to_u64(k, v); }},
  };
  for (const auto& [key, value] : cfg) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument(fmt::format("unknown config key '{}'", key));
    const auto flag = flags.find(key);
    if (flag != flags.end() && flag->second != nullptr && flag->second->count() > 0) continue;
    it->second(key, value);
  }
  if (s.format != "" && s.format != "text" && s.format != "json" && s.format != "csv") {
    throw std::invalid_argument(fmt::format("config key 'format': unknown format '{}'", s.format));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cosetkit: cyclotomic cosets, BCH codes, CSS and convolutional code families"};
  app.set_version_flag("--version", std::string(ck::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::map<std::string, CLI::Option*> flags;
  flags["format"] = app.add_option("--format", s.format, "Output format: text, json or csv (default text, json with --out)")
                        ->expected(0, 1)
                        ->check(CLI::IsMember({"", "text", "json", "csv"}));
  flags["out"] = app.add_option("--out", s.out, "Write output to FILE instead of stdout");
  flags["jobs"] = app.add_option("--jobs", s.jobs, "Worker threads for sweeps and tables")->check(CLI::PositiveNumber);
  flags["budget"] = app.add_option("--budget", s.budget, "Work items a single exhaustive search may visit (0 skips)");
  flags["seed"] = app.add_option("--seed", s.seed, "Seed for sampled searches");
  flags["max_modulus"] = app.add_option("--max-modulus", s.max_modulus, "Largest modulus n accepted for coset work");
  app.add_option("--config", s.config, "key=value file supplying defaults; flags take precedence");

  auto* cosets = app.add_subcommand("cosets", "List the q-cyclotomic cosets modulo q^m - 1");
  cosets->add_option("q", s.q, "Field size")->required();
  cosets->add_option("m", s.m, "Extension degree")->required();
  cosets->add_flag("--properties", s.properties, "Show gap, complementary coset and parity class");

  auto* code = app.add_subcommand("code", "Build the cyclic code whose defining set is the union of given cosets");
  code->add_option("q", s.q, "Field size")->required();
  code->add_option("m", s.m, "Extension degree")->required();
  code->add_option("exponents", s.exponents, "Exponents whose cosets form the defining set");
  code->add_flag("--dual", s.dual, "Describe the Euclidean dual instead");
  code->add_flag("--distance", s.distance, "Compute the exact minimum distance within the budget");

  auto* css = app.add_subcommand("css", "Parameters of a CSS family member");
  css->add_option("family", s.family, "good1, good2, good3 or es")->required();
  css->add_option("q", s.q, "Field size")->required();
  css->add_option("--m", s.family_m, "Extension degree (good3, es)");
  css->add_option("--c", s.c, "Designed distance parameter (good2, good3, es)");
  css->add_flag("--verify", s.verify, "Confirm the outer and inner-dual distances by exhaustive search");
  css->add_flag("--true-distance", s.true_distance, "Compute the exact quantum distance within the budget");

  auto* conv = app.add_subcommand("conv", "Parameters of a convolutional family member");
  conv->add_option("family", s.family, "mainconv, mainconvB, mainconvC, mainconvD or mainconvE")->required();
  conv->add_option("q", s.q, "Field size")->required();
  conv->add_option("--i", s.i, "Family index (mainconvC, mainconvD)");
  conv->add_flag("--verify", s.verify, "Search degree <= 1 sequences for a light codeword");
  conv->add_flag("--basic", s.basic, "Check that the generator matrix is reduced and basic");
  conv->add_option("--free-distance", s.free_degree, "Search sequences up to this input degree");

  auto* table = app.add_subcommand("table", "Regenerate a parameter table from the family constructors");
  table->add_option("which", s.table, "Table number")->required()->check(CLI::Range(1, 3));
  table->add_flag("--verify", s.verify, "Run the exhaustive distance checks on every row");

  auto* verify = app.add_subcommand("verify", "Run oracle sweeps; exit status 1 on any discrepancy");
  verify->add_option("scope", s.scope, "cosets, cyclic, css, conv or all")
      ->required()
      ->check(CLI::IsMember({"cosets", "cyclic", "css", "conv", "all"}));
  flags["qmax"] = verify->add_option("--qmax", s.qmax, "Largest field size swept by cosets and cyclic (default 13)");
  flags["mmax"] = verify->add_option("--mmax", s.mmax, "Largest extension degree swept by cosets (default 4)");
  verify->add_option("--q", s.q_list, "Explicit field sizes, overriding the defaults")->delimiter(',');
  flags["max_n"] = verify->add_option("--max-n", s.max_n, "Largest code length for the cyclic sweep (default 80)");
  flags["degree"] = verify->add_option("--degree", s.degree, "Input degree for free-distance searches (default 1)");
  verify->add_flag("--list", s.list, "List every check instead of a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  std::string command;
  for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);

  try {
    if (!s.config.empty()) apply_config(s, flags);
    if (s.jobs == 0) s.jobs = std::max(1u, std::thread::hardware_concurrency());
    if (*cosets) return run_cosets(s, command);
    if (*code) return run_code(s, command);
    if (*css) return run_css(s, command);
    if (*conv) return run_conv(s, command);
    if (*table) return run_table(s, command);
    if (*verify) return run_verify(s, command);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
