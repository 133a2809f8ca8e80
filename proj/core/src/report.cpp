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

#include "cosetkit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace cosetkit {
namespace {

using nlohmann::json;

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json row_json(const TableRow& r) {
  return {{"family", r.family}, {"q", r.q},         {"m", opt(r.m)},
          {"c", opt(r.c)},      {"i", opt(r.i)},    {"bracket", r.bracket},
          {"n", r.n},           {"k", r.k},         {"d", r.d},
          {"gamma", opt(r.gamma)}, {"status", std::string(row_status_name(r.status))}, {"detail", r.detail}};
}

TableRow row_from(const json& j) {
  TableRow r;
  r.family = j.at("family").get<std::string>();
  r.q = j.at("q").get<std::uint64_t>();
  r.m = opt_from<std::uint32_t>(j, "m");
  r.c = opt_from<std::uint64_t>(j, "c");
  r.i = opt_from<std::uint64_t>(j, "i");
  r.bracket = j.at("bracket").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.k = j.at("k").get<std::uint64_t>();
  r.d = j.at("d").get<std::uint64_t>();
  r.gamma = opt_from<std::uint64_t>(j, "gamma");
  r.status = row_status_from_name(j.at("status").get<std::string>());
  r.detail = j.value("detail", "");
  return r;
}

CheckStatus check_status_from(std::string_view s) {
  for (CheckStatus c : {CheckStatus::kPass, CheckStatus::kFail, CheckStatus::kSkipped}) {
    if (status_name(c) == s) return c;
  }
  throw std::invalid_argument(fmt::format("unknown check status '{}'", s));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string opt_text(const auto& v) { return v ? fmt::to_string(*v) : std::string(); }

// Pads every column to its widest cell.
std::string aligned(const std::vector<std::vector<std::string>>& table) {
  if (table.empty()) return {};
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string to_json(const Document& doc) {
  json j;
  j["tool_version"] = doc.tool_version;
  j["command"] = doc.command;
  j["rows"] = json::array();
  for (const auto& r : doc.rows) j["rows"].push_back(row_json(r));
  j["discrepancies"] = json::array();
  for (const auto& d : doc.discrepancies) {
    j["discrepancies"].push_back(
        {{"module", d.module}, {"check", d.check}, {"inputs", d.inputs}, {"expected", d.expected}, {"actual", d.actual}});
  }
  j["checks"] = json::array();
  for (const auto& c : doc.checks) {
    j["checks"].push_back({{"module", c.module},
                           {"check", c.check},
                           {"inputs", c.inputs},
                           {"status", std::string(status_name(c.status))},
                           {"detail", c.detail}});
  }
  j["warnings"] = doc.warnings;
  return j.dump(2) + '\n';
}

Document document_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    Document doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    for (const auto& r : j.at("rows")) doc.rows.push_back(row_from(r));
    for (const auto& d : j.at("discrepancies")) {
      doc.discrepancies.push_back({d.at("module").get<std::string>(), d.at("check").get<std::string>(),
                                   d.at("inputs").get<std::string>(), d.at("expected").get<std::string>(),
                                   d.at("actual").get<std::string>()});
    }
    if (j.contains("checks")) {
      for (const auto& c : j.at("checks")) {
        doc.checks.push_back({c.at("module").get<std::string>(), c.at("check").get<std::string>(),
                              c.at("inputs").get<std::string>(), check_status_from(c.at("status").get<std::string>()),
                              c.value("detail", "")});
      }
    }
    if (j.contains("warnings")) doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(fmt::format("malformed report: {}", e.what()));
  }
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "family,q,m,c,i,bracket,n,k,d,gamma,status,detail\r\n";
  for (const auto& r : rows) {
    const std::vector<std::string> f = {r.family,         fmt::to_string(r.q), opt_text(r.m),       opt_text(r.c),
                                        opt_text(r.i),    r.bracket,           fmt::to_string(r.n), fmt::to_string(r.k),
                                        fmt::to_string(r.d), opt_text(r.gamma), std::string(row_status_name(r.status)),
                                        r.detail};
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
    out += "\r\n";
  }
  return out;
}

std::string checks_to_csv(const std::vector<OracleCheck>& checks) {
  std::string out = "module,check,inputs,status,detail\r\n";
  for (const auto& c : checks) {
    out += fmt::format("{},{},{},{},{}\r\n", csv_field(c.module), csv_field(c.check), csv_field(c.inputs),
                       status_name(c.status), csv_field(c.detail));
  }
  return out;
}

std::string rows_to_text(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> t = {{"family", "params", "code", "status"}};
  for (const auto& r : rows) {
    std::string params = fmt::format("q={}", r.q);
    if (r.m) params += fmt::format(" m={}", *r.m);
    if (r.c) params += fmt::format(" c={}", *r.c);
    if (r.i) params += fmt::format(" i={}", *r.i);
    std::string status(row_status_name(r.status));
    if (!r.detail.empty()) status += " (" + r.detail + ")";
    t.push_back({r.family, params, r.bracket, status});
  }
  return aligned(t);
}

std::string checks_to_text(const std::vector<OracleCheck>& checks) {
  std::vector<std::vector<std::string>> t = {{"status", "module", "check", "inputs", "detail"}};
  for (const auto& c : checks) t.push_back({std::string(status_name(c.status)), c.module, c.check, c.inputs, c.detail});
  return aligned(t);
}

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(fmt::format("config line {}: expected key = value", number));
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(fmt::format("config line {}: empty key", number));
    if (!out.emplace(key, value).second) {
      throw std::invalid_argument(fmt::format("config line {}: repeated key '{}'", number, key));
    }
  }
  return out;
}

}  // namespace cosetkit
