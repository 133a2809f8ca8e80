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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cosetkit/oracle.hpp"
#include "cosetkit/tables.hpp"

namespace cosetkit {

inline constexpr std::string_view kToolVersion = "0.3.0";

/// Top-level output document shared by every command.
struct Document {
  std::string tool_version{kToolVersion};
  std::string command;
  std::vector<TableRow> rows;
  std::vector<Discrepancy> discrepancies;
  std::vector<OracleCheck> checks;
  std::vector<std::string> warnings;
};

std::string to_json(const Document& doc);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Document document_from_json(std::string_view text);

/// Table rows with a header naming the TableRow fields, RFC 4180 quoting.
std::string rows_to_csv(const std::vector<TableRow>& rows);
/// Oracle checks as module,check,inputs,status,detail.
std::string checks_to_csv(const std::vector<OracleCheck>& checks);
/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

/// Aligned plain-text rendering.
std::string rows_to_text(const std::vector<TableRow>& rows);
std::string checks_to_text(const std::vector<OracleCheck>& checks);

/// Parses "key = value" lines; '#' starts a comment, blank lines are
/// ignored.  Throws std::invalid_argument naming the line of a malformed
/// entry or a repeated key.
std::map<std::string, std::string> parse_config(std::string_view text);

}  // namespace cosetkit
