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
#include <string>
#include <string_view>
#include <vector>

#include "cosetkit/budget.hpp"
#include "cosetkit/conv.hpp"
#include "cosetkit/css.hpp"
#include "cosetkit/oracle.hpp"

namespace cosetkit {

enum class RowStatus { kFormulaMatch, kOracleVerified, kOracleSkipped, kMismatch };

/// "formula-match", "oracle-verified", "oracle-skipped", "mismatch".
std::string_view row_status_name(RowStatus s);
/// Throws std::invalid_argument for unknown names.
RowStatus row_status_from_name(std::string_view name);

/// One regenerated table entry.  `d` is the distance bound for CSS rows and
/// the free-distance bound for convolutional rows; `gamma` is set only for
/// the latter.
struct TableRow {
  std::string family;
  std::uint64_t q = 0;
  std::optional<std::uint32_t> m;
  std::optional<std::uint64_t> c;
  std::optional<std::uint64_t> i;
  std::string bracket;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::optional<std::uint64_t> gamma;
  RowStatus status = RowStatus::kFormulaMatch;
  std::string detail;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableOptions {
  /// Run the brute-force distance checks on every row.
  bool verify = false;
  OracleBudget budget{};
  unsigned jobs = 1;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> warnings;
};

/// Rebuilds table 1 (good1/good2 at m = 2), table 2 (good3 and es) or
/// table 3 (convolutional families) from the family constructors.  Rows
/// appear in a fixed order regardless of `jobs`.  Throws
/// std::invalid_argument for other table numbers.
TableResult make_table(int which, const TableOptions& options = {});

/// A single row for an arbitrary CSS or convolutional family member, with the
/// same claim check and optional oracle verification as the tables.
TableResult css_table_row(const CssParams& code, const TableOptions& options = {});
TableResult conv_table_row(const ConvCode& code, const TableOptions& options = {});

}  // namespace cosetkit
