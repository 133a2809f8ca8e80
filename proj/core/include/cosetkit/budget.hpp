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
#include <stdexcept>
#include <string>

namespace cosetkit {

/// Limits for the exhaustive searches.  Results produced within these limits
/// are exact; requests beyond them are refused with BudgetExceeded.
struct OracleBudget {
  /// Work items (codewords or column subsets) a single search may visit.
  std::uint64_t max_work = 10'000'000;
  /// Largest modulus n for coset sweeps.
  std::uint64_t max_modulus = 1'000'000;
  std::uint64_t seed = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t needed, std::uint64_t allowed)
      : std::runtime_error(what), needed_(needed), allowed_(allowed) {}

  /// Estimated work, saturating at UINT64_MAX.
  std::uint64_t needed() const { return needed_; }
  std::uint64_t allowed() const { return allowed_; }

 private:
  std::uint64_t needed_;
  std::uint64_t allowed_;
};

}  // namespace cosetkit
