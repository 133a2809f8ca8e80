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
#include <limits>
#include <optional>

namespace cosetkit {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % n);
}

/// a mod n in [0, n) for signed a.
inline std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n) {
  const auto r = static_cast<std::int64_t>(static_cast<i128>(a) % static_cast<i128>(n));
  return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(n)) : static_cast<std::uint64_t>(r);
}

}  // namespace cosetkit
