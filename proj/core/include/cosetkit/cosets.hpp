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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cosetkit {

inline constexpr std::uint64_t kDefaultCosetCap = 1'000'000;

/// n = q^m - 1.  Throws std::overflow_error when it does not fit in 63 bits.
std::uint64_t coset_modulus(std::uint64_t q, std::uint32_t m);

/// A q-ary cyclotomic coset modulo n = q^m - 1.  `elements` is the orbit
/// s, sq, sq^2, ... reduced mod n, starting at the representative s (the
/// minimum element).
struct Coset {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint64_t x) const;

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.q == b.q && a.n == b.n && a.representative == b.representative;
  }
};

/// The coset of a mod n.  Negative a is reduced into [0, n).
Coset coset_of(std::uint64_t q, std::uint32_t m, std::int64_t a);

/// Every coset mod n, sorted by representative, with an element -> coset
/// lookup table.
class CosetPartition {
 public:
  CosetPartition(std::uint64_t q, std::uint32_t m, std::uint64_t cap = kDefaultCosetCap);

  std::uint64_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t n() const { return n_; }

  const std::vector<Coset>& cosets() const { return cosets_; }
  /// Position in cosets() of the coset containing x mod n.
  std::size_t index_of(std::uint64_t x) const { return index_[x % n_]; }
  const Coset& coset_containing(std::uint64_t x) const { return cosets_[index_of(x)]; }

 private:
  std::uint64_t q_;
  std::uint32_t m_;
  std::uint64_t n_;
  std::vector<Coset> cosets_;
  std::vector<std::uint32_t> index_;
};

/// all_cosets(q, m): the partition of {0, ..., n-1}.  Throws
/// std::length_error when n exceeds `cap`.
std::vector<Coset> all_cosets(std::uint64_t q, std::uint32_t m, std::uint64_t cap = kDefaultCosetCap);

enum class Parity { kEven, kOdd };

/// Common parity of the elements of c.  Only defined for odd q; throws
/// std::domain_error for even q and std::logic_error if the elements
/// disagree.
Parity parity_class(const Coset& c);

/// Minimum distance between two distinct elements of a coset.  Singletons
/// have no pairs, so `gap` is empty for them.
struct GapStat {
  std::uint64_t representative = 0;
  std::optional<std::uint64_t> gap;
};

GapStat gap_stat(const Coset& c);

/// The coset containing n - s.
Coset complementary(const Coset& c);

/// C_s (+) C_r-bar = C_[s + w] for the element w of c2bar with s + w = 0 mod n.
/// Throws std::invalid_argument when no such w exists.
Coset coset_oplus(const Coset& c1, const Coset& c2bar);

/// Largest T such that distinct x, y in [1, T] with q not dividing x, y
/// lie in distinct cosets: 2q^{m/2} for even m, otherwise
/// min(q^{ceil(m/2)} - 1, n - 1).
std::uint64_t disjointness_range(std::uint64_t q, std::uint32_t m);

/// Upper end of the range [1, q^{ceil(m/2)}] on which every coset has full
/// size m.
std::uint64_t full_size_range(std::uint64_t q, std::uint32_t m);

/// The coset of q^{m/2} + 1 for even m, which has m/2 elements.  Throws
/// std::invalid_argument for odd m.
Coset special_coset(std::uint64_t q, std::uint32_t m);

struct Ladder {
  std::vector<Coset> cosets;             // C_{q+1}, C_{2q+1}, ..., C_{cq+1}
  std::vector<std::uint64_t> last;       // (jq + 1) q^{m-1} mod n
};

/// True when cq + 1 < q^{ceil(m/2)} - 1.
bool ladder_admissible(std::uint64_t q, std::uint32_t m, std::uint64_t c);

/// The c cosets C_{jq+1}, j = 1..c.  Throws std::invalid_argument unless
/// ladder_admissible(q, m, c).
Ladder ladder_cosets(std::uint64_t q, std::uint32_t m, std::uint64_t c);

}  // namespace cosetkit
