// Copyright 2026 The spinrel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINREL_WIGNER_HPP_
#define SPINREL_WIGNER_HPP_

#include <compare>
#include <map>
#include <vector>

#include "spinrel/rad_num.hpp"

namespace spinrel {

inline constexpr int kDefaultMaxCgSpin = 8;

// Integer spin and projection, |m| <= j.
struct SpinLabel {
  int j = 0;
  int m = 0;
  bool valid() const { return j >= 0 && m >= -j && m <= j; }
  auto operator<=>(const SpinLabel&) const = default;
};

// Indices of <j1 m1; j2 m2 | j m>.
struct CgKey {
  int j1 = 0, m1 = 0, j2 = 0, m2 = 0, j = 0, m = 0;

  bool projections_in_range() const;
  bool triangle() const;
  auto operator<=>(const CgKey&) const = default;
};

// Condon-Shortley Clebsch-Gordan coefficient from the closed-form Racah sum.
// Zero when m != m1 + m2, the triangle rule fails, or a projection is out of
// range. Negative spins throw DomainError.
RadNum cg(const CgKey& key);

// Same coefficient built independently: stretched state, lowering operator
// and Gram-Schmidt against higher multiplets. Slow; meant as an oracle.
RadNum cg_ladder(const CgKey& key);

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).
RadNum three_j(int j1, int m1, int j2, int m2, int j3, int m3);

// All coefficients for a fixed (j1, j2), with O(1) lookup.
class CgTable {
 public:
  CgTable(int j1, int j2);

  int j1() const { return j1_; }
  int j2() const { return j2_; }

  // <j1 m1; j2 m2 | j m>; exact zero outside the selection rules.
  const RadNum& get(int m1, int m2, int j, int m) const;

  // Every non-zero coefficient, keyed in CgKey order.
  std::map<CgKey, RadNum> nonzero_entries() const;

 private:
  std::size_t index(int m1, int m2, int j) const;

  int j1_;
  int j2_;
  std::vector<RadNum> values_;
};

// Memoized table for (j1, j2). Safe to call concurrently; the first caller for
// a pair computes it and later callers share the result. Throws LimitError if
// j1 or j2 exceeds max_spin.
const CgTable& cg_table(int j1, int j2, int max_spin = kDefaultMaxCgSpin);

// Ladder-built table for (j1, j2), not memoized.
std::map<CgKey, RadNum> cg_table_ladder(int j1, int j2);

}  // namespace spinrel

#endif  // SPINREL_WIGNER_HPP_
