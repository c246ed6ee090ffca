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

#ifndef SPINREL_GENERATOR_HPP_
#define SPINREL_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinrel {

enum class Parity : std::int8_t { kPlus = 1, kMinus = -1 };

inline Parity operator*(Parity a, Parity b) {
  return a == b ? Parity::kPlus : Parity::kMinus;
}
inline char parity_char(Parity p) { return p == Parity::kPlus ? '+' : '-'; }

// Which classical subalgebra a generator belongs to: the finitely generated
// part (J1, S1, S2, T2) or the abelian B-family.
enum class Family { kFinite, kAbelian };

using GeneratorId = std::uint16_t;

inline constexpr GeneratorId kJ1 = 0;
inline constexpr GeneratorId kS1 = 1;
inline constexpr GeneratorId kS2 = 2;
inline constexpr GeneratorId kT2 = 3;
// B^(2l+1) has id kBFirst + l.
inline constexpr GeneratorId kBFirst = 4;
inline constexpr int kMaxBIndex = 2001;  // largest accepted 2l+1

struct GeneratorInfo {
  int spin;
  Parity parity;
  int grade;  // hbar-grade of the rescaled generator
  Family family;
};

// Id of B^(2l+1); `odd_index` is 2l+1. Throws DomainError if even or too big.
GeneratorId b_generator(int odd_index);

GeneratorInfo generator_info(GeneratorId id);
std::string generator_name(GeneratorId id);
std::optional<GeneratorId> find_generator(std::string_view name);

// J1, S1, S2, T2, B1, B3.
const std::vector<GeneratorId>& builtin_generators();

}  // namespace spinrel

#endif  // SPINREL_GENERATOR_HPP_
