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

#include "spinrel/generator.hpp"

#include <cctype>

#include "spinrel/error.hpp"

namespace spinrel {

GeneratorId b_generator(int odd_index) {
  if (odd_index < 1 || odd_index % 2 == 0 || odd_index > kMaxBIndex)
    throw DomainError("B generator index must be odd and in [1, " +
                      std::to_string(kMaxBIndex) + "]");
  return static_cast<GeneratorId>(kBFirst + (odd_index - 1) / 2);
}

GeneratorInfo generator_info(GeneratorId id) {
  switch (id) {
    case kJ1:
      return {1, Parity::kPlus, 1, Family::kFinite};
    case kS1:
      return {1, Parity::kMinus, 2, Family::kFinite};
    case kS2:
      return {2, Parity::kMinus, 2, Family::kFinite};
    case kT2:
      return {2, Parity::kPlus, 2, Family::kFinite};
    default: {
      int l = id - kBFirst;
      return {0, Parity::kPlus, 2 * l + 2, Family::kAbelian};
    }
  }
}

std::string generator_name(GeneratorId id) {
  switch (id) {
    case kJ1:
      return "J1";
    case kS1:
      return "S1";
    case kS2:
      return "S2";
    case kT2:
      return "T2";
    default:
      return "B" + std::to_string(2 * (id - kBFirst) + 1);
  }
}

std::optional<GeneratorId> find_generator(std::string_view name) {
  if (name == "J1") return kJ1;
  if (name == "S1") return kS1;
  if (name == "S2") return kS2;
  if (name == "T2") return kT2;
  if (name.size() >= 2 && name[0] == 'B' && name[1] != '0') {
    int value = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      value = value * 10 + (c - '0');
      if (value > kMaxBIndex) return std::nullopt;
    }
    if (value % 2 == 1) return b_generator(value);
  }
  return std::nullopt;
}

const std::vector<GeneratorId>& builtin_generators() {
  static const std::vector<GeneratorId> ids = {kJ1, kS1, kS2, kT2,
                                               b_generator(1), b_generator(3)};
  return ids;
}

}  // namespace spinrel
