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

#ifndef SPINREL_TESTS_MUTATIONS_HPP_
#define SPINREL_TESTS_MUTATIONS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "spinrel/block_report.hpp"

namespace spinrel::testing {

// A single textual edit of the shipped corpus that must trip one clause.
struct Mutation {
  std::string name;
  Clause clause;
  std::string find;     // empty: append `replace` at the end
  std::string replace;
};

inline const std::vector<Mutation>& corpus_mutations() {
  static const std::vector<Mutation> all = {
      {"odd-grade-term", Clause::kGrading, "",
       "\n## grade 5\n1 * acom(acom(T2,J1;1),com(T2,J1;1);0)\n"},
      {"grade-8-term", Clause::kGrading, "",
       "\n## grade 8\n1 * acom(acom(T2,T2;0),acom(T2,T2;0);0)\n"},
      {"spin-one-root", Clause::kSpinParity,
       "com(com(com(T2,S1;2),S1;1),com(S2,S1;1);0)  # line 1",
       "com(com(com(T2,S1;2),S1;1),com(S2,S1;1);1)  # line 1"},
      {"parity-odd-root", Clause::kSpinParity, "acom(com(com(T2,S1;2),S2;0),acom(J1,J1;0);0)",
       "acom(com(com(T2,S1;2),S2;0),acom(S1,J1;1);1)"},
      {"leading-depends-on-f", Clause::kLeadingParams, "-1729/5*i*sqrt(2) * ",
       "(f - 1729/5)*i*sqrt(2) * "},
      {"u-term-depends-on-g1", Clause::kUTermParams, "-(1854884/5 + 4662*f)*",
       "-(1854884/5 + 4662*f + g1)*"},
      {"u-term-quadratic-in-f", Clause::kUTermParams, "(16180048/25 - 38094/5*f)*",
       "(16180048/25 - 38094/5*f^2)*"},
      {"b3-depends-on-g2", Clause::kB3, "-50176 * B3", "-50176*g2 * B3"},
      {"b3-removed", Clause::kB3, "-50176 * B3  # line 72\n", ""},
      {"b1-g1-swapped-for-g2", Clause::kGrade2, "50176*g1) * B1", "50176*g2) * B1"},
      {"b1-loses-f", Clause::kGrade2, "+ 2747136/5*f + 50176*g1) * B1", "+ 50176*g1) * B1"},
      {"jj-loses-g2", Clause::kGrade2, " - 75264*g2)", ")"},
      {"jj-gains-g1", Clause::kGrade2, " - 75264*g2)", " - 75264*g2 + g1)"},
  };
  return all;
}

inline std::string apply_mutation(std::string text, const Mutation& m) {
  if (m.find.empty()) return text + m.replace;
  auto at = text.find(m.find);
  if (at == std::string::npos) throw std::runtime_error("mutation anchor missing: " + m.name);
  text.replace(at, m.find.size(), m.replace);
  return text;
}

}  // namespace spinrel::testing

#endif  // SPINREL_TESTS_MUTATIONS_HPP_
