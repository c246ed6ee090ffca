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

#ifndef SPINREL_ALGEBRA_HPP_
#define SPINREL_ALGEBRA_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "spinrel/bracket_tree.hpp"
#include "spinrel/param_poly.hpp"
#include "spinrel/word_poly.hpp"

namespace spinrel {

struct SpinParity {
  int j = 0;
  Parity parity = Parity::kPlus;

  bool operator==(const SpinParity&) const = default;
  // "0+", "2-".
  std::string to_string() const;
};

inline int grade(const BracketTree& t) { return t.grade(); }
inline SpinParity spin_parity(const BracketTree& t) {
  return {t.spin(), t.parity()};
}

// Projection of the coupled bracket tree onto its m component, expanded in
// the free associative algebra. Throws DomainError if |m| > spin(t) or the
// tree has a triangle violation. Identically-vanishing nodes give zero.
WordPoly expand(const BracketTree& t, int m);

enum class SpinOp { kJ3, kJplus, kJminus };

std::optional<SpinOp> parse_spin_op(std::string_view name);
const char* spin_op_name(SpinOp op);

// so(3) derivation action on the free algebra (Leibniz rule over letters):
//   J3 g_{j,m} = m g_{j,m},  J+- g_{j,m} = sqrt((j -+ m)(j +- m + 1)) g_{j,m+-1}.
WordPoly act(SpinOp op, const WordPoly& w);

// coefficient * tree.
struct Term {
  ParamPoly coefficient;
  BracketTree tree;
};

// Terms asserted to sum to zero.
struct Relation {
  std::vector<Term> terms;
};

// sum_k coefficient_k * expand(tree_k, m). Terms are expanded in parallel and
// summed in order. Throws DomainError when the trees do not share one
// spin-parity. threads = 0 uses the default.
WordPoly expand_relation(const Relation& r, int m, int threads = 0);

}  // namespace spinrel

#endif  // SPINREL_ALGEBRA_HPP_
