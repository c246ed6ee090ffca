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

#ifndef SPINREL_BLOCK_REPORT_HPP_
#define SPINREL_BLOCK_REPORT_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinrel/param_poly.hpp"

namespace spinrel {

enum class Clause {
  kSpinParity,     // every term 0+
  kGrading,        // grades within {6, 4, 2}; no odd-grade corrections
  kLeadingParams,  // grade-6 coefficients parameter-free
  kUTermParams,    // grade-4 non-B terms: affine in f, no g1/g2, count 11
  kB3,             // one B3 term, constant non-zero coefficient
  kGrade2,         // {J1,J1} term and B1 term with their parameter shapes
  kTree,           // identically-vanishing trees
  kBlockMarker,    // term grade differs from its "## grade" marker
};

const char* clause_name(Clause c);

struct Violation {
  Clause clause;
  std::size_t term = 0;  // 1-based term index; 0 for corpus-wide findings
  std::size_t line = 0;  // source line if known
  std::string message;
};

struct GradeBlock {
  std::size_t terms = 0;
  std::size_t b_terms = 0;  // leaves from the abelian B-family
  std::array<int, kParamCount> max_degree{};  // over f, g1, g2
  int max_total_degree = 0;
};

struct BlockReport {
  std::size_t term_count = 0;
  std::map<int, GradeBlock, std::greater<>> grades;  // descending
  std::size_t u_terms_grade4 = 0;
  std::size_t b3_terms = 0;
  std::optional<ParamPoly> b3_coefficient;
  std::optional<ParamPoly> b1_coefficient;
  std::optional<ParamPoly> jj_coefficient;  // coefficient of acom(J1,J1;0)
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(Clause c) const;
};

struct CovarianceEntry {
  std::size_t term = 0;  // 1-based
  std::size_t line = 0;
  std::size_t words = 0;  // size of the m = 0 expansion
  bool plus_annihilates = false;
  bool minus_annihilates = false;

  bool ok() const { return plus_annihilates && minus_annihilates; }
};

struct CovarianceReport {
  std::vector<CovarianceEntry> entries;
  std::size_t failures = 0;
  // Word count of the full relation at m = 0; empty when it mixes spins.
  std::optional<std::size_t> relation_words;

  bool ok() const { return failures == 0; }
};

// Line-oriented human text.
std::string to_text(const BlockReport& report);
std::string to_text(const CovarianceReport& report);

// Structured JSON with a fixed field order.
std::string to_json(const BlockReport& report);
std::string to_json(const CovarianceReport& report);
std::string to_json(const BlockReport& block, const CovarianceReport& covariance);

}  // namespace spinrel

#endif  // SPINREL_BLOCK_REPORT_HPP_
