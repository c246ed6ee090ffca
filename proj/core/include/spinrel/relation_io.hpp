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

#ifndef SPINREL_RELATION_IO_HPP_
#define SPINREL_RELATION_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinrel/algebra.hpp"
#include "spinrel/block_report.hpp"

namespace spinrel {

struct CorpusTerm {
  Term term;
  // Grade announced by the enclosing "## grade N" marker, if any.
  std::optional<int> block_grade;
  // Trailing "# ..." text on the term line, without the '#'.
  std::string note;
  // 1-based source line; 0 for terms built in memory.
  std::size_t line = 0;

  bool operator==(const CorpusTerm& other) const {
    return term.coefficient == other.term.coefficient &&
           term.tree == other.term.tree && block_grade == other.block_grade &&
           note == other.note;
  }
};

struct RelationCorpus {
  std::vector<CorpusTerm> terms;

  Relation relation() const;
  bool operator==(const RelationCorpus&) const = default;
};

// Relation file grammar, one item per line:
//
//   line   := blank | comment | marker | term [ '#' note ]
//   marker := '## grade' digits
//   term   := coefficient '*' tree
//
// Throws ParseError with the source position on malformed input or on a tree
// whose coupling labels break the triangle rule.
RelationCorpus parse_corpus(std::string_view text);
RelationCorpus load_corpus(const std::string& path);

// Canonical text: markers where the block grade changes, one term per line,
// multi-term coefficients parenthesized, notes preserved. Comments are not.
std::string serialize(const RelationCorpus& corpus);

// Structural checks on the relation; every finding goes into the report.
BlockReport validate(const RelationCorpus& corpus, int threads = 0);

// Expands every term at m = 0 and checks that J+ and J- annihilate it; also
// records whether the whole relation expands to a non-zero element.
CovarianceReport covariance_check(const RelationCorpus& corpus, int threads = 0);

}  // namespace spinrel

#endif  // SPINREL_RELATION_IO_HPP_
