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

#ifndef SPINREL_HALL_BASIS_HPP_
#define SPINREL_HALL_BASIS_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "spinrel/algebra.hpp"
#include "spinrel/bracket_tree.hpp"

namespace spinrel {

// Rank of a generator in the monomial order: T2 > S2 > S1 > J1 > B's, and
// among B's the higher index first. Smaller rank means greater generator.
int generator_rank(GeneratorId id);

// Length of the longest uninterrupted iterated commutator
// com(...com(com(g, g'), g'')..., g^(n)) with generator leaves, anywhere in
// the tree. A lone generator counts 1.
int chainlen(const BracketTree& t);

// Occurrence counts ordered by generator_rank, as (rank, count) pairs.
std::vector<std::pair<int, int>> occurrence_counts(const BracketTree& t);

// Monomial order: occurrence counts (more of a higher-ranked generator is
// greater), then chainlen, then COM above ACOM, then left subtree, right
// subtree and coupling label recursively. Equal only for identical trees.
std::strong_ordering compare(const BracketTree& a, const BracketTree& b);

struct SpinParitySlice {
  int grade = 1;
  int spin = 0;
  Parity parity = Parity::kPlus;
  std::vector<GeneratorId> alphabet;  // empty: builtin_generators()
};

struct EnumerateOptions {
  int max_leaves = 4;
  bool pure_commutators = false;
  std::size_t max_trees = 2'000'000;  // across all intermediate pools
  int threads = 0;
};

// All valid, not identically vanishing trees in the slice with at most
// max_leaves leaves, sorted descending by compare. Throws LimitError when
// the pools outgrow max_trees.
std::vector<BracketTree> enumerate(const SpinParitySlice& slice,
                                   const EnumerateOptions& options = {});

struct RankSelection {
  std::size_t rank = 0;
  std::vector<std::size_t> independent;  // indices into the candidate list
  std::size_t coordinates = 0;           // distinct words in the expansions
};

// Free-envelope rank: expands every candidate at its top component m = j and
// measures linear independence over word coordinates. `independent` is the
// greedy in-order subset. Coefficients must be parameter-free. Throws
// DomainError when candidates do not share one spin-parity.
RankSelection rank_select(const std::vector<Term>& candidates, int threads = 0);
RankSelection rank_select(const std::vector<BracketTree>& candidates, int threads = 0);

// Dimension of the degree-n part of the free Lie algebra on k letters.
mpz_class witt(long k, long n);

// Plain binary bracket over letters 0..k-1 with no spin labels.
class PlainTree {
 public:
  static PlainTree letter(int a);
  static PlainTree bracket(const PlainTree& l, const PlainTree& r);

  bool is_letter() const { return node_->letter >= 0; }
  int letter_index() const { return node_->letter; }
  const PlainTree& left() const { return node_->children[0]; }
  const PlainTree& right() const { return node_->children[1]; }
  int degree() const { return node_->degree; }
  std::string to_string() const;

 private:
  struct Node {
    int letter = -1;
    int degree = 1;
    std::vector<PlainTree> children;
  };
  explicit PlainTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Hall order on plain trees: a tree of larger degree is smaller; equal
// degrees compare letters by index, then left and right subtrees.
std::strong_ordering plain_compare(const PlainTree& a, const PlainTree& b);

// Hall trees of degree exactly n over k letters: (t', t'') with t', t'' Hall,
// t' < t'', and t' a letter or t' = (x, y) with y >= t''.
std::vector<PlainTree> plain_hall_trees(int k, int n);

// Lie polynomial of a plain tree in the free associative algebra, letters
// encoded as Letter{gen = index, m = 0}.
WordPoly plain_expand(const PlainTree& t);

}  // namespace spinrel

#endif  // SPINREL_HALL_BASIS_HPP_
