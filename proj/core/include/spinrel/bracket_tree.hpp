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

#ifndef SPINREL_BRACKET_TREE_HPP_
#define SPINREL_BRACKET_TREE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spinrel/generator.hpp"
#include "spinrel/text_cursor.hpp"

namespace spinrel {

enum class NodeKind : std::uint8_t { kLeaf, kCom, kAcom };

// Immutable coupled bracket expression. A leaf is a generator; a node is the
// spin-`label` projection of the commutator (kCom) or anticommutator (kAcom)
// of its children. Copies share structure.
//
// Derived data is fixed at construction:
//   parity = parity(left) * parity(right)
//   grade  = grade(left) + grade(right) - 1   for kCom
//   grade  = grade(left) + grade(right)       for kAcom
// The coupling label is not validated here; see check_tree.
class BracketTree {
 public:
  static BracketTree leaf(GeneratorId gen);
  static BracketTree node(NodeKind kind, BracketTree left, BracketTree right,
                          int label);
  static BracketTree com(BracketTree left, BracketTree right, int label) {
    return node(NodeKind::kCom, std::move(left), std::move(right), label);
  }
  static BracketTree acom(BracketTree left, BracketTree right, int label) {
    return node(NodeKind::kAcom, std::move(left), std::move(right), label);
  }

  NodeKind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == NodeKind::kLeaf; }
  GeneratorId generator() const { return node_->gen; }
  const BracketTree& left() const { return node_->children[0]; }
  const BracketTree& right() const { return node_->children[1]; }

  // Leaf: the generator's spin. Node: the coupling label.
  int spin() const { return node_->spin; }
  Parity parity() const { return node_->parity; }
  int grade() const { return node_->grade; }
  int leaf_count() const { return node_->leaves; }
  int com_count() const { return node_->coms; }
  bool is_pure_commutator() const { return node_->acoms == 0; }

  // Structural equality.
  bool operator==(const BracketTree& other) const;

  // Identity of the shared node, usable as a memo key for one tree's lifetime.
  const void* identity() const { return node_.get(); }

  // "com(com(T2,S1;2),S1;1)".
  std::string to_string() const;

 private:
  struct Node {
    NodeKind kind;
    GeneratorId gen;
    std::vector<BracketTree> children;
    int spin;
    Parity parity;
    int grade;
    int leaves;
    int coms;
    int acoms;
  };

  explicit BracketTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// True when the cursor is positioned at the start of a tree: `com`, `acom`
// or a generator name.
bool starts_tree(TextCursor& cursor);

// tree := generator | ('com' | 'acom') '(' tree ',' tree ';' digits ')'
BracketTree parse_tree(TextCursor& cursor);
BracketTree parse_tree(std::string_view text);

struct TreeIssue {
  enum class Kind {
    kTriangle,   // label outside |j(left) - j(right)| .. j(left) + j(right)
    kVanishing,  // identical operands with the symmetry-forbidden label parity
  };
  Kind kind;
  std::string path;  // "root", "root.L", "root.L.R", ...
  std::string message;
};

struct TreeReport {
  std::vector<TreeIssue> issues;

  // No triangle violations. Identically-vanishing nodes do not make a tree
  // invalid, only zero.
  bool valid() const;
  bool vanishing() const;
};

// Checks every node: the triangle rule on the label, and whether the node is
// identically zero because both operands are the same tree (a commutator
// needs an odd label and an anticommutator an even one to survive).
TreeReport check_tree(const BracketTree& tree);

}  // namespace spinrel

#endif  // SPINREL_BRACKET_TREE_HPP_
