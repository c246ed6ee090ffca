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

#include "spinrel/bracket_tree.hpp"

#include <cstdlib>

#include "spinrel/error.hpp"

namespace spinrel {

BracketTree BracketTree::leaf(GeneratorId gen) {
  auto info = generator_info(gen);
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kLeaf;
  node->gen = gen;
  node->spin = info.spin;
  node->parity = info.parity;
  node->grade = info.grade;
  node->leaves = 1;
  node->coms = 0;
  node->acoms = 0;
  return BracketTree(std::move(node));
}

BracketTree BracketTree::node(NodeKind kind, BracketTree left, BracketTree right,
                              int label) {
  if (kind == NodeKind::kLeaf) throw DomainError("node kind must be com or acom");
  if (label < 0) throw DomainError("coupling label must be non-negative");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->gen = 0;
  node->spin = label;
  node->parity = left.parity() * right.parity();
  node->grade = left.grade() + right.grade() - (kind == NodeKind::kCom ? 1 : 0);
  node->leaves = left.leaf_count() + right.leaf_count();
  node->coms = left.com_count() + right.com_count() + (kind == NodeKind::kCom);
  node->acoms = left.node_->acoms + right.node_->acoms + (kind == NodeKind::kAcom);
  node->children = {std::move(left), std::move(right)};
  return BracketTree(std::move(node));
}

bool BracketTree::operator==(const BracketTree& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.spin != b.spin || a.leaves != b.leaves ||
      a.grade != b.grade)
    return false;
  if (a.kind == NodeKind::kLeaf) return a.gen == b.gen;
  return a.children[0] == b.children[0] && a.children[1] == b.children[1];
}

std::string BracketTree::to_string() const {
  if (is_leaf()) return generator_name(generator());
  std::string out = kind() == NodeKind::kCom ? "com(" : "acom(";
  out += left().to_string();
  out += ",";
  out += right().to_string();
  out += ";";
  out += std::to_string(spin());
  out += ")";
  return out;
}

bool starts_tree(TextCursor& cursor) {
  auto id = cursor.peek_identifier();
  if (id.empty()) return false;
  return id == "com" || id == "acom" || find_generator(id).has_value();
}

BracketTree parse_tree(TextCursor& cursor) {
  cursor.skip_space();
  std::size_t at = cursor.pos();
  auto id = cursor.peek_identifier();
  if (id.empty()) cursor.fail("expected bracket expression");
  cursor.set_pos(at + id.size());
  if (id == "com" || id == "acom") {
    NodeKind kind = id == "com" ? NodeKind::kCom : NodeKind::kAcom;
    cursor.expect('(');
    BracketTree left = parse_tree(cursor);
    cursor.expect(',');
    BracketTree right = parse_tree(cursor);
    cursor.expect(';');
    if (cursor.peek() == '-') cursor.fail("coupling label must be non-negative");
    auto digits = cursor.read_digits();
    if (digits.size() > 4) cursor.fail("coupling label too large");
    int label = std::stoi(std::string(digits));
    cursor.expect(')');
    return BracketTree::node(kind, std::move(left), std::move(right), label);
  }
  if (auto gen = find_generator(id)) return BracketTree::leaf(*gen);
  cursor.set_pos(at);
  cursor.fail("unknown generator '" + std::string(id) + "'");
}

BracketTree parse_tree(std::string_view text) {
  TextCursor cursor(text);
  BracketTree tree = parse_tree(cursor);
  if (cursor.peek() != '\0') cursor.fail("unexpected trailing input");
  return tree;
}

bool TreeReport::valid() const {
  for (const auto& issue : issues)
    if (issue.kind != TreeIssue::Kind::kVanishing) return false;
  return true;
}

bool TreeReport::vanishing() const {
  for (const auto& issue : issues)
    if (issue.kind == TreeIssue::Kind::kVanishing) return true;
  return false;
}

namespace {

void check_node(const BracketTree& t, const std::string& path,
                std::vector<TreeIssue>& out) {
  if (t.is_leaf()) return;
  check_node(t.left(), path + ".L", out);
  check_node(t.right(), path + ".R", out);
  int j1 = t.left().spin();
  int j2 = t.right().spin();
  int j = t.spin();
  if (j < std::abs(j1 - j2) || j > j1 + j2) {
    out.push_back({TreeIssue::Kind::kTriangle, path,
                   "label " + std::to_string(j) + " not reachable from " +
                       std::to_string(j1) + " x " + std::to_string(j2)});
    return;
  }
  if (t.left() == t.right()) {
    bool odd = j % 2 == 1;
    bool is_com = t.kind() == NodeKind::kCom;
    if (is_com != odd) {
      out.push_back({TreeIssue::Kind::kVanishing, path,
                     std::string(is_com ? "commutator" : "anticommutator") +
                         " of identical operands at label " +
                         std::to_string(j) + " vanishes identically"});
    }
  }
}

}  // namespace

TreeReport check_tree(const BracketTree& tree) {
  TreeReport report;
  check_node(tree, "root", report.issues);
  return report;
}

}  // namespace spinrel
