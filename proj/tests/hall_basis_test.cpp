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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spinrel/dense.hpp"
#include "spinrel/hall_basis.hpp"
#include "spinrel/linsolve.hpp"
#include "test_support.hpp"

namespace spinrel {
namespace {

BracketTree T(std::string_view s) { return parse_tree(s); }

int cmp(const BracketTree& a, const BracketTree& b) {
  auto o = compare(a, b);
  return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

TEST(Compare, Examples) {
  EXPECT_GT(cmp(T("com(T2,S1;1)"), T("com(S2,S1;1)")), 0);
  EXPECT_GT(cmp(T("com(com(T2,S1;1),S1;1)"), T("com(T2,com(S1,S1;1);2)")), 0);
  EXPECT_GT(cmp(T("com(T2,S1;2)"), T("com(T2,S1;1)")), 0);
  EXPECT_EQ(cmp(T("com(T2,S1;2)"), T("com(T2,S1;2)")), 0);
  EXPECT_GT(cmp(T("T2"), T("S2")), 0);
  EXPECT_GT(cmp(T("S1"), T("J1")), 0);
  EXPECT_GT(cmp(T("com(T2,J1;1)"), T("acom(T2,J1;1)")), 0);
}

TEST(Chainlen, Examples) {
  EXPECT_EQ(chainlen(T("com(com(T2,S1;1),S1;1)")), 3);
  EXPECT_EQ(chainlen(T("com(T2,com(S1,S1;1);2)")), 2);
}

// All pure-commutator trees up to max_leaves leaves whose grade stays at or
// below `grade`, with no pruning on spin. Used as an oracle for enumerate.
std::vector<BracketTree> brute_force(const std::vector<GeneratorId>& alphabet, int grade,
                                     int max_leaves, bool pure) {
  std::vector<std::vector<BracketTree>> by_leaves(max_leaves + 1);
  for (GeneratorId g : alphabet) {
    BracketTree l = BracketTree::leaf(g);
    if (l.grade() <= grade) by_leaves[1].push_back(l);
  }
  for (int n = 2; n <= max_leaves; ++n)
    for (int a = 1; a < n; ++a)
      for (const auto& l : by_leaves[a])
        for (const auto& r : by_leaves[n - a]) {
          std::vector<BracketTree> joined;
          testing::join_all(l, r, joined);
          for (auto& t : joined) {
            if (pure && t.kind() != NodeKind::kCom) continue;
            if (t.grade() > grade || check_tree(t).vanishing()) continue;
            by_leaves[n].push_back(std::move(t));
          }
        }
  std::vector<BracketTree> out;
  for (const auto& v : by_leaves)
    for (const auto& t : v) out.push_back(t);
  return out;
}

std::set<std::string> names(const std::vector<BracketTree>& ts) {
  std::set<std::string> s;
  for (const auto& t : ts) s.insert(t.to_string());
  return s;
}

TEST(Enumerate, Examples) {
  SpinParitySlice b1{2, 0, Parity::kPlus, {}};
  EnumerateOptions one;
  one.max_leaves = 1;
  auto got = enumerate(b1, one);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].to_string(), "B1");

  SpinParitySlice s{3, 1, Parity::kMinus, {kT2, kS1}};
  EnumerateOptions two;
  two.max_leaves = 2;
  auto list = names(enumerate(s, two));
  EXPECT_TRUE(list.count("com(T2,S1;1)"));
  EXPECT_FALSE(list.count("com(T2,S1;2)"));
}

struct OracleCase {
  int grade, spin;
  Parity parity;
  int leaves;
  bool pure;
  std::vector<GeneratorId> alphabet;
};

TEST(Enumerate, MatchesBruteForce) {
  const std::vector<OracleCase> cases = {
      {4, 0, Parity::kPlus, 4, true, {kT2, kS2, kS1}},
      {4, 1, Parity::kMinus, 4, true, {kT2, kS2, kS1}},
      {4, 0, Parity::kPlus, 3, false, {}},
      {5, 2, Parity::kPlus, 3, false, {}},
      {6, 0, Parity::kPlus, 4, true, {kT2, kS2, kS1, kJ1}},
  };
  for (const auto& c : cases) {
    SpinParitySlice slice{c.grade, c.spin, c.parity, c.alphabet};
    EnumerateOptions o;
    o.max_leaves = c.leaves;
    o.pure_commutators = c.pure;
    auto got = enumerate(slice, o);
    std::vector<BracketTree> expected;
    for (auto& t : brute_force(c.alphabet.empty() ? builtin_generators() : c.alphabet,
                               c.grade, c.leaves, c.pure))
      if (t.grade() == c.grade && t.spin() == c.spin && t.parity() == c.parity)
        expected.push_back(t);
    EXPECT_EQ(names(got), names(expected)) << "grade " << c.grade;
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) {
      return compare(a, b) > 0;
    }));
  }
}

TEST(Compare, RandomizedTotalOrder) {
  SpinParitySlice slice{5, 1, Parity::kMinus, {}};
  EnumerateOptions o;
  o.max_leaves = 4;
  auto pool = enumerate(slice, o);
  auto extra = testing::small_trees(builtin_generators(), 3);
  pool.insert(pool.end(), extra.begin(), extra.end());
  ASSERT_GT(pool.size(), 500u);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    int ab = cmp(a, b), ba = cmp(b, a), bc = cmp(b, c);
    ASSERT_EQ(ab, -ba);
    ASSERT_EQ(ab == 0, a == b);
    if (ab > 0 && bc > 0) {
      ASSERT_EQ(cmp(a, c), 1);
    }
    if (ab < 0 && bc < 0) {
      ASSERT_EQ(cmp(a, c), -1);
    }
  }
}

TEST(RankSelect, Examples) {
  EXPECT_EQ(rank_select(std::vector<BracketTree>{T("com(S1,S1;0)")}).rank, 0u);
  std::vector<Term> twice{{ParamPoly(1), T("com(T2,S1;1)")},
                          {ParamPoly(2), T("com(T2,S1;1)")}};
  auto r = rank_select(twice);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.independent, std::vector<std::size_t>{0});
  EXPECT_EQ(rank_select(std::vector<BracketTree>{}).rank, 0u);
}

// Dense oracle: expansion matrix assembled here and ranked by Bareiss.
std::size_t dense_rank(const std::vector<BracketTree>& ts) {
  std::map<Word, std::size_t> col;
  std::vector<WordPoly> rows;
  for (const auto& t : ts) {
    rows.push_back(expand(t, t.spin()));
    for (const auto& [w, c] : rows.back().terms()) col.emplace(w, 0);
  }
  std::size_t k = 0;
  for (auto& [w, i] : col) i = k++;
  DenseMatrix m(ts.size(), std::vector<RadNum>(col.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, c] : rows[i].terms()) m[i][col.at(w)] = c.constant_term();
  return rank_bareiss(m, 4096);
}

TEST(RankSelect, MatchesDenseOracle) {
  SpinParitySlice slice{5, 0, Parity::kPlus, {kT2, kS2, kS1, kJ1}};
  EnumerateOptions o;
  o.max_leaves = 3;
  auto all = enumerate(slice, o);
  ASSERT_GE(all.size(), 12u);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<BracketTree> pick;
    for (int i = 0; i < 12; ++i) pick.push_back(all[rng() % all.size()]);
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= pick.size(); ++n) {
      std::vector<BracketTree> prefix(pick.begin(), pick.begin() + n);
      auto sel = rank_select(prefix);
      ASSERT_EQ(sel.rank, dense_rank(prefix));
      ASSERT_GE(sel.rank, previous);
      previous = sel.rank;
    }
  }
}

TEST(Witt, Examples) {
  EXPECT_EQ(witt(2, 1), 2);
  EXPECT_EQ(witt(2, 2), 1);
  EXPECT_EQ(witt(2, 6), 9);
  EXPECT_EQ(witt(3, 6), 116);
}

bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

// Oracle: count Lyndon words by listing every word of length n.
long lyndon_count(int k, int n) {
  long total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> w(n);
    long c = code;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = static_cast<int>(c % k);
      c /= k;
    }
    if (is_lyndon(w)) ++count;
  }
  return count;
}

TEST(Witt, PlainHallCountsMatchLyndonOracle) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n) {
      long oracle = lyndon_count(k, n);
      EXPECT_EQ(witt(k, n), oracle) << k << "," << n;
      EXPECT_EQ(static_cast<long>(plain_hall_trees(k, n).size()), oracle) << k << "," << n;
    }
}

TEST(Witt, PlainHallTreesAreIndependent) {
  for (int n = 1; n <= 6; ++n) {
    auto trees = plain_hall_trees(2, n);
    std::map<Word, Index> col;
    std::vector<WordPoly> ex;
    for (const auto& t : trees) {
      ex.push_back(plain_expand(t));
      for (const auto& [w, c] : ex.back().terms()) col.emplace(w, 0);
    }
    Index k = 0;
    for (auto& [w, i] : col) i = k++;
    IncrementalBasis basis(col.size());
    for (const auto& e : ex) {
      SparseRow row;
      for (const auto& [w, c] : e.terms()) row.emplace_back(col.at(w), c.constant_term());
      EXPECT_TRUE(basis.add(row));
    }
  }
}

TEST(Witt, HallTreesSortedAndDistinct) {
  auto trees = plain_hall_trees(3, 5);
  std::set<std::string> seen;
  for (const auto& t : trees) EXPECT_TRUE(seen.insert(t.to_string()).second);
}

}  // namespace
}  // namespace spinrel
