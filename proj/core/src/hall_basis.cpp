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

#include "spinrel/hall_basis.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "spinrel/error.hpp"
#include "spinrel/linsolve.hpp"
#include "spinrel/parallel.hpp"

namespace spinrel {

namespace {

constexpr int kMaxBLevel = (kMaxBIndex - 1) / 2;

unsigned thread_arg(int threads) {
  return resolve_threads(static_cast<unsigned>(threads < 0 ? 0 : threads));
}

// Chain length ending at t when t is itself a left-nested commutator chain
// with generator right operands; 0 otherwise.
int spine(const BracketTree& t) {
  if (t.is_leaf()) return 1;
  if (t.kind() != NodeKind::kCom || !t.right().is_leaf()) return 0;
  int inner = spine(t.left());
  return inner == 0 ? 0 : inner + 1;
}

void count_leaves(const BracketTree& t, std::map<int, int>& out) {
  if (t.is_leaf()) {
    ++out[generator_rank(t.generator())];
    return;
  }
  count_leaves(t.left(), out);
  count_leaves(t.right(), out);
}

std::strong_ordering compare_counts(const std::vector<std::pair<int, int>>& a,
                                    const std::vector<std::pair<int, int>>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int ra = i < a.size() ? a[i].first : 1 << 30;
    int rb = j < b.size() ? b[j].first : 1 << 30;
    int rank = std::min(ra, rb);
    int ca = ra == rank ? a[i++].second : 0;
    int cb = rb == rank ? b[j++].second : 0;
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_structure(const BracketTree& a, const BracketTree& b) {
  if (a.is_leaf() || b.is_leaf()) {
    if (a.is_leaf() && b.is_leaf())
      return generator_rank(b.generator()) <=> generator_rank(a.generator());
    return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.kind() != b.kind())
    return a.kind() == NodeKind::kCom ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
  if (auto c = compare(a.left(), b.left()); c != 0) return c;
  if (auto c = compare(a.right(), b.right()); c != 0) return c;
  return a.spin() <=> b.spin();
}

}  // namespace

int generator_rank(GeneratorId id) {
  switch (id) {
    case kT2:
      return 0;
    case kS2:
      return 1;
    case kS1:
      return 2;
    case kJ1:
      return 3;
    default:
      return 4 + (kMaxBLevel - (id - kBFirst));
  }
}

int chainlen(const BracketTree& t) {
  int best = spine(t);
  if (!t.is_leaf()) best = std::max({best, chainlen(t.left()), chainlen(t.right())});
  return best;
}

std::vector<std::pair<int, int>> occurrence_counts(const BracketTree& t) {
  std::map<int, int> counts;
  count_leaves(t, counts);
  return {counts.begin(), counts.end()};
}

std::strong_ordering compare(const BracketTree& a, const BracketTree& b) {
  if (a.identity() == b.identity()) return std::strong_ordering::equal;
  if (auto c = compare_counts(occurrence_counts(a), occurrence_counts(b)); c != 0)
    return c;
  if (auto c = chainlen(a) <=> chainlen(b); c != 0) return c;
  return compare_structure(a, b);
}

std::vector<BracketTree> enumerate(const SpinParitySlice& slice,
                                   const EnumerateOptions& options) {
  if (slice.grade < 1) throw DomainError("grade must be positive");
  if (slice.spin < 0) throw DomainError("spin must be non-negative");
  if (options.max_leaves < 1) throw DomainError("max_leaves must be positive");
  const std::vector<GeneratorId>& alphabet =
      slice.alphabet.empty() ? builtin_generators() : slice.alphabet;
  int max_grade = 0;
  int max_spin = 0;
  for (GeneratorId g : alphabet) {
    auto info = generator_info(g);
    max_grade = std::max(max_grade, info.grade);
    max_spin = std::max(max_spin, info.spin);
  }
  const int target = slice.grade;
  const int n_max = options.max_leaves;

  auto viable = [&](const BracketTree& t) {
    int rem = n_max - t.leaf_count();
    if (t.grade() > target) return false;
    if (t.grade() + rem * max_grade < target) return false;
    if (t.spin() > slice.spin + rem * max_spin) return false;
    return true;
  };

  std::vector<std::vector<BracketTree>> pools(n_max + 1);
  std::size_t total = 0;
  for (GeneratorId g : alphabet) {
    BracketTree leaf = BracketTree::leaf(g);
    if (viable(leaf)) pools[1].push_back(leaf);
  }
  total += pools[1].size();

  std::vector<NodeKind> kinds{NodeKind::kCom};
  if (!options.pure_commutators) kinds.push_back(NodeKind::kAcom);

  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::pair<int, std::size_t>> tasks;
    for (int nl = 1; nl < n; ++nl)
      for (std::size_t li = 0; li < pools[nl].size(); ++li) tasks.emplace_back(nl, li);
    auto parts = parallel_map(tasks.size(), thread_arg(options.threads), [&](std::size_t t) {
      auto [nl, li] = tasks[t];
      const BracketTree& l = pools[nl][li];
      std::vector<BracketTree> out;
      const auto& rights = pools[n - nl];
      for (std::size_t ri = 0; ri < rights.size(); ++ri) {
        const BracketTree& r = rights[ri];
        bool same = nl == n - nl && li == ri;
        for (NodeKind kind : kinds) {
          for (int j = std::abs(l.spin() - r.spin()); j <= l.spin() + r.spin(); ++j) {
            if (same && (kind == NodeKind::kCom) != (j % 2 == 1)) continue;
            BracketTree t = BracketTree::node(kind, l, r, j);
            if (viable(t)) out.push_back(std::move(t));
          }
        }
      }
      return out;
    });
    for (auto& part : parts) {
      total += part.size();
      if (total > options.max_trees)
        throw LimitError("enumeration exceeds " + std::to_string(options.max_trees) +
                         " trees at " + std::to_string(n) + " leaves");
      for (auto& t : part) pools[n].push_back(std::move(t));
    }
  }

  std::vector<BracketTree> result;
  for (const auto& pool : pools)
    for (const auto& t : pool)
      if (t.grade() == target && t.spin() == slice.spin && t.parity() == slice.parity)
        result.push_back(t);
  std::sort(result.begin(), result.end(),
            [](const BracketTree& a, const BracketTree& b) { return compare(a, b) > 0; });
  return result;
}

RankSelection rank_select(const std::vector<Term>& candidates, int threads) {
  RankSelection out;
  if (candidates.empty()) return out;
  SpinParity sp = spin_parity(candidates.front().tree);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!(spin_parity(candidates[k].tree) == sp))
      throw DomainError("candidate " + std::to_string(k + 1) + " has spin-parity " +
                        spin_parity(candidates[k].tree).to_string() + ", expected " +
                        sp.to_string());
    if (!candidates[k].coefficient.is_constant())
      throw DomainError("candidate " + std::to_string(k + 1) +
                        " has a parameter-dependent coefficient");
  }
  auto expansions = parallel_map(candidates.size(), thread_arg(threads), [&](std::size_t k) {
    return expand(candidates[k].tree, sp.j) * candidates[k].coefficient;
  });

  std::map<Word, Index> coordinate;
  for (const auto& w : expansions)
    for (const auto& [word, c] : w.terms()) coordinate.emplace(word, 0);
  Index next = 0;
  for (auto& [word, idx] : coordinate) idx = next++;
  out.coordinates = coordinate.size();

  SparseSystem system(candidates.size(), coordinate.size());
  IncrementalBasis basis(coordinate.size());
  for (std::size_t k = 0; k < expansions.size(); ++k) {
    SparseRow row;
    for (const auto& [word, c] : expansions[k].terms()) {
      Index col = coordinate.at(word);
      row.emplace_back(col, c.constant_term());
      system.insert(k, col, c.constant_term());
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (basis.add(std::move(row))) out.independent.push_back(k);
  }
  out.rank = rank(system, threads);
  if (out.rank != out.independent.size())
    throw Error("rank mismatch between incremental and sparse elimination");
  return out;
}

RankSelection rank_select(const std::vector<BracketTree>& candidates, int threads) {
  std::vector<Term> terms;
  terms.reserve(candidates.size());
  for (const auto& t : candidates) terms.push_back({ParamPoly(1), t});
  return rank_select(terms, threads);
}

namespace {

int mobius(long n) {
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

mpz_class witt(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("witt needs k >= 1 and n >= 1");
  mpz_class sum = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(n / d));
    sum += mu * power;
  }
  return sum / n;
}

PlainTree PlainTree::letter(int a) {
  auto n = std::make_shared<Node>();
  n->letter = a;
  n->degree = 1;
  return PlainTree(std::move(n));
}

PlainTree PlainTree::bracket(const PlainTree& l, const PlainTree& r) {
  auto n = std::make_shared<Node>();
  n->degree = l.degree() + r.degree();
  n->children = {l, r};
  return PlainTree(std::move(n));
}

std::string PlainTree::to_string() const {
  if (is_letter()) return std::string(1, static_cast<char>('a' + letter_index()));
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::strong_ordering plain_compare(const PlainTree& a, const PlainTree& b) {
  if (a.degree() != b.degree()) return b.degree() <=> a.degree();
  if (a.is_letter()) return a.letter_index() <=> b.letter_index();
  if (auto c = plain_compare(a.left(), b.left()); c != 0) return c;
  return plain_compare(a.right(), b.right());
}

std::vector<PlainTree> plain_hall_trees(int k, int n) {
  if (k < 1 || n < 1) throw DomainError("plain_hall_trees needs k >= 1 and n >= 1");
  std::vector<std::vector<PlainTree>> by_degree(n + 1);
  for (int a = 0; a < k; ++a) by_degree[1].push_back(PlainTree::letter(a));
  for (int d = 2; d <= n; ++d) {
    for (int dl = 1; dl < d; ++dl) {
      for (const auto& l : by_degree[dl]) {
        for (const auto& r : by_degree[d - dl]) {
          if (plain_compare(l, r) >= 0) continue;
          if (!l.is_letter() && plain_compare(l.right(), r) < 0) continue;
          by_degree[d].push_back(PlainTree::bracket(l, r));
        }
      }
    }
  }
  return by_degree[n];
}

WordPoly plain_expand(const PlainTree& t) {
  if (t.is_letter())
    return WordPoly::letter({static_cast<GeneratorId>(t.letter_index()), 0});
  WordPoly a = plain_expand(t.left());
  WordPoly b = plain_expand(t.right());
  return a * b - b * a;
}

}  // namespace spinrel
