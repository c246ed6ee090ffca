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

#include "spinrel/algebra.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "spinrel/error.hpp"
#include "spinrel/parallel.hpp"
#include "spinrel/wigner.hpp"

namespace spinrel {

std::string SpinParity::to_string() const {
  return std::to_string(j) + parity_char(parity);
}

namespace {

class Expander {
 public:
  const WordPoly& run(const BracketTree& t, int m) {
    auto key = std::make_pair(t.identity(), m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    WordPoly value = compute(t, m);
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  WordPoly compute(const BracketTree& t, int m) {
    if (t.is_leaf()) return WordPoly::letter({t.generator(), m});
    const BracketTree& l = t.left();
    const BracketTree& r = t.right();
    int j1 = l.spin();
    int j2 = r.spin();
    int j = t.spin();
    const CgTable& table = cg_table(j1, j2);
    bool is_com = t.kind() == NodeKind::kCom;
    WordPoly out;
    for (int m1 = -j1; m1 <= j1; ++m1) {
      int m2 = m - m1;
      if (std::abs(m2) > j2) continue;
      const RadNum& c = table.get(m1, m2, j, m);
      if (c.is_zero()) continue;
      const WordPoly& a = run(l, m1);
      const WordPoly& b = run(r, m2);
      if (a.is_zero() || b.is_zero()) continue;
      WordPoly piece = a * b;
      if (is_com)
        piece -= b * a;
      else
        piece += b * a;
      out += piece * ParamPoly(c);
    }
    return out;
  }

  std::map<std::pair<const void*, int>, WordPoly> memo_;
};

}  // namespace

WordPoly expand(const BracketTree& t, int m) {
  if (std::abs(m) > t.spin())
    throw DomainError("projection m = " + std::to_string(m) +
                      " out of range for spin " + std::to_string(t.spin()));
  TreeReport report = check_tree(t);
  if (!report.valid()) {
    for (const auto& issue : report.issues)
      if (issue.kind == TreeIssue::Kind::kTriangle)
        throw DomainError("invalid tree at " + issue.path + ": " + issue.message);
  }
  if (report.vanishing()) return {};
  Expander e;
  return e.run(t, m);
}

std::optional<SpinOp> parse_spin_op(std::string_view name) {
  if (name == "J3") return SpinOp::kJ3;
  if (name == "Jplus" || name == "J+") return SpinOp::kJplus;
  if (name == "Jminus" || name == "J-") return SpinOp::kJminus;
  return std::nullopt;
}

const char* spin_op_name(SpinOp op) {
  switch (op) {
    case SpinOp::kJ3:
      return "J3";
    case SpinOp::kJplus:
      return "Jplus";
    case SpinOp::kJminus:
      return "Jminus";
  }
  return "?";
}

namespace {

// Ladder factor sqrt((j - s m)(j + s m + 1)) for s = +1 / -1.
const RadNum& ladder_factor(int j, int m, int s) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, RadNum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(j, m, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  long v = static_cast<long>(j - s * m) * (j + s * m + 1);
  RadNum value = v == 0 ? RadNum() : RadNum::sqrt_of(mpq_class(v));
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

WordPoly act(SpinOp op, const WordPoly& w) {
  WordPoly out;
  for (const auto& [word, coeff] : w.terms()) {
    if (op == SpinOp::kJ3) {
      long total = 0;
      for (const auto& l : word) total += l.m;
      out.add(word, coeff * RadNum(total));
      continue;
    }
    int s = op == SpinOp::kJplus ? 1 : -1;
    for (std::size_t k = 0; k < word.size(); ++k) {
      int j = generator_info(word[k].gen).spin;
      const RadNum& f = ladder_factor(j, word[k].m, s);
      if (f.is_zero()) continue;
      Word shifted = word;
      shifted[k].m += s;
      out.add(std::move(shifted), coeff * f);
    }
  }
  return out;
}

WordPoly expand_relation(const Relation& r, int m, int threads) {
  if (r.terms.empty()) return {};
  SpinParity sp = spin_parity(r.terms.front().tree);
  for (std::size_t k = 1; k < r.terms.size(); ++k) {
    SpinParity other = spin_parity(r.terms[k].tree);
    if (!(other == sp))
      throw DomainError("relation mixes spin-parities " + sp.to_string() +
                        " and " + other.to_string() + " (term " +
                        std::to_string(k + 1) + ")");
  }
  auto parts = parallel_map(r.terms.size(), resolve_threads(static_cast<unsigned>(threads < 0 ? 0 : threads)),
                            [&](std::size_t k) {
                              const Term& t = r.terms[k];
                              return expand(t.tree, m) * t.coefficient;
                            });
  WordPoly out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace spinrel
