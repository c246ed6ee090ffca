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

#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "spinrel/algebra.hpp"
#include "spinrel/dense.hpp"
#include "spinrel/hall_basis.hpp"
#include "spinrel/linsolve.hpp"
#include "spinrel/relation_io.hpp"
#include "spinrel/wigner.hpp"

namespace spinrel::cli {

namespace {

CheckLine run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string cg_orthogonality() {
  for (int j1 = 0; j1 <= 4; ++j1) {
    for (int j2 = 0; j2 <= 4; ++j2) {
      const CgTable& t = cg_table(j1, j2);
      for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
        for (int jp = std::abs(j1 - j2); jp <= j1 + j2; ++jp)
          for (int m = -std::min(j, jp); m <= std::min(j, jp); ++m) {
            RadNum sum;
            for (int m1 = -j1; m1 <= j1; ++m1) {
              int m2 = m - m1;
              if (std::abs(m2) > j2) continue;
              sum += t.get(m1, m2, j, m) * t.get(m1, m2, jp, m);
            }
            if (sum != RadNum(j == jp ? 1 : 0)) {
              std::ostringstream s;
              s << "j1=" << j1 << " j2=" << j2 << " j=" << j << " j'=" << jp << " m=" << m;
              return s.str();
            }
          }
    }
  }
  return {};
}

std::string cg_racah_vs_ladder() {
  for (int j1 = 0; j1 <= 3; ++j1)
    for (int j2 = 0; j2 <= 3; ++j2)
      for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            int m = m1 + m2;
            if (std::abs(m) > j) continue;
            CgKey key{j1, m1, j2, m2, j, m};
            if (cg(key) != cg_ladder(key)) return "mismatch at " + std::to_string(j1) +
                                                  "," + std::to_string(j2) + "->" +
                                                  std::to_string(j);
          }
  return {};
}

std::string corpus_validate(const std::string& path, int threads) {
  BlockReport r = validate(load_corpus(path), threads);
  if (!r.ok()) return std::to_string(r.violations.size()) + " violations";
  if (r.grades.size() != 3 || !r.grades.count(6) || !r.grades.count(4) || !r.grades.count(2))
    return "grade blocks differ from {6, 4, 2}";
  return {};
}

std::string corpus_covariance(const std::string& path, int threads) {
  CovarianceReport r = covariance_check(load_corpus(path), threads);
  if (!r.ok()) return std::to_string(r.failures) + " terms not annihilated";
  if (!r.relation_words || *r.relation_words == 0) return "relation expands to zero";
  return {};
}

std::string vanishing_laws() {
  for (GeneratorId g : builtin_generators()) {
    BracketTree a = BracketTree::leaf(g);
    int j1 = a.spin();
    for (int j = 0; j <= 2 * j1; ++j) {
      NodeKind kind = j % 2 == 0 ? NodeKind::kCom : NodeKind::kAcom;
      BracketTree t = BracketTree::node(kind, a, a, j);
      for (int m = -j; m <= j; ++m)
        if (!expand(t, m).is_zero()) return t.to_string() + " does not vanish";
    }
  }
  return {};
}

std::string ladder_property() {
  const auto& gens = builtin_generators();
  for (GeneratorId a : gens)
    for (GeneratorId b : gens)
      for (NodeKind kind : {NodeKind::kCom, NodeKind::kAcom}) {
        BracketTree l = BracketTree::leaf(a);
        BracketTree r = BracketTree::leaf(b);
        for (int j = std::abs(l.spin() - r.spin()); j <= l.spin() + r.spin(); ++j) {
          BracketTree t = BracketTree::node(kind, l, r, j);
          for (int m = -j; m <= j; ++m) {
            WordPoly w = expand(t, m);
            WordPoly up = m < j ? expand(t, m + 1) : WordPoly();
            RadNum f = m < j ? RadNum::sqrt_of(mpq_class((j - m) * (j + m + 1))) : RadNum();
            if (act(SpinOp::kJplus, w) != up * ParamPoly(f)) return t.to_string();
            WordPoly down = m > -j ? expand(t, m - 1) : WordPoly();
            RadNum g = m > -j ? RadNum::sqrt_of(mpq_class((j + m) * (j - m + 1))) : RadNum();
            if (act(SpinOp::kJminus, w) != down * ParamPoly(g)) return t.to_string();
          }
        }
      }
  return {};
}

std::string solver_oracles(int threads) {
  std::mt19937_64 rng(7);
  const RadNum radicals[] = {RadNum(1), RadNum::sqrt_of(2), RadNum::sqrt_of(3)};
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 8;
    SparseSystem s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) {
          long v = static_cast<long>(rng() % 9) - 4;
          s.insert(i, j, RadNum(v) * radicals[rng() % 3]);
        }
    s.add_rhs_column();
    for (std::size_t i = 0; i < n; ++i)
      s.set_rhs(i, 0, ParamPoly(static_cast<long>(rng() % 7) - 3) +
                          ParamPoly::variable(Param::kF));
    SolveOptions o;
    o.method = SolveMethod::kSparse;
    o.threads = threads;
    SolveResult a = solve(s, o);
    SolveResult b = solve_bareiss(s);
    if (a.rank != b.rank || a.status != b.status)
      return "trial " + std::to_string(trial) + ": rank/status differ";
    if (a.status == SolveStatus::kUnique && a.solutions != b.solutions)
      return "trial " + std::to_string(trial) + ": solutions differ";
  }
  return {};
}

std::string hall_witt() {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      if (mpz_class(plain_hall_trees(k, n).size()) != witt(k, n))
        return "k=" + std::to_string(k) + " n=" + std::to_string(n);
  return {};
}

}  // namespace

std::vector<CheckLine> selfcheck(const std::string& corpus_path, int threads) {
  std::vector<CheckLine> out;
  out.push_back(run_check("cg-orthogonality", cg_orthogonality));
  out.push_back(run_check("cg-racah-vs-ladder", cg_racah_vs_ladder));
  out.push_back(run_check("corpus-grading", [&] { return corpus_validate(corpus_path, threads); }));
  out.push_back(
      run_check("corpus-covariance", [&] { return corpus_covariance(corpus_path, threads); }));
  out.push_back(run_check("vanishing-laws", vanishing_laws));
  out.push_back(run_check("ladder-property", ladder_property));
  out.push_back(run_check("solver-oracles", [&] { return solver_oracles(threads); }));
  out.push_back(run_check("hall-witt", hall_witt));
  return out;
}

}  // namespace spinrel::cli
