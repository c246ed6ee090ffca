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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "mutations.hpp"
#include "spinrel/coefficient_text.hpp"
#include "spinrel/dense.hpp"
#include "spinrel/hall_basis.hpp"
#include "spinrel/linsolve.hpp"
#include "spinrel/relation_io.hpp"
#include "test_support.hpp"

namespace spinrel {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const RelationCorpus& corpus() {
  static const RelationCorpus c = load_corpus(SPINREL_TEST_CORPUS);
  return c;
}

Outcome corpus_structure() {
  auto t0 = Clock::now();
  BlockReport r = validate(load_corpus(SPINREL_TEST_CORPUS));
  double secs = seconds_since(t0);
  if (!r.ok()) return fail(std::to_string(r.violations.size()) + " violations");
  std::string grades;
  for (const auto& [g, block] : r.grades) grades += std::to_string(g) + " ";
  if (grades != "6 4 2 ") return fail("grade blocks " + grades);
  if (secs >= 10) return fail("took " + std::to_string(secs) + " s");
  return {true, "blocks {6, 4, 2}, 0 violations"};
}

Outcome parameter_structure() {
  BlockReport r = validate(corpus());
  if (r.u_terms_grade4 != 11) return fail("U-terms " + std::to_string(r.u_terms_grade4));
  for (const auto& ct : corpus().terms) {
    const auto& t = ct.term.tree;
    if (t.grade() != 4 || t.is_leaf()) continue;
    const auto& c = ct.term.coefficient;
    if (c.degree(Param::kF) > 1 || c.degree(Param::kG1) != 0 || c.degree(Param::kG2) != 0 ||
        c.total_degree() > 1)
      return fail("U-term not affine in f: " + t.to_string());
  }
  if (!r.b3_coefficient || *r.b3_coefficient != ParamPoly(-50176)) return fail("B3 coefficient");
  if (!r.b1_coefficient ||
      *r.b1_coefficient != parse_param_poly("5513476864/135 + 2747136/5*f + 50176*g1"))
    return fail("B1 coefficient");
  if (!r.jj_coefficient || r.jj_coefficient->degree(Param::kF) != 2 ||
      r.jj_coefficient->degree(Param::kG2) != 1)
    return fail("{J1,J1} coefficient degrees");
  return {true, "11 U-terms, B3 = -50176, B1 exact, {J1,J1} deg f 2 / deg g2 1"};
}

Outcome covariance() {
  auto t0 = Clock::now();
  CovarianceReport r = covariance_check(corpus());
  double secs = seconds_since(t0);
  if (!r.ok()) return fail(std::to_string(r.failures) + " terms not annihilated");
  if (!r.relation_words || *r.relation_words == 0) return fail("relation expands to zero");
  if (secs >= 300) return fail("too slow");
  return {true, std::to_string(r.entries.size()) + " terms annihilated, " +
                    std::to_string(*r.relation_words) + " words at m = 0"};
}

Outcome cg_suite() {
  auto t0 = Clock::now();
  std::size_t checked = 0;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2) {
      const CgTable& t = cg_table(j1, j2);
      for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
        for (int jp = std::abs(j1 - j2); jp <= j1 + j2; ++jp)
          for (int m = -std::min(j, jp); m <= std::min(j, jp); ++m) {
            RadNum sum;
            for (int m1 = -j1; m1 <= j1; ++m1) {
              int m2 = m - m1;
              if (std::abs(m2) <= j2) sum += t.get(m1, m2, j, m) * t.get(m1, m2, jp, m);
            }
            if (sum != RadNum(j == jp ? 1 : 0)) return fail("orthogonality");
            ++checked;
          }
      for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            if (std::abs(m1 + m2) > j) continue;
            RadNum a = cg({j1, m1, j2, m2, j, m1 + m2});
            RadNum b = cg({j2, m2, j1, m1, j, m1 + m2});
            if ((j1 + j2 - j) % 2 != 0) b = -b;
            if (a != b) return fail("exchange symmetry");
            if (a != cg_ladder({j1, m1, j2, m2, j, m1 + m2})) return fail("racah vs ladder");
            ++checked;
          }
      if (cg_table_ladder(j1, j2) != t.nonzero_entries()) return fail("ladder table");
    }
  if (seconds_since(t0) >= 30) return fail("too slow");
  return {true, std::to_string(checked) + " identities, j1, j2 <= 4"};
}

Outcome vanishing_laws() {
  std::size_t checked = 0;
  for (GeneratorId g : builtin_generators()) {
    BracketTree a = BracketTree::leaf(g);
    for (int j = 0; j <= 2 * a.spin(); ++j) {
      NodeKind kind = j % 2 == 0 ? NodeKind::kCom : NodeKind::kAcom;
      BracketTree t = BracketTree::node(kind, a, a, j);
      for (int m = -j; m <= j; ++m) {
        if (!expand(t, m).is_zero()) return fail(t.to_string());
        if (!testing::naive_expand(t, m).is_zero()) return fail("naive " + t.to_string());
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " components vanish"};
}

Outcome ladder_property() {
  std::size_t checked = 0;
  for (const auto& t : testing::small_trees(builtin_generators(), 3)) {
    int j = t.spin();
    for (int m = -j; m <= j; ++m) {
      WordPoly w = expand(t, m);
      WordPoly up = m < j ? expand(t, m + 1) * ParamPoly(RadNum::sqrt_of((j - m) * (j + m + 1)))
                          : WordPoly();
      WordPoly down =
          m > -j ? expand(t, m - 1) * ParamPoly(RadNum::sqrt_of((j + m) * (j - m + 1)))
                 : WordPoly();
      if (act(SpinOp::kJplus, w) != up) return fail("J+ on " + t.to_string());
      if (act(SpinOp::kJminus, w) != down) return fail("J- on " + t.to_string());
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " components over trees with <= 3 leaves"};
}

Outcome solver_oracles() {
  std::mt19937_64 rng(20260101);
  SolveOptions sparse;
  sparse.method = SolveMethod::kSparse;
  std::size_t unique = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SparseSystem s = testing::random_radical_system(rng, 20, 20);
    s.add_rhs_column();
    for (std::size_t i = 0; i < 20; ++i) s.set_rhs(i, 0, ParamPoly(testing::random_radical(rng)));
    SolveResult a = solve(s, sparse);
    SolveResult b = solve_bareiss(s);
    if (a.rank != b.rank || a.status != b.status) return fail("rank/status, trial " + std::to_string(trial));
    if (a.status == SolveStatus::kUnique) {
      if (a.solutions != b.solutions) return fail("solution, trial " + std::to_string(trial));
      ++unique;
    }
  }
  const ParamValues points[] = {{mpq_class(3, 7), -2, 5}, {11, mpq_class(-1, 2), mpq_class(4, 3)},
                                {-6, 0, mpq_class(9, 5)}};
  std::size_t homs = 0;
  while (homs < 20) {
    SparseSystem s = testing::random_radical_system(rng, 12, 12);
    s.add_rhs_column();
    for (std::size_t i = 0; i < 12; ++i)
      s.set_rhs(i, 0, ParamPoly(testing::random_radical(rng)) +
                          ParamPoly(testing::random_radical(rng)) * ParamPoly::variable(Param::kF) +
                          ParamPoly(static_cast<long>(rng() % 5)) * ParamPoly::variable(Param::kG1));
    SolveResult sym = solve(s, sparse);
    if (sym.status != SolveStatus::kUnique) continue;
    for (const auto& at : points) {
      SparseSystem e = s.matrix_only();
      e.add_rhs_column();
      for (std::size_t i = 0; i < 12; ++i) e.set_rhs(i, 0, ParamPoly(s.rhs(0)[i].evaluate(at)));
      SolveResult num = solve(e, sparse);
      for (std::size_t c = 0; c < 12; ++c)
        if (ParamPoly(sym.solutions[0][c].evaluate(at)) != num.solutions[0][c])
          return fail("evaluation homomorphism");
    }
    ++homs;
  }
  return {true, "100 systems vs Bareiss (" + std::to_string(unique) +
                    " unique), 20 homomorphism systems x 3 points"};
}

Outcome large_sparse() {
  const std::size_t n = 2000;
  const std::size_t per_row = 10;  // 0.5% of 2000
  std::mt19937_64 rng(77);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SparseSystem s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    // Strict diagonal dominance on the permuted diagonal keeps A invertible.
    s.insert(i, perm[i], RadNum(static_cast<long>(200 + rng() % 100)));
    std::size_t placed = 1;
    while (placed < per_row) {
      std::size_t c = rng() % n;
      if (!s.at(i, c).is_zero()) continue;
      long v = static_cast<long>(rng() % 21) - 10;
      if (v == 0) continue;
      s.insert(i, c, RadNum(v));
      ++placed;
    }
  }
  s.add_rhs_column();
  for (std::size_t i = 0; i < n; ++i)
    s.set_rhs(i, 0, ParamPoly(static_cast<long>(rng() % 19) - 9) +
                        ParamPoly(static_cast<long>(rng() % 7) - 3) * ParamPoly::variable(Param::kF));
  auto t0 = Clock::now();
  SolveResult r = solve(s);
  double secs = seconds_since(t0);
  if (r.status != SolveStatus::kUnique) return fail("not solved uniquely");
  if (s.multiply(r.solutions[0]) != s.rhs(0)) return fail("A x != b");
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  double gib = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
  if (secs >= 300) return fail("took " + std::to_string(secs) + " s");
  if (gib >= 8) return fail("peak memory " + std::to_string(gib) + " GiB");
  std::ostringstream d;
  d.precision(3);
  d << n << "x" << n << ", " << s.nonzeros() << " nonzeros, method " << r.method << ", "
    << secs << " s, peak rss " << gib << " GiB, A x = b verified";
  return {true, d.str()};
}

long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

Outcome hall_witt() {
  for (long k = 1; k <= 3; ++k)
    for (long n = 1; n <= 6; ++n) {
      mpz_class sum = 0;
      for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
          mpz_class power;
          mpz_ui_pow_ui(power.get_mpz_t(), k, n / d);
          sum += mobius(d) * power;
        }
      mpz_class oracle = sum / n;
      if (witt(k, n) != oracle) return fail("witt(" + std::to_string(k) + "," + std::to_string(n) + ")");
      if (mpz_class(plain_hall_trees(k, n).size()) != oracle)
        return fail("hall count k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  if (witt(2, 6) != 9) return fail("witt(2,6)");
  SpinParitySlice slice{6, 0, Parity::kPlus, {kT2, kS2, kS1}};
  EnumerateOptions o;
  o.max_leaves = 4;
  o.pure_commutators = true;
  auto pool = enumerate(slice, o);
  auto extra = testing::small_trees(builtin_generators(), 3);
  pool.insert(pool.end(), extra.begin(), extra.end());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    auto ab = compare(a, b);
    if ((ab < 0) != (compare(b, a) > 0)) return fail("antisymmetry");
    if ((ab == 0) != (a == b)) return fail("equality");
    if (ab > 0 && compare(b, c) > 0 && !(compare(a, c) > 0)) return fail("transitivity");
  }
  return {true, "counts match witt(k,n) for k <= 3, n <= 6; 10^4 triples ordered"};
}

Outcome fault_injection() {
  std::ifstream in(SPINREL_TEST_CORPUS);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::size_t tripped = 0;
  for (const auto& m : testing::corpus_mutations()) {
    BlockReport r = validate(parse_corpus(testing::apply_mutation(text, m)));
    if (r.count(m.clause) == 0) return fail(m.name + " not caught by " + clause_name(m.clause));
    ++tripped;
  }
  return {true, std::to_string(tripped) + " single-mutation variants rejected"};
}

}  // namespace
}  // namespace spinrel

int main() {
  using namespace spinrel;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"corpus structural reproduction", corpus_structure},
      {"parameter structure", parameter_structure},
      {"covariance", covariance},
      {"Clebsch-Gordan suite", cg_suite},
      {"vanishing laws", vanishing_laws},
      {"multiplet ladder property", ladder_property},
      {"solver oracles", solver_oracles},
      {"2000x2000 sparse performance", large_sparse},
      {"Hall trees and Witt counts", hall_witt},
      {"fault injection", fault_injection},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
