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

#include "spinrel/linsolve.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "spinrel/error.hpp"
#include "spinrel/padic.hpp"
#include "spinrel/parallel.hpp"

namespace spinrel {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kUnique:
      return "unique";
    case SolveStatus::kUnderdetermined:
      return "underdetermined";
    case SolveStatus::kInconsistent:
      return "inconsistent";
  }
  return "?";
}

SparseRow axpy(const SparseRow& a, const RadNum& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(factor * b[j].second));
      ++j;
    } else {
      RadNum v = a[i].second - factor * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

unsigned thread_arg(int threads) {
  return resolve_threads(static_cast<unsigned>(threads < 0 ? 0 : threads));
}

const RadNum* find_entry(const SparseRow& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, Index k) { return e.first < k; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// Forward elimination with Markowitz pivoting. Pivot rows are frozen once
// chosen; each keeps entries only in its own column and in columns pivoted
// later or left free.
class Eliminator {
 public:
  Eliminator(const SparseSystem& s, bool with_rhs, unsigned threads)
      : rows_(s.rows()), col_rows_(s.cols()), row_done_(s.rows(), 0),
        col_done_(s.cols(), 0), threads_(threads) {
    for (std::size_t r = 0; r < s.rows(); ++r) {
      rows_[r] = s.row(r);
      for (const auto& e : rows_[r]) col_rows_[e.first].insert(static_cast<Index>(r));
    }
    if (with_rhs) {
      rhs_.assign(s.rows(), std::vector<ParamPoly>(s.rhs_count()));
      for (std::size_t k = 0; k < s.rhs_count(); ++k)
        for (std::size_t r = 0; r < s.rows(); ++r) rhs_[r][k] = s.rhs(k)[r];
    }
  }

  void run() {
    while (true) {
      auto pivot = choose_pivot();
      if (!pivot) break;
      eliminate(pivot->first, pivot->second);
    }
  }

  const std::vector<std::pair<Index, Index>>& pivots() const { return pivots_; }
  const std::vector<RadNum>& pivot_inverses() const { return inverses_; }
  const SparseRow& row(Index r) const { return rows_[r]; }
  bool row_done(Index r) const { return row_done_[r] != 0; }
  bool col_done(Index c) const { return col_done_[c] != 0; }
  const std::vector<ParamPoly>& rhs(Index r) const { return rhs_[r]; }
  std::size_t cols() const { return col_rows_.size(); }
  std::size_t rows() const { return rows_.size(); }

 private:
  std::optional<std::pair<Index, Index>> choose_pivot() const {
    using Key = std::tuple<std::size_t, std::size_t, Index, Index>;
    std::optional<Key> best;
    for (Index c = 0; c < col_rows_.size(); ++c) {
      const auto& rs = col_rows_[c];
      if (rs.empty()) continue;
      std::size_t ccount = rs.size() - 1;
      for (Index r : rs) {
        std::size_t cost = (rows_[r].size() - 1) * ccount;
        if (best && cost > std::get<0>(*best)) continue;
        const RadNum* v = find_entry(rows_[r], c);
        Key key{cost, v->term_count(), c, r};
        if (!best || key < *best) best = key;
      }
      if (best && std::get<0>(*best) == 0 && std::get<1>(*best) == 1) break;
    }
    if (!best) return std::nullopt;
    return std::make_pair(std::get<3>(*best), std::get<2>(*best));
  }

  void eliminate(Index p, Index c) {
    const SparseRow& prow = rows_[p];
    RadNum inv = inverse(*find_entry(prow, c));
    std::vector<Index> targets;
    for (Index r : col_rows_[c])
      if (r != p) targets.push_back(r);

    for (const auto& e : prow) col_rows_[e.first].erase(p);
    row_done_[p] = 1;
    col_done_[c] = 1;

    std::vector<SparseRow> updated(targets.size());
    std::vector<RadNum> factors(targets.size());
    parallel_for(0, targets.size(), threads_, [&](std::size_t k) {
      const SparseRow& row = rows_[targets[k]];
      factors[k] = *find_entry(row, c) * inv;
      updated[k] = axpy(row, factors[k], prow);
    }, 8);

    for (std::size_t k = 0; k < targets.size(); ++k) {
      Index r = targets[k];
      for (const auto& e : rows_[r]) col_rows_[e.first].erase(r);
      rows_[r] = std::move(updated[k]);
      for (const auto& e : rows_[r]) col_rows_[e.first].insert(r);
      if (!rhs_.empty()) {
        for (std::size_t j = 0; j < rhs_[r].size(); ++j)
          if (!rhs_[p][j].is_zero()) rhs_[r][j] -= rhs_[p][j] * factors[k];
      }
    }
    pivots_.emplace_back(p, c);
    inverses_.push_back(std::move(inv));
  }

  std::vector<SparseRow> rows_;
  std::vector<std::set<Index>> col_rows_;
  std::vector<char> row_done_;
  std::vector<char> col_done_;
  std::vector<std::vector<ParamPoly>> rhs_;
  std::vector<std::pair<Index, Index>> pivots_;
  std::vector<RadNum> inverses_;
  unsigned threads_;
};

std::vector<Index> free_columns_of(const Eliminator& e) {
  std::vector<Index> out;
  for (Index c = 0; c < e.cols(); ++c)
    if (!e.col_done(c)) out.push_back(c);
  return out;
}

// Back substitution: fills x at pivot columns given values at free columns.
template <typename T, typename RhsFn>
void back_substitute(const Eliminator& e, std::vector<T>& x, RhsFn rhs_of) {
  const auto& pivots = e.pivots();
  const auto& inverses = e.pivot_inverses();
  for (std::size_t k = pivots.size(); k-- > 0;) {
    auto [p, c] = pivots[k];
    T acc = rhs_of(p);
    for (const auto& [col, v] : e.row(p)) {
      if (col == c || x[col].is_zero()) continue;
      acc -= x[col] * v;
    }
    x[c] = acc * inverses[k];
  }
}

}  // namespace

PivotPlan pivot_plan(const SparseSystem& s, int threads) {
  Eliminator e(s, false, thread_arg(threads));
  e.run();
  return {e.pivots(), free_columns_of(e)};
}

std::size_t rank(const SparseSystem& s, int threads) {
  Eliminator e(s, false, thread_arg(threads));
  e.run();
  return e.pivots().size();
}

std::vector<std::vector<RadNum>> nullspace(const SparseSystem& s, int threads) {
  Eliminator e(s, false, thread_arg(threads));
  e.run();
  std::vector<std::vector<RadNum>> basis;
  for (Index f : free_columns_of(e)) {
    std::vector<RadNum> x(s.cols());
    x[f] = RadNum(1);
    back_substitute(e, x, [](Index) { return RadNum(); });
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

SolveResult solve_sparse(const SparseSystem& s, unsigned threads) {
  Eliminator e(s, true, threads);
  e.run();
  SolveResult result;
  result.method = "sparse";
  result.rank = e.pivots().size();
  result.free_columns = free_columns_of(e);
  for (Index r = 0; r < e.rows() && !result.inconsistent_row; ++r) {
    if (e.row_done(r)) continue;
    for (std::size_t k = 0; k < s.rhs_count(); ++k) {
      if (!e.rhs(r)[k].is_zero()) {
        result.inconsistent_row = r;
        result.inconsistent_rhs = k;
        break;
      }
    }
  }
  if (result.inconsistent_row) {
    result.status = SolveStatus::kInconsistent;
    return result;
  }
  result.status = result.free_columns.empty() ? SolveStatus::kUnique
                                              : SolveStatus::kUnderdetermined;
  for (std::size_t k = 0; k < s.rhs_count(); ++k) {
    std::vector<ParamPoly> x(s.cols());
    back_substitute(e, x, [&](Index p) { return e.rhs(p)[k]; });
    result.solutions.push_back(std::move(x));
  }
  return result;
}

}  // namespace

SolveResult solve(const SparseSystem& s, const SolveOptions& options) {
  unsigned threads = thread_arg(options.threads);
  bool padic_ok = s.rows() == s.cols() && s.rows() > 0 && s.is_rational();
  bool use_padic =
      padic_ok && (options.method == SolveMethod::kPadic ||
                   (options.method == SolveMethod::kAuto &&
                    s.cols() >= options.padic_threshold));
  if (use_padic) {
    if (auto x = padic_solve_param(s)) {
      SolveResult result;
      result.method = "p-adic";
      result.rank = s.cols();
      result.status = SolveStatus::kUnique;
      result.solutions = std::move(*x);
      return result;
    }
  }
  return solve_sparse(s, threads);
}

bool IncrementalBasis::add(SparseRow v) {
  while (!v.empty()) {
    Index lead = v.front().first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      RadNum inv = inverse(v.front().second);
      for (auto& e : v) e.second = e.second * inv;
      rows_.emplace(lead, std::move(v));
      return true;
    }
    RadNum factor = v.front().second;
    v = axpy(v, factor, it->second);
  }
  return false;
}

}  // namespace spinrel
