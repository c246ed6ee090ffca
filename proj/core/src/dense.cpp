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

#include "spinrel/dense.hpp"

#include <utility>

#include "spinrel/error.hpp"

namespace spinrel {

namespace {

void check_size(std::size_t rows, std::size_t cols, std::size_t max_size) {
  if (rows > max_size || cols > max_size)
    throw LimitError("dense matrix " + std::to_string(rows) + " x " +
                     std::to_string(cols) + " exceeds limit " +
                     std::to_string(max_size));
}

struct Echelon {
  DenseMatrix m;
  std::vector<std::vector<ParamPoly>> rhs;  // per row
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_origin;
  int sign = 1;
};

void bareiss(Echelon& e) {
  std::size_t rows = e.m.size();
  std::size_t cols = rows == 0 ? 0 : e.m[0].size();
  RadNum prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && e.m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(e.m[piv], e.m[r]);
      if (!e.rhs.empty()) std::swap(e.rhs[piv], e.rhs[r]);
      std::swap(e.row_origin[piv], e.row_origin[r]);
      e.sign = -e.sign;
    }
    const RadNum pivot = e.m[r][c];
    RadNum inv_prev = inverse(prev);
    for (std::size_t i = r + 1; i < rows; ++i) {
      RadNum lead = e.m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        RadNum v = pivot * e.m[i][j];
        if (!lead.is_zero()) v -= lead * e.m[r][j];
        e.m[i][j] = v * inv_prev;
      }
      if (e.rhs.empty()) {
        e.m[i][c] = RadNum();
        continue;
      }
      for (std::size_t k = 0; k < e.rhs[i].size(); ++k) {
        ParamPoly v = e.rhs[i][k] * pivot;
        if (!lead.is_zero()) v -= e.rhs[r][k] * lead;
        e.rhs[i][k] = v * inv_prev;
      }
      e.m[i][c] = RadNum();
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
}

Echelon make_echelon(const DenseMatrix& m) {
  Echelon e;
  e.m = m;
  e.row_origin.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e.row_origin[i] = i;
  return e;
}

}  // namespace

DenseMatrix to_dense(const SparseSystem& s, std::size_t max_size) {
  check_size(s.rows(), s.cols(), max_size);
  DenseMatrix m(s.rows(), std::vector<RadNum>(s.cols()));
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (const auto& [c, v] : s.row(r)) m[r][c] = v;
  return m;
}

RadNum det_bareiss(const DenseMatrix& m, std::size_t max_size) {
  std::size_t n = m.size();
  check_size(n, n, max_size);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return RadNum(1);
  Echelon e = make_echelon(m);
  bareiss(e);
  if (e.pivot_cols.size() < n) return RadNum();
  RadNum det = e.m[n - 1][n - 1];
  return e.sign < 0 ? -det : det;
}

std::size_t rank_bareiss(const DenseMatrix& m, std::size_t max_size) {
  check_size(m.size(), m.empty() ? 0 : m[0].size(), max_size);
  Echelon e = make_echelon(m);
  bareiss(e);
  return e.pivot_cols.size();
}

SolveResult solve_bareiss(const SparseSystem& s, std::size_t max_size) {
  Echelon e = make_echelon(to_dense(s, max_size));
  e.rhs.assign(s.rows(), std::vector<ParamPoly>(s.rhs_count()));
  for (std::size_t k = 0; k < s.rhs_count(); ++k)
    for (std::size_t r = 0; r < s.rows(); ++r) e.rhs[r][k] = s.rhs(k)[r];
  bareiss(e);

  SolveResult result;
  result.method = "dense";
  result.rank = e.pivot_cols.size();
  std::vector<char> is_pivot(s.cols(), 0);
  for (auto c : e.pivot_cols) is_pivot[c] = 1;
  for (std::size_t c = 0; c < s.cols(); ++c)
    if (!is_pivot[c]) result.free_columns.push_back(static_cast<Index>(c));

  for (std::size_t r = result.rank; r < s.rows(); ++r) {
    for (std::size_t k = 0; k < s.rhs_count(); ++k) {
      if (e.rhs[r][k].is_zero()) continue;
      if (!result.inconsistent_row || e.row_origin[r] < *result.inconsistent_row) {
        result.inconsistent_row = e.row_origin[r];
        result.inconsistent_rhs = k;
      }
      break;
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
    for (std::size_t i = result.rank; i-- > 0;) {
      std::size_t c = e.pivot_cols[i];
      ParamPoly acc = e.rhs[i][k];
      for (std::size_t j = c + 1; j < s.cols(); ++j)
        if (!e.m[i][j].is_zero() && !x[j].is_zero()) acc -= x[j] * e.m[i][j];
      x[c] = acc * inverse(e.m[i][c]);
    }
    result.solutions.push_back(std::move(x));
  }
  return result;
}

}  // namespace spinrel
