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

#ifndef SPINREL_LINSOLVE_HPP_
#define SPINREL_LINSOLVE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinrel/param_poly.hpp"
#include "spinrel/rad_num.hpp"
#include "spinrel/sparse_system.hpp"

namespace spinrel {

// Pivot order chosen by sparse elimination: pivots[k] = (row, col).
struct PivotPlan {
  std::vector<std::pair<Index, Index>> pivots;
  std::vector<Index> free_columns;  // ascending
};

// Exact rank by sparse elimination with Markowitz pivoting. Ties on the
// Markowitz cost go to the pivot with fewer RadNum terms, then the lowest
// column, then the lowest row. Results do not depend on `threads`.
std::size_t rank(const SparseSystem& s, int threads = 0);

// Null-space basis, one vector per free column (ascending), with that free
// column set to 1 and the other free columns to 0.
std::vector<std::vector<RadNum>> nullspace(const SparseSystem& s, int threads = 0);

PivotPlan pivot_plan(const SparseSystem& s, int threads = 0);

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };
const char* solve_status_name(SolveStatus s);

enum class SolveMethod {
  kAuto,       // p-adic lifting for large square rational systems, else sparse
  kSparse,     // Markowitz elimination over RadNum
  kPadic,      // p-adic lifting; falls back to kSparse if it cannot finish
};

struct SolveOptions {
  SolveMethod method = SolveMethod::kAuto;
  int threads = 0;
  // kAuto switches to p-adic lifting from this many unknowns.
  std::size_t padic_threshold = 48;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnique;
  std::size_t rank = 0;
  // One vector of length cols() per right-hand-side column. For an
  // underdetermined system this is the solution with free columns at zero.
  std::vector<std::vector<ParamPoly>> solutions;
  std::vector<Index> free_columns;
  // Original index of the first row whose reduced equation reads 0 = c != 0.
  std::optional<std::size_t> inconsistent_row;
  std::optional<std::size_t> inconsistent_rhs;
  std::string method;  // "sparse" or "p-adic"
};

// Solves A x = b for every right-hand-side column. Division happens only by
// matrix pivots, so solutions stay polynomial in f, g1, g2.
SolveResult solve(const SparseSystem& s, const SolveOptions& options = {});

// Row-echelon basis grown one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dimension) : dimension_(dimension) {}

  // Reduces v against the basis; when a non-zero remainder is left it joins
  // the basis and the call returns true.
  bool add(SparseRow v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::map<Index, SparseRow> rows_;  // keyed by leading column, leading entry 1
};

// a - factor * b for sorted sparse rows.
SparseRow axpy(const SparseRow& a, const RadNum& factor, const SparseRow& b);

}  // namespace spinrel

#endif  // SPINREL_LINSOLVE_HPP_
