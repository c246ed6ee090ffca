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

#ifndef SPINREL_SPARSE_SYSTEM_HPP_
#define SPINREL_SPARSE_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinrel/param_poly.hpp"
#include "spinrel/rad_num.hpp"

namespace spinrel {

using Index = std::uint32_t;

// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<Index, RadNum>>;

// Coefficient matrix over RadNum with optional right-hand-side columns over
// ParamPoly. Indices are 0-based.
class SparseSystem {
 public:
  SparseSystem() = default;
  SparseSystem(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  // Stores a new entry. Zero values are ignored. Throws DomainError on an
  // out-of-range index or a repeated (row, col).
  void insert(std::size_t row, std::size_t col, const RadNum& value);
  const SparseRow& row(std::size_t r) const { return rows_[r]; }
  RadNum at(std::size_t row, std::size_t col) const;

  // Right-hand sides, one vector of length rows() per column.
  std::size_t rhs_count() const { return rhs_.size(); }
  std::size_t add_rhs_column();
  void set_rhs(std::size_t row, std::size_t column, const ParamPoly& value);
  const std::vector<ParamPoly>& rhs(std::size_t column) const { return rhs_[column]; }

  bool is_rational() const;
  // Copy with the right-hand sides dropped.
  SparseSystem matrix_only() const;

  // A * x for a dense vector x.
  std::vector<RadNum> multiply(const std::vector<RadNum>& x) const;
  std::vector<ParamPoly> multiply(const std::vector<ParamPoly>& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<std::vector<ParamPoly>> rhs_;
};

// Matrix file format (0-based indices, '#' starts a comment):
//
//   rows cols [nrhs]
//   r c <coefficient>          matrix entry, parameter-free
//   b r <coefficient>          right-hand side when nrhs <= 1
//   b r k <coefficient>        right-hand side column k when nrhs > 1
//
// Throws ParseError with the source position; a parameter inside the matrix
// body is reported at its entry.
SparseSystem parse_matrix(std::string_view text);
SparseSystem load_matrix(const std::string& path);
std::string serialize(const SparseSystem& system);

}  // namespace spinrel

#endif  // SPINREL_SPARSE_SYSTEM_HPP_
