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

#ifndef SPINREL_DENSE_HPP_
#define SPINREL_DENSE_HPP_

#include <cstddef>
#include <vector>

#include "spinrel/linsolve.hpp"
#include "spinrel/rad_num.hpp"
#include "spinrel/sparse_system.hpp"

namespace spinrel {

inline constexpr std::size_t kDefaultDenseLimit = 64;

using DenseMatrix = std::vector<std::vector<RadNum>>;

// Throws LimitError when either dimension exceeds max_size.
DenseMatrix to_dense(const SparseSystem& s, std::size_t max_size = kDefaultDenseLimit);

// Determinant by fraction-free (Bareiss) elimination with row swaps.
// Throws DomainError for a non-square matrix.
RadNum det_bareiss(const DenseMatrix& m, std::size_t max_size = kDefaultDenseLimit);

// Rank from the fraction-free echelon form.
std::size_t rank_bareiss(const DenseMatrix& m, std::size_t max_size = kDefaultDenseLimit);

// Dense counterpart of solve(): fraction-free echelon form of [A | b] and
// back substitution, free columns set to zero.
SolveResult solve_bareiss(const SparseSystem& s, std::size_t max_size = kDefaultDenseLimit);

}  // namespace spinrel

#endif  // SPINREL_DENSE_HPP_
