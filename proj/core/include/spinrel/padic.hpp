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

#ifndef SPINREL_PADIC_HPP_
#define SPINREL_PADIC_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spinrel/param_poly.hpp"
#include "spinrel/sparse_system.hpp"

namespace spinrel {

struct PadicStats {
  std::uint32_t prime = 0;
  std::size_t primes_tried = 0;
  std::size_t lifting_steps = 0;
};

// Dixon p-adic lifting for a square matrix with rational entries: LU modulo a
// word-size prime, lifting of each right-hand side, rational reconstruction
// and an exact check A x = b over the integers. Returns nullopt when the
// matrix is singular modulo every tried prime or the check fails; a returned
// solution is always exact.
std::optional<std::vector<std::vector<mpq_class>>> padic_solve(
    const SparseSystem& a, const std::vector<std::vector<mpq_class>>& rhs,
    PadicStats* stats = nullptr);

// As padic_solve for the system's own right-hand sides: each ParamPoly column
// is split into rational components per (monomial, radicand).
std::optional<std::vector<std::vector<ParamPoly>>> padic_solve_param(
    const SparseSystem& s, PadicStats* stats = nullptr);

// Largest primes below 2^26, descending.
const std::vector<std::uint32_t>& lifting_primes();

}  // namespace spinrel

#endif  // SPINREL_PADIC_HPP_
