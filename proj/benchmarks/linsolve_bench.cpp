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

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "spinrel/dense.hpp"
#include "spinrel/linsolve.hpp"

namespace spinrel {
namespace {

SparseSystem rational_system(std::size_t n, std::size_t per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SparseSystem s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.insert(i, perm[i], RadNum(static_cast<long>(200 + rng() % 100)));
    for (std::size_t k = 1; k < per_row; ++k) {
      std::size_t c = rng() % n;
      if (s.at(i, c).is_zero()) s.insert(i, c, RadNum(static_cast<long>(rng() % 21) - 10));
    }
  }
  s.add_rhs_column();
  for (std::size_t i = 0; i < n; ++i)
    s.set_rhs(i, 0, ParamPoly(static_cast<long>(rng() % 19) - 9) +
                        ParamPoly(static_cast<long>(rng() % 7) - 3) *
                            ParamPoly::variable(Param::kF));
  return s;
}

SparseSystem radical_system(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RadNum radicals[] = {RadNum(1), RadNum::sqrt_of(2), RadNum::sqrt_of(3)};
  SparseSystem s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || rng() % 4 == 0)
        s.insert(i, j, RadNum(static_cast<long>(rng() % 9) + 1) * radicals[rng() % 3]);
  s.add_rhs_column();
  for (std::size_t i = 0; i < n; ++i) s.set_rhs(i, 0, ParamPoly(static_cast<long>(i % 5)));
  return s;
}

void BM_SparseRational(benchmark::State& state) {
  SparseSystem s = rational_system(static_cast<std::size_t>(state.range(0)), 10, 1);
  SolveOptions o;
  o.method = SolveMethod::kSparse;
  for (auto _ : state) benchmark::DoNotOptimize(solve(s, o));
}
BENCHMARK(BM_SparseRational)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PadicRational(benchmark::State& state) {
  SparseSystem s = rational_system(static_cast<std::size_t>(state.range(0)), 10, 1);
  SolveOptions o;
  o.method = SolveMethod::kPadic;
  for (auto _ : state) benchmark::DoNotOptimize(solve(s, o));
}
BENCHMARK(BM_PadicRational)->Arg(100)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SparseRadical(benchmark::State& state) {
  SparseSystem s = radical_system(static_cast<std::size_t>(state.range(0)), 2);
  SolveOptions o;
  o.method = SolveMethod::kSparse;
  for (auto _ : state) benchmark::DoNotOptimize(solve(s, o));
}
BENCHMARK(BM_SparseRadical)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_BareissRadical(benchmark::State& state) {
  SparseSystem s = radical_system(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bareiss(s));
}
BENCHMARK(BM_BareissRadical)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace spinrel
