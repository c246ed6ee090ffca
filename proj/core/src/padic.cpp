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

#include "spinrel/padic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace spinrel {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Products of residues below 2^26 stay under 2^52, so 4096 of them fit in a
// 64-bit accumulator before a reduction is needed.
constexpr std::size_t kDelay = 4096;

u32 pow_mod(u64 a, u64 e, u32 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

u32 dot_mod(const u32* a, const u32* b, std::size_t n, u32 p) {
  u64 acc = 0;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = std::min(n, k + kDelay);
    u64 s = 0;
    for (; k < end; ++k) s += static_cast<u64>(a[k]) * b[k];
    acc = (acc + s % p) % p;
  }
  return static_cast<u32>(acc);
}

u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }

// Dense LU of a row-permuted matrix modulo p, computed left-looking so every
// inner loop is a contiguous dot product.
class ModLu {
 public:
  ModLu(std::vector<u32> a, std::size_t n, u32 p)
      : n_(n), p_(p), a_(std::move(a)), l_(n * n, 0), ut_(n * n, 0),
        u_(n * n, 0), dinv_(n, 0), perm_(n) {}

  bool factor() {
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    std::vector<u32> v(n);
    for (std::size_t k = 0; k < n; ++k) {
      const u32* uk = &ut_[k * n];
      std::size_t pivot = n;
      for (std::size_t i = k; i < n; ++i) {
        v[i] = sub_mod(a_[perm_[i] * n + k], dot_mod(&l_[i * n], uk, k, p_), p_);
        if (pivot == n && v[i] != 0) pivot = i;
      }
      if (pivot == n) return false;
      if (pivot != k) {
        std::swap(perm_[pivot], perm_[k]);
        std::swap_ranges(&l_[pivot * n], &l_[pivot * n] + k, &l_[k * n]);
        std::swap(v[pivot], v[k]);
      }
      ut_[k * n + k] = v[k];
      dinv_[k] = inv_mod(v[k], p_);
      for (std::size_t i = k + 1; i < n; ++i)
        l_[i * n + k] = static_cast<u32>(static_cast<u64>(v[i]) * dinv_[k] % p_);
      const u32* lk = &l_[k * n];
      const u32* arow = &a_[perm_[k] * n];
      for (std::size_t j = k + 1; j < n; ++j)
        ut_[j * n + k] = sub_mod(arow[j], dot_mod(lk, &ut_[j * n], k, p_), p_);
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t <= j; ++t) u_[t * n + j] = ut_[j * n + t];
    a_.clear();
    a_.shrink_to_fit();
    ut_.clear();
    ut_.shrink_to_fit();
    return true;
  }

  // Solves A x = r (mod p); r is indexed by original row.
  std::vector<u32> solve(const std::vector<u32>& r) const {
    const std::size_t n = n_;
    std::vector<u32> y(n);
    for (std::size_t k = 0; k < n; ++k)
      y[k] = sub_mod(r[perm_[k]], dot_mod(&l_[k * n], y.data(), k, p_), p_);
    std::vector<u32> x(n);
    for (std::size_t t = n; t-- > 0;) {
      u32 s = dot_mod(&u_[t * n + t + 1], &x[t + 1], n - t - 1, p_);
      x[t] = static_cast<u32>(static_cast<u64>(sub_mod(y[t], s, p_)) * dinv_[t] % p_);
    }
    return x;
  }

 private:
  std::size_t n_;
  u32 p_;
  std::vector<u32> a_;
  std::vector<u32> l_;
  std::vector<u32> ut_;
  std::vector<u32> u_;
  std::vector<u32> dinv_;
  std::vector<std::size_t> perm_;
};

using IntRow = std::vector<std::pair<Index, mpz_class>>;

double log2_of(const mpz_class& v) {
  if (v == 0) return 0.0;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

// sum_{s} digits[s][j] p^s by binary splitting.
class DigitAssembler {
 public:
  DigitAssembler(const std::vector<std::vector<u32>>& digits, u32 p)
      : digits_(digits), p_(p) {}

  mpz_class value(std::size_t j) { return build(j, 0, digits_.size()); }

 private:
  mpz_class build(std::size_t j, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return mpz_class(digits_[lo][j]);
    std::size_t mid = lo + (hi - lo) / 2;
    return build(j, lo, mid) + power(mid - lo) * build(j, mid, hi);
  }

  const mpz_class& power(std::size_t e) {
    auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), p_, e);
    return powers_.emplace(e, std::move(v)).first->second;
  }

  const std::vector<std::vector<u32>>& digits_;
  u32 p_;
  std::map<std::size_t, mpz_class> powers_;
};

// Finds a/b = u (mod m) with |a| <= bound, 0 < b <= bound.
bool rational_reconstruct(const mpz_class& u, const mpz_class& m,
                          const mpz_class& bound, mpz_class& a, mpz_class& b) {
  mpz_class r0 = m;
  mpz_class r1 = u;
  mpz_class t0 = 0;
  mpz_class t1 = 1;
  mpz_class q;
  mpz_class tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  if (t1 < 0) {
    a = -r1;
    b = -t1;
  } else {
    a = r1;
    b = t1;
  }
  return true;
}

struct Lifter {
  const std::vector<IntRow>& rows;
  const ModLu& lu;
  u32 p;
  std::size_t steps;

  // Digits of A^{-1} b in base p.
  std::vector<std::vector<u32>> lift(std::vector<mpz_class> r) const {
    const std::size_t n = rows.size();
    std::vector<std::vector<u32>> digits(steps);
    std::vector<u32> rm(n);
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t i = 0; i < n; ++i)
        rm[i] = static_cast<u32>(mpz_fdiv_ui(r[i].get_mpz_t(), p));
      std::vector<u32> x = lu.solve(rm);
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [c, a] : rows[i])
          if (x[c] != 0) mpz_submul_ui(r[i].get_mpz_t(), a.get_mpz_t(), x[c]);
        mpz_divexact_ui(r[i].get_mpz_t(), r[i].get_mpz_t(), p);
      }
      digits[s] = std::move(x);
    }
    return digits;
  }
};

}  // namespace

const std::vector<std::uint32_t>& lifting_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (u32 c = (1u << 26) - 1; out.size() < 3; c -= 2) {
      bool prime = true;
      for (u32 d = 3; d * d <= c; d += 2) {
        if (c % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

std::optional<std::vector<std::vector<mpq_class>>> padic_solve(
    const SparseSystem& a, const std::vector<std::vector<mpq_class>>& rhs,
    PadicStats* stats) {
  const std::size_t n = a.rows();
  if (n != a.cols() || n == 0 || !a.is_rational()) return std::nullopt;

  // Clear denominators row by row.
  std::vector<IntRow> rows(n);
  std::vector<mpz_class> row_scale(n);
  std::vector<mpz_class> col_norm2(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& [c, v] : a.row(i))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational_value().get_den_mpz_t());
    row_scale[i] = l;
    for (const auto& [c, v] : a.row(i)) {
      mpq_class q = v.rational_value() * l;
      mpz_class z = q.get_num();
      col_norm2[c] += z * z;
      rows[i].emplace_back(c, std::move(z));
    }
  }

  std::vector<std::vector<mpq_class>> solutions;
  solutions.reserve(rhs.size());

  std::optional<ModLu> lu;
  u32 p = 0;
  const auto& primes = lifting_primes();
  for (std::size_t t = 0; t < primes.size() && !lu; ++t) {
    p = primes[t];
    std::vector<u32> dense(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [c, z] : rows[i])
        dense[i * n + c] = static_cast<u32>(mpz_fdiv_ui(z.get_mpz_t(), p));
    ModLu candidate(std::move(dense), n, p);
    if (stats) stats->primes_tried = t + 1;
    if (candidate.factor()) lu.emplace(std::move(candidate));
  }
  if (!lu) return std::nullopt;
  if (stats) stats->prime = p;

  double log_p = std::log2(static_cast<double>(p));
  for (const auto& b : rhs) {
    if (b.size() != n) return std::nullopt;
    // Integer right-hand side: row scaling, then a common denominator.
    std::vector<mpq_class> scaled(n);
    mpz_class beta = 1;
    for (std::size_t i = 0; i < n; ++i) {
      scaled[i] = b[i] * row_scale[i];
      mpz_lcm(beta.get_mpz_t(), beta.get_mpz_t(), scaled[i].get_den_mpz_t());
    }
    std::vector<mpz_class> bz(n);
    mpz_class b_norm2 = 0;
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class q = scaled[i] * beta;
      bz[i] = q.get_num();
      b_norm2 += bz[i] * bz[i];
      all_zero = all_zero && bz[i] == 0;
    }
    if (all_zero) {
      solutions.emplace_back(n, mpq_class(0));
      continue;
    }

    // Hadamard-type bound on |det A| and every Cramer numerator.
    double log_b = 0.5 * log2_of(b_norm2);
    double log_h = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      log_h += std::max(0.5 * log2_of(col_norm2[j]), log_b);
    auto steps = static_cast<std::size_t>(std::ceil((2.0 * log_h + 2.0) / log_p)) + 1;
    if (stats) stats->lifting_steps = std::max(stats->lifting_steps, steps);

    Lifter lifter{rows, *lu, p, steps};
    auto digits = lifter.lift(bz);

    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, steps);
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

    DigitAssembler assemble(digits, p);
    std::vector<mpq_class> x(n);
    mpz_class den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class y = assemble.value(j) * den % modulus;
      if (y > half) y -= modulus;
      mpz_class num;
      mpz_class d;
      if (abs(y) <= bound) {
        num = y;
        d = 1;
      } else {
        if (y < 0) y += modulus;
        if (!rational_reconstruct(y, modulus, bound, num, d)) return std::nullopt;
      }
      x[j] = mpq_class(num, d * den);
      x[j].canonicalize();
      den *= d;
    }

    // Exact check A' (den x) = den b'.
    std::vector<mpz_class> nums(n);
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class q = x[j] * den;
      nums[j] = q.get_num();
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class acc = 0;
      for (const auto& [c, z] : rows[i]) acc += z * nums[c];
      if (acc != den * bz[i]) return std::nullopt;
    }
    for (auto& v : x) v /= beta;
    solutions.push_back(std::move(x));
  }
  return solutions;
}

std::optional<std::vector<std::vector<ParamPoly>>> padic_solve_param(
    const SparseSystem& s, PadicStats* stats) {
  const std::size_t n = s.rows();
  using Key = std::pair<Monomial, std::int64_t>;
  std::vector<std::vector<Key>> keys(s.rhs_count());
  std::vector<std::vector<mpq_class>> columns;
  for (std::size_t k = 0; k < s.rhs_count(); ++k) {
    std::map<Key, std::vector<mpq_class>> parts;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [mono, value] : s.rhs(k)[i].terms()) {
        for (const auto& term : value.terms()) {
          auto& col = parts[{mono, term.radicand}];
          if (col.empty()) col.assign(n, mpq_class(0));
          col[i] = term.coeff;
        }
      }
    }
    for (auto& [key, col] : parts) {
      keys[k].push_back(key);
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::vector<mpq_class>> parts;
  if (!columns.empty()) {
    auto solved = padic_solve(s, columns, stats);
    if (!solved) return std::nullopt;
    parts = std::move(*solved);
  } else {
    // No non-zero right-hand side: still require an invertible matrix.
    std::vector<std::vector<mpq_class>> probe{std::vector<mpq_class>(n, mpq_class(0))};
    probe[0][0] = 1;
    if (!padic_solve(s, probe, stats)) return std::nullopt;
  }
  std::vector<std::vector<ParamPoly>> out;
  std::size_t next = 0;
  for (std::size_t k = 0; k < s.rhs_count(); ++k) {
    std::vector<ParamPoly> x(n);
    for (const auto& [mono, radicand] : keys[k]) {
      const auto& part = parts[next++];
      for (std::size_t j = 0; j < n; ++j)
        if (part[j] != 0)
          x[j] += ParamPoly::monomial(mono, RadNum::normalized(radicand, part[j]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace spinrel
