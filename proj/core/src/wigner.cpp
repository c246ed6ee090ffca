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

#include "spinrel/wigner.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "spinrel/error.hpp"

namespace spinrel {
namespace {

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void check_spins(const CgKey& key) {
  if (key.j1 < 0 || key.j2 < 0 || key.j < 0)
    throw DomainError("spins must be non-negative integers");
}

const RadNum& zero_rad() {
  static const RadNum zero;
  return zero;
}

}  // namespace

bool CgKey::projections_in_range() const {
  return std::abs(m1) <= j1 && std::abs(m2) <= j2 && std::abs(m) <= j;
}

bool CgKey::triangle() const {
  return std::abs(j1 - j2) <= j && j <= j1 + j2;
}

RadNum cg(const CgKey& key) {
  check_spins(key);
  const auto& [j1, m1, j2, m2, j, m] = key;
  if (m != m1 + m2 || !key.triangle() || !key.projections_in_range()) return {};

  mpq_class radicand = mpq_class(2 * j + 1) * mpq_class(factorial(j + j1 - j2)) *
                       mpq_class(factorial(j - j1 + j2)) *
                       mpq_class(factorial(j1 + j2 - j)) /
                       mpq_class(factorial(j1 + j2 + j + 1));
  radicand *= mpq_class(factorial(j + m) * factorial(j - m) *
                        factorial(j1 - m1) * factorial(j1 + m1) *
                        factorial(j2 - m2) * factorial(j2 + m2));

  mpq_class sum = 0;
  for (int k = 0;; ++k) {
    int a = j1 + j2 - j - k;
    int b = j1 - m1 - k;
    int c = j2 + m2 - k;
    if (a < 0 || b < 0 || c < 0) break;
    int d = j - j2 + m1 + k;
    int e = j - j1 - m2 + k;
    if (d < 0 || e < 0) continue;
    mpz_class denom = factorial(k) * factorial(a) * factorial(b) *
                      factorial(c) * factorial(d) * factorial(e);
    mpq_class term(1, 1);
    term /= mpq_class(denom);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  if (sgn(sum) == 0) return {};
  return RadNum::sqrt_of(radicand) * RadNum(sum);
}

RadNum three_j(int j1, int m1, int j2, int m2, int j3, int m3) {
  RadNum c = cg({j1, m1, j2, m2, j3, -m3});
  if (c.is_zero()) return c;
  int phase = j1 - j2 - m3;
  RadNum scale = RadNum::sqrt_of(mpq_class(1, 2 * j3 + 1));
  if (phase % 2 != 0) scale = -scale;
  return c * scale;
}

CgTable::CgTable(int j1, int j2) : j1_(j1), j2_(j2) {
  if (j1 < 0 || j2 < 0) throw DomainError("spins must be non-negative integers");
  int jcount = j1 + j2 - std::abs(j1 - j2) + 1;
  values_.resize(static_cast<std::size_t>(jcount) * (2 * j1 + 1) * (2 * j2 + 1));
  for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
    for (int m1 = -j1; m1 <= j1; ++m1)
      for (int m2 = -j2; m2 <= j2; ++m2)
        if (std::abs(m1 + m2) <= j)
          values_[index(m1, m2, j)] = cg({j1, m1, j2, m2, j, m1 + m2});
}

std::size_t CgTable::index(int m1, int m2, int j) const {
  std::size_t jj = static_cast<std::size_t>(j - std::abs(j1_ - j2_));
  return (jj * (2 * j1_ + 1) + static_cast<std::size_t>(m1 + j1_)) *
             (2 * j2_ + 1) +
         static_cast<std::size_t>(m2 + j2_);
}

const RadNum& CgTable::get(int m1, int m2, int j, int m) const {
  if (m != m1 + m2 || j < std::abs(j1_ - j2_) || j > j1_ + j2_ ||
      std::abs(m1) > j1_ || std::abs(m2) > j2_ || std::abs(m) > j)
    return zero_rad();
  return values_[index(m1, m2, j)];
}

std::map<CgKey, RadNum> CgTable::nonzero_entries() const {
  std::map<CgKey, RadNum> out;
  for (int j = std::abs(j1_ - j2_); j <= j1_ + j2_; ++j)
    for (int m1 = -j1_; m1 <= j1_; ++m1)
      for (int m2 = -j2_; m2 <= j2_; ++m2) {
        const RadNum& v = get(m1, m2, j, m1 + m2);
        if (!v.is_zero()) out.emplace(CgKey{j1_, m1, j2_, m2, j, m1 + m2}, v);
      }
  return out;
}

const CgTable& cg_table(int j1, int j2, int max_spin) {
  if (j1 < 0 || j2 < 0) throw DomainError("spins must be non-negative integers");
  if (j1 > max_spin || j2 > max_spin)
    throw LimitError("spin exceeds Clebsch-Gordan table limit " +
                     std::to_string(max_spin));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<CgTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{j1, j2}];
  if (!slot) slot = std::make_unique<CgTable>(j1, j2);
  return *slot;
}

namespace {

// Coupled states of j1 (x) j2 as vectors over the product basis |m1, m2>.
class LadderBuilder {
 public:
  LadderBuilder(int j1, int j2) : j1_(j1), j2_(j2) {}

  std::map<CgKey, RadNum> build() {
    // states_[(J, M)] holds |J M> as coefficients over |m1, m2>.
    for (int J = j1_ + j2_; J >= std::abs(j1_ - j2_); --J) {
      Vec top = top_state(J);
      states_[{J, J}] = top;
      Vec cur = std::move(top);
      for (int M = J; M > -J; --M) {
        Vec next = lower(cur);
        RadNum norm = RadNum::sqrt_of(mpq_class(1, (J + M) * (J - M + 1)));
        for (auto& [basis, c] : next) c *= norm;
        states_[{J, M - 1}] = next;
        cur = std::move(next);
      }
    }
    std::map<CgKey, RadNum> out;
    for (const auto& [jm, vec] : states_)
      for (const auto& [basis, c] : vec)
        if (!c.is_zero())
          out.emplace(CgKey{j1_, basis.first, j2_, basis.second, jm.first,
                            jm.second},
                      c);
    return out;
  }

 private:
  using Basis = std::pair<int, int>;
  using Vec = std::map<Basis, RadNum>;

  Vec lower(const Vec& v) const {
    Vec out;
    for (const auto& [basis, c] : v) {
      auto [m1, m2] = basis;
      if (m1 > -j1_)
        out[{m1 - 1, m2}] +=
            c * RadNum::sqrt_of(mpq_class((j1_ + m1) * (j1_ - m1 + 1)));
      if (m2 > -j2_)
        out[{m1, m2 - 1}] +=
            c * RadNum::sqrt_of(mpq_class((j2_ + m2) * (j2_ - m2 + 1)));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  static RadNum dot(const Vec& a, const Vec& b) {
    RadNum out;
    for (const auto& [basis, c] : a) {
      auto it = b.find(basis);
      if (it != b.end()) out += c * it->second;
    }
    return out;
  }

  // |J J>: orthogonal complement of the higher multiplets' M = J states,
  // phased so that <j1 j1; j2 J-j1 | J J> > 0.
  Vec top_state(int J) const {
    Vec v;
    v[{j1_, J - j1_}] = RadNum(1L);
    for (int higher = j1_ + j2_; higher > J; --higher) {
      const Vec& u = states_.at({higher, J});
      RadNum overlap = dot(u, v);
      for (const auto& [basis, c] : u) v[basis] -= overlap * c;
    }
    std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
    RadNum norm2 = dot(v, v);
    if (!norm2.is_rational() || sgn(norm2.rational_value()) <= 0)
      throw Error("ladder construction produced a non-positive norm");
    RadNum scale = RadNum::sqrt_of(mpq_class(1) / norm2.rational_value());
    for (auto& [basis, c] : v) c *= scale;
    return v;
  }

  int j1_;
  int j2_;
  std::map<std::pair<int, int>, Vec> states_;
};

}  // namespace

std::map<CgKey, RadNum> cg_table_ladder(int j1, int j2) {
  if (j1 < 0 || j2 < 0) throw DomainError("spins must be non-negative integers");
  return LadderBuilder(j1, j2).build();
}

RadNum cg_ladder(const CgKey& key) {
  check_spins(key);
  if (key.m != key.m1 + key.m2 || !key.triangle() ||
      !key.projections_in_range())
    return {};
  auto table = cg_table_ladder(key.j1, key.j2);
  auto it = table.find(key);
  return it == table.end() ? RadNum{} : it->second;
}

}  // namespace spinrel
