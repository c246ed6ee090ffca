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

#include "spinrel/rad_num.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <utility>

#include "spinrel/error.hpp"

namespace spinrel {
namespace {

// sqrt(m) * sqrt(n) = factor * sqrt(radicand) for square-free m, n.
std::pair<std::int64_t, std::int64_t> multiply_radicands(std::int64_t m,
                                                         std::int64_t n) {
  if (m == 1) return {1, n};
  if (n == 1) return {1, m};
  std::int64_t a = m < 0 ? -m : m;
  std::int64_t b = n < 0 ? -n : n;
  std::int64_t g = std::gcd(a, b);
  __int128 rad = static_cast<__int128>(a / g) * (b / g);
  if (rad > kMaxRadicand) throw LimitError("radicand product exceeds limit");
  bool neg_m = m < 0;
  bool neg_n = n < 0;
  if (neg_m && neg_n) return {-g, static_cast<std::int64_t>(rad)};
  if (neg_m || neg_n) return {g, -static_cast<std::int64_t>(rad)};
  return {g, static_cast<std::int64_t>(rad)};
}

// x = outside^2 * inside with inside square-free. Trial division up to
// kTrialLimit; any cofactor below kTrialLimit^3 left after that is a prime, a
// product of two distinct primes, or a prime square, and the last case is
// caught by the perfect-square test.
constexpr unsigned long kTrialLimit = 100000;

std::pair<mpz_class, mpz_class> split_square(mpz_class x) {
  mpz_class outside = 1;
  mpz_class inside = 1;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(x.get_mpz_t(), d * d) < 0) break;
    int e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), d)) {
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), d);
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) outside *= d;
    if (e % 2 == 1) inside *= d;
  }
  if (x > 1) {
    if (mpz_perfect_square_p(x.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
      outside *= r;
    } else {
      inside *= x;
    }
  }
  return {outside, inside};
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) {
    out.push_back(-1);
    n = -n;
  }
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

RadNum::RadNum(long value) {
  if (value != 0) terms_.push_back({1, mpq_class(value)});
}

RadNum::RadNum(const mpq_class& value) {
  if (sgn(value) != 0) {
    terms_.push_back({1, value});
    terms_.back().coeff.canonicalize();
  }
}

RadNum::RadNum(const mpz_class& value) {
  if (sgn(value) != 0) terms_.push_back({1, mpq_class(value)});
}

RadNum RadNum::normalized(std::int64_t radicand, const mpq_class& coeff) {
  if (radicand == 0) throw DomainError("radicand must be non-zero");
  if (radicand > kMaxRadicand || radicand < -kMaxRadicand)
    throw LimitError("radicand exceeds limit");
  RadNum out;
  if (sgn(coeff) == 0) return out;
  auto [outside, inside] = split_square(mpz_class(std::to_string(
      radicand < 0 ? -radicand : radicand)));
  std::int64_t sign = radicand < 0 ? -1 : 1;
  Term t{sign * static_cast<std::int64_t>(inside.get_si()),
         coeff * mpq_class(outside)};
  t.coeff.canonicalize();
  out.terms_.push_back(std::move(t));
  return out;
}

RadNum RadNum::sqrt_of(const mpq_class& q) {
  if (sgn(q) == 0) return {};
  auto [num_out, num_in] = split_square(abs(q.get_num()));
  auto [den_out, den_in] = split_square(q.get_den());
  // sqrt(a/b) = (a_out / (b_out b_in)) sqrt(a_in b_in)
  mpz_class rad = num_in * den_in;
  if (rad > kMaxRadicand) throw LimitError("radicand exceeds limit");
  RadNum out;
  mpq_class coeff(num_out, den_out * den_in);
  coeff.canonicalize();
  std::int64_t r = rad.get_si();
  out.terms_.push_back({sgn(q) < 0 ? -r : r, std::move(coeff)});
  return out;
}

mpq_class RadNum::rational_value() const {
  return coefficient(1);
}

mpq_class RadNum::coefficient(std::int64_t radicand) const {
  for (const auto& t : terms_)
    if (t.radicand == radicand) return t.coeff;
  return 0;
}

bool RadNum::is_real() const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [](const Term& t) { return t.radicand < 0; });
}

std::vector<std::int64_t> RadNum::generators() const {
  std::vector<std::int64_t> gens;
  for (const auto& t : terms_) {
    if (t.radicand == 1) continue;
    for (auto p : prime_factors(t.radicand)) gens.push_back(p);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

void RadNum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.radicand < b.radicand;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().radicand == t.radicand) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(merged);
}

RadNum RadNum::operator-() const {
  RadNum out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RadNum& RadNum::operator+=(const RadNum& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      mpq_class sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) merged.push_back({a->radicand, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadNum& RadNum::operator-=(const RadNum& other) { return *this += -other; }

RadNum operator*(const RadNum& a, const RadNum& b) {
  RadNum out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    auto [factor, rad] =
        multiply_radicands(a.terms_[0].radicand, b.terms_[0].radicand);
    out.terms_.push_back({rad, a.terms_[0].coeff * b.terms_[0].coeff});
    if (factor != 1) out.terms_[0].coeff *= mpq_class(factor);
    return out;
  }
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto [factor, rad] = multiply_radicands(x.radicand, y.radicand);
      mpq_class c = x.coeff * y.coeff;
      if (factor != 1) c *= mpq_class(factor);
      out.terms_.push_back({rad, std::move(c)});
    }
  }
  out.canonicalize();
  return out;
}

RadNum& RadNum::operator*=(const RadNum& other) {
  return *this = *this * other;
}

RadNum operator/(const RadNum& a, const RadNum& b) { return a * inverse(b); }

bool RadNum::operator<(const RadNum& other) const {
  if (terms_.size() != other.terms_.size())
    return terms_.size() < other.terms_.size();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& x = terms_[k];
    const auto& y = other.terms_[k];
    if (x.radicand != y.radicand) return x.radicand < y.radicand;
    if (x.coeff != y.coeff) return x.coeff < y.coeff;
  }
  return false;
}

RadNum RadNum::conjugate(std::int64_t generator) const {
  RadNum out = *this;
  for (auto& t : out.terms_) {
    bool flip = generator == -1 ? t.radicand < 0 : t.radicand % generator == 0;
    if (flip) t.coeff = -t.coeff;
  }
  return out;
}

RadNum inverse(const RadNum& a, int max_generators) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  if (a.is_rational()) return RadNum(mpq_class(1) / a.rational_value());
  auto gens = a.generators();
  if (static_cast<int>(gens.size()) > max_generators)
    throw LimitError("inverse involves " + std::to_string(gens.size()) +
                     " radical generators; limit is " +
                     std::to_string(max_generators));
  RadNum numerator(1L);
  RadNum denominator = a;
  for (auto p : gens) {
    RadNum conj = denominator.conjugate(p);
    numerator *= conj;
    denominator *= conj;
  }
  if (!denominator.is_rational())
    throw Error("inverse: conjugation did not rationalize the denominator");
  return numerator * RadNum(mpq_class(1) / denominator.rational_value());
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string RadNum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    mpq_class magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.radicand == 1) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += "sqrt(" + std::to_string(t.radicand) + ")";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RadNum& value) {
  return os << value.to_string();
}

}  // namespace spinrel
