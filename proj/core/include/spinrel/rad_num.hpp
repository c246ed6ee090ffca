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

#ifndef SPINREL_RAD_NUM_HPP_
#define SPINREL_RAD_NUM_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace spinrel {

// Largest |radicand| accepted from user input. Square-factor extraction is by
// trial division, so this bounds the cost of rad_normalize.
inline constexpr std::int64_t kMaxRadicand = 1'000'000'000'000'000LL;

// Default cap on the number of distinct prime generators (counting sqrt(-1))
// that inverse() will eliminate. Each generator doubles the conjugation work.
inline constexpr int kDefaultMaxInverseGenerators = 6;

// Exact element of Q(sqrt(n) : n square-free integer): a finite sum
// sum_k q_k * sqrt(n_k). n = 1 is the rational part; n = -1 is i.
//
// Normal form: terms sorted by radicand, radicands square-free and distinct,
// coefficients non-zero and in lowest terms. Zero is the empty sum, so two
// values are equal iff their term lists are identical.
class RadNum {
 public:
  struct Term {
    std::int64_t radicand;
    mpq_class coeff;

    bool operator==(const Term& other) const {
      return radicand == other.radicand && coeff == other.coeff;
    }
  };

  RadNum() = default;
  RadNum(long value);  // NOLINT(google-explicit-constructor)
  RadNum(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  RadNum(const mpz_class& value);  // NOLINT(google-explicit-constructor)

  // coeff * sqrt(radicand) with square factors pulled into the coefficient.
  // Throws DomainError for radicand == 0 or |radicand| > kMaxRadicand.
  static RadNum normalized(std::int64_t radicand, const mpq_class& coeff);

  // sqrt(q) for rational q, e.g. sqrt(7/6) = (1/6) sqrt(42).
  static RadNum sqrt_of(const mpq_class& q);

  static RadNum imaginary_unit() { return normalized(-1, 1); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
  }
  // Rational value; only meaningful when is_rational().
  mpq_class rational_value() const;
  // Coefficient of sqrt(radicand), zero if absent.
  mpq_class coefficient(std::int64_t radicand) const;
  // True when no term has a negative radicand.
  bool is_real() const;

  // Distinct primes (and -1) dividing some radicand, ascending.
  std::vector<std::int64_t> generators() const;

  RadNum operator-() const;
  RadNum& operator+=(const RadNum& other);
  RadNum& operator-=(const RadNum& other);
  RadNum& operator*=(const RadNum& other);
  friend RadNum operator+(RadNum a, const RadNum& b) { return a += b; }
  friend RadNum operator-(RadNum a, const RadNum& b) { return a -= b; }
  friend RadNum operator*(const RadNum& a, const RadNum& b);
  friend RadNum operator/(const RadNum& a, const RadNum& b);

  bool operator==(const RadNum& other) const { return terms_ == other.terms_; }

  // Total order on normal forms (term count, then terms). Only for use as a
  // container key; it is not compatible with the real order.
  bool operator<(const RadNum& other) const;

  // Canonical text: "0", "3/5", "2*sqrt(2)", "1/2 + 1/4*sqrt(2) - 1/4*sqrt(6)".
  // sqrt(-1) is written as such; i*sqrt(2) prints as sqrt(-2).
  std::string to_string() const;

  // Maps each generator p to -sqrt(p) (for p = -1: i -> -i).
  RadNum conjugate(std::int64_t generator) const;

 private:
  void canonicalize();

  std::vector<Term> terms_;
};

// Exact multiplicative inverse by repeated conjugation. Throws DomainError on
// zero and LimitError when more than max_generators distinct generators occur.
RadNum inverse(const RadNum& a, int max_generators = kDefaultMaxInverseGenerators);

// Named entry points matching the arithmetic contract.
inline RadNum rad_normalize(std::int64_t radicand, const mpq_class& coeff) {
  return RadNum::normalized(radicand, coeff);
}
inline RadNum rad_add(const RadNum& a, const RadNum& b) { return a + b; }
inline RadNum rad_mul(const RadNum& a, const RadNum& b) { return a * b; }
inline RadNum rad_inv(const RadNum& a) { return inverse(a); }

std::ostream& operator<<(std::ostream& os, const RadNum& value);

// Writes a rational in "p" or "p/q" form.
std::string rational_to_string(const mpq_class& q);

}  // namespace spinrel

#endif  // SPINREL_RAD_NUM_HPP_
