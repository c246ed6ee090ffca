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

#ifndef SPINREL_PARAM_POLY_HPP_
#define SPINREL_PARAM_POLY_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinrel/rad_num.hpp"

namespace spinrel {

// The undetermined parameters that ride along in coefficients.
enum class Param : int { kF = 0, kG1 = 1, kG2 = 2 };
inline constexpr int kParamCount = 3;

const char* param_name(Param p);

// Exponent vector over (f, g1, g2). Ordered by total degree, then
// lexicographically, so the constant monomial sorts first.
struct Monomial {
  std::array<std::uint16_t, kParamCount> exponents{};

  int degree(Param p) const { return exponents[static_cast<int>(p)]; }
  int total_degree() const {
    return exponents[0] + exponents[1] + exponents[2];
  }
  bool is_constant() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  // "", "f", "f^2*g2", ...
  std::string to_string() const;
};

// Point at which to evaluate a ParamPoly.
struct ParamValues {
  mpq_class f = 0;
  mpq_class g1 = 0;
  mpq_class g2 = 0;
};

// Commutative polynomial in f, g1, g2 with RadNum coefficients. Terms are kept
// sorted by monomial with no zero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<Monomial, RadNum>;

  ParamPoly() = default;
  ParamPoly(const RadNum& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(RadNum(constant)) {}  // NOLINT

  static ParamPoly variable(Param p);
  static ParamPoly monomial(const Monomial& m, const RadNum& coeff);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
  }
  // Coefficient of the constant monomial.
  RadNum constant_term() const;
  RadNum coefficient(const Monomial& m) const;

  // Highest exponent of p over all terms; 0 for the zero polynomial.
  int degree(Param p) const;
  int total_degree() const;

  RadNum evaluate(const ParamValues& at) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const RadNum& scalar);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const RadNum& s) { return a *= s; }
  friend ParamPoly operator*(const RadNum& s, ParamPoly a) { return a *= s; }

  bool operator==(const ParamPoly& other) const = default;

  // Canonical text, e.g. "5513476864/135 + 2747136/5*f + 50176*g1". A
  // multi-term RadNum coefficient is parenthesized: "(1 + sqrt(2))*f".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& value);

}  // namespace spinrel

#endif  // SPINREL_PARAM_POLY_HPP_
