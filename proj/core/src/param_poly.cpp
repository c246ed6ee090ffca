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

#include "spinrel/param_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace spinrel {

const char* param_name(Param p) {
  switch (p) {
    case Param::kF:
      return "f";
    case Param::kG1:
      return "g1";
    case Param::kG2:
      return "g2";
  }
  return "?";
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int k = 0; k < kParamCount; ++k)
    out.exponents[k] = static_cast<std::uint16_t>(exponents[k] + other.exponents[k]);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  // Higher power of an earlier parameter sorts first within a degree.
  for (int k = 0; k < kParamCount; ++k)
    if (auto c = other.exponents[k] <=> exponents[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int k = 0; k < kParamCount; ++k) {
    if (exponents[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += param_name(static_cast<Param>(k));
    if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
  }
  return out;
}

ParamPoly::ParamPoly(const RadNum& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial{}, constant);
}

ParamPoly ParamPoly::variable(Param p) {
  Monomial m;
  m.exponents[static_cast<int>(p)] = 1;
  return monomial(m, RadNum(1L));
}

ParamPoly ParamPoly::monomial(const Monomial& m, const RadNum& coeff) {
  ParamPoly out;
  if (!coeff.is_zero()) out.terms_.emplace_back(m, coeff);
  return out;
}

RadNum ParamPoly::constant_term() const { return coefficient(Monomial{}); }

RadNum ParamPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

int ParamPoly::degree(Param p) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(p));
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

RadNum ParamPoly::evaluate(const ParamValues& at) const {
  const mpq_class* values[kParamCount] = {&at.f, &at.g1, &at.g2};
  RadNum out;
  for (const auto& [m, c] : terms_) {
    mpq_class scale = 1;
    for (int k = 0; k < kParamCount; ++k)
      for (int e = 0; e < m.exponents[k]; ++e) scale *= *values[k];
    out += c * RadNum(scale);
  }
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      RadNum sum = a->second + b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  return *this += -other;
}

ParamPoly& ParamPoly::operator*=(const RadNum& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::map<Monomial, RadNum> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  ParamPoly out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = m.to_string();
    bool single = c.term_count() == 1;
    bool negative = single && sgn(c.terms()[0].coeff) < 0;
    std::string body;
    if (single) {
      body = (negative ? -c : c).to_string();
      if (!mono.empty()) {
        body = body == "1" ? mono : body + "*" + mono;
      }
    } else {
      body = mono.empty() ? c.to_string() : "(" + c.to_string() + ")*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& value) {
  return os << value.to_string();
}

}  // namespace spinrel
