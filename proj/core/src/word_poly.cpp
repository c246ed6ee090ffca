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

#include "spinrel/word_poly.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace spinrel {

std::string Letter::to_string() const {
  return generator_name(gen) + "[" + std::to_string(m) + "]";
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (const auto& l : word) out += l.to_string();
  return out;
}

WordPoly WordPoly::letter(const Letter& l) {
  WordPoly out;
  out.terms_.emplace(Word{l}, ParamPoly(1));
  return out;
}

ParamPoly WordPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void WordPoly::add(const Word& w, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void WordPoly::add(Word&& w, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

WordPoly WordPoly::operator-() const {
  WordPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

WordPoly& WordPoly::operator+=(const WordPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

WordPoly& WordPoly::operator*=(const ParamPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * scalar;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb);
    }
  }
  return out;
}

std::string WordPoly::dump() const {
  if (terms_.empty()) return "0\n";
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(terms_.size());
  for (const auto& [w, c] : terms_) {
    std::string coeff = c.to_string();
    if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
    lines.emplace_back(word_to_string(w), std::move(coeff));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [word, coeff] : lines) {
    out += coeff;
    out += ' ';
    out += word;
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WordPoly& value) {
  return os << value.dump();
}

}  // namespace spinrel
