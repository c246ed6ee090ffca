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

#ifndef SPINREL_WORD_POLY_HPP_
#define SPINREL_WORD_POLY_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spinrel/generator.hpp"
#include "spinrel/param_poly.hpp"

namespace spinrel {

// Component g_{name, m} of a multiplet.
struct Letter {
  GeneratorId gen = 0;
  int m = 0;

  auto operator<=>(const Letter&) const = default;
  // "T2[-1]".
  std::string to_string() const;
};

using Word = std::vector<Letter>;

std::string word_to_string(const Word& word);

// Element of the free associative algebra on multiplet components with
// ParamPoly coefficients. No zero coefficients are stored.
class WordPoly {
 public:
  using Map = std::map<Word, ParamPoly>;

  WordPoly() = default;
  static WordPoly letter(const Letter& l);

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const Word& w) const;

  void add(const Word& w, const ParamPoly& coeff);
  void add(Word&& w, const ParamPoly& coeff);

  WordPoly operator-() const;
  WordPoly& operator+=(const WordPoly& other);
  WordPoly& operator-=(const WordPoly& other);
  WordPoly& operator*=(const ParamPoly& scalar);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(WordPoly a, const ParamPoly& s) { return a *= s; }
  friend WordPoly operator*(const ParamPoly& s, WordPoly a) { return a *= s; }
  // Concatenation product, extended bilinearly.
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);

  bool operator==(const WordPoly& other) const = default;

  // One "<coefficient> <letters>" line per word, sorted by the letters text;
  // multi-term coefficients are parenthesized. The zero element dumps as "0".
  std::string dump() const;

 private:
  Map terms_;
};

std::ostream& operator<<(std::ostream& os, const WordPoly& value);

}  // namespace spinrel

#endif  // SPINREL_WORD_POLY_HPP_
