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

#include "spinrel/coefficient_text.hpp"

#include <string>

#include "spinrel/error.hpp"

namespace spinrel {
namespace {

class CoefficientParser {
 public:
  CoefficientParser(TextCursor& cursor, const StopPredicate& stop)
      : cur_(cursor), stop_(stop) {}

  ParamPoly sum() {
    ParamPoly acc;
    bool negate = false;
    if (cur_.consume('-')) {
      negate = true;
    } else {
      cur_.consume('+');
    }
    ParamPoly first = product();
    acc = negate ? -first : first;
    for (;;) {
      char c = cur_.peek();
      if (c == '+') {
        cur_.set_pos(cur_.pos() + 1);
        acc += product();
      } else if (c == '-') {
        cur_.set_pos(cur_.pos() + 1);
        acc -= product();
      } else {
        return acc;
      }
    }
  }

 private:
  ParamPoly product() {
    ParamPoly acc = power();
    for (;;) {
      std::size_t save = cur_.pos();
      if (!cur_.consume('*')) return acc;
      if (stop_ && stop_(cur_)) {
        cur_.set_pos(save);
        return acc;
      }
      acc = acc * power();
    }
  }

  ParamPoly power() {
    ParamPoly base = primary();
    if (!cur_.consume('^')) return base;
    auto digits = cur_.read_digits();
    if (digits.size() > 3) cur_.fail("exponent too large");
    int e = std::stoi(std::string(digits));
    ParamPoly out(1L);
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  mpq_class fraction() {
    mpz_class num(std::string(cur_.read_digits()));
    if (!cur_.consume('/')) return mpq_class(num);
    std::size_t at = cur_.pos();
    mpz_class den(std::string(cur_.read_digits()));
    if (den == 0) {
      cur_.set_pos(at);
      cur_.fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  ParamPoly primary() {
    char c = cur_.peek();
    if (c >= '0' && c <= '9') return ParamPoly(RadNum(fraction()));
    if (c == '(') {
      cur_.expect('(');
      ParamPoly inner = sum();
      cur_.expect(')');
      return inner;
    }
    auto id = cur_.peek_identifier();
    if (id.empty()) cur_.fail("expected coefficient");
    std::size_t at = cur_.pos();
    cur_.set_pos(at + id.size());
    if (id == "i") return ParamPoly(RadNum::imaginary_unit());
    if (id == "f") return ParamPoly::variable(Param::kF);
    if (id == "g1") return ParamPoly::variable(Param::kG1);
    if (id == "g2") return ParamPoly::variable(Param::kG2);
    if (id == "sqrt") {
      cur_.expect('(');
      bool negative = cur_.consume('-');
      std::size_t arg_at = cur_.pos();
      mpq_class q = fraction();
      if (sgn(q) == 0) {
        cur_.set_pos(arg_at);
        cur_.fail("sqrt of zero is not a valid radicand");
      }
      cur_.expect(')');
      try {
        return ParamPoly(RadNum::sqrt_of(negative ? mpq_class(-q) : q));
      } catch (const Error& e) {
        cur_.set_pos(arg_at);
        cur_.fail(e.what());
      }
    }
    cur_.set_pos(at);
    cur_.fail("unknown symbol '" + std::string(id) + "'");
  }

  TextCursor& cur_;
  const StopPredicate& stop_;
};

}  // namespace

ParamPoly parse_coefficient(TextCursor& cursor, const StopPredicate& stop_before) {
  CoefficientParser parser(cursor, stop_before);
  return parser.sum();
}

ParamPoly parse_param_poly(std::string_view text) {
  TextCursor cursor(text);
  ParamPoly out = parse_coefficient(cursor);
  if (cursor.peek() != '\0') cursor.fail("unexpected trailing input");
  return out;
}

RadNum parse_rad_num(std::string_view text) {
  ParamPoly p = parse_param_poly(text);
  if (!p.is_constant())
    throw ParseError("coefficient depends on parameters: " + std::string(text),
                     1, 1);
  return p.constant_term();
}

}  // namespace spinrel
