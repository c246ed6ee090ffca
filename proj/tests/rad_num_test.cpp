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

#include <gtest/gtest.h>

#include <random>

#include "spinrel/coefficient_text.hpp"
#include "spinrel/error.hpp"
#include "spinrel/rad_num.hpp"

namespace spinrel {
namespace {

RadNum q(long n, long d = 1) { return RadNum(mpq_class(n, d)); }
RadNum s(long r) { return RadNum::normalized(r, 1); }

TEST(RadNormalize, ExtractsSquareFactors) {
  EXPECT_EQ(rad_normalize(8, 1), RadNum::normalized(2, 2));
  EXPECT_EQ(rad_normalize(8, 1).to_string(), "2*sqrt(2)");
  EXPECT_EQ(rad_normalize(1, mpq_class(3, 5)), q(3, 5));
  EXPECT_TRUE(rad_normalize(1, mpq_class(3, 5)).is_rational());
  EXPECT_EQ(rad_normalize(-4, 1), RadNum::imaginary_unit() * q(2));
  EXPECT_EQ(rad_normalize(-4, 1).terms()[0].radicand, -1);
}

TEST(RadNormalize, RejectsZeroRadicand) {
  EXPECT_THROW(rad_normalize(0, 1), DomainError);
}

TEST(RadNormalize, LargeSquareFactors) {
  // 999983 is prime.
  RadNum v = rad_normalize(999983LL * 999983LL * 6, 1);
  ASSERT_EQ(v.term_count(), 1u);
  EXPECT_EQ(v.terms()[0].radicand, 6);
  EXPECT_EQ(v.terms()[0].coeff, mpq_class(999983));
}

TEST(RadNormalize, SqrtOfRational) {
  RadNum v = RadNum::sqrt_of(mpq_class(7, 6));
  EXPECT_EQ(v, RadNum::normalized(42, mpq_class(1, 6)));
  EXPECT_EQ(v * v, q(7, 6));
  EXPECT_EQ(RadNum::sqrt_of(mpq_class(-1)), RadNum::imaginary_unit());
}

TEST(RadArith, Examples) {
  EXPECT_EQ(rad_mul(q(1) + s(2), q(1) - s(2)), q(-1));
  EXPECT_EQ(rad_mul(s(-1), s(-1)), q(-1));
  RadNum r = RadNum::normalized(42, mpq_class(1, 6));
  EXPECT_EQ(r * r, q(7, 6));
  EXPECT_EQ(rad_add(s(2), -s(2)), RadNum());
  EXPECT_TRUE(RadNum().is_zero());
  EXPECT_EQ(RadNum().terms().size(), 0u);
}

TEST(RadArith, SignedRadicandProducts) {
  EXPECT_EQ(s(-2) * s(-3), -s(6));
  EXPECT_EQ(s(-2) * s(3), s(-6));
  EXPECT_EQ(s(-1) * s(2), s(-2));
  EXPECT_EQ(s(6) * s(10), q(2) * s(15));
  EXPECT_EQ(s(-6) * s(-6), q(-6));
}

TEST(RadInv, Examples) {
  EXPECT_EQ(rad_inv(q(2) * s(2)), q(1, 4) * s(2));
  EXPECT_EQ(rad_inv(q(1) + s(2)), q(-1) + s(2));
  EXPECT_THROW(rad_inv(RadNum()), DomainError);
}

// Frozen value, independently checked by multiplying out
// (1 + r2 + r3)(1/2 + r2/4 - r6/4) term by term:
//   1/2 + r2/4 - r6/4 + r2/2 + 1/2 - r3/2 + r3/2 + r6/4 - 3 r2/4 = 1.
TEST(RadInv, ThreeTermFrozen) {
  RadNum a = q(1) + s(2) + s(3);
  RadNum expected = q(1, 2) + q(1, 4) * s(2) - q(1, 4) * s(6);
  EXPECT_EQ(rad_inv(a), expected);
  EXPECT_EQ(rad_inv(a).to_string(), "1/2 + 1/4*sqrt(2) - 1/4*sqrt(6)");
}

// Oracle for the product: schoolbook expansion written out over the
// (1, sqrt2, sqrt3, sqrt6) basis without touching RadNum multiplication.
TEST(RadInv, ThreeTermMultiplyOutOracle) {
  RadNum v = rad_inv(q(1) + s(2) + s(3));
  mpq_class c1 = v.coefficient(1), c2 = v.coefficient(2), c3 = v.coefficient(3),
            c6 = v.coefficient(6);
  // (1 + r2 + r3)(c1 + c2 r2 + c3 r3 + c6 r6)
  mpq_class one = c1 + 2 * c2 + 3 * c3;
  mpq_class r2 = c2 + c1 + 3 * c6;
  mpq_class r3 = c3 + 2 * c6 + c1;
  mpq_class r6 = c6 + c3 + c2;
  EXPECT_EQ(one, 1);
  EXPECT_EQ(r2, 0);
  EXPECT_EQ(r3, 0);
  EXPECT_EQ(r6, 0);
}

TEST(RadInv, GeneratorLimit) {
  RadNum a = q(1) + s(2) + s(3) + s(5) + s(7);
  EXPECT_THROW(inverse(a, 3), LimitError);
  EXPECT_EQ(inverse(a, 4) * a, q(1));
}

RadNum random_rad(std::mt19937_64& rng, int max_terms) {
  static const long radicands[] = {1, 2, 3, 5, 6, -1, -2, 7, 10, 15};
  RadNum out;
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int k = 0; k < terms; ++k) {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = 1 + static_cast<long>(rng() % 5);
    out += RadNum::normalized(radicands[rng() % 10], mpq_class(n, d));
  }
  return out;
}

TEST(RadProperties, RingAxiomsRandomized) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    RadNum a = random_rad(rng, 3), b = random_rad(rng, 3), c = random_rad(rng, 3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, RadNum());
  }
}

TEST(RadProperties, InverseOfRandomValues) {
  std::mt19937_64 rng(2);
  static const long radicands[] = {2, 3, 5, 6, 7, -1, 10, 11};
  int checked = 0;
  while (checked < 1000) {
    RadNum a(static_cast<long>(rng() % 7) - 3);
    int extra = static_cast<int>(rng() % 3) + 1;
    for (int k = 0; k < extra; ++k)
      a += RadNum::normalized(radicands[rng() % 8],
                              mpq_class(static_cast<long>(rng() % 9) - 4,
                                        1 + static_cast<long>(rng() % 3)));
    if (a.is_zero() || a.term_count() > 4) continue;
    ASSERT_EQ(rad_inv(a) * a, q(1)) << a.to_string();
    ++checked;
  }
}

TEST(RadProperties, NormalFormUniqueness) {
  EXPECT_EQ(RadNum::normalized(12, 1), RadNum::normalized(3, 2));
  EXPECT_EQ(s(2) + s(2), RadNum::normalized(8, 1));
  RadNum a = s(2) + s(3);
  RadNum b = s(3) + s(2);
  EXPECT_EQ(a.terms().size(), b.terms().size());
  EXPECT_EQ(a, b);
}

TEST(RadText, Formatting) {
  EXPECT_EQ(RadNum().to_string(), "0");
  EXPECT_EQ(q(3, 5).to_string(), "3/5");
  EXPECT_EQ((q(-1, 3) * s(3)).to_string(), "-1/3*sqrt(3)");
  EXPECT_EQ(s(-1).to_string(), "sqrt(-1)");
  EXPECT_EQ((q(1) + s(2)).to_string(), "1 + sqrt(2)");
}

TEST(RadText, ParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    RadNum a = random_rad(rng, 4);
    EXPECT_EQ(parse_rad_num(a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(parse_rad_num("i*sqrt(2)"), s(-2));
  EXPECT_EQ(parse_rad_num("-1729/5*i*sqrt(2)"), q(-1729, 5) * s(-2));
  EXPECT_THROW(parse_rad_num("f"), ParseError);
  EXPECT_THROW(parse_rad_num("1/0"), ParseError);
  EXPECT_THROW(parse_rad_num("sqrt(0)"), ParseError);
}

}  // namespace
}  // namespace spinrel
