// Copyright 2026 The mmt Authors.
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

#include "mmt/poly.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace mmt {
namespace {

Polynomial P(const Variable& v) { return Polynomial(v); }

TEST(RationalTest, ParsesLiterals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7/1"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
}

TEST(RationalTest, RejectsMalformed) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(VariableTest, PrintsAndParses) {
  for (const Variable& v : {var::A(1, 2), var::B(3, 1), var::U(1, 1), var::V(2, 1), var::theta(4), var::phi(1),
                            var::thetaP(2), var::phiP(2), var::beta(), var::alpha(), var::z()}) {
    EXPECT_EQ(parse_variable(to_string(v)), v);
  }
  EXPECT_EQ(to_string(var::A(1, 2)), "A(1,2)");
  EXPECT_EQ(to_string(var::theta(3)), "theta(3)");
}

TEST(VariableTest, RejectsBadArity) {
  EXPECT_THROW(make_variable(VarClass::A, 1), std::invalid_argument);
  EXPECT_THROW(make_variable(VarClass::beta, 1), std::invalid_argument);
  EXPECT_THROW(parse_variable("A(1)"), std::invalid_argument);
  EXPECT_THROW(parse_variable("Q(1,1)"), std::invalid_argument);
  EXPECT_THROW(parse_variable("A(0,1)"), std::invalid_argument);
}

TEST(GradeTest, WeightsByClass) {
  EXPECT_EQ(Monomial(var::A(1, 1), 2).grade(), 2);
  EXPECT_EQ(Monomial(var::U(1, 1)).grade(), 1);
  EXPECT_EQ(Monomial(var::theta(1)).grade(), 1);
  EXPECT_EQ(Monomial(var::B(1, 1), 5).grade(), 0);
  EXPECT_EQ(Monomial(var::V(1, 1)).grade(), 0);
  EXPECT_EQ(Monomial(var::beta(), 3).grade(), 0);
  EXPECT_EQ(Polynomial().grade(), Polynomial::kZeroGrade);
}

TEST(PolynomialTest, SquareOfBinomial) {
  const Polynomial a = P(var::A(1, 1));
  const Polynomial b = P(var::B(1, 1));
  const Polynomial sq = (a + b) * (a + b);
  EXPECT_EQ(sq.term_count(), 3u);
  EXPECT_EQ(sq.coefficient(Monomial(var::A(1, 1)) * Monomial(var::B(1, 1))), Rational(2));
  EXPECT_EQ(sq, a * a + Polynomial(2) * a * b + b * b);
}

TEST(PolynomialTest, CancellationLeavesNoZeroTerms) {
  const Polynomial x = P(var::A(1, 2));
  const Polynomial y = P(var::beta());
  const Polynomial d = (x + y) - x;
  EXPECT_EQ(d, y);
  EXPECT_EQ(d.term_count(), 1u);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(PolynomialTest, ToString) {
  EXPECT_EQ(Polynomial().to_string(), "0");
  const Polynomial p = P(var::A(1, 2)) * P(var::A(1, 2)) * P(var::beta()) * Rational(3, 2);
  EXPECT_EQ(p.to_string(), "3/2 * A(1,2)^2 * beta");
  EXPECT_EQ(Polynomial(Rational(-1)).to_string(), "-1");
}

TEST(PolynomialTest, NumeratorsBeyondSixtyFourBits) {
  const Polynomial x = P(var::A(1, 1)) * Rational(Integer("1099511627776"));  // 2^40
  const Polynomial sq = x * x * x;
  const Rational c = sq.coefficient(Monomial(var::A(1, 1), 3));
  EXPECT_EQ(c, Rational(Integer("1329227995784915872903807060280344576")));  // 2^120
  const Polynomial back = sq * Rational(Integer(1), Integer("1329227995784915872903807060280344576"));
  EXPECT_EQ(back, P(var::A(1, 1)) * P(var::A(1, 1)) * P(var::A(1, 1)));
}

TEST(PolynomialTest, TruncatedMultiply) {
  const Polynomial a = P(var::A(1, 1)) + P(var::B(1, 1));
  const Polynomial full = a * a * a;
  const Polynomial cut = Polynomial::multiply(a * a, a, 1);
  EXPECT_EQ(cut, full.truncated(1));
  EXPECT_EQ(cut.grade(), 1);
}

TEST(PolynomialTest, GradeSlices) {
  const Polynomial p = P(var::A(1, 1)) * P(var::A(2, 2)) + P(var::B(1, 1)) + P(var::U(1, 1)) * P(var::V(1, 1));
  EXPECT_EQ(p.grade_slice(0), P(var::B(1, 1)));
  EXPECT_EQ(p.grade_slice(1), P(var::U(1, 1)) * P(var::V(1, 1)));
  EXPECT_EQ(p.grade(), 2);
  EXPECT_EQ(p.min_grade(), 0);
  EXPECT_FALSE(p.is_homogeneous(1));
  EXPECT_TRUE(p.grade_slice(2).is_homogeneous(2));
}

TEST(PolynomialTest, Substitute) {
  const Polynomial p = P(var::A(1, 1)) * P(var::A(1, 1)) + P(var::beta());
  const Polynomial q = substitute(p, {{var::A(1, 1), Polynomial(2)}});
  EXPECT_EQ(q, Polynomial(4) + P(var::beta()));
  EXPECT_EQ(zero_classes(p, {VarClass::beta}), P(var::A(1, 1)) * P(var::A(1, 1)));
}

TEST(PolynomialTest, FirstMismatch) {
  const Polynomial a = P(var::A(1, 1)) + Polynomial(1);
  const Polynomial b = P(var::A(1, 1)) * Rational(2) + Polynomial(1);
  EXPECT_FALSE(first_mismatch(a, a).has_value());
  const auto mm = first_mismatch(a, b);
  ASSERT_TRUE(mm.has_value());
  EXPECT_EQ(mm->monomial, Monomial(var::A(1, 1)));
  EXPECT_EQ(mm->lhs, Rational(1));
  EXPECT_EQ(mm->rhs, Rational(2));
}

TEST(SeriesTest, ExpOfSingleVariable) {
  const int d = 6;
  const GradedSeries e = series_exp(GradedSeries(P(var::A(1, 1)), d));
  for (int k = 0; k <= d; ++k) {
    EXPECT_EQ(e.body().coefficient(Monomial(var::A(1, 1), k)), Rational(Integer(1), testing::fact(k)));
  }
  EXPECT_EQ(e.body().term_count(), static_cast<std::size_t>(d + 1));
}

TEST(SeriesTest, LogOfOnePlusX) {
  const int d = 5;
  const GradedSeries l = series_log(GradedSeries(Polynomial(1) + P(var::A(1, 1)), d));
  for (int k = 1; k <= d; ++k) {
    EXPECT_EQ(l.body().coefficient(Monomial(var::A(1, 1), k)), Rational(k % 2 ? 1 : -1, k));
  }
}

// (1 - x)^{-beta} has coefficients binomial(beta + k - 1, k): rising factorial / k!.
TEST(SeriesTest, ExpBetaLogMatchesBinomialSeries) {
  const int d = 5;
  const GradedSeries x(P(var::A(1, 1)), d);
  GradedSeries s = zero_like(x);
  GradedSeries power = one_like(x);
  for (int t = 1; t <= d; ++t) {
    power *= x;
    s += power * Rational(1, t);
  }
  const GradedSeries e = series_exp(GradedSeries(P(var::beta()), d) * s);
  for (int k = 0; k <= d; ++k) {
    const Polynomial expected = testing::rising(k) * Rational(Integer(1), testing::fact(k));
    Polynomial got;
    const Polynomial slice = e.body().grade_slice(k);
    for (const auto& [m, c] : slice.terms()) {
      got += Polynomial::term(c, Monomial(var::beta(), m.exponent(var::beta())));
    }
    EXPECT_EQ(got, expected) << "k=" << k;
  }
}

TEST(SeriesTest, DomainErrors) {
  EXPECT_THROW(series_exp(GradedSeries(P(var::B(1, 1)), 3)), std::domain_error);
  EXPECT_THROW(series_log(GradedSeries(P(var::A(1, 1)), 3)), std::domain_error);
  EXPECT_THROW(GradedSeries(Polynomial(1), -1), std::invalid_argument);
}

TEST(SeriesTest, BinaryOpsTruncateAtSmallerOrder) {
  const GradedSeries a(P(var::A(1, 1)), 3);
  const GradedSeries b(P(var::A(1, 1)), 1);
  EXPECT_EQ((a * a).order(), 3);
  EXPECT_EQ((a * b).order(), 1);
  EXPECT_TRUE((a * b).is_zero());
}

}  // namespace
}  // namespace mmt
