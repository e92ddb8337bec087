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

#include "mmt/theorems.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace mmt {
namespace {

Polynomial P(const Variable& v) { return Polynomial(v); }

Polynomial at_beta(const Polynomial& p, int b) { return substitute(p, {{var::beta(), Polynomial(b)}}); }

Polynomial det_i_minus_a(int n) {
  Matrix<Polynomial> ia(n, Polynomial());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ia(i, j) = Polynomial(i == j ? 1 : 0) - P(var::A(i + 1, j + 1));
  }
  return testing::leibniz(ia, true, Polynomial(), Polynomial(1));
}

TEST(MMTTest, OneByOneIsBinomialSeries) {
  const int order = 6;
  Polynomial expected;
  for (int k = 0; k <= order; ++k) {
    expected += testing::rising(k) * Rational(Integer(1), testing::fact(k)) *
                Polynomial::term(1, Monomial(var::A(1, 1), k));
  }
  const Sides s = mmt_sides(1, order);
  EXPECT_EQ(s.lhs, expected);
  EXPECT_EQ(s.rhs, expected);
}

// At beta = -1 the left side is the finite sum of (-1)^|r| det A(n^r,n^r)/r!,
// which must collapse to det(I - A).
TEST(MMTTest, BetaMinusOneCollapsesToDeterminant) {
  for (int n = 1; n <= 3; ++n) {
    const Polynomial lhs = enumeration_lhs(0, n, n + 1, PermanentVariant::kPerm);
    EXPECT_EQ(at_beta(lhs, -1), det_i_minus_a(n)) << n;
  }
}

TEST(MMTTest, VerifiesSmallCases) {
  for (int n = 1; n <= 3; ++n) {
    for (int order = 0; order <= 3; ++order) {
      const VerificationReport r = verify_mmt(n, order);
      EXPECT_TRUE(r.match) << n << " " << order;
      EXPECT_EQ(r.lhs_terms, r.rhs_terms);
    }
  }
}

TEST(MMTTest, LhsIsGradedByMultisetSize) {
  const Polynomial lhs = enumeration_lhs(1, 2, 3, PermanentVariant::kPartial);
  for (int g = 0; g <= 3; ++g) EXPECT_TRUE(lhs.grade_slice(g).is_homogeneous(g));
  EXPECT_EQ(lhs.grade(), 3);
}

TEST(SubMMTTest, OrderZeroIsPermOfB) {
  const Sides s = submatrix_mmt_sides(2, 1, 0);
  const Polynomial b = P(var::beta());
  EXPECT_EQ(s.lhs, b * b * P(var::B(1, 1)) * P(var::B(2, 2)) + b * P(var::B(1, 2)) * P(var::B(2, 1)));
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(SubMMTTest, VerifiesSmallCases) {
  EXPECT_TRUE(verify_submatrix_mmt(1, 1, 3).match);
  EXPECT_TRUE(verify_submatrix_mmt(1, 2, 2).match);
  EXPECT_TRUE(verify_submatrix_mmt(2, 1, 2).match);
}

TEST(PPermMMTTest, ZeroThetaPhiReducesToMMT) {
  const Polynomial lhs = enumeration_lhs(0, 2, 3, PermanentVariant::kPartial);
  EXPECT_EQ(zero_classes(lhs, {VarClass::theta, VarClass::phi}), mmt_sides(2, 3).lhs);
}

// n = 1, every variable set to 1 inside grade N: sum_k C(N,k)^2 k! / N!.
TEST(PPermMMTTest, OneByOneCountsPartialMaps) {
  const int order = 5;
  const Sides s = pperm_mmt_sides(1, order);
  const std::map<Variable, Polynomial> ones = {{var::beta(), Polynomial(1)}, {var::A(1, 1), Polynomial(1)},
                                               {var::theta(1), Polynomial(1)}, {var::phi(1), Polynomial(1)}};
  for (int total = 0; total <= order; ++total) {
    Integer count = 0;
    for (int k = 0; k <= total; ++k) count += testing::binomial(total, k) * testing::binomial(total, k) * testing::fact(k);
    Rational expected(count, testing::fact(total));
    expected.canonicalize();
    EXPECT_EQ(substitute(s.lhs.grade_slice(total), ones), Polynomial(expected)) << total;
  }
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(PPermMMTTest, VerifiesSmallCases) {
  EXPECT_TRUE(verify_pperm_mmt(1, 4).match);
  EXPECT_TRUE(verify_pperm_mmt(2, 3).match);
  EXPECT_TRUE(verify_sub_pperm_mmt(1, 1, 2).match);
  EXPECT_TRUE(verify_sub_pperm_mmt(2, 1, 2).match);
}

TEST(DerMMTTest, OneByOneCountsDerangements) {
  const int order = 6;
  const Sides s = derangement_mmt_sides(1, order);
  const Polynomial ones = at_beta(s.lhs, 1);
  for (int total = 0; total <= order; ++total) {
    Rational expected(testing::derangement_count(total), testing::fact(total));
    expected.canonicalize();
    EXPECT_EQ(ones.coefficient(Monomial(var::A(1, 1), total)), expected);
  }
  EXPECT_EQ(s.lhs, s.rhs);
}

// A single point has no derangement; A(1,1)^2 comes from swapping 1_1 and 1_2.
TEST(DerMMTTest, GradeOneVanishes) {
  const Sides s = derangement_mmt_sides(2, 4);
  EXPECT_TRUE(s.lhs.grade_slice(1).is_zero());
  EXPECT_EQ(at_beta(s.lhs, 1).coefficient(Monomial(var::A(1, 1), 2)), Rational(1, 2));
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(DerMMTTest, VerifiesSmallCases) {
  EXPECT_TRUE(verify_derangement_mmt(3, 3).match);
  EXPECT_TRUE(verify_sub_derangement_mmt(1, 1, 3).match);
  EXPECT_TRUE(verify_sub_derangement_mmt(1, 2, 2).match);
}

TEST(RemarkTest, TwoByTwoByHand) {
  const Sides s = remark_sides(2);
  const Polynomial b11 = P(var::B(1, 1));
  const Polynomial b22 = P(var::B(2, 2));
  const Polynomial expected = Polynomial(1) + b11 + b22 + b11 * b22 - P(var::B(1, 2)) * P(var::B(2, 1));
  EXPECT_EQ(s.lhs, expected);
  EXPECT_EQ(s.rhs, expected);
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_remark_beta_minus1(n).match);
}

TEST(LemmaTest, OneByOneByHand) {
  const Sides s = lemma_sides(1, 1);
  const Polynomial b = P(var::B(1, 1));
  const Polynomial expected = b + b * P(var::A(1, 1)) - P(var::U(1, 1)) * P(var::V(1, 1));
  EXPECT_EQ(s.lhs, expected);
  EXPECT_EQ(s.rhs, expected);
  EXPECT_TRUE(verify_lemma_beta_minus1(2, 2).match);
  EXPECT_TRUE(verify_lemma_beta_minus1(1, 3).match);
}

TEST(Proposition1Test, MatchesLeibnizDeterminant) {
  for (int n = 1; n <= 3; ++n) {
    const Sides s = proposition1_sides(n, n + 1);
    EXPECT_EQ(s.rhs, det_i_minus_a(n));
    EXPECT_EQ(s.lhs, s.rhs);
  }
  EXPECT_TRUE(verify_proposition1(2, 6).match);
}

TEST(GraphOracleTest, AllKinds) {
  for (GraphKind kind : {GraphKind::kFull, GraphKind::kPartial, GraphKind::kDerangement}) {
    for (int total = 0; total <= 3; ++total) {
      const VerificationReport r = verify_graph_oracle(2, total, kind);
      EXPECT_TRUE(r.match) << to_string(kind) << " " << total;
      ASSERT_TRUE(r.kind.has_value());
      EXPECT_EQ(*r.kind, kind);
    }
  }
}

TEST(TraceIdentityTest, UpToFive) {
  for (int n = 1; n <= 2; ++n) {
    for (int t = 1; t <= 5; ++t) EXPECT_TRUE(verify_trace_identity(n, t).match) << n << " " << t;
  }
}

TEST(ReportTest, JsonSchema) {
  VerificationReport r = verify_submatrix_mmt(1, 1, 2);
  r.elapsed_ms = 0;
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "n", "nPrime", "order", "match", "first_mismatch",
                                            "lhs_terms", "rhs_terms", "elapsed_ms", "mode"}));
  EXPECT_EQ(j["theorem"], "SubMMT");
  EXPECT_EQ(j["nPrime"], 1);
  EXPECT_TRUE(j["first_mismatch"].is_null());
  EXPECT_TRUE(to_json(verify_mmt(1, 1))["nPrime"].is_null());
}

TEST(ReportTest, MismatchWitness) {
  const VerificationReport r = detail::run_check(TheoremId::kMMT, 1, std::nullopt, 2, [] {
    Sides s = mmt_sides(1, 2);
    s.rhs += Polynomial::term(1, Monomial(var::A(1, 1), 2));
    return s;
  });
  EXPECT_FALSE(r.match);
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.first_mismatch->monomial, "A(1,1)^2");
  EXPECT_EQ(r.first_mismatch->lhs, "0");
  EXPECT_EQ(r.first_mismatch->rhs, "1");
  EXPECT_FALSE(to_json(r)["first_mismatch"].is_null());
}

TEST(ValidationTest, RejectsBadSizes) {
  EXPECT_THROW(verify_mmt(0, 2), std::invalid_argument);
  EXPECT_THROW(verify_mmt(1, -1), std::invalid_argument);
  EXPECT_THROW(verify_submatrix_mmt(0, 1, 2), std::invalid_argument);
  EXPECT_THROW(verify_lemma_beta_minus1(0, 1), std::invalid_argument);
  EXPECT_THROW(verify_trace_identity(1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace mmt
