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

#include "mmt/modular.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace mmt {
namespace {

constexpr std::uint64_t kP = 1000000007ull;

const std::vector<TheoremId>& modular_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::kMMT,    TheoremId::kSubMMT, TheoremId::kPPermMMT,     TheoremId::kSubPPermMMT, TheoremId::kDerMMT,
      TheoremId::kSubDerMMT, TheoremId::kRemark, TheoremId::kLemma, TheoremId::kProposition1};
  return ids;
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(PrimalityTest, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime(kP));
  EXPECT_TRUE(is_prime(2305843009213693951ull));    // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751ull));            // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(1000000007ull * 998244353ull));
}

TEST(ModIntTest, FieldArithmetic) {
  const ModInt a(5, 7);
  EXPECT_EQ((a + ModInt(4, 7)).value(), 2u);
  EXPECT_EQ((a - ModInt(6, 7)).value(), 6u);
  EXPECT_EQ((a * a).value(), 4u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_EQ((-a).value(), 2u);
  EXPECT_THROW(ModInt(0, 7).inverse(), std::domain_error);
  EXPECT_EQ(to_mod(Rational(-1, 2), 7).value(), 3u);
  EXPECT_THROW(to_mod(Rational(1, 7), 7), std::domain_error);
}

// exp(z) over F_p: k-th coefficient is 1/k!.
TEST(ZSeriesTest, ExpOfZ) {
  const int order = 6;
  const ZSeries z = ZSeries::monomial(ModInt(1, kP), 1, order);
  const ZSeries e = series_exp(z);
  for (int k = 0; k <= order; ++k) {
    EXPECT_EQ(e[k], to_mod(Rational(Integer(1), testing::fact(k)), kP)) << k;
  }
  EXPECT_THROW(series_exp(ZSeries::constant(ModInt(1, kP), 2)), std::domain_error);
}

TEST(ZSeriesTest, ProductTruncates) {
  const ZSeries a = ZSeries::monomial(ModInt(2, kP), 2, 3);
  const ZSeries b = ZSeries::monomial(ModInt(3, kP), 2, 3);
  EXPECT_TRUE((a * b).is_zero());
  const ZSeries c = ZSeries::monomial(ModInt(3, kP), 1, 3);
  EXPECT_EQ((a * c)[3].value(), 6u);
}

TEST(ModularVerifyTest, TwentySeedsPerTheorem) {
  for (TheoremId id : modular_theorems()) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ModularOptions opt;
      opt.seed = seed;
      const VerificationReport r = modular_verify(id, 2, 2, 6, opt);
      EXPECT_TRUE(r.match) << to_string(id) << " seed " << seed;
      EXPECT_EQ(r.mode, "modular");
      EXPECT_EQ(r.seed, seed);
    }
  }
}

TEST(ModularVerifyTest, CorruptedRhsIsCaught) {
  for (TheoremId id : modular_theorems()) {
    ModularOptions opt;
    opt.corrupt_rhs = true;
    const VerificationReport r = modular_verify(id, 1, 2, 4, opt);
    EXPECT_FALSE(r.match) << to_string(id);
    EXPECT_TRUE(r.first_mismatch.has_value());
  }
}

TEST(ModularVerifyTest, DeterministicInSeed) {
  ModularOptions opt;
  opt.seed = 42;
  const auto a = to_json(modular_verify(TheoremId::kSubPPermMMT, 1, 2, 5, opt));
  const auto b = to_json(modular_verify(TheoremId::kSubPPermMMT, 1, 2, 5, opt));
  EXPECT_EQ(a["lhs_terms"], b["lhs_terms"]);
  EXPECT_EQ(a["match"], b["match"]);
}

// The modular left side agrees with the symbolic left side evaluated at the
// same residues.
TEST(ModularVerifyTest, DpLhsAgreesWithSymbolicEvaluation) {
  const BlockInputs<ModInt> in = detail::random_inputs(1, 2, kP, 5);
  const BlockInputs<Polynomial> sym = symbolic_inputs(1, 2);
  std::map<Variable, Polynomial> values;
  auto bind = [&](const Matrix<Polynomial>& s, const Matrix<ModInt>& v) {
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) {
        values[s(i, j).terms().begin()->first.factors().front().first] = Polynomial(Rational(v(i, j).value()));
      }
    }
  };
  bind(sym.a, in.a);
  bind(sym.b, in.b);
  bind(sym.u, in.u);
  bind(sym.v, in.v);
  for (int i = 0; i < 2; ++i) {
    values[var::theta(i + 1)] = Polynomial(Rational(in.theta[i].value()));
    values[var::phi(i + 1)] = Polynomial(Rational(in.phi[i].value()));
  }
  values[var::thetaP(1)] = Polynomial(Rational(in.theta_p[0].value()));
  values[var::phiP(1)] = Polynomial(Rational(in.phi_p[0].value()));
  values[var::beta()] = Polynomial(Rational(in.beta.value()));
  for (const auto& r : multisets_up_to(2, 3)) {
    for (auto variant : {PermanentVariant::kPerm, PermanentVariant::kPartial, PermanentVariant::kDerangement}) {
      const Polynomial exact = substitute(multiset_term(sym, r, variant, false), values);
      ASSERT_TRUE(exact.term_count() <= 1);
      EXPECT_EQ(to_mod(exact.constant_term(), kP), multiset_term(in, r, variant, true));
    }
  }
}

TEST(ModularVerifyTest, ValidatesModulus) {
  ModularOptions opt;
  opt.modulus = 1000000008ull;
  EXPECT_THROW(modular_verify(TheoremId::kMMT, 1, 1, 3, opt), std::invalid_argument);
  opt.modulus = 5;
  EXPECT_THROW(modular_verify(TheoremId::kMMT, 1, 1, 5, opt), std::invalid_argument);
  EXPECT_NO_THROW(modular_verify(TheoremId::kMMT, 1, 1, 4, opt));
  EXPECT_THROW(modular_verify(TheoremId::kGraphOracle, 1, 1, 3, ModularOptions{}), std::invalid_argument);
}

}  // namespace
}  // namespace mmt
