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

// Enumerative corollaries for n = 1, A = z:
//
//   p_r(alpha, beta): partial permutation graphs on r identical vertices,
//                     alpha per open necklace and beta per cycle;
//                     EGF exp(alpha z / (1 - z)) / (1 - z)^beta.
//   d_r(beta):        derangements of r identical vertices, beta per cycle;
//                     EGF (exp(-z) / (1 - z))^beta.

#ifndef MMT_GENFUNC_HPP_
#define MMT_GENFUNC_HPP_

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mmt/combinat.hpp"
#include "mmt/permanents.hpp"
#include "mmt/poly.hpp"

namespace mmt {

enum class SequenceKind { kP, kD };

struct SequenceRow {
  int r = 0;
  Polynomial value;  // in alpha, beta (kP) or beta (kD)
  // coefficients[s][t] is the coefficient of alpha^s beta^t (s = 0 for kD).
  std::map<std::pair<int, int>, Integer> coefficients;
};

struct SequenceTable {
  SequenceKind kind = SequenceKind::kP;
  std::vector<SequenceRow> rows;
};

namespace detail {

// Rewrites A(1,1)^a theta(1)^s phi(1)^s into alpha^s z^(a+s); the theta and
// phi degrees always agree since every necklace has one source and one sink.
inline Polynomial to_alpha_z(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t s = m.exponent(var::theta(1));
    if (s != m.exponent(var::phi(1))) throw std::logic_error("theta and phi degrees differ");
    std::vector<Monomial::Factor> factors;
    std::uint32_t zdeg = s;
    for (const auto& [v, e] : m.factors()) {
      if (v == var::A(1, 1)) {
        zdeg += e;
      } else if (v != var::theta(1) && v != var::phi(1)) {
        factors.emplace_back(v, e);
      }
    }
    factors.emplace_back(var::alpha(), s);
    factors.emplace_back(var::z(), zdeg);
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

// Divides by z^r, which must divide every term exactly.
inline Polynomial strip_z(const Polynomial& p, int r) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(var::z()) != static_cast<std::uint32_t>(r)) {
      throw std::logic_error("term is not homogeneous in z");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& f : m.factors()) {
      if (f.first != var::z()) factors.push_back(f);
    }
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

inline SequenceRow make_row(int r, Polynomial value) {
  SequenceRow row{r, std::move(value), {}};
  for (const auto& [m, c] : row.value.terms()) {
    if (c.get_den() != 1 || c < 0) throw std::logic_error("sequence coefficient is not a non-negative integer");
    row.coefficients[{static_cast<int>(m.exponent(var::alpha())), static_cast<int>(m.exponent(var::beta()))}] =
        c.get_num();
  }
  return row;
}

}  // namespace detail

inline SequenceTable p_sequence(int r_max) {
  if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
  SequenceTable table{SequenceKind::kP, {}};
  for (int r = 0; r <= r_max; ++r) {
    const SymbolicMatrix m = extend_matrix(1, MultisetIndex({r}));
    const ExtensionVectors v = default_vectors(m);
    const Polynomial raw = pperm_btp_dp(m.entries, v.theta, v.phi, Polynomial(var::beta()));
    table.rows.push_back(detail::make_row(r, detail::strip_z(detail::to_alpha_z(raw), r)));
  }
  return table;
}

inline SequenceTable d_sequence(int r_max) {
  if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
  SequenceTable table{SequenceKind::kD, {}};
  for (int r = 0; r <= r_max; ++r) {
    const SymbolicMatrix m = extend_matrix(1, MultisetIndex({r}));
    const Polynomial raw = substitute(dperm_beta_dp(m.entries, Polynomial(var::beta())), {{var::A(1, 1), Polynomial(var::z())}});
    table.rows.push_back(detail::make_row(r, detail::strip_z(raw, r)));
  }
  return table;
}

// r! [z^r] of the closed-form EGF, for r = 0..r_max.
inline std::vector<Polynomial> egf_coefficients(SequenceKind kind, int r_max) {
  const int d = r_max;
  const GradedSeries z(Polynomial(var::z()), d);
  const GradedSeries beta(Polynomial(var::beta()), d);
  GradedSeries geometric = zero_like(z);  // z + z^2 + ... = z / (1 - z)
  GradedSeries log_term = zero_like(z);   // sum z^t / t = -log(1 - z)
  GradedSeries power = one_like(z);
  for (int t = 1; t <= d; ++t) {
    power *= z;
    geometric += power;
    log_term += power * Rational(1, t);
  }
  GradedSeries egf = zero_like(z);
  if (kind == SequenceKind::kP) {
    egf = series_exp(GradedSeries(Polynomial(var::alpha()), d) * geometric) * series_exp(beta * log_term);
  } else {
    egf = series_exp(beta * (log_term - z));
  }
  std::vector<Polynomial> out;
  for (int r = 0; r <= r_max; ++r) {
    out.push_back(detail::strip_z(egf.body().grade_slice(r), r) * Rational(factorial(r)));
  }
  return out;
}

// Row index of the first disagreement with the EGF, or -1.
inline int first_egf_mismatch(const SequenceTable& table) {
  const int r_max = table.rows.empty() ? -1 : table.rows.back().r;
  if (r_max < 0) return -1;
  const auto expected = egf_coefficients(table.kind, r_max);
  for (const auto& row : table.rows) {
    if (row.value != expected[row.r]) return row.r;
  }
  return -1;
}

}  // namespace mmt

#endif  // MMT_GENFUNC_HPP_
