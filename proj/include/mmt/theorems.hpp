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

// Verification harness. For each identity the left side is computed by
// enumerating (partial) permutations of every multiset n^r with
// sum(r) <= order and weighting by 1/r!; the right side comes from the
// closed-form series in series.hpp. Both are exact polynomials and are
// compared coefficient by coefficient.

#ifndef MMT_THEOREMS_HPP_
#define MMT_THEOREMS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mmt/combinat.hpp"
#include "mmt/graphs.hpp"
#include "mmt/matrix.hpp"
#include "mmt/permanents.hpp"
#include "mmt/poly.hpp"
#include "mmt/series.hpp"

namespace mmt {

enum class TheoremId {
  kMMT,
  kSubMMT,
  kPPermMMT,
  kSubPPermMMT,
  kDerMMT,
  kSubDerMMT,
  kRemark,
  kLemma,
  kProposition1,
  kGraphOracle,
  kTraceIdentity,
};

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kMMT: return "MMT";
    case TheoremId::kSubMMT: return "SubMMT";
    case TheoremId::kPPermMMT: return "PPermMMT";
    case TheoremId::kSubPPermMMT: return "SubPPermMMT";
    case TheoremId::kDerMMT: return "DerMMT";
    case TheoremId::kSubDerMMT: return "SubDerMMT";
    case TheoremId::kRemark: return "Remark";
    case TheoremId::kLemma: return "Lemma";
    case TheoremId::kProposition1: return "Proposition1";
    case TheoremId::kGraphOracle: return "GraphOracle";
    case TheoremId::kTraceIdentity: return "TraceIdentity";
  }
  return "?";
}

inline bool uses_submatrix(TheoremId id) {
  return id == TheoremId::kSubMMT || id == TheoremId::kSubPPermMMT || id == TheoremId::kSubDerMMT ||
         id == TheoremId::kLemma;
}

struct MismatchWitness {
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kMMT;
  int n = 0;
  std::optional<int> n_prime;
  int order = 0;
  bool match = false;
  std::optional<MismatchWitness> first_mismatch;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::int64_t elapsed_ms = 0;
  std::string mode = "symbolic";
  std::optional<GraphKind> kind;
  std::optional<std::uint64_t> modulus;
  std::optional<std::uint64_t> seed;
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(r.theorem);
  j["n"] = r.n;
  j["nPrime"] = r.n_prime ? nlohmann::ordered_json(*r.n_prime) : nlohmann::ordered_json(nullptr);
  j["order"] = r.order;
  j["match"] = r.match;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"monomial", r.first_mismatch->monomial},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_terms"] = r.rhs_terms;
  j["elapsed_ms"] = r.elapsed_ms;
  j["mode"] = r.mode;
  if (r.kind) j["kind"] = to_string(*r.kind);
  if (r.modulus) j["modulus"] = *r.modulus;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

// Both sides of an identity as canonical polynomials.
struct Sides {
  Polynomial lhs;
  Polynomial rhs;
};

// The base matrices and vectors of the block setting [[B, U], [V, A]] over
// any coefficient ring. With n' = 0 only A, theta, phi and beta matter.
template <class T>
struct BlockInputs {
  Matrix<T> a;  // n x n
  Matrix<T> b;  // n' x n'
  Matrix<T> u;  // n' x n
  Matrix<T> v;  // n x n'
  std::vector<T> theta, phi;      // length n
  std::vector<T> theta_p, phi_p;  // length n'
  T beta;

  int n() const { return static_cast<int>(a.size()); }
  int n_prime() const { return static_cast<int>(b.size()); }
};

// The (n' + N) x (n' + N) block matrix over the positions of n^r.
template <class T>
Matrix<T> extend(const BlockInputs<T>& in, const MultisetIndex& r) {
  const std::vector<int> labels = r.labels();
  const int np = in.n_prime();
  const int dim = np + static_cast<int>(labels.size());
  Matrix<T> m(dim, zero_like(in.beta));
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      const bool px = x < np;
      const bool py = y < np;
      const int ix = px ? x : labels[x - np] - 1;
      const int iy = py ? y : labels[y - np] - 1;
      m(x, y) = px ? (py ? in.b(ix, iy) : in.u(ix, iy)) : (py ? in.v(ix, iy) : in.a(ix, iy));
    }
  }
  return m;
}

// (theta'_1..theta'_{n'}, theta_{1_1}..theta_{n_{r_n}}) and likewise for phi.
template <class T>
std::pair<std::vector<T>, std::vector<T>> extend_vectors(const BlockInputs<T>& in, const MultisetIndex& r) {
  std::vector<T> theta = in.theta_p;
  std::vector<T> phi = in.phi_p;
  for (int label : r.labels()) {
    theta.push_back(in.theta[label - 1]);
    phi.push_back(in.phi[label - 1]);
  }
  return {std::move(theta), std::move(phi)};
}

enum class PermanentVariant { kPerm, kPartial, kDerangement };

inline PermanentVariant variant_of(TheoremId id) {
  switch (id) {
    case TheoremId::kPPermMMT:
    case TheoremId::kSubPPermMMT:
      return PermanentVariant::kPartial;
    case TheoremId::kDerMMT:
    case TheoremId::kSubDerMMT:
      return PermanentVariant::kDerangement;
    default:
      return PermanentVariant::kPerm;
  }
}

// The permanent of one multiset term, by enumeration or by subset DP.
template <class T>
T multiset_term(const BlockInputs<T>& in, const MultisetIndex& r, PermanentVariant variant, bool use_dp) {
  const Matrix<T> m = extend(in, r);
  switch (variant) {
    case PermanentVariant::kPerm:
      return use_dp ? perm_beta_dp(m, in.beta) : perm_beta(m, in.beta);
    case PermanentVariant::kDerangement:
      return use_dp ? dperm_beta_dp(m, in.beta) : dperm_beta(m, in.beta);
    case PermanentVariant::kPartial: {
      auto [theta, phi] = extend_vectors(in, r);
      return use_dp ? pperm_btp_dp(m, theta, phi, in.beta) : pperm_btp(m, theta, phi, in.beta);
    }
  }
  throw std::logic_error("unknown permanent variant");
}

inline BlockInputs<Polynomial> symbolic_inputs(int n_prime, int n) {
  BlockInputs<Polynomial> in;
  in.a = Matrix<Polynomial>(n, Polynomial());
  in.b = Matrix<Polynomial>(n_prime, Polynomial());
  in.u = Matrix<Polynomial>(n_prime, n, Polynomial());
  in.v = Matrix<Polynomial>(n, n_prime, Polynomial());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) in.a(i - 1, j - 1) = Polynomial(var::A(i, j));
    for (int j = 1; j <= n_prime; ++j) in.v(i - 1, j - 1) = Polynomial(var::V(i, j));
    in.theta.emplace_back(var::theta(i));
    in.phi.emplace_back(var::phi(i));
  }
  for (int i = 1; i <= n_prime; ++i) {
    for (int j = 1; j <= n_prime; ++j) in.b(i - 1, j - 1) = Polynomial(var::B(i, j));
    for (int j = 1; j <= n; ++j) in.u(i - 1, j - 1) = Polynomial(var::U(i, j));
    in.theta_p.emplace_back(var::thetaP(i));
    in.phi_p.emplace_back(var::phiP(i));
  }
  in.beta = Polynomial(var::beta());
  return in;
}

// sum over r with sum(r) <= order of (1/r!) * permanent of the extended
// matrix. Every multiset contributes a homogeneous polynomial of grade
// sum(r); anything else is a grading bug and throws std::logic_error.
inline Polynomial enumeration_lhs(int n_prime, int n, int order, PermanentVariant variant) {
  const BlockInputs<Polynomial> in = symbolic_inputs(n_prime, n);
  Polynomial lhs;
  for (const MultisetIndex& r : multisets_up_to(n, order)) {
    Polynomial term = multiset_term(in, r, variant, false);
    if (!term.is_homogeneous(r.size())) {
      throw std::logic_error("multiset contribution is not homogeneous of grade " + std::to_string(r.size()));
    }
    lhs += term * Rational(Integer(1), multiset_factorial(r));
  }
  return lhs;
}

// Series-side inputs for the closed forms.
template <class S>
struct SeriesInputs {
  Matrix<S> a, b, u, v;
  std::vector<S> theta, phi, theta_p, phi_p;
  S beta;
  int order = 0;
};

inline SeriesInputs<GradedSeries> symbolic_series_inputs(int n_prime, int n, int order) {
  SeriesInputs<GradedSeries> in;
  in.a = symbolic::A(n, order);
  in.b = symbolic::B(n_prime, order);
  in.u = symbolic::U(n_prime, n, order);
  in.v = symbolic::V(n, n_prime, order);
  in.theta = symbolic::theta(n, order);
  in.phi = symbolic::phi(n, order);
  in.theta_p = symbolic::thetaP(n_prime, order);
  in.phi_p = symbolic::phiP(n_prime, order);
  in.beta = symbolic::beta(order);
  in.order = order;
  return in;
}

// Right-hand sides of the six series identities.
template <class S>
S closed_form(TheoremId id, const SeriesInputs<S>& in) {
  const int d = in.order;
  const S dip = det_inverse_power(in.a, in.beta, d);
  switch (id) {
    case TheoremId::kMMT:
      return dip;
    case TheoremId::kSubMMT:
      return perm_beta_series(btilde(in.b, in.u, in.v, in.a, d), in.beta) * dip;
    case TheoremId::kPPermMMT:
      return series_exp(necklace_sum(in.theta, in.a, in.phi, d)) * dip;
    case TheoremId::kSubPPermMMT: {
      const S partial = pperm_btp_series(btilde(in.b, in.u, in.v, in.a, d),
                                         theta_tilde(in.theta_p, in.theta, in.v, in.a, d),
                                         phi_tilde(in.phi_p, in.u, in.a, in.phi, d), in.beta);
      return series_exp(necklace_sum(in.theta, in.a, in.phi, d)) * partial * dip;
    }
    case TheoremId::kDerMMT:
      return series_exp(-(in.beta * trace(in.a, zero_like(in.beta)))) * dip;
    case TheoremId::kSubDerMMT:
      return series_exp(-(in.beta * trace(in.a, zero_like(in.beta)))) *
             perm_beta_series(bhat(in.b, in.u, in.v, in.a, d), in.beta) * dip;
    default:
      throw std::invalid_argument("closed_form: " + to_string(id) + " is not a series identity");
  }
}

inline Sides series_identity_sides(TheoremId id, int n_prime, int n, int order) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (uses_submatrix(id) && n_prime < 1) throw std::invalid_argument("n' must be >= 1");
  const int np = uses_submatrix(id) ? n_prime : 0;
  Sides s;
  s.lhs = enumeration_lhs(np, n, order, variant_of(id));
  s.rhs = closed_form(id, symbolic_series_inputs(np, n, order)).body();
  return s;
}

inline Sides mmt_sides(int n, int order) { return series_identity_sides(TheoremId::kMMT, 0, n, order); }
inline Sides submatrix_mmt_sides(int n_prime, int n, int order) {
  return series_identity_sides(TheoremId::kSubMMT, n_prime, n, order);
}
inline Sides pperm_mmt_sides(int n, int order) { return series_identity_sides(TheoremId::kPPermMMT, 0, n, order); }
inline Sides sub_pperm_mmt_sides(int n_prime, int n, int order) {
  return series_identity_sides(TheoremId::kSubPPermMMT, n_prime, n, order);
}
inline Sides derangement_mmt_sides(int n, int order) {
  return series_identity_sides(TheoremId::kDerMMT, 0, n, order);
}
inline Sides sub_derangement_mmt_sides(int n_prime, int n, int order) {
  return series_identity_sides(TheoremId::kSubDerMMT, n_prime, n, order);
}

// sum over r in {0,1}^n of det B(n^r, n^r) against det(I + B).
inline Sides remark_sides(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Sides s;
  const Polynomial one(1);
  for (const MultisetIndex& r : subsets_of(n)) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i) {
      if (r[i]) rows.push_back(i + 1);
    }
    Matrix<Polynomial> sub(rows.size(), Polynomial());
    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (std::size_t y = 0; y < rows.size(); ++y) sub(x, y) = Polynomial(var::B(rows[x], rows[y]));
    }
    s.lhs += determinant(sub, one);
  }
  Matrix<Polynomial> ib(n, Polynomial());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) ib(i - 1, j - 1) = Polynomial(var::B(i, j)) + Polynomial(i == j ? 1 : 0);
  }
  s.rhs = determinant(ib, one);
  return s;
}

// sum over r in {0,1}^n of det [[B, U(n^r)], [V(n^r), A(n^r,n^r)]] against
// det [[B, -U], [-V, I + A]].
inline Sides lemma_sides(int n_prime, int n) {
  if (n < 1 || n_prime < 1) throw std::invalid_argument("need n >= 1 and n' >= 1");
  Sides s;
  const Polynomial one(1);
  for (const MultisetIndex& r : subsets_of(n)) s.lhs += determinant(block_extend(n_prime, n, r).entries, one);
  const int dim = n_prime + n;
  Matrix<Polynomial> m(dim, Polynomial());
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      const bool px = x < n_prime;
      const bool py = y < n_prime;
      const int ix = px ? x + 1 : x - n_prime + 1;
      const int iy = py ? y + 1 : y - n_prime + 1;
      if (px && py) {
        m(x, y) = Polynomial(var::B(ix, iy));
      } else if (px) {
        m(x, y) = -Polynomial(var::U(ix, iy));
      } else if (py) {
        m(x, y) = -Polynomial(var::V(ix, iy));
      } else {
        m(x, y) = Polynomial(var::A(ix, iy)) + Polynomial(ix == iy ? 1 : 0);
      }
    }
  }
  s.rhs = determinant(m, one);
  return s;
}

// Product of (1 - w1) over primitive cycles, truncated at grade D, against
// det(I - A) by cofactor expansion, truncated at grade D.
inline Sides proposition1_sides(int n, int max_grade) {
  if (n < 1 || max_grade < 1) throw std::invalid_argument("need n >= 1 and D >= 1");
  GradedSeries product = GradedSeries::constant(1, max_grade);
  for (const LyndonCycle& c : lyndon_cycles(n, max_grade)) {
    product *= GradedSeries(Polynomial(1) - c.weight, max_grade);
  }
  Matrix<Polynomial> ia(n, Polynomial());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) ia(i - 1, j - 1) = Polynomial(i == j ? 1 : 0) - Polynomial(var::A(i, j));
  }
  return Sides{product.body(), determinant(ia, Polynomial(1)).truncated(max_grade)};
}

// Grade-N slice of the enumeration sum against the class sum over
// isomorphism classes of graphs with N vertices.
inline Sides graph_oracle_sides(int n, int total, GraphKind kind) {
  const PermanentVariant variant = kind == GraphKind::kFull      ? PermanentVariant::kPerm
                                   : kind == GraphKind::kPartial ? PermanentVariant::kPartial
                                                                 : PermanentVariant::kDerangement;
  const BlockInputs<Polynomial> in = symbolic_inputs(0, n);
  Polynomial lhs;
  for (const MultisetIndex& r : multisets_of_size(n, total)) {
    lhs += multiset_term(in, r, variant, false) * Rational(Integer(1), multiset_factorial(r));
  }
  return Sides{lhs, class_sum(enumerate_classes(n, total, kind))};
}

// sum over cycle classes of length t of (primitive period) * weight, against
// beta * Tr(A^t).
inline Sides trace_identity_sides(int n, int length) {
  if (n < 1 || length < 1) throw std::invalid_argument("need n >= 1 and t >= 1");
  Polynomial lhs;
  for (const GraphClass& g : enumerate_classes(n, length, GraphKind::kFull)) {
    if (g.parts.size() != 1 || g.parts.front().second != 1) continue;
    const Component& c = g.parts.front().first;
    lhs += g.weight * Rational(primitive_period(c.labels));
  }
  const Matrix<Polynomial> a = default_matrix(n).entries;
  Matrix<Polynomial> power = a;
  for (int k = 1; k < length; ++k) power = power * a;
  return Sides{lhs, Polynomial(var::beta()) * trace(power, Polynomial())};
}

namespace detail {

template <class F>
VerificationReport run_check(TheoremId id, int n, std::optional<int> n_prime, int order, F&& compute) {
  const auto start = std::chrono::steady_clock::now();
  const Sides sides = compute();
  VerificationReport r;
  r.theorem = id;
  r.n = n;
  r.n_prime = n_prime;
  r.order = order;
  r.lhs_terms = sides.lhs.term_count();
  r.rhs_terms = sides.rhs.term_count();
  if (auto mm = first_mismatch(sides.lhs, sides.rhs)) {
    r.first_mismatch = MismatchWitness{mm->monomial.to_string(), to_string(mm->lhs), to_string(mm->rhs)};
  }
  r.match = !r.first_mismatch.has_value();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace detail

inline VerificationReport verify_mmt(int n, int order) {
  return detail::run_check(TheoremId::kMMT, n, std::nullopt, order, [&] { return mmt_sides(n, order); });
}

inline VerificationReport verify_submatrix_mmt(int n_prime, int n, int order) {
  return detail::run_check(TheoremId::kSubMMT, n, n_prime, order,
                           [&] { return submatrix_mmt_sides(n_prime, n, order); });
}

inline VerificationReport verify_pperm_mmt(int n, int order) {
  return detail::run_check(TheoremId::kPPermMMT, n, std::nullopt, order, [&] { return pperm_mmt_sides(n, order); });
}

inline VerificationReport verify_sub_pperm_mmt(int n_prime, int n, int order) {
  return detail::run_check(TheoremId::kSubPPermMMT, n, n_prime, order,
                           [&] { return sub_pperm_mmt_sides(n_prime, n, order); });
}

inline VerificationReport verify_derangement_mmt(int n, int order) {
  return detail::run_check(TheoremId::kDerMMT, n, std::nullopt, order,
                           [&] { return derangement_mmt_sides(n, order); });
}

inline VerificationReport verify_sub_derangement_mmt(int n_prime, int n, int order) {
  return detail::run_check(TheoremId::kSubDerMMT, n, n_prime, order,
                           [&] { return sub_derangement_mmt_sides(n_prime, n, order); });
}

// Finite identities carry order 0: nothing is truncated.
inline VerificationReport verify_remark_beta_minus1(int n) {
  return detail::run_check(TheoremId::kRemark, n, std::nullopt, 0, [&] { return remark_sides(n); });
}

inline VerificationReport verify_lemma_beta_minus1(int n_prime, int n) {
  return detail::run_check(TheoremId::kLemma, n, n_prime, 0, [&] { return lemma_sides(n_prime, n); });
}

inline VerificationReport verify_proposition1(int n, int max_grade) {
  return detail::run_check(TheoremId::kProposition1, n, std::nullopt, max_grade,
                           [&] { return proposition1_sides(n, max_grade); });
}

inline VerificationReport verify_graph_oracle(int n, int total, GraphKind kind) {
  VerificationReport r = detail::run_check(TheoremId::kGraphOracle, n, std::nullopt, total,
                                           [&] { return graph_oracle_sides(n, total, kind); });
  r.kind = kind;
  return r;
}

inline VerificationReport verify_trace_identity(int n, int length) {
  return detail::run_check(TheoremId::kTraceIdentity, n, std::nullopt, length,
                           [&] { return trace_identity_sides(n, length); });
}

}  // namespace mmt

#endif  // MMT_THEOREMS_HPP_
