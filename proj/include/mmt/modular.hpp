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

// Randomized check of the identities over a prime field.
//
// Every matrix and vector variable, and beta, is replaced by an independent
// uniform residue mod p. The grading survives as a single formal variable z:
// grade-1 symbols (A, U, theta) become residue * z and the rest stay
// constant, so both sides become polynomials in z over F_p truncated at
// `order`. A multiset of size N contributes only to z^N, which lets the left
// side be evaluated at z = 1 one multiset at a time. A disagreement is a
// proof of a mismatch; agreement is evidence in the Schwartz-Zippel sense.

#ifndef MMT_MODULAR_HPP_
#define MMT_MODULAR_HPP_

#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmt/combinat.hpp"
#include "mmt/graphs.hpp"
#include "mmt/matrix.hpp"
#include "mmt/permanents.hpp"
#include "mmt/poly.hpp"
#include "mmt/series.hpp"
#include "mmt/theorems.hpp"

namespace mmt {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < s && composite; ++k) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

// Element of F_p; carries its modulus so generic code can build 0 and 1.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  ModInt inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero mod p");
    return ModInt(pow_mod(v_, p_ - 2, p_), p_);
  }

  friend ModInt operator+(ModInt a, ModInt b) {
    std::uint64_t s = a.v_ + b.v_;
    return ModInt(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend ModInt operator-(ModInt a, ModInt b) { return ModInt(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
  friend ModInt operator*(ModInt a, ModInt b) { return ModInt(mul_mod(a.v_, b.v_, a.p_), a.p_); }
  ModInt operator-() const { return ModInt(v_ == 0 ? 0 : p_ - v_, p_); }
  ModInt& operator+=(ModInt o) { return *this = *this + o; }
  ModInt& operator*=(ModInt o) { return *this = *this * o; }
  friend bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

inline ModInt one_like(const ModInt& x) { return ModInt(1, x.modulus()); }
inline ModInt zero_like(const ModInt& x) { return ModInt(0, x.modulus()); }

inline ModInt to_mod(const Rational& q, std::uint64_t p) {
  const Integer pm(std::to_string(p));
  Integer num = q.get_num() % pm;
  Integer den = q.get_den() % pm;
  if (num < 0) num += pm;
  if (den == 0) throw std::domain_error("denominator divisible by the modulus");
  return ModInt(std::stoull(num.get_str()), p) * ModInt(std::stoull(den.get_str()), p).inverse();
}

inline ModInt scaled(const ModInt& x, const Rational& q) { return x * to_mod(q, x.modulus()); }

// Polynomial in z over F_p, truncated at z^order.
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(std::vector<ModInt> coeffs) : c_(std::move(coeffs)) {  // NOLINT
    if (c_.empty()) throw std::invalid_argument("ZSeries needs at least one coefficient");
  }
  static ZSeries constant(ModInt c, int order) {
    std::vector<ModInt> v(order + 1, zero_like(c));
    v[0] = c;
    return ZSeries(std::move(v));
  }
  // c * z^k
  static ZSeries monomial(ModInt c, int k, int order) {
    std::vector<ModInt> v(order + 1, zero_like(c));
    if (k <= order) v[k] = c;
    return ZSeries(std::move(v));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t modulus() const { return c_.front().modulus(); }
  const ModInt& operator[](int k) const { return c_[k]; }
  ModInt& operator[](int k) { return c_[k]; }
  const std::vector<ModInt>& coefficients() const { return c_; }
  bool is_zero() const {
    for (const auto& x : c_) {
      if (x.value() != 0) return false;
    }
    return true;
  }

  ZSeries& operator+=(const ZSeries& o) { return *this = *this + o; }
  ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    const int d = std::min(a.order(), b.order());
    std::vector<ModInt> v(d + 1);
    for (int k = 0; k <= d; ++k) v[k] = a.c_[k] + b.c_[k];
    return ZSeries(std::move(v));
  }
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }
  ZSeries operator-() const {
    ZSeries out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    const int d = std::min(a.order(), b.order());
    std::vector<ModInt> v(d + 1, zero_like(a.c_.front()));
    for (int i = 0; i <= d; ++i) {
      if (a.c_[i].value() == 0) continue;
      for (int j = 0; i + j <= d; ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return ZSeries(std::move(v));
  }
  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<ModInt> c_;
};

inline ZSeries one_like(const ZSeries& s) { return ZSeries::constant(ModInt(1, s.modulus()), s.order()); }
inline ZSeries zero_like(const ZSeries& s) { return ZSeries::constant(ModInt(0, s.modulus()), s.order()); }
inline bool has_grade_zero_part(const ZSeries& s) { return s[0].value() != 0; }

inline ZSeries scaled(const ZSeries& s, const Rational& q) {
  const ModInt f = to_mod(q, s.modulus());
  std::vector<ModInt> v = s.coefficients();
  for (auto& x : v) x = x * f;
  return ZSeries(std::move(v));
}

// Needs p > order so that 1/k! exists.
inline ZSeries series_exp(const ZSeries& s) {
  if (has_grade_zero_part(s)) throw std::domain_error("series_exp: nonzero constant term");
  ZSeries sum = one_like(s);
  ZSeries power = one_like(s);
  for (int k = 1; k <= s.order(); ++k) {
    power = scaled(power * s, Rational(1, k));
    sum = sum + power;
  }
  return sum;
}

struct ModularOptions {
  std::uint64_t modulus = 1000000007ull;
  std::uint64_t seed = 1;
  // Test hook: perturbs the top right-hand coefficient.
  bool corrupt_rhs = false;
};

inline bool supports_modular(TheoremId id) {
  return id != TheoremId::kGraphOracle && id != TheoremId::kTraceIdentity;
}

namespace detail {

// Uniform residues from mt19937_64 by rejection, reproducible across platforms.
class ResidueSource {
 public:
  ResidueSource(std::uint64_t seed, std::uint64_t p) : engine_(seed), p_(p) {
    limit_ = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  }
  ModInt next() {
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit_);
    return ModInt(x % p_, p_);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t p_;
  std::uint64_t limit_;
};

inline void validate_modulus(std::uint64_t p, int order) {
  if (p >= (1ull << 62)) throw std::invalid_argument("modulus must be below 2^62");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p <= static_cast<std::uint64_t>(order)) {
    throw std::invalid_argument("modulus must exceed the order (series denominators must be invertible)");
  }
}

// Residues are drawn in a fixed order: A, B, U, V, theta, phi, theta', phi', beta.
inline BlockInputs<ModInt> random_inputs(int n_prime, int n, std::uint64_t p, std::uint64_t seed) {
  ResidueSource rng(seed, p);
  BlockInputs<ModInt> in;
  const ModInt zero(0, p);
  in.a = Matrix<ModInt>(n, zero);
  in.b = Matrix<ModInt>(n_prime, zero);
  in.u = Matrix<ModInt>(n_prime, n, zero);
  in.v = Matrix<ModInt>(n, n_prime, zero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) in.a(i, j) = rng.next();
  }
  for (int i = 0; i < n_prime; ++i) {
    for (int j = 0; j < n_prime; ++j) in.b(i, j) = rng.next();
  }
  for (int i = 0; i < n_prime; ++i) {
    for (int j = 0; j < n; ++j) in.u(i, j) = rng.next();
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n_prime; ++j) in.v(i, j) = rng.next();
  }
  for (int i = 0; i < n; ++i) in.theta.push_back(rng.next());
  for (int i = 0; i < n; ++i) in.phi.push_back(rng.next());
  for (int i = 0; i < n_prime; ++i) in.theta_p.push_back(rng.next());
  for (int i = 0; i < n_prime; ++i) in.phi_p.push_back(rng.next());
  in.beta = rng.next();
  return in;
}

// Lifts the residues to z-series: grade-1 symbols pick up a factor z.
inline SeriesInputs<ZSeries> lift(const BlockInputs<ModInt>& in, int order) {
  auto lift_matrix = [&](const Matrix<ModInt>& m, int k) {
    Matrix<ZSeries> out(m.rows(), m.cols(), ZSeries::constant(zero_like(in.beta), order));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ZSeries::monomial(m(i, j), k, order);
    }
    return out;
  };
  auto lift_vector = [&](const std::vector<ModInt>& v, int k) {
    std::vector<ZSeries> out;
    for (const auto& x : v) out.push_back(ZSeries::monomial(x, k, order));
    return out;
  };
  SeriesInputs<ZSeries> s;
  s.a = lift_matrix(in.a, 1);
  s.b = lift_matrix(in.b, 0);
  s.u = lift_matrix(in.u, 1);
  s.v = lift_matrix(in.v, 0);
  s.theta = lift_vector(in.theta, 1);
  s.phi = lift_vector(in.phi, 0);
  s.theta_p = lift_vector(in.theta_p, 0);
  s.phi_p = lift_vector(in.phi_p, 0);
  s.beta = ZSeries::constant(in.beta, order);
  s.order = order;
  return s;
}

inline std::size_t nonzero_count(const ZSeries& s) {
  std::size_t k = 0;
  for (const auto& x : s.coefficients()) k += x.value() != 0;
  return k;
}

struct ModularSides {
  ZSeries lhs;
  ZSeries rhs;
};

inline ModularSides modular_sides(TheoremId id, int n_prime, int n, int order, const ModularOptions& opt) {
  const std::uint64_t p = opt.modulus;
  const ModInt zero(0, p);
  const ModInt one(1, p);
  switch (id) {
    case TheoremId::kRemark: {
      const BlockInputs<ModInt> in = random_inputs(0, n, p, opt.seed);
      ModInt lhs = zero;
      for (const MultisetIndex& r : subsets_of(n)) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i) {
          if (r[i]) rows.push_back(i);
        }
        Matrix<ModInt> sub(rows.size(), zero);
        for (std::size_t x = 0; x < rows.size(); ++x) {
          for (std::size_t y = 0; y < rows.size(); ++y) sub(x, y) = in.a(rows[x], rows[y]);
        }
        lhs = lhs + determinant(sub, one);
      }
      Matrix<ModInt> ib = in.a;
      for (int i = 0; i < n; ++i) ib(i, i) = ib(i, i) + one;
      return {ZSeries::constant(lhs, 0), ZSeries::constant(determinant(ib, one), 0)};
    }
    case TheoremId::kLemma: {
      const BlockInputs<ModInt> in = random_inputs(n_prime, n, p, opt.seed);
      ModInt lhs = zero;
      for (const MultisetIndex& r : subsets_of(n)) lhs = lhs + determinant(extend(in, r), one);
      const int dim = n_prime + n;
      Matrix<ModInt> m(dim, zero);
      for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
          const bool px = x < n_prime;
          const bool py = y < n_prime;
          const int ix = px ? x : x - n_prime;
          const int iy = py ? y : y - n_prime;
          m(x, y) = px ? (py ? in.b(ix, iy) : -in.u(ix, iy))
                       : (py ? -in.v(ix, iy) : in.a(ix, iy) + (ix == iy ? one : zero));
        }
      }
      return {ZSeries::constant(lhs, 0), ZSeries::constant(determinant(m, one), 0)};
    }
    case TheoremId::kProposition1: {
      const BlockInputs<ModInt> in = random_inputs(0, n, p, opt.seed);
      const SeriesInputs<ZSeries> s = lift(in, order);
      ZSeries product = ZSeries::constant(one, order);
      for (const LyndonCycle& c : lyndon_cycles(n, order)) {
        ModInt w = one;
        const std::size_t t = c.labels.size();
        for (std::size_t k = 0; k < t; ++k) w = w * in.a(c.labels[k] - 1, c.labels[(k + 1) % t] - 1);
        product = product * (ZSeries::constant(one, order) - ZSeries::monomial(w, static_cast<int>(t), order));
      }
      Matrix<ZSeries> ia = s.a.map([](const ZSeries& x) { return -x; });
      for (int i = 0; i < n; ++i) ia(i, i) = ia(i, i) + ZSeries::constant(one, order);
      return {product, determinant(ia, ZSeries::constant(one, order))};
    }
    default:
      break;
  }
  if (!supports_modular(id)) throw std::invalid_argument(to_string(id) + " has no modular mode");
  const int np = uses_submatrix(id) ? n_prime : 0;
  const BlockInputs<ModInt> in = random_inputs(np, n, p, opt.seed);
  ZSeries lhs = ZSeries::constant(zero, order);
  for (const MultisetIndex& r : multisets_up_to(n, order)) {
    const ModInt term = multiset_term(in, r, variant_of(id), true);
    lhs[r.size()] = lhs[r.size()] + term * to_mod(Rational(Integer(1), multiset_factorial(r)), p);
  }
  return {lhs, closed_form(id, lift(in, order))};
}

}  // namespace detail

inline VerificationReport modular_verify(TheoremId id, int n_prime, int n, int order, const ModularOptions& opt) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (uses_submatrix(id) && n_prime < 1) throw std::invalid_argument("n' must be >= 1");
  if (!supports_modular(id)) throw std::invalid_argument(to_string(id) + " has no modular mode");
  detail::validate_modulus(opt.modulus, order);
  const bool finite = id == TheoremId::kRemark || id == TheoremId::kLemma;

  const auto start = std::chrono::steady_clock::now();
  detail::ModularSides sides = detail::modular_sides(id, n_prime, n, order, opt);
  if (opt.corrupt_rhs) {
    const int top = sides.rhs.order();
    sides.rhs[top] = sides.rhs[top] + ModInt(1, opt.modulus);
  }
  VerificationReport r;
  r.theorem = id;
  r.n = n;
  if (uses_submatrix(id)) r.n_prime = n_prime;
  r.order = finite ? 0 : order;
  r.mode = "modular";
  r.modulus = opt.modulus;
  r.seed = opt.seed;
  r.lhs_terms = detail::nonzero_count(sides.lhs);
  r.rhs_terms = detail::nonzero_count(sides.rhs);
  for (int k = 0; k <= sides.lhs.order(); ++k) {
    if (!(sides.lhs[k] == sides.rhs[k])) {
      r.first_mismatch = MismatchWitness{k == 0 ? "1" : (k == 1 ? "z" : "z^" + std::to_string(k)),
                                         std::to_string(sides.lhs[k].value()),
                                         std::to_string(sides.rhs[k].value())};
      break;
    }
  }
  r.match = !r.first_mismatch.has_value();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace mmt

#endif  // MMT_MODULAR_HPP_
