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

// Exact sparse multivariate polynomials over arbitrary-precision rationals,
// together with a grading used to truncate formal series.
//
// Every symbol that appears in the identities lives in a small closed
// registry of variable classes. Each class carries a grading weight; the
// grade of a monomial is the weighted sum of its exponents. GradedSeries is
// a polynomial in which every term of grade above `order` has been dropped.

#ifndef MMT_POLY_HPP_
#define MMT_POLY_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmt {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() &&
           std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  if (slash == std::string::npos ? !is_int(s)
                                 : !is_int(std::string_view(s).substr(0, slash)) ||
                                       !is_int(std::string_view(s).substr(slash + 1))) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  if (!s.empty() && s.front() == '+') {
    s.erase(0, 1);
    if (slash != std::string::npos) --slash;
  }
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q = Rational(Integer(s.substr(0, slash)), den);
    q.canonicalize();
  }
  return q;
}

enum class VarClass : std::uint8_t { A, B, U, V, theta, phi, thetaP, phiP, beta, alpha, z };

constexpr int arity(VarClass c) {
  switch (c) {
    case VarClass::A:
    case VarClass::B:
    case VarClass::U:
    case VarClass::V:
      return 2;
    case VarClass::theta:
    case VarClass::phi:
    case VarClass::thetaP:
    case VarClass::phiP:
      return 1;
    default:
      return 0;
  }
}

// A, U, theta and z have weight 1; everything else is weight 0. With this
// choice the contribution of a multiset of size N is homogeneous of grade N.
constexpr int grade_weight(VarClass c) {
  return c == VarClass::A || c == VarClass::U || c == VarClass::theta || c == VarClass::z ? 1 : 0;
}

constexpr std::string_view class_name(VarClass c) {
  switch (c) {
    case VarClass::A: return "A";
    case VarClass::B: return "B";
    case VarClass::U: return "U";
    case VarClass::V: return "V";
    case VarClass::theta: return "theta";
    case VarClass::phi: return "phi";
    case VarClass::thetaP: return "thetaP";
    case VarClass::phiP: return "phiP";
    case VarClass::beta: return "beta";
    case VarClass::alpha: return "alpha";
    case VarClass::z: return "z";
  }
  return "?";
}

inline std::optional<VarClass> class_from_name(std::string_view name) {
  for (int c = 0; c <= static_cast<int>(VarClass::z); ++c) {
    if (class_name(static_cast<VarClass>(c)) == name) return static_cast<VarClass>(c);
  }
  return std::nullopt;
}

// Indices are 1-based, matching the printed form A(1,2).
struct Variable {
  VarClass cls = VarClass::A;
  std::uint16_t i = 0;
  std::uint16_t j = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable make_variable(VarClass c, int i = 0, int j = 0) {
  const int given = (i != 0) + (j != 0);
  if (given != arity(c) || (arity(c) == 1 && j != 0) || i < 0 || j < 0 ||
      i > std::numeric_limits<std::uint16_t>::max() ||
      j > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("bad index arity for variable class " +
                                std::string(class_name(c)));
  }
  return Variable{c, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
}

inline std::string to_string(const Variable& v) {
  std::string s(class_name(v.cls));
  switch (arity(v.cls)) {
    case 2: s += "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"; break;
    case 1: s += "(" + std::to_string(v.i) + ")"; break;
    default: break;
  }
  return s;
}

// Inverse of to_string(Variable): "A(1,2)", "theta(3)", "beta".
inline Variable parse_variable(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view name = text.substr(0, open);
  const auto cls = class_from_name(name);
  if (!cls) throw std::invalid_argument("unknown variable '" + std::string(text) + "'");
  if (open == std::string_view::npos) return make_variable(*cls);
  if (text.back() != ')') throw std::invalid_argument("malformed variable '" + std::string(text) + "'");
  const std::string args(text.substr(open + 1, text.size() - open - 2));
  const auto comma = args.find(',');
  auto index = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 5) {
      throw std::invalid_argument("malformed index in '" + std::string(text) + "'");
    }
    const int k = std::stoi(s);
    if (k < 1) throw std::invalid_argument("indices are 1-based in '" + std::string(text) + "'");
    return k;
  };
  if (comma == std::string::npos) return make_variable(*cls, index(args));
  return make_variable(*cls, index(args.substr(0, comma)), index(args.substr(comma + 1)));
}

namespace var {
inline Variable A(int i, int j) { return make_variable(VarClass::A, i, j); }
inline Variable B(int i, int j) { return make_variable(VarClass::B, i, j); }
inline Variable U(int i, int j) { return make_variable(VarClass::U, i, j); }
inline Variable V(int i, int j) { return make_variable(VarClass::V, i, j); }
inline Variable theta(int i) { return make_variable(VarClass::theta, i); }
inline Variable phi(int i) { return make_variable(VarClass::phi, i); }
inline Variable thetaP(int i) { return make_variable(VarClass::thetaP, i); }
inline Variable phiP(int i) { return make_variable(VarClass::phiP, i); }
inline Variable beta() { return make_variable(VarClass::beta); }
inline Variable alpha() { return make_variable(VarClass::alpha); }
inline Variable z() { return make_variable(VarClass::z); }
}  // namespace var

// Product of variable powers, stored sorted by variable with no zero
// exponents, so structural equality is mathematical equality.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1) {
    if (exponent != 0) factors_.emplace_back(v, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int grade() const {
    int g = 0;
    for (const auto& [v, e] : factors_) g += grade_weight(v.cls) * static_cast<int>(e);
    return g;
  }

  std::uint32_t exponent(const Variable& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Variable& x) { return f.first < x; });
    return it != factors_.end() && it->first == v ? it->second : 0;
  }

  // Total degree in the variables of one class.
  std::uint32_t class_degree(VarClass c) const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += v.cls == c ? e : 0;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
      if (y == b.factors_.end() || (x != a.factors_.end() && x->first < y->first)) {
        out.factors_.push_back(*x++);
      } else if (x == a.factors_.end() || y->first < x->first) {
        out.factors_.push_back(*y++);
      } else {
        out.factors_.emplace_back(x->first, x->second + y->second);
        ++x;
        ++y;
      }
    }
    return out;
  }

  // Builds from arbitrary factors; merges duplicates and drops zero powers.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial out;
    for (const auto& [v, e] : factors) {
      if (e == 0) continue;
      if (!out.factors_.empty() && out.factors_.back().first == v) {
        out.factors_.back().second += e;
      } else {
        out.factors_.emplace_back(v, e);
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += " * ";
      s += mmt::to_string(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  // Grade of the zero polynomial.
  static constexpr int kZeroGrade = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial(), c);
  }
  template <std::integral I>
  Polynomial(I c) : Polynomial(Rational(static_cast<long>(c))) {}  // NOLINT
  explicit Polynomial(const Variable& v) { terms_.emplace(Monomial(v), Rational(1)); }

  static Polynomial term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial()); }

  int grade() const {
    int g = kZeroGrade;
    for (const auto& [m, c] : terms_) g = std::max(g, m.grade());
    return g;
  }

  // Smallest grade over terms; kZeroGrade for the zero polynomial.
  int min_grade() const {
    if (terms_.empty()) return kZeroGrade;
    int g = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) g = std::min(g, m.grade());
    return g;
  }

  bool is_homogeneous(int g) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [g](const auto& t) { return t.first.grade() == g; });
  }

  Polynomial grade_slice(int g) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.grade() == g) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  // Drops every term of grade above `order`.
  Polynomial truncated(int order) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.grade() <= order) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= s;
    }
    return *this;
  }
  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  // Product restricted to terms of grade <= max_grade.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b,
                             int max_grade = std::numeric_limits<int>::max()) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<int> bg;
    bg.reserve(b.terms_.size());
    for (const auto& [m, c] : b.terms_) bg.push_back(m.grade());
    for (const auto& [ma, ca] : a.terms_) {
      const int ga = ma.grade();
      std::size_t k = 0;
      for (const auto& [mb, cb] : b.terms_) {
        if (ga + bg[k++] > max_grade) continue;
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Terms joined by " + ", each "c * A(1,2)^3 * beta^2"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += mmt::to_string(c);
      if (!m.is_one()) s += " * " + m.to_string();
    }
    return s;
  }

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

inline Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational scaled(const Rational& x, const Rational& s) { return x * s; }

inline Polynomial one_like(const Polynomial&) { return Polynomial(1); }
inline Polynomial zero_like(const Polynomial&) { return Polynomial(); }
inline Polynomial scaled(const Polynomial& p, const Rational& s) { return p * s; }

// Replaces variables: `f(v)` returns the replacement polynomial or nullopt to
// keep `v` as is.
template <class F>
  requires std::invocable<F&, const Variable&>
Polynomial substitute(const Polynomial& p, F&& f) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      if (std::optional<Polynomial> r = f(v)) {
        term *= pow(*r, e);
        if (term.is_zero()) break;
      } else {
        kept = kept * Monomial(v, e);
      }
    }
    out += term * Polynomial::term(1, kept);
  }
  return out;
}

inline Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& values) {
  return substitute(p, [&](const Variable& v) -> std::optional<Polynomial> {
    auto it = values.find(v);
    if (it == values.end()) return std::nullopt;
    return it->second;
  });
}

// Sets every variable of the listed classes to zero.
inline Polynomial zero_classes(const Polynomial& p, std::initializer_list<VarClass> classes) {
  return substitute(p, [&](const Variable& v) -> std::optional<Polynomial> {
    for (VarClass c : classes) {
      if (v.cls == c) return Polynomial();
    }
    return std::nullopt;
  });
}

// First monomial (in canonical order) whose coefficients differ.
struct Mismatch {
  Monomial monomial;
  Rational lhs;
  Rational rhs;
};

inline std::optional<Mismatch> first_mismatch(const Polynomial& lhs, const Polynomial& rhs) {
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  while (a != lhs.terms().end() || b != rhs.terms().end()) {
    if (b == rhs.terms().end() || (a != lhs.terms().end() && a->first < b->first)) {
      return Mismatch{a->first, a->second, Rational(0)};
    }
    if (a == lhs.terms().end() || b->first < a->first) {
      return Mismatch{b->first, Rational(0), b->second};
    }
    if (a->second != b->second) return Mismatch{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

// A polynomial with every term of grade > order discarded. Binary operations
// truncate at the smaller of the operand orders.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(const Polynomial& body, int order) : body_(body.truncated(order)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
  }

  static GradedSeries constant(const Rational& c, int order) { return GradedSeries(Polynomial(c), order); }

  const Polynomial& body() const { return body_; }
  int order() const { return order_; }
  bool is_zero() const { return body_.is_zero(); }

  GradedSeries& operator+=(const GradedSeries& o) {
    order_ = std::min(order_, o.order_);
    body_ = (body_ + o.body_).truncated(order_);
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& o) {
    order_ = std::min(order_, o.order_);
    body_ = (body_ - o.body_).truncated(order_);
    return *this;
  }
  GradedSeries& operator*=(const GradedSeries& o) {
    order_ = std::min(order_, o.order_);
    body_ = Polynomial::multiply(body_, o.body_, order_);
    return *this;
  }
  GradedSeries operator-() const { return GradedSeries(-body_, order_); }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const GradedSeries& b) { return a *= b; }
  friend GradedSeries operator*(GradedSeries a, const Rational& s) {
    a.body_ *= s;
    return a;
  }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.order_ == b.order_ && a.body_ == b.body_;
  }

 private:
  Polynomial body_;
  int order_ = 0;
};

inline GradedSeries truncate(const Polynomial& p, int order) { return GradedSeries(p, order); }

inline GradedSeries one_like(const GradedSeries& s) { return GradedSeries::constant(1, s.order()); }
inline GradedSeries zero_like(const GradedSeries& s) { return GradedSeries(Polynomial(), s.order()); }
inline GradedSeries scaled(const GradedSeries& s, const Rational& q) { return s * q; }
inline int min_grade(const GradedSeries& s) { return s.body().min_grade(); }

// exp(s) = sum_k s^k / k!. Requires every term of s to have grade >= 1.
inline GradedSeries series_exp(const GradedSeries& s) {
  if (!s.is_zero() && s.body().min_grade() < 1) {
    throw std::domain_error("series_exp: argument has a grade-0 term");
  }
  GradedSeries sum = one_like(s);
  GradedSeries power = one_like(s);
  for (int k = 1; k <= s.order(); ++k) {
    power = power * s * Rational(1, k);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

// log(s) = sum_k (-1)^{k+1} (s-1)^k / k. Requires the grade-0 part of s to be 1.
inline GradedSeries series_log(const GradedSeries& s) {
  if (s.body().grade_slice(0) != Polynomial(1)) {
    throw std::domain_error("series_log: grade-0 part is not 1");
  }
  const GradedSeries u = s - one_like(s);
  GradedSeries sum = zero_like(s);
  GradedSeries power = one_like(s);
  for (int k = 1; k <= s.order(); ++k) {
    power *= u;
    if (power.is_zero()) break;
    sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return sum;
}

}  // namespace mmt

#endif  // MMT_POLY_HPP_
