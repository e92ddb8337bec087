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

// Closed-form truncated series built from a matrix A whose entries have no
// grade-0 part:
//
//   (I - A)^{-1}        = sum_{k<=order} A^k
//   det(I - A)^{-beta}  = exp(beta * sum_t Tr(A^t) / t)
//   theta (I-A)^{-1} phi^T
//   B~ = B + U (I-A)^{-1} V,   B^ = B - diag B + U (I-A)^{-1} V
//   theta~ = theta' + theta (I-A)^{-1} V,   phi~^T = phi'^T + U (I-A)^{-1} phi^T
//
// Everything is templated on the series type S (GradedSeries for exact
// symbolic work, ZSeries for the modular check). S provides +, -, *,
// one_like, zero_like, scaled, series_exp and has_grade_zero_part.

#ifndef MMT_SERIES_HPP_
#define MMT_SERIES_HPP_

#include <stdexcept>
#include <vector>

#include "mmt/matrix.hpp"
#include "mmt/permanents.hpp"
#include "mmt/poly.hpp"

namespace mmt {

template <class S>
using SeriesMatrix = Matrix<S>;
template <class S>
using SeriesVector = std::vector<S>;

inline bool has_grade_zero_part(const GradedSeries& s) { return !s.is_zero() && s.body().min_grade() < 1; }

template <class S>
void require_no_grade_zero(const Matrix<S>& a, const char* what) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (has_grade_zero_part(a(i, j))) {
        throw std::domain_error(std::string(what) + ": entry has a grade-0 term, series does not terminate");
      }
    }
  }
}

template <class S>
Matrix<S> neumann(const Matrix<S>& a, int order) {
  require_no_grade_zero(a, "neumann");
  const S one = one_like(a(0, 0));
  Matrix<S> sum = identity_matrix(a.size(), one);
  Matrix<S> power = sum;
  for (int k = 1; k <= order; ++k) {
    power = power * a;
    sum = sum + power;
  }
  return sum;
}

// sum_{t=1..order} Tr(A^t) / t, i.e. -Tr log(I - A).
template <class S>
S trace_log_series(const Matrix<S>& a, int order) {
  require_no_grade_zero(a, "trace_log_series");
  const S zero = zero_like(a(0, 0));
  S sum = zero;
  Matrix<S> power = a;
  for (int t = 1; t <= order; ++t) {
    if (t > 1) power = power * a;
    sum = sum + scaled(trace(power, zero), Rational(1, t));
  }
  return sum;
}

template <class S>
S det_inverse_power(const Matrix<S>& a, const S& beta, int order) {
  return series_exp(beta * trace_log_series(a, order));
}

template <class S>
S necklace_sum(const std::vector<S>& theta, const Matrix<S>& a, const std::vector<S>& phi, int order) {
  if (theta.size() != a.size() || phi.size() != a.size()) {
    throw std::invalid_argument("necklace_sum: dimension mismatch");
  }
  const std::vector<S> row = row_times(theta, neumann(a, order));
  S sum = zero_like(a(0, 0));
  for (std::size_t k = 0; k < row.size(); ++k) sum = sum + row[k] * phi[k];
  return sum;
}

template <class S>
Matrix<S> btilde(const Matrix<S>& b, const Matrix<S>& u, const Matrix<S>& v, const Matrix<S>& a, int order) {
  return b + u * neumann(a, order) * v;
}

template <class S>
Matrix<S> bhat(const Matrix<S>& b, const Matrix<S>& u, const Matrix<S>& v, const Matrix<S>& a, int order) {
  Matrix<S> off = b;
  for (std::size_t i = 0; i < off.size(); ++i) off(i, i) = zero_like(off(i, i));
  return off + u * neumann(a, order) * v;
}

template <class S>
std::vector<S> theta_tilde(const std::vector<S>& theta_p, const std::vector<S>& theta, const Matrix<S>& v,
                           const Matrix<S>& a, int order) {
  std::vector<S> out = row_times(theta, neumann(a, order) * v);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = theta_p.at(k) + out[k];
  return out;
}

template <class S>
std::vector<S> phi_tilde(const std::vector<S>& phi_p, const Matrix<S>& u, const Matrix<S>& a,
                         const std::vector<S>& phi, int order) {
  std::vector<S> out = times_column(u * neumann(a, order), phi);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = phi_p.at(k) + out[k];
  return out;
}

template <class S>
S perm_beta_series(const Matrix<S>& m, const S& beta) {
  return perm_beta(m, beta);
}

template <class S>
S pperm_btp_series(const Matrix<S>& m, const std::vector<S>& theta, const std::vector<S>& phi, const S& beta) {
  return pperm_btp(m, theta, phi, beta);
}

// Default symbolic inputs: every entry is its own variable, truncated at order.
namespace symbolic {

inline GradedSeries variable(const Variable& v, int order) { return GradedSeries(Polynomial(v), order); }

template <class F>
Matrix<GradedSeries> matrix_of(int rows, int cols, int order, F&& make) {
  Matrix<GradedSeries> m(rows, cols, GradedSeries(Polynomial(), order));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = variable(make(i + 1, j + 1), order);
  }
  return m;
}

template <class F>
std::vector<GradedSeries> vector_of(int size, int order, F&& make) {
  std::vector<GradedSeries> v;
  for (int i = 1; i <= size; ++i) v.push_back(variable(make(i), order));
  return v;
}

inline Matrix<GradedSeries> A(int n, int order) { return matrix_of(n, n, order, var::A); }
inline Matrix<GradedSeries> B(int n_prime, int order) { return matrix_of(n_prime, n_prime, order, var::B); }
inline Matrix<GradedSeries> U(int n_prime, int n, int order) { return matrix_of(n_prime, n, order, var::U); }
inline Matrix<GradedSeries> V(int n, int n_prime, int order) { return matrix_of(n, n_prime, order, var::V); }
inline std::vector<GradedSeries> theta(int n, int order) { return vector_of(n, order, var::theta); }
inline std::vector<GradedSeries> phi(int n, int order) { return vector_of(n, order, var::phi); }
inline std::vector<GradedSeries> thetaP(int n_prime, int order) { return vector_of(n_prime, order, var::thetaP); }
inline std::vector<GradedSeries> phiP(int n_prime, int order) { return vector_of(n_prime, order, var::phiP); }
inline GradedSeries beta(int order) { return variable(var::beta(), order); }

}  // namespace symbolic

inline Matrix<GradedSeries> neumann(int n, int order) { return neumann(symbolic::A(n, order), order); }

inline GradedSeries det_inverse_power(int n, int order) {
  return det_inverse_power(symbolic::A(n, order), symbolic::beta(order), order);
}

inline Matrix<GradedSeries> btilde(int order, int n_prime, int n) {
  return btilde(symbolic::B(n_prime, order), symbolic::U(n_prime, n, order), symbolic::V(n, n_prime, order),
                symbolic::A(n, order), order);
}

inline Matrix<GradedSeries> bhat(int order, int n_prime, int n) {
  return bhat(symbolic::B(n_prime, order), symbolic::U(n_prime, n, order), symbolic::V(n, n_prime, order),
              symbolic::A(n, order), order);
}

inline std::vector<GradedSeries> theta_tilde(int order, int n_prime, int n) {
  return theta_tilde(symbolic::thetaP(n_prime, order), symbolic::theta(n, order), symbolic::V(n, n_prime, order),
                     symbolic::A(n, order), order);
}

inline std::vector<GradedSeries> phi_tilde(int order, int n_prime, int n) {
  return phi_tilde(symbolic::phiP(n_prime, order), symbolic::U(n_prime, n, order), symbolic::A(n, order),
                   symbolic::phi(n, order), order);
}

}  // namespace mmt

#endif  // MMT_SERIES_HPP_
