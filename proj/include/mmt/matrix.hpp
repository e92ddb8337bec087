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

#ifndef MMT_MATRIX_HPP_
#define MMT_MATRIX_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mmt {

// Dense matrix over any ring type. Ring elements only need +, -, * and the
// free functions one_like / zero_like, found by argument-dependent lookup.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t n, const T& fill) : Matrix(n, n, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // Dimension of a square matrix.
  std::size_t size() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  Matrix map(F&& f) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = f(x);
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.data_[k] + b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.data_[k] - b.data_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    if (a.cols_ == 0) throw std::invalid_argument("matrix product: empty inner dimension");
    Matrix out(a.rows_, b.cols_, zero_like(a.data_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = acc;
      }
    }
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& one) {
  Matrix<T> out(n, zero_like(one));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
  return out;
}

template <class T>
T trace(const Matrix<T>& m, const T& zero) {
  T acc = zero;
  for (std::size_t i = 0; i < m.size(); ++i) acc = acc + m(i, i);
  return acc;
}

// Row vector times matrix.
template <class T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
  std::vector<T> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T acc = v.front() * m(0, j);
    for (std::size_t k = 1; k < v.size(); ++k) acc = acc + v[k] * m(k, j);
    out.push_back(acc);
  }
  return out;
}

// Matrix times column vector.
template <class T>
std::vector<T> times_column(const Matrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("times_column: dimension mismatch");
  std::vector<T> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc = m(i, 0) * v.front();
    for (std::size_t k = 1; k < v.size(); ++k) acc = acc + m(i, k) * v[k];
    out.push_back(acc);
  }
  return out;
}

// Laplace expansion along the first row. The 0x0 determinant is `one`.
template <class T>
T determinant(const Matrix<T>& m, const T& one) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc = zero_like(one);
  for (std::size_t col = 0; col < n; ++col) {
    Matrix<T> minor(n - 1, zero_like(one));
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j != col) minor(i - 1, jj++) = m(i, j);
      }
    }
    const T term = m(0, col) * determinant(minor, one);
    if (col % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

}  // namespace mmt

#endif  // MMT_MATRIX_HPP_
