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

// Multiset-extended and block matrices of symbolic entries, and the four
// permanent variants:
//
//   perm_beta   sum over permutations of beta^C(pi) prod M[x][pi(x)]
//   pperm       sum over injective partial maps of prod_{dom} M[x][psi(x)]
//   pperm_btp   as pperm, weighted by beta^C(pi_psi), theta off the image
//               and phi off the domain
//   dperm_beta  perm_beta restricted to fixed-point-free permutations
//
// All four sum over matrix positions. The *_dp variants compute the same
// quantities by dynamic programming over subsets of positions (connected
// components of the functional graph anchored at their lowest position);
// they are used for the larger numeric checks.

#ifndef MMT_PERMANENTS_HPP_
#define MMT_PERMANENTS_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mmt/combinat.hpp"
#include "mmt/matrix.hpp"
#include "mmt/poly.hpp"

namespace mmt {

struct PlainLabeling {
  int n = 0;
};

// n' primed rows/columns followed by the positions of n^r.
struct BlockLabeling {
  int n_prime = 0;
  int n = 0;
  MultisetIndex r;
};

using Labeling = std::variant<PlainLabeling, BlockLabeling>;

struct SymbolicMatrix {
  Matrix<Polynomial> entries;
  Labeling labeling;

  std::size_t size() const { return entries.size(); }
};

struct ExtensionVectors {
  std::vector<Polynomial> theta;
  std::vector<Polynomial> phi;
};

// The n x n matrix of variables A(i,j).
inline SymbolicMatrix default_matrix(int n) {
  SymbolicMatrix m{Matrix<Polynomial>(n, Polynomial()), PlainLabeling{n}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.entries(i, j) = Polynomial(var::A(i + 1, j + 1));
  }
  return m;
}

// [[B, U(n^r)], [V(n^r), A(n^r, n^r)]]; repeated labels share one variable.
inline SymbolicMatrix block_extend(int n_prime, int n, const MultisetIndex& r) {
  if (r.n() != n) throw std::invalid_argument("block_extend: r must have length n");
  if (n_prime < 0) throw std::invalid_argument("block_extend: n' must be non-negative");
  const std::vector<int> labels = r.labels();
  const int dim = n_prime + static_cast<int>(labels.size());
  SymbolicMatrix m{Matrix<Polynomial>(dim, Polynomial()), BlockLabeling{n_prime, n, r}};
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      const bool px = x < n_prime;
      const bool py = y < n_prime;
      const int lx = px ? x + 1 : labels[x - n_prime];
      const int ly = py ? y + 1 : labels[y - n_prime];
      Variable v = px ? (py ? var::B(lx, ly) : var::U(lx, ly)) : (py ? var::V(lx, ly) : var::A(lx, ly));
      m.entries(x, y) = Polynomial(v);
    }
  }
  return m;
}

// A(n^r, n^r): the N x N matrix indexed by the elements of n^r.
inline SymbolicMatrix extend_matrix(int n, const MultisetIndex& r) { return block_extend(0, n, r); }

// theta/phi aligned with the rows: thetaP(i'), phiP(i') on primed rows,
// theta(label), phi(label) on multiset rows, theta(i), phi(i) for Plain(n).
inline ExtensionVectors default_vectors(const SymbolicMatrix& m) {
  ExtensionVectors v;
  if (const auto* plain = std::get_if<PlainLabeling>(&m.labeling)) {
    for (int i = 1; i <= plain->n; ++i) {
      v.theta.emplace_back(var::theta(i));
      v.phi.emplace_back(var::phi(i));
    }
    return v;
  }
  const auto& block = std::get<BlockLabeling>(m.labeling);
  for (int i = 1; i <= block.n_prime; ++i) {
    v.theta.emplace_back(var::thetaP(i));
    v.phi.emplace_back(var::phiP(i));
  }
  for (int label : block.r.labels()) {
    v.theta.emplace_back(var::theta(label));
    v.phi.emplace_back(var::phi(label));
  }
  return v;
}

namespace detail {

template <class T>
std::vector<T> powers(const T& x, int k) {
  std::vector<T> out{one_like(x)};
  for (int i = 1; i <= k; ++i) out.push_back(out.back() * x);
  return out;
}

inline MultisetIndex positions(std::size_t size) {
  return MultisetIndex(std::vector<int>{static_cast<int>(size)});
}

template <class T>
void require_square(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("permanent of a non-square matrix");
}

}  // namespace detail

template <class T>
T perm_beta(const Matrix<T>& m, const T& beta) {
  detail::require_square(m);
  const auto bpow = detail::powers(beta, static_cast<int>(m.size()));
  T sum = zero_like(beta);
  for_each_permutation(detail::positions(m.size()), [&](const MultisetPermutation& p) {
    T prod = bpow[p.cycle_count];
    for (std::size_t x = 0; x < p.target.size(); ++x) prod *= m(x, p.target[x]);
    sum += prod;
  });
  return sum;
}

template <class T>
T dperm_beta(const Matrix<T>& m, const T& beta) {
  detail::require_square(m);
  const auto bpow = detail::powers(beta, static_cast<int>(m.size()));
  T sum = zero_like(beta);
  for_each_derangement(detail::positions(m.size()), [&](const MultisetPermutation& p) {
    T prod = bpow[p.cycle_count];
    for (std::size_t x = 0; x < p.target.size(); ++x) prod *= m(x, p.target[x]);
    sum += prod;
  });
  return sum;
}

template <class T>
T pperm_btp(const Matrix<T>& m, const std::vector<T>& theta, const std::vector<T>& phi, const T& beta) {
  detail::require_square(m);
  if (theta.size() != m.size() || phi.size() != m.size()) {
    throw std::invalid_argument("pperm_btp: vector length does not match matrix");
  }
  const auto bpow = detail::powers(beta, static_cast<int>(m.size()));
  T sum = zero_like(beta);
  std::vector<char> in_image(m.size());
  for_each_partial_map(detail::positions(m.size()), [&](const PartialMap& p) {
    T prod = bpow[p.induced_cycle_count];
    std::fill(in_image.begin(), in_image.end(), 0);
    for (std::size_t x = 0; x < m.size(); ++x) {
      const int y = p.assignment[x];
      if (y == PartialMap::kUndefined) {
        prod *= phi[x];
      } else {
        prod *= m(x, y);
        in_image[y] = 1;
      }
    }
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (!in_image[y]) prod *= theta[y];
    }
    sum += prod;
  });
  return sum;
}

// Sum over partial maps of the entry products; the empty map contributes `one`.
template <class T>
T pperm(const Matrix<T>& m, const T& one) {
  detail::require_square(m);
  T sum = zero_like(one);
  for_each_partial_map(detail::positions(m.size()), [&](const PartialMap& p) {
    T prod = one;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (p.assignment[x] != PartialMap::kUndefined) prod *= m(x, p.assignment[x]);
    }
    sum += prod;
  });
  return sum;
}

inline Polynomial perm_beta(const SymbolicMatrix& m) { return perm_beta(m.entries, Polynomial(var::beta())); }
inline Polynomial dperm_beta(const SymbolicMatrix& m) { return dperm_beta(m.entries, Polynomial(var::beta())); }
inline Polynomial pperm(const SymbolicMatrix& m) { return pperm(m.entries, Polynomial(1)); }
inline Polynomial pperm_btp(const SymbolicMatrix& m, const ExtensionVectors& v) {
  return pperm_btp(m.entries, v.theta, v.phi, Polynomial(var::beta()));
}
inline Polynomial pperm_btp(const SymbolicMatrix& m) { return pperm_btp(m, default_vectors(m)); }

namespace detail {

enum class CoverKind { kFull, kPartial, kDerangement };

// Sum over all functional-graph covers of the positions, each connected
// component weighted by cycle_weight * beta (cycles) or theta * edges * phi
// (paths, partial kind only). Components are built from the lowest position
// of each subset, so each cover is counted once.
template <class T>
T cover_sum(const Matrix<T>& m, const T& beta, const std::vector<T>* theta, const std::vector<T>* phi,
            CoverKind kind) {
  require_square(m);
  const int size = static_cast<int>(m.size());
  const T one = one_like(beta);
  const T zero = zero_like(beta);
  if (size == 0) return one;
  if (size > 24) throw std::invalid_argument("cover_sum: matrix too large");
  const std::uint32_t subsets = 1u << size;
  std::vector<T> component(subsets, zero);

  // walk[S * size + v]: paths from min(S) through all of S, ending at v.
  std::vector<T> walk(static_cast<std::size_t>(subsets) * size, zero);
  for (int a = 0; a < size; ++a) walk[(std::size_t{1} << a) * size + a] = one;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int a = std::countr_zero(s);
    const bool single = std::has_single_bit(s);
    for (int v = 0; v < size; ++v) {
      if (!(s >> v & 1u)) continue;
      const T& w = walk[std::size_t{s} * size + v];
      for (int u = a + 1; u < size; ++u) {
        if (s >> u & 1u) continue;
        T& dst = walk[std::size_t{s | (1u << u)} * size + u];
        dst = dst + w * m(v, u);
      }
      if (!single || kind != CoverKind::kDerangement) {
        component[s] = component[s] + beta * w * m(v, a);
      }
    }
  }

  if (kind == CoverKind::kPartial) {
    // path[S * size + v]: paths through all of S ending at v, with theta at the start.
    std::vector<T> path(static_cast<std::size_t>(subsets) * size, zero);
    for (int a = 0; a < size; ++a) path[(std::size_t{1} << a) * size + a] = (*theta)[a];
    for (std::uint32_t s = 1; s < subsets; ++s) {
      for (int v = 0; v < size; ++v) {
        if (!(s >> v & 1u)) continue;
        const T& w = path[std::size_t{s} * size + v];
        component[s] = component[s] + w * (*phi)[v];
        for (int u = 0; u < size; ++u) {
          if (s >> u & 1u) continue;
          T& dst = path[std::size_t{s | (1u << u)} * size + u];
          dst = dst + w * m(v, u);
        }
      }
    }
  }

  std::vector<T> cover(subsets, zero);
  cover[0] = one;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    T acc = zero;
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      acc = acc + component[t | low] * cover[rest ^ t];
      if (t == 0) break;
    }
    cover[s] = acc;
  }
  return cover[subsets - 1];
}

}  // namespace detail

template <class T>
T perm_beta_dp(const Matrix<T>& m, const T& beta) {
  return detail::cover_sum<T>(m, beta, nullptr, nullptr, detail::CoverKind::kFull);
}

template <class T>
T dperm_beta_dp(const Matrix<T>& m, const T& beta) {
  return detail::cover_sum<T>(m, beta, nullptr, nullptr, detail::CoverKind::kDerangement);
}

template <class T>
T pperm_btp_dp(const Matrix<T>& m, const std::vector<T>& theta, const std::vector<T>& phi, const T& beta) {
  if (theta.size() != m.size() || phi.size() != m.size()) {
    throw std::invalid_argument("pperm_btp_dp: vector length does not match matrix");
  }
  return detail::cover_sum<T>(m, beta, &theta, &phi, detail::CoverKind::kPartial);
}

}  // namespace mmt

#endif  // MMT_PERMANENTS_HPP_
