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

// Multisets n^r and streamed enumeration of permutations, partial
// permutations and derangements of their positions.
//
// Positions are 0-based and ordered 1_1 < ... < 1_{r_1} < 2_1 < ...; labels
// are 1-based. Enumerators call a visitor once per object, in lexicographic
// order of the target sequence, and never materialize the whole set.

#ifndef MMT_COMBINAT_HPP_
#define MMT_COMBINAT_HPP_

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mmt/poly.hpp"

namespace mmt {

class MultisetIndex {
 public:
  MultisetIndex() = default;
  explicit MultisetIndex(std::vector<int> r) : r_(std::move(r)) {
    for (int x : r_) {
      if (x < 0) throw std::invalid_argument("multiplicities must be non-negative");
    }
  }

  const std::vector<int>& r() const { return r_; }
  int n() const { return static_cast<int>(r_.size()); }
  int operator[](int i) const { return r_[i]; }
  int size() const { return std::accumulate(r_.begin(), r_.end(), 0); }

  // label(x) for every position x, 1-based.
  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < n(); ++i) out.insert(out.end(), r_[i], i + 1);
    return out;
  }

  friend bool operator==(const MultisetIndex&, const MultisetIndex&) = default;

 private:
  std::vector<int> r_;
};

inline Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// r! = r_1! ... r_n!
inline Integer multiset_factorial(const MultisetIndex& r) {
  Integer f = 1;
  for (int x : r.r()) f *= factorial(x);
  return f;
}

// Every r of length n with exactly `total` elements; r_1 descending first.
inline std::vector<MultisetIndex> multisets_of_size(int n, int total) {
  std::vector<MultisetIndex> out;
  std::vector<int> r(n, 0);
  std::function<void(int, int)> fill = [&](int i, int left) {
    if (i == n - 1) {
      r[i] = left;
      out.emplace_back(r);
      return;
    }
    for (int x = left; x >= 0; --x) {
      r[i] = x;
      fill(i + 1, left - x);
    }
  };
  if (n >= 1 && total >= 0) fill(0, total);
  return out;
}

// All r with sum(r) <= n_max, graded by size then lexicographically descending.
inline std::vector<MultisetIndex> multisets_up_to(int n, int n_max) {
  if (n < 1) throw std::invalid_argument("multisets_up_to: n must be >= 1");
  std::vector<MultisetIndex> out;
  for (int total = 0; total <= n_max; ++total) {
    auto layer = multisets_of_size(n, total);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// The 2^n vectors with every r_i in {0,1}.
inline std::vector<MultisetIndex> subsets_of(int n) {
  std::vector<MultisetIndex> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = (mask >> i) & 1;
    out.emplace_back(std::move(r));
  }
  return out;
}

// Number of cycles of a bijection given as a target sequence.
inline int cycle_count(const std::vector<int>& target) {
  std::vector<char> seen(target.size(), 0);
  int cycles = 0;
  for (std::size_t x = 0; x < target.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(target[y])) seen[y] = 1;
  }
  return cycles;
}

struct MultisetPermutation {
  std::vector<int> target;  // target[x] = pi(x)
  std::vector<int> labels;  // labels[x] in {1..n}
  int cycle_count = 0;
};

namespace detail {

// Depth-first lexicographic generator of bijections on {0..size-1}.
template <class F>
void enumerate_bijections(int size, bool exclude_fixed, F&& visit) {
  std::vector<int> target(size, -1);
  std::vector<char> used(size, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == size) {
      visit(static_cast<const std::vector<int>&>(target));
      return;
    }
    for (int y = 0; y < size; ++y) {
      if (used[y] || (exclude_fixed && y == x)) continue;
      used[y] = 1;
      target[x] = y;
      rec(x + 1);
      used[y] = 0;
    }
  };
  rec(0);
}

}  // namespace detail

// Streams all N! permutations of the positions of n^r. N = 0 yields the
// single empty permutation with zero cycles.
template <class F>
void for_each_permutation(const MultisetIndex& r, F&& visit) {
  MultisetPermutation p;
  p.labels = r.labels();
  detail::enumerate_bijections(r.size(), false, [&](const std::vector<int>& t) {
    p.target = t;
    p.cycle_count = cycle_count(t);
    visit(static_cast<const MultisetPermutation&>(p));
  });
}

// Permutations with no fixed position (pi(x) != x). Identical labels at
// distinct positions are distinct elements, so (1_1 1_2) is a derangement.
template <class F>
void for_each_derangement(const MultisetIndex& r, F&& visit) {
  MultisetPermutation p;
  p.labels = r.labels();
  detail::enumerate_bijections(r.size(), true, [&](const std::vector<int>& t) {
    p.target = t;
    p.cycle_count = cycle_count(t);
    visit(static_cast<const MultisetPermutation&>(p));
  });
}

inline std::vector<MultisetPermutation> permutations(const MultisetIndex& r) {
  std::vector<MultisetPermutation> out;
  for_each_permutation(r, [&](const MultisetPermutation& p) { out.push_back(p); });
  return out;
}

inline std::vector<MultisetPermutation> derangements(const MultisetIndex& r) {
  std::vector<MultisetPermutation> out;
  for_each_derangement(r, [&](const MultisetPermutation& p) { out.push_back(p); });
  return out;
}

// An injective partial self-map of positions. kUndefined marks positions
// outside the domain.
struct PartialMap {
  static constexpr int kUndefined = -1;

  std::vector<int> assignment;
  std::vector<int> labels;
  std::vector<int> domain;  // sorted
  std::vector<int> image;   // sorted
  int induced_cycle_count = 0;

  // The permutation pi_psi formed by the cycles of psi: entry x is psi(x)
  // when x lies on a cycle and kUndefined otherwise.
  std::vector<int> induced_permutation() const {
    const int size = static_cast<int>(assignment.size());
    std::vector<int> out(size, kUndefined);
    for (int x = 0; x < size; ++x) {
      int y = assignment[x];
      for (int steps = 0; y != kUndefined && y != x && steps < size; ++steps) y = assignment[y];
      if (y == x) out[x] = assignment[x];
    }
    return out;
  }
};

// Cycles of psi; vertices on open paths do not count.
inline int partial_cycle_count(const std::vector<int>& assignment) {
  const int size = static_cast<int>(assignment.size());
  std::vector<char> state(size, 0);  // 0 new, 1 on current walk, 2 done
  int cycles = 0;
  for (int x = 0; x < size; ++x) {
    if (state[x]) continue;
    int y = x;
    while (y != PartialMap::kUndefined && state[y] == 0) {
      state[y] = 1;
      y = assignment[y];
    }
    if (y != PartialMap::kUndefined && state[y] == 1) ++cycles;
    for (int w = x; w != PartialMap::kUndefined && state[w] == 1; w = assignment[w]) state[w] = 2;
  }
  return cycles;
}

// Streams every injective partial map on the positions of n^r, starting with
// the empty map. At each position "undefined" precedes the targets.
template <class F>
void for_each_partial_map(const MultisetIndex& r, F&& visit) {
  const int size = r.size();
  PartialMap p;
  p.labels = r.labels();
  p.assignment.assign(size, PartialMap::kUndefined);
  std::vector<char> used(size, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == size) {
      p.domain.clear();
      p.image.clear();
      for (int y = 0; y < size; ++y) {
        if (p.assignment[y] != PartialMap::kUndefined) p.domain.push_back(y);
        if (used[y]) p.image.push_back(y);
      }
      p.induced_cycle_count = partial_cycle_count(p.assignment);
      visit(static_cast<const PartialMap&>(p));
      return;
    }
    p.assignment[x] = PartialMap::kUndefined;
    rec(x + 1);
    for (int y = 0; y < size; ++y) {
      if (used[y]) continue;
      used[y] = 1;
      p.assignment[x] = y;
      rec(x + 1);
      used[y] = 0;
    }
    p.assignment[x] = PartialMap::kUndefined;
  };
  rec(0);
}

inline std::vector<PartialMap> partial_maps(const MultisetIndex& r) {
  std::vector<PartialMap> out;
  for_each_partial_map(r, [&](const PartialMap& p) { out.push_back(p); });
  return out;
}

}  // namespace mmt

#endif  // MMT_COMBINAT_HPP_
