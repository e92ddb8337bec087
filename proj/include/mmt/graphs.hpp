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

// Vertex-labelled functional digraphs of (partial) permutations of a
// multiset, their isomorphism classes and automorphism orders.
//
// Every vertex has in- and out-degree at most one, so a graph is a disjoint
// union of directed cycles and open necklaces (paths; an isolated vertex is
// a path of length one). Label-preserving isomorphism therefore reduces to
// comparing the multisets of canonical components: a cycle is read from its
// lexicographically least rotation, a path from its source end.

#ifndef MMT_GRAPHS_HPP_
#define MMT_GRAPHS_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmt/combinat.hpp"
#include "mmt/poly.hpp"

namespace mmt {

// Label i (multiset index) or i' (primed index).
struct VertexLabel {
  bool primed = false;
  int index = 0;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

inline std::string to_string(const VertexLabel& v) {
  return std::to_string(v.index) + (v.primed ? "'" : "");
}

struct PermGraph {
  static constexpr int kNone = -1;

  std::vector<VertexLabel> vertices;
  std::vector<int> successor;  // successor[x] or kNone
};

// Labels of the n' primed positions followed by those of n^r.
inline std::vector<VertexLabel> block_labels(int n_prime, const MultisetIndex& r) {
  std::vector<VertexLabel> out;
  for (int i = 1; i <= n_prime; ++i) out.push_back({true, i});
  for (int label : r.labels()) out.push_back({false, label});
  return out;
}

inline PermGraph graph_of(const std::vector<int>& successor, std::vector<VertexLabel> labels) {
  if (successor.size() != labels.size()) throw std::invalid_argument("graph_of: size mismatch");
  std::vector<char> has_in(successor.size(), 0);
  for (int y : successor) {
    if (y == PermGraph::kNone) continue;
    if (y < 0 || y >= static_cast<int>(successor.size()) || has_in[y]) {
      throw std::invalid_argument("graph_of: not an injective partial map");
    }
    has_in[y] = 1;
  }
  return PermGraph{std::move(labels), successor};
}

inline PermGraph graph_of(const MultisetPermutation& p) {
  std::vector<VertexLabel> labels;
  for (int l : p.labels) labels.push_back({false, l});
  return graph_of(p.target, std::move(labels));
}

inline PermGraph graph_of(const PartialMap& p) {
  std::vector<VertexLabel> labels;
  for (int l : p.labels) labels.push_back({false, l});
  return graph_of(p.assignment, std::move(labels));
}

struct Component {
  bool cycle = false;
  std::vector<VertexLabel> labels;  // canonical reading order

  int length() const { return static_cast<int>(labels.size()); }

  friend auto operator<=>(const Component&, const Component&) = default;
  friend bool operator==(const Component&, const Component&) = default;
};

inline std::vector<VertexLabel> least_rotation(const std::vector<VertexLabel>& w) {
  std::vector<VertexLabel> best = w;
  std::vector<VertexLabel> rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

// Smallest s > 0 with rotation by s fixing the cyclic word; s divides its length.
template <class Word>
int primitive_period(const Word& w) {
  const int t = static_cast<int>(w.size());
  for (int s = 1; s < t; ++s) {
    if (t % s != 0) continue;
    bool ok = true;
    for (int k = 0; k < t && ok; ++k) ok = w[k] == w[(k + s) % t];
    if (ok) return s;
  }
  return t;
}

inline std::string to_string(const Component& c) {
  std::string s = c.cycle ? "C(" : "P(";
  for (std::size_t k = 0; k < c.labels.size(); ++k) {
    if (k) s += ",";
    s += to_string(c.labels[k]);
  }
  return s + ")";
}

// Canonical components, sorted.
inline std::vector<Component> components(const PermGraph& g) {
  const int size = static_cast<int>(g.vertices.size());
  std::vector<char> has_in(size, 0);
  for (int y : g.successor) {
    if (y != PermGraph::kNone) has_in[y] = 1;
  }
  std::vector<char> seen(size, 0);
  std::vector<Component> out;
  for (int x = 0; x < size; ++x) {
    if (has_in[x] || seen[x]) continue;
    Component c;
    for (int y = x; y != PermGraph::kNone; y = g.successor[y]) {
      seen[y] = 1;
      c.labels.push_back(g.vertices[y]);
    }
    out.push_back(std::move(c));
  }
  for (int x = 0; x < size; ++x) {
    if (seen[x]) continue;
    Component c{true, {}};
    for (int y = x; !seen[y]; y = g.successor[y]) {
      seen[y] = 1;
      c.labels.push_back(g.vertices[y]);
    }
    c.labels = least_rotation(c.labels);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string canonical_key(const std::vector<Component>& parts) {
  std::string key;
  for (const auto& c : parts) {
    if (!key.empty()) key += " ";
    key += to_string(c);
  }
  return key.empty() ? "()" : key;
}

// Equal keys iff the graphs are isomorphic under label-preserving relabelling.
inline std::string canonical_key(const PermGraph& g) { return canonical_key(components(g)); }

// Groups equal components: (component, multiplicity), sorted.
inline std::vector<std::pair<Component, int>> group_components(const std::vector<Component>& parts) {
  std::vector<std::pair<Component, int>> out;
  for (const auto& c : parts) {
    if (!out.empty() && out.back().first == c) {
      ++out.back().second;
    } else {
      out.emplace_back(c, 1);
    }
  }
  return out;
}

// |Aut| = prod m! |Aut(c)|^m, where a cycle of length t and primitive period
// s has |Aut| = t / s and every path has trivial automorphism group.
inline std::uint64_t aut_order(const std::vector<std::pair<Component, int>>& grouped) {
  std::uint64_t order = 1;
  for (const auto& [c, m] : grouped) {
    const std::uint64_t own = c.cycle ? static_cast<std::uint64_t>(c.length() / primitive_period(c.labels)) : 1;
    for (int k = 1; k <= m; ++k) order *= static_cast<std::uint64_t>(k) * own;
  }
  return order;
}

inline std::uint64_t aut_order(const PermGraph& g) { return aut_order(group_components(components(g))); }

// Edge weight: B, U, V or A according to which endpoints are primed.
inline Variable edge_variable(const VertexLabel& from, const VertexLabel& to) {
  if (from.primed) return to.primed ? var::B(from.index, to.index) : var::U(from.index, to.index);
  return to.primed ? var::V(from.index, to.index) : var::A(from.index, to.index);
}

// beta times the cyclic edge product for a cycle; source weight (theta or
// thetaP) times edges times sink weight (phi or phiP) for a path.
inline Polynomial component_weight(const Component& c) {
  std::vector<Monomial::Factor> factors;
  const int t = c.length();
  for (int k = 0; k + 1 < t; ++k) factors.emplace_back(edge_variable(c.labels[k], c.labels[k + 1]), 1);
  if (c.cycle) {
    factors.emplace_back(edge_variable(c.labels[t - 1], c.labels[0]), 1);
    factors.emplace_back(var::beta(), 1);
  } else {
    const VertexLabel& src = c.labels.front();
    const VertexLabel& dst = c.labels.back();
    factors.emplace_back(src.primed ? var::thetaP(src.index) : var::theta(src.index), 1);
    factors.emplace_back(dst.primed ? var::phiP(dst.index) : var::phi(dst.index), 1);
  }
  return Polynomial::term(1, Monomial::from_factors(std::move(factors)));
}

inline Polynomial graph_weight(const PermGraph& g) {
  Polynomial w(1);
  for (const auto& c : components(g)) w *= component_weight(c);
  return w;
}

enum class GraphKind { kFull, kPartial, kDerangement };

inline std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::kFull: return "full";
    case GraphKind::kPartial: return "partial";
    case GraphKind::kDerangement: return "derangement";
  }
  return "?";
}

struct GraphClass {
  std::string key;
  std::uint64_t aut_order = 1;
  Polynomial weight;
  std::vector<std::pair<Component, int>> parts;
};

namespace detail {

// All words of the given length over labels 1..n.
inline void for_each_word(int n, int length, const std::function<void(const std::vector<VertexLabel>&)>& f) {
  std::vector<VertexLabel> w(length, VertexLabel{false, 1});
  while (true) {
    f(w);
    int k = length - 1;
    while (k >= 0 && w[k].index == n) w[k--].index = 1;
    if (k < 0) return;
    ++w[k].index;
  }
}

}  // namespace detail

// Every isomorphism class of graphs on exactly N unprimed vertices labelled
// from {1..n}. Built from canonical component multisets directly.
inline std::vector<GraphClass> enumerate_classes(int n, int total, GraphKind kind) {
  if (n < 1 || total < 0) throw std::invalid_argument("enumerate_classes: need n >= 1, N >= 0");
  std::vector<Component> types;
  for (int t = 1; t <= total; ++t) {
    detail::for_each_word(n, t, [&](const std::vector<VertexLabel>& w) {
      if ((kind != GraphKind::kDerangement || t >= 2) && least_rotation(w) == w) types.push_back({true, w});
      if (kind == GraphKind::kPartial) types.push_back({false, w});
    });
  }
  std::sort(types.begin(), types.end());
  std::vector<Polynomial> type_weight;
  for (const auto& c : types) type_weight.push_back(component_weight(c));

  std::vector<GraphClass> out;
  std::vector<std::pair<Component, int>> chosen;
  std::function<void(std::size_t, int, const Polynomial&)> rec = [&](std::size_t i, int left,
                                                                      const Polynomial& w) {
    if (left == 0) {
      GraphClass g;
      g.parts = chosen;
      std::vector<Component> flat;
      for (const auto& [c, m] : chosen) flat.insert(flat.end(), m, c);
      g.key = canonical_key(flat);
      g.aut_order = aut_order(chosen);
      g.weight = w;
      out.push_back(std::move(g));
      return;
    }
    if (i == types.size()) return;
    rec(i + 1, left, w);
    Polynomial acc = w;
    const int len = types[i].length();
    for (int m = 1; m * len <= left; ++m) {
      acc *= type_weight[i];
      chosen.emplace_back(types[i], m);
      rec(i + 1, left - m * len, acc);
      chosen.pop_back();
    }
  };
  rec(0, total, Polynomial(1));
  std::sort(out.begin(), out.end(), [](const GraphClass& a, const GraphClass& b) { return a.key < b.key; });
  return out;
}

// sum over classes of weight / |Aut|.
inline Polynomial class_sum(const std::vector<GraphClass>& classes) {
  Polynomial sum;
  for (const auto& g : classes) sum += g.weight * Rational(Integer(1), Integer(std::to_string(g.aut_order)));
  return sum;
}

// Brute-force companion to enumerate_classes: canonicalizes the graph of every
// map on every multiset of size N and counts how many maps share each key.
struct OrbitRecord {
  Integer count = 0;
  std::uint64_t aut_order = 1;
  Integer label_group_order = 1;
};

inline std::map<std::string, OrbitRecord> orbit_counts(int n, int total, GraphKind kind) {
  std::map<std::string, OrbitRecord> out;
  for (const MultisetIndex& r : multisets_of_size(n, total)) {
    const Integer lambda = multiset_factorial(r);
    auto record = [&](const PermGraph& g) {
      auto parts = components(g);
      OrbitRecord& rec = out[canonical_key(parts)];
      ++rec.count;
      rec.aut_order = aut_order(group_components(parts));
      rec.label_group_order = lambda;
    };
    switch (kind) {
      case GraphKind::kFull:
        for_each_permutation(r, [&](const MultisetPermutation& p) { record(graph_of(p)); });
        break;
      case GraphKind::kDerangement:
        for_each_derangement(r, [&](const MultisetPermutation& p) { record(graph_of(p)); });
        break;
      case GraphKind::kPartial:
        for_each_partial_map(r, [&](const PartialMap& p) { record(graph_of(p)); });
        break;
    }
  }
  return out;
}

struct LyndonCycle {
  std::vector<int> labels;
  Polynomial weight;  // cyclic product of A entries, beta = 1
};

// Primitive cycles with at most max_length vertices over labels 1..n, one
// Lyndon word per rotation class, in lexicographic order (Duval's generator).
inline std::vector<LyndonCycle> lyndon_cycles(int n, int max_length) {
  if (n < 1 || max_length < 1) throw std::invalid_argument("lyndon_cycles: need n >= 1, maxGrade >= 1");
  std::vector<LyndonCycle> out;
  std::vector<int> w{0};
  while (!w.empty()) {
    LyndonCycle c;
    for (int x : w) c.labels.push_back(x + 1);
    std::vector<Monomial::Factor> factors;
    const std::size_t t = c.labels.size();
    for (std::size_t k = 0; k < t; ++k) factors.emplace_back(var::A(c.labels[k], c.labels[(k + 1) % t]), 1);
    c.weight = Polynomial::term(1, Monomial::from_factors(std::move(factors)));
    out.push_back(std::move(c));

    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(max_length)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

}  // namespace mmt

#endif  // MMT_GRAPHS_HPP_
