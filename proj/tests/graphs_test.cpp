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

#include "mmt/graphs.hpp"

#include <gtest/gtest.h>

#include <set>

#include "mmt/permanents.hpp"
#include "test_util.hpp"

namespace mmt {
namespace {

Polynomial P(const Variable& v) { return Polynomial(v); }

std::vector<VertexLabel> word(std::initializer_list<int> xs) {
  std::vector<VertexLabel> w;
  for (int x : xs) w.push_back({false, x});
  return w;
}

// Positions of r = (3,2,0,1): 1_1 1_2 1_3 2_1 2_2 4_1 -> 0..5.
// pi = (1_1 2_1 1_2 2_2)(1_3 4_1).
std::vector<int> doubled_cycle_target() { return {3, 4, 5, 1, 0, 2}; }

TEST(GraphTest, DoubledCycleGraph) {
  const MultisetIndex r({3, 2, 0, 1});
  const PermGraph g = graph_of(doubled_cycle_target(), block_labels(0, r));
  const auto parts = components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(canonical_key(g), "C(1,2,1,2) C(1,4)");
  EXPECT_EQ(aut_order(g), 2u);
  const Polynomial a12 = P(var::A(1, 2));
  const Polynomial a21 = P(var::A(2, 1));
  const Polynomial b = P(var::beta());
  EXPECT_EQ(graph_weight(g), b * b * a12 * a12 * a21 * a21 * P(var::A(1, 4)) * P(var::A(4, 1)));
}

// Orbit-stabilizer: exactly |Lambda(r)| / |Aut| = 12 / 2 = 6 permutations share the graph.
TEST(GraphTest, DoubledCycleOrbitHasSixPermutations) {
  const MultisetIndex r({3, 2, 0, 1});
  const std::string key = canonical_key(graph_of(doubled_cycle_target(), block_labels(0, r)));
  int count = 0;
  for_each_permutation(r, [&](const MultisetPermutation& p) { count += canonical_key(graph_of(p)) == key; });
  EXPECT_EQ(count, 6);
  EXPECT_EQ(multiset_factorial(r), Integer(12));
}

// Stabilizer of pi inside Lambda(r), computed by enumerating Lambda(r) itself.
TEST(GraphTest, DoubledCycleStabilizerByEnumeration) {
  const std::vector<int> pi = doubled_cycle_target();
  const std::vector<int> labels = MultisetIndex({3, 2, 0, 1}).labels();
  std::vector<int> lambda = {0, 1, 2, 3, 4, 5};
  int stabilizer = 0;
  int group = 0;
  do {
    bool label_preserving = true;
    for (int x = 0; x < 6; ++x) label_preserving = label_preserving && labels[lambda[x]] == labels[x];
    if (!label_preserving) continue;
    ++group;
    bool commutes = true;
    for (int x = 0; x < 6; ++x) commutes = commutes && lambda[pi[x]] == pi[lambda[x]];
    stabilizer += commutes;
  } while (std::next_permutation(lambda.begin(), lambda.end()));
  EXPECT_EQ(group, 12);
  EXPECT_EQ(stabilizer, 2);
}

TEST(GraphTest, PartialMapGraph) {
  const int u = PermGraph::kNone;
  const MultisetIndex r({3, 2, 0, 1});
  const PermGraph g = graph_of({3, u, 5, 1, u, 2}, block_labels(0, r));
  EXPECT_EQ(canonical_key(g), "P(1,2,1) P(2) C(1,4)");
  const Polynomial expected = P(var::beta()) * P(var::A(1, 4)) * P(var::A(4, 1)) * P(var::theta(1)) *
                              P(var::A(1, 2)) * P(var::A(2, 1)) * P(var::phi(1)) * P(var::theta(2)) *
                              P(var::phi(2));
  EXPECT_EQ(graph_weight(g), expected);
  EXPECT_EQ(aut_order(g), 1u);
}

TEST(GraphTest, RotationsShareKeys) {
  const std::vector<VertexLabel> labels = word({1, 2, 2});
  const PermGraph a = graph_of({1, 2, 0}, labels);                      // 1 -> 2 -> 2 -> 1
  const PermGraph b = graph_of({1, 2, 0}, word({2, 1, 2}));             // rotated reading
  EXPECT_EQ(canonical_key(a), canonical_key(b));
  EXPECT_EQ(canonical_key(a), "C(1,2,2)");
}

TEST(GraphTest, RejectsNonInjective) {
  EXPECT_THROW(graph_of({1, 1}, word({1, 1})), std::invalid_argument);
  EXPECT_THROW(graph_of({0}, word({1, 1})), std::invalid_argument);
}

TEST(GraphTest, CycleAutomorphismsDivideLength) {
  for (int t = 1; t <= 6; ++t) {
    detail::for_each_word(2, t, [&](const std::vector<VertexLabel>& w) {
      std::vector<int> succ(t);
      for (int k = 0; k < t; ++k) succ[k] = (k + 1) % t;
      const std::uint64_t aut = aut_order(graph_of(succ, w));
      EXPECT_EQ(t % aut, 0u);
      EXPECT_EQ(aut, static_cast<std::uint64_t>(t / primitive_period(w)));
    });
  }
  EXPECT_EQ(primitive_period(word({1, 2, 1, 2})), 2);
  EXPECT_EQ(primitive_period(word({1, 1, 2})), 3);
}

// Enumerated classes agree with brute-force canonicalization: the same keys,
// the same automorphism orders, and |Lambda(r)| / |Aut| maps in each class.
TEST(ClassTest, OrbitStabilizerAcrossKinds) {
  for (GraphKind kind : {GraphKind::kFull, GraphKind::kPartial, GraphKind::kDerangement}) {
    for (int n = 1; n <= 2; ++n) {
      for (int total = 0; total <= 4; ++total) {
        const auto classes = enumerate_classes(n, total, kind);
        const auto orbits = orbit_counts(n, total, kind);
        ASSERT_EQ(classes.size(), orbits.size()) << to_string(kind) << " n=" << n << " N=" << total;
        for (const auto& g : classes) {
          const auto it = orbits.find(g.key);
          ASSERT_NE(it, orbits.end()) << g.key;
          EXPECT_EQ(it->second.aut_order, g.aut_order);
          EXPECT_EQ(it->second.label_group_order % Integer(std::to_string(g.aut_order)), 0);
          EXPECT_EQ(it->second.count * Integer(std::to_string(g.aut_order)), it->second.label_group_order);
        }
      }
    }
  }
}

TEST(ClassTest, SmallFullClasses) {
  const auto classes = enumerate_classes(1, 2, GraphKind::kFull);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].key, "C(1) C(1)");
  EXPECT_EQ(classes[0].aut_order, 2u);
  EXPECT_EQ(classes[1].key, "C(1,1)");
  EXPECT_EQ(classes[1].aut_order, 2u);
  const Polynomial a = P(var::A(1, 1));
  const Polynomial b = P(var::beta());
  EXPECT_EQ(class_sum(classes), (b * b * a * a + b * a * a) * Rational(1, 2));
}

TEST(ClassTest, DerangementsHaveNoLoops) {
  for (const auto& g : enumerate_classes(2, 4, GraphKind::kDerangement)) {
    for (const auto& [c, m] : g.parts) EXPECT_GE(c.length(), 2);
  }
  EXPECT_TRUE(enumerate_classes(1, 1, GraphKind::kDerangement).empty());
}

// Moebius count of Lyndon words: (1/t) sum_{d | t} mu(d) n^{t/d}.
int mobius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  return k > 1 ? -result : result;
}

long lyndon_count(int n, int t) {
  long sum = 0;
  for (int d = 1; d <= t; ++d) {
    if (t % d) continue;
    long power = 1;
    for (int k = 0; k < t / d; ++k) power *= n;
    sum += mobius(d) * power;
  }
  return sum / t;
}

TEST(LyndonTest, CountsMatchMoebiusFormula) {
  for (int n = 1; n <= 3; ++n) {
    const int max_len = 6;
    const auto cycles = lyndon_cycles(n, max_len);
    std::map<int, long> by_len;
    std::set<std::vector<int>> seen;
    for (const auto& c : cycles) {
      ++by_len[static_cast<int>(c.labels.size())];
      EXPECT_TRUE(seen.insert(c.labels).second);
      std::vector<VertexLabel> w;
      for (int x : c.labels) w.push_back({false, x});
      EXPECT_EQ(least_rotation(w), w);
      EXPECT_EQ(primitive_period(w), static_cast<int>(w.size()));
    }
    for (int t = 1; t <= max_len; ++t) EXPECT_EQ(by_len[t], lyndon_count(n, t)) << "n=" << n << " t=" << t;
  }
  EXPECT_THROW(lyndon_cycles(0, 3), std::invalid_argument);
}

TEST(LyndonTest, WeightsAreCyclicProducts) {
  const auto cycles = lyndon_cycles(2, 3);
  ASSERT_EQ(cycles.size(), 5u);  // 1, 2, 12, 112, 122
  for (const auto& c : cycles) {
    Polynomial w(1);
    const std::size_t t = c.labels.size();
    for (std::size_t k = 0; k < t; ++k) w *= P(var::A(c.labels[k], c.labels[(k + 1) % t]));
    EXPECT_EQ(c.weight, w);
  }
}

}  // namespace
}  // namespace mmt
