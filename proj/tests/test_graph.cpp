// Copyright 2026 The onefact Authors.
//
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

#include <random>

#include "doctest.h"
#include "onefact/graph.hpp"
#include "oracles.hpp"

using namespace onefact;

TEST_CASE("edge indexing covers the upper triangle bijectively") {
  for (int n = 2; n <= kMaxVertices; ++n) {
    std::vector<int> seen(pair_count(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ++seen[edge_index(n, i, j)];
    CHECK(std::count(seen.begin(), seen.end(), 1) == pair_count(n));
  }
}

TEST_CASE("dense graph basics") {
  DenseGraph g = DenseGraph::complete(14);
  CHECK(g.edge_count() == 91);
  CHECK(is_k_regular(g, 13));
  CHECK(complement(g).edge_count() == 0);
  CHECK(DenseGraph::from_edge_mask(14, g.edge_mask()) == g);
  g.remove_edge(3, 9);
  CHECK_FALSE(g.has_edge(9, 3));
  CHECK(g.degree(3) == 12);
  const std::vector<VertexPair> edges{{0, 1}, {1, 2}};
  DenseGraph p = DenseGraph::from_edges(3, edges);
  CHECK(p.edge_count() == 2);
  CHECK(first_edge(p) == VertexPair{0, 1});
  CHECK_FALSE(first_edge(DenseGraph(5)).has_value());
}

TEST_CASE("one-factors validate and combine") {
  const std::vector<VertexPair> ok{{0, 3}, {1, 2}};
  const OneFactor f = OneFactor::from_pairs(4, ok);
  CHECK(f.mate(3) == 0);
  CHECK(f.contains(2, 1));
  const std::vector<VertexPair> bad{{0, 1}, {1, 2}};
  CHECK_THROWS(OneFactor::from_pairs(4, bad));
  DenseGraph h = union_with_factor(DenseGraph(4), f);
  CHECK(h.edge_count() == 2);
  CHECK_THROWS_AS(union_with_factor(h, f), OverlapError);
  CHECK(remove_factor(h, f).edge_count() == 0);
  CHECK_THROWS(remove_factor(DenseGraph(4), f));
}

TEST_CASE("perfect matchings of complete graphs: (n-1)!!") {
  const long long expected[] = {1, 1, 3, 15, 105, 945, 10395, 135135};
  for (int n = 2; n <= 14; n += 2) {
    long long count = 0;
    for_each_one_factor(DenseGraph::complete(n), std::nullopt, [&](const OneFactor&) { ++count; });
    CHECK(count == expected[n / 2]);
  }
  CHECK(enumerate_one_factors(DenseGraph::complete(8), VertexPair{2, 5}).size() == 15);
}

TEST_CASE("perfect matchings of a 2-factor") {
  // C6 has 2 perfect matchings; C4 + C4 has 4.
  CHECK(enumerate_one_factors(onefact::testing::cycle(6, 6)).size() == 2);
  DenseGraph two_squares = onefact::testing::cycle(8, 4);
  for (int i = 0; i < 4; ++i) two_squares.add_edge(4 + i, 4 + (i + 1) % 4);
  CHECK(enumerate_one_factors(two_squares).size() == 4);
}

TEST_CASE("labeled one-factorizations of small complete graphs") {
  CHECK(count_labeled_factorizations_bruteforce(DenseGraph::complete(4)) == 1);
  CHECK(count_labeled_factorizations_bruteforce(DenseGraph::complete(6)) == 6);
  CHECK(count_labeled_factorizations_bruteforce(DenseGraph::complete(8)) == 6240);
  CHECK(count_labeled_factorizations_bruteforce(DenseGraph(6)) == 1);
  // The triangular prism has exactly one.
  DenseGraph prism = onefact::testing::cycle(6, 3);
  for (int i = 0; i < 3; ++i) prism.add_edge(3 + i, 3 + (i + 1) % 3), prism.add_edge(i, i + 3);
  CHECK(count_labeled_factorizations_bruteforce(prism) == 1);
}

TEST_CASE("permuting preserves structure") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    DenseGraph g = onefact::testing::random_graph(12, 0.4, rng);
    auto p = onefact::testing::random_permutation(12, rng);
    DenseGraph h = g.permuted(p);
    CHECK(h.edge_count() == g.edge_count());
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) CHECK(g.has_edge(i, j) == h.has_edge(p[i], p[j]));
  }
}
