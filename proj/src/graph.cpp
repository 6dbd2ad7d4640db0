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

#include "onefact/graph.hpp"

#include <string>

namespace onefact {

DenseGraph::DenseGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  }
}

DenseGraph DenseGraph::complete(int n) {
  DenseGraph g(n);
  const std::uint16_t all = static_cast<std::uint16_t>((1U << n) - 1);
  for (int v = 0; v < n; ++v) g.rows_[v] = all & static_cast<std::uint16_t>(~(1U << v));
  return g;
}

DenseGraph DenseGraph::from_edge_mask(int n, EdgeMask mask) {
  DenseGraph g(n);
  const int pairs = pair_count(n);
  if (pairs < 128 && (mask >> pairs) != 0) {
    throw std::invalid_argument("edge mask has bits beyond the pair universe");
  }
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

DenseGraph DenseGraph::from_edges(int n, std::span<const VertexPair> edges) {
  DenseGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void DenseGraph::add_edge(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("invalid edge");
  }
  rows_[i] |= static_cast<std::uint16_t>(1U << j);
  rows_[j] |= static_cast<std::uint16_t>(1U << i);
}

void DenseGraph::remove_edge(int i, int j) {
  rows_[i] &= static_cast<std::uint16_t>(~(1U << j));
  rows_[j] &= static_cast<std::uint16_t>(~(1U << i));
}

int DenseGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

EdgeMask DenseGraph::edge_mask() const {
  EdgeMask mask = 0;
  int bit = 0;
  for (int i = 0; i < n_; ++i) {
    // Neighbors above i, shifted so that j = i+1 lands at `bit`.
    const EdgeMask above = rows_[i] >> (i + 1);
    mask |= above << bit;
    bit += n_ - i - 1;
  }
  return mask;
}

DenseGraph DenseGraph::permuted(std::span<const int> perm) const {
  DenseGraph out(n_);
  for (int v = 0; v < n_; ++v) {
    std::uint16_t row = rows_[v];
    std::uint16_t image = 0;
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      image |= static_cast<std::uint16_t>(1U << perm[w]);
    }
    out.rows_[perm[v]] = image;
  }
  return out;
}

OneFactor OneFactor::from_pairs(int n, std::span<const VertexPair> pairs) {
  if (n % 2 != 0 || n < 0 || n > kMaxVertices) throw std::invalid_argument("bad order");
  if (static_cast<int>(pairs.size()) * 2 != n) {
    throw std::invalid_argument("a one-factor needs n/2 pairs");
  }
  OneFactor f;
  f.n_ = n;
  f.mate_.fill(-1);
  for (auto [a, b] : pairs) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n || f.mate_[a] != -1 || f.mate_[b] != -1) {
      throw std::invalid_argument("pairs do not partition the vertex set");
    }
    f.mate_[a] = static_cast<std::int8_t>(b);
    f.mate_[b] = static_cast<std::int8_t>(a);
  }
  return f;
}

OneFactor OneFactor::from_mates(int n, const std::array<std::int8_t, kMaxVertices>& mate) {
  OneFactor f;
  f.n_ = n;
  f.mate_ = mate;
  for (int v = n; v < kMaxVertices; ++v) f.mate_[v] = 0;
  return f;
}

std::vector<VertexPair> OneFactor::pairs() const {
  std::vector<VertexPair> out;
  out.reserve(n_ / 2);
  for (int v = 0; v < n_; ++v) {
    if (v < mate_[v]) out.emplace_back(v, mate_[v]);
  }
  return out;
}

EdgeMask OneFactor::edge_mask() const {
  EdgeMask mask = 0;
  for (int v = 0; v < n_; ++v) {
    if (v < mate_[v]) mask |= EdgeMask{1} << edge_index(n_, v, mate_[v]);
  }
  return mask;
}

bool is_k_regular(const DenseGraph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

DenseGraph complement(const DenseGraph& g) {
  const int n = g.order();
  const EdgeMask universe = pair_count(n) == 0 ? 0 : (~EdgeMask{0} >> (128 - pair_count(n)));
  return DenseGraph::from_edge_mask(n, universe & ~g.edge_mask());
}

DenseGraph union_with_factor(const DenseGraph& h, const OneFactor& f) {
  if (h.order() != f.order()) throw std::invalid_argument("order mismatch");
  DenseGraph g = h;
  for (auto [a, b] : f.pairs()) {
    if (g.has_edge(a, b)) {
      throw OverlapError("pair {" + std::to_string(a) + "," + std::to_string(b) +
                         "} is already an edge");
    }
    g.add_edge(a, b);
  }
  return g;
}

DenseGraph remove_factor(const DenseGraph& g, const OneFactor& f) {
  if (g.order() != f.order()) throw std::invalid_argument("order mismatch");
  DenseGraph h = g;
  for (auto [a, b] : f.pairs()) {
    if (!h.has_edge(a, b)) throw std::invalid_argument("factor edge missing from graph");
    h.remove_edge(a, b);
  }
  return h;
}

std::vector<OneFactor> enumerate_one_factors(const DenseGraph& g,
                                             std::optional<VertexPair> through) {
  std::vector<OneFactor> out;
  for_each_one_factor(g, through, [&](const OneFactor& f) { out.push_back(f); });
  return out;
}

std::optional<VertexPair> first_edge(const DenseGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const std::uint16_t above = g.neighbors(v) >> (v + 1);
    if (above) return VertexPair{v, v + 1 + std::countr_zero(above)};
  }
  return std::nullopt;
}

BigCount count_labeled_factorizations_bruteforce(const DenseGraph& g) {
  // The factor holding the lowest remaining edge is chosen first, so each
  // unordered factorization is produced exactly once.
  auto e = first_edge(g);
  if (!e) return 1;
  BigCount total = 0;
  for_each_one_factor(g, e, [&](const OneFactor& f) {
    total += count_labeled_factorizations_bruteforce(remove_factor(g, f));
  });
  return total;
}

}  // namespace onefact
