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

#pragma once

// Dense small-graph representation (n <= 14) and one-factor enumeration.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "onefact/bigcount.hpp"

namespace onefact {

inline constexpr int kMaxVertices = 14;

// Upper-triangle edge bitmask; at most 91 bits are used.
using EdgeMask = unsigned __int128;

using VertexPair = std::pair<int, int>;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Row-major upper triangle: bit of {i,j}, i<j.
constexpr int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

class OverlapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DenseGraph {
 public:
  explicit DenseGraph(int n);

  static DenseGraph complete(int n);
  static DenseGraph from_edge_mask(int n, EdgeMask mask);
  static DenseGraph from_edges(int n, std::span<const VertexPair> edges);

  int order() const { return n_; }
  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  int degree(int v) const { return std::popcount(rows_[v]); }
  std::uint16_t neighbors(int v) const { return rows_[v]; }
  int edge_count() const;
  EdgeMask edge_mask() const;

  // Vertex v of this graph becomes vertex perm[v] of the result.
  DenseGraph permuted(std::span<const int> perm) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  int n_;
  std::array<std::uint16_t, kMaxVertices> rows_{};
};

class OneFactor {
 public:
  // Validates that `pairs` partition {0,...,n-1}.
  static OneFactor from_pairs(int n, std::span<const VertexPair> pairs);
  // Unchecked; `mate` must be a fixed-point-free involution.
  static OneFactor from_mates(int n, const std::array<std::int8_t, kMaxVertices>& mate);

  int order() const { return n_; }
  int mate(int v) const { return mate_[v]; }
  bool contains(int i, int j) const { return mate_[i] == j; }
  std::vector<VertexPair> pairs() const;
  EdgeMask edge_mask() const;

  friend bool operator==(const OneFactor&, const OneFactor&) = default;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxVertices> mate_{};
};

bool is_k_regular(const DenseGraph& g, int k);
DenseGraph complement(const DenseGraph& g);

// Throws OverlapError if a pair of `f` is already an edge of `h`.
DenseGraph union_with_factor(const DenseGraph& h, const OneFactor& f);
// Throws std::invalid_argument if a pair of `f` is missing from `g`.
DenseGraph remove_factor(const DenseGraph& g, const OneFactor& f);

namespace detail {

template <class Fn>
void one_factor_search(const DenseGraph& g, std::uint16_t unmatched,
                       std::array<std::int8_t, kMaxVertices>& mate, Fn& fn) {
  if (unmatched == 0) {
    fn(OneFactor::from_mates(g.order(), mate));
    return;
  }
  const int v = std::countr_zero(unmatched);
  const std::uint16_t rest = unmatched & static_cast<std::uint16_t>(~(1U << v));
  std::uint16_t candidates = g.neighbors(v) & rest;
  while (candidates) {
    const int w = std::countr_zero(candidates);
    candidates &= candidates - 1;
    mate[v] = static_cast<std::int8_t>(w);
    mate[w] = static_cast<std::int8_t>(v);
    one_factor_search(g, rest & static_cast<std::uint16_t>(~(1U << w)), mate, fn);
  }
}

}  // namespace detail

// Visits every perfect matching of `g` once, in lexicographic order of the
// sorted pair list. With `through`, only matchings containing that edge.
template <class Fn>
void for_each_one_factor(const DenseGraph& g, std::optional<VertexPair> through, Fn&& fn) {
  const int n = g.order();
  if (n % 2 != 0) return;
  std::array<std::int8_t, kMaxVertices> mate{};
  std::uint16_t unmatched = static_cast<std::uint16_t>((1U << n) - 1);
  if (through) {
    auto [a, b] = *through;
    if (a == b || !g.has_edge(a, b)) {
      throw std::invalid_argument("fixed edge is not an edge of the graph");
    }
    mate[a] = static_cast<std::int8_t>(b);
    mate[b] = static_cast<std::int8_t>(a);
    unmatched &= static_cast<std::uint16_t>(~((1U << a) | (1U << b)));
  }
  detail::one_factor_search(g, unmatched, mate, fn);
}

std::vector<OneFactor> enumerate_one_factors(const DenseGraph& g,
                                             std::optional<VertexPair> through = std::nullopt);

// Exhaustive count of partitions of E(g) into one-factors. Exponential;
// intended as an oracle for n <= 10.
BigCount count_labeled_factorizations_bruteforce(const DenseGraph& g);

// Lowest edge in bit order, or nullopt for the empty graph.
std::optional<VertexPair> first_edge(const DenseGraph& g);

}  // namespace onefact
