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

// One-factorizations of K_n as designs on the points U ∪ V: U holds one
// point per factor, V one point per vertex, and each block {u, v, v'}
// records that edge {v, v'} lies in factor u.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "onefact/bigcount.hpp"
#include "onefact/canon.hpp"
#include "onefact/graph.hpp"
#include "onefact/perm.hpp"

namespace onefact {

// Points 0 .. n-2 are U, points n-1 .. 2n-2 are V.
constexpr int point_count(int n) { return 2 * n - 1; }
constexpr bool is_u_point(int n, int x) { return x < n - 1; }
constexpr int u_point(int i) { return i; }
constexpr int v_point(int n, int i) { return n - 1 + i; }
constexpr int block_count(int n) { return n * (n - 1) / 2; }

// Sorted point indices; the first entry is the U-point.
using Block = std::array<std::uint8_t, 3>;

Block make_block(int a, int b, int c);

// Conditions on a block list: every U–V pair and every V–V pair at most
// once (exactly once when `complete`), and no block with two U-points.
bool blocks_are_consistent(int n, std::span<const Block> blocks, bool complete);

class Factorization {
 public:
  // Validates and sorts; throws std::invalid_argument on violations.
  Factorization(int n, std::vector<Block> blocks);

  // factors[i] becomes U-point i.
  static Factorization from_graphical(std::span<const OneFactor> factors);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<OneFactor> to_graphical() const;
  // 3 bytes per block in sorted block order.
  std::vector<std::uint8_t> serialize() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  int n_;
  std::vector<Block> blocks_;
};

// Image of a block list under a point permutation, sorted.
std::vector<Block> permute_blocks(std::span<const Block> blocks, std::span<const int> perm);

// Point-vertices 0 .. 2n-2 (colors 0 for U, 1 for V) followed by one
// block-vertex (color 2) per block in the given order.
ColoredGraph to_colored_graph(int n, std::span<const Block> blocks);

// Root partition keys for to_colored_graph of a complete factorization:
// the color in the high bits, below it the rank of the cycle lengths each
// point sees in the unions of two factors.
std::vector<std::uint64_t> factorization_keys(int n, std::span<const Block> blocks);

// Canonical labeling of to_colored_graph(n, blocks) with factorization_keys.
CanonicalResult canonicalize_factorization(int n, std::span<const Block> blocks);

struct PointGroup {
  BigCount order;
  // Permutations of the 2n-1 points.
  std::vector<Permutation> generators;
};

PointGroup aut_group(const Factorization& x);

struct AutType {
  int p = 0;
  int f_u = 0;
  int f_v = 0;
  friend auto operator<=>(const AutType&, const AutType&) = default;
};

struct PrimeGroup {
  int n = 0;
  AutType type;
  Permutation generator;
};

// Type of a point permutation of prime order; throws otherwise.
AutType type_of(int n, std::span<const int> alpha);

// One entry per subgroup of prime order, generated by its least element in
// lexicographic order.
std::vector<PrimeGroup> prime_subgroups(int n, const PointGroup& group);

}  // namespace onefact
