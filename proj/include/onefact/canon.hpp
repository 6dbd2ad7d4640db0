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

// Canonical labeling and automorphism groups of vertex-colored graphs by
// individualization-refinement with automorphism pruning.

#include <cstdint>
#include <span>
#include <vector>

#include "onefact/bigcount.hpp"
#include "onefact/graph.hpp"
#include "onefact/perm.hpp"

namespace onefact {

class ColoredGraph {
 public:
  explicit ColoredGraph(int m);

  int order() const { return m_; }
  // Loops are rejected; repeated edges are ignored.
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  void set_color(int v, int c);
  int color(int v) const { return colors_[v]; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int edge_count() const;

  // Vertex v becomes vertex perm[v]; colors travel with vertices.
  ColoredGraph permuted(std::span<const int> perm) const;

  // Order, per-vertex colors, then the upper-triangle adjacency bitmask,
  // all little-endian.
  std::vector<std::uint8_t> serialize() const;

 private:
  int m_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colors_;
};

struct CanonicalResult {
  // canonical_labeling[v] is the position of input vertex v.
  Permutation canonical_labeling;
  std::vector<std::uint8_t> canonical_form;
  BigCount aut_order;
  std::vector<Permutation> aut_generators;
};

// Color-preserving canonical form. Color classes keep their relative order:
// vertices of the smallest color get the lowest positions.
CanonicalResult canonicalize(const ColoredGraph& g);

// Same, with the root partition given by `keys` instead of the colors. The
// keys must be an isomorphism invariant that refines the coloring in the
// same order (for example color << 48 | invariant).
CanonicalResult canonicalize(const ColoredGraph& g, std::span<const std::uint64_t> keys);

// Plain graph; canonical_form is the 16-byte little-endian upper-triangle
// bitmask of the relabeled graph.
CanonicalResult canonicalize(const DenseGraph& g);

// Allocation-light variant of canonicalize(DenseGraph) for hot loops.
struct DenseCanonical {
  EdgeMask form = 0;
  std::uint64_t aut_order = 1;
};
DenseCanonical canonical_dense(const DenseGraph& g);

std::vector<std::uint8_t> form_bytes(EdgeMask mask);
EdgeMask form_mask(std::span<const std::uint8_t> bytes);

BigCount aut_order_graph(const DenseGraph& g);

}  // namespace onefact
