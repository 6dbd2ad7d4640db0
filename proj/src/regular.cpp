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

#include "onefact/regular.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "onefact/canon.hpp"
#include "onefact/labelcount.hpp"

namespace onefact {

namespace {

struct MaskHash {
  std::size_t operator()(EdgeMask m) const {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>()(lo * 0x9e3779b97f4a7c15ULL ^ hi);
  }
};

using MaskSet = std::unordered_set<EdgeMask, MaskHash>;

// Calls fn for every way to give `v` exactly `need` more neighbors taken
// from `allowed` (bitmask), in increasing vertex order.
template <class Fn>
void choose_neighbors(DenseGraph& g, int v, int need, std::uint16_t allowed, Fn& fn) {
  if (need == 0) {
    fn(g);
    return;
  }
  if (std::popcount(allowed) < need) return;
  const int w = std::countr_zero(allowed);
  const std::uint16_t rest = allowed & static_cast<std::uint16_t>(~(1U << w));
  g.add_edge(v, w);
  choose_neighbors(g, v, need - 1, rest, fn);
  g.remove_edge(v, w);
  choose_neighbors(g, v, need, rest, fn);
}

std::uint16_t open_vertices(const DenseGraph& g, int k) {
  std::uint16_t open = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) open |= static_cast<std::uint16_t>(1U << v);
  return open;
}

bool factorizable(const DenseGraph& g, MaskSet& dead) {
  const auto e = first_edge(g);
  if (!e) return true;
  const EdgeMask key = g.edge_mask();
  if (dead.count(key)) return false;
  bool found = false;
  try {
    for_each_one_factor(g, e, [&](const OneFactor& f) {
      if (factorizable(remove_factor(g, f), dead)) throw true;
    });
  } catch (bool) {
    found = true;
  }
  if (!found) dead.insert(key);
  return found;
}

}  // namespace

std::vector<EdgeMask> regular_graph_classes(int n, int k) {
  if (n < 1 || n > kMaxVertices || k < 0 || k >= std::max(n, 1) || (n * k) % 2 != 0) {
    if (k == 0 && n >= 1 && n <= kMaxVertices) return {0};
    return {};
  }
  std::vector<DenseGraph> frontier{DenseGraph(n)};
  std::vector<EdgeMask> done;
  while (!frontier.empty()) {
    std::vector<DenseGraph> next;
    MaskSet seen;
    for (DenseGraph& g : frontier) {
      const std::uint16_t open = open_vertices(g, k);
      if (open == 0) {
        done.push_back(canonical_dense(g).form);
        continue;
      }
      int v = -1;
      for (int u = 0; u < n; ++u) {
        if (((open >> u) & 1U) && (v < 0 || g.degree(u) > g.degree(v))) v = u;
      }
      const std::uint16_t candidates =
          open & static_cast<std::uint16_t>(~g.neighbors(v)) & static_cast<std::uint16_t>(~(1U << v));
      auto emit = [&](const DenseGraph& h) {
        const EdgeMask form = canonical_dense(h).form;
        if (seen.insert(form).second) next.push_back(DenseGraph::from_edge_mask(n, form));
      };
      choose_neighbors(g, v, k - g.degree(v), candidates, emit);
    }
    frontier = std::move(next);
  }
  std::sort(done.begin(), done.end(), form_less);
  done.erase(std::unique(done.begin(), done.end()), done.end());
  return done;
}

void for_each_labeled_regular_graph(int n, int k, const std::function<void(const DenseGraph&)>& fn) {
  if (n > 8) throw std::invalid_argument("labeled enumeration is limited to n <= 8");
  std::function<void(DenseGraph&, int)> rec = [&](DenseGraph& g, int v) {
    while (v < n && g.degree(v) == k) ++v;
    if (v == n) {
      fn(g);
      return;
    }
    std::uint16_t later = 0;
    for (int w = v + 1; w < n; ++w)
      if (g.degree(w) < k) later |= static_cast<std::uint16_t>(1U << w);
    auto next = [&](DenseGraph& h) { rec(h, v + 1); };
    choose_neighbors(g, v, k - g.degree(v), later, next);
  };
  DenseGraph g(n);
  rec(g, 0);
}

bool is_one_factorizable(const DenseGraph& g) {
  const int n = g.order();
  if (n % 2 != 0) return g.edge_count() == 0;
  const int k = g.degree(0);
  if (!is_k_regular(g, k)) return false;
  MaskSet dead;
  return factorizable(g, dead);
}

}  // namespace onefact
