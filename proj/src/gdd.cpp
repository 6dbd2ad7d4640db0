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

#include "onefact/gdd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace onefact {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Block make_block(int a, int b, int c) {
  Block blk{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)};
  std::sort(blk.begin(), blk.end());
  return blk;
}

bool blocks_are_consistent(int n, std::span<const Block> blocks, bool complete) {
  const int m = point_count(n);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(m) * m, 0);
  for (const Block& b : blocks) {
    if (b[2] >= m || !(b[0] < b[1] && b[1] < b[2])) return false;
    if (!is_u_point(n, b[0]) || is_u_point(n, b[1])) return false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (covered[b[i] * m + b[j]]++) return false;
      }
    }
  }
  if (!complete) return true;
  for (int x = 0; x < m; ++x) {
    for (int y = std::max(x + 1, n - 1); y < m; ++y) {
      if (!covered[x * m + y]) return false;
    }
  }
  return true;
}

Factorization::Factorization(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 2 || n > kMaxVertices || n % 2 != 0) throw std::invalid_argument("order must be even, 2..14");
  std::sort(blocks_.begin(), blocks_.end());
  if (static_cast<int>(blocks_.size()) != block_count(n) || !blocks_are_consistent(n, blocks_, true)) {
    throw std::invalid_argument("blocks do not form a one-factorization");
  }
}

Factorization Factorization::from_graphical(std::span<const OneFactor> factors) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  const int n = factors.front().order();
  if (static_cast<int>(factors.size()) != n - 1) throw std::invalid_argument("need n-1 factors");
  std::vector<Block> blocks;
  for (int u = 0; u < n - 1; ++u) {
    if (factors[u].order() != n) throw std::invalid_argument("factor order mismatch");
    for (auto [a, b] : factors[u].pairs()) blocks.push_back(make_block(u_point(u), v_point(n, a), v_point(n, b)));
  }
  return Factorization(n, std::move(blocks));
}

std::vector<OneFactor> Factorization::to_graphical() const {
  std::vector<std::vector<VertexPair>> pairs(n_ - 1);
  for (const Block& b : blocks_) pairs[b[0]].emplace_back(b[1] - (n_ - 1), b[2] - (n_ - 1));
  std::vector<OneFactor> out;
  for (const auto& ps : pairs) out.push_back(OneFactor::from_pairs(n_, ps));
  return out;
}

std::vector<std::uint8_t> Factorization::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(blocks_.size() * 3);
  for (const Block& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Block> permute_blocks(std::span<const Block> blocks, std::span<const int> perm) {
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (const Block& b : blocks) out.push_back(make_block(perm[b[0]], perm[b[1]], perm[b[2]]));
  std::sort(out.begin(), out.end());
  return out;
}

ColoredGraph to_colored_graph(int n, std::span<const Block> blocks) {
  const int m = point_count(n);
  ColoredGraph g(m + static_cast<int>(blocks.size()));
  for (int x = 0; x < m; ++x) g.set_color(x, is_u_point(n, x) ? 0 : 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int bv = m + static_cast<int>(i);
    g.set_color(bv, 2);
    for (int x : blocks[i]) g.add_edge(bv, x);
  }
  return g;
}

namespace {

template <class T>
std::vector<std::uint64_t> ranks(const std::vector<T>& values) {
  std::vector<T> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (const T& v : values) out.push_back(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  return out;
}

}  // namespace

std::vector<std::uint64_t> factorization_keys(int n, std::span<const Block> blocks) {
  const int f = n - 1;
  std::vector<std::vector<int>> mate(f, std::vector<int>(n, -1));
  for (const Block& b : blocks) {
    const int a = b[1] - f;
    const int c = b[2] - f;
    mate[b[0]][a] = c;
    mate[b[0]][c] = a;
  }
  for (const auto& row : mate)
    if (std::count(row.begin(), row.end(), -1) != 0) throw std::invalid_argument("factorization is incomplete");

  std::vector<std::vector<int>> seen_by_v(n), seen_by_u(f);
  std::vector<int> len(n);
  for (int i = 0; i < f; ++i) {
    for (int j = i + 1; j < f; ++j) {
      std::fill(len.begin(), len.end(), 0);
      std::vector<int> type;
      for (int v = 0; v < n; ++v) {
        if (len[v]) continue;
        std::vector<int> cyc;
        int x = v;
        do {
          cyc.push_back(x);
          x = mate[i][x];
          cyc.push_back(x);
          x = mate[j][x];
        } while (x != v);
        for (int y : cyc) len[y] = static_cast<int>(cyc.size());
        type.push_back(static_cast<int>(cyc.size()));
      }
      for (int v = 0; v < n; ++v) seen_by_v[v].push_back(len[v]);
      std::sort(type.begin(), type.end());
      // Encode the cycle type as one integer; lengths are at most 14.
      int code = 0;
      for (int t : type) code = code * 16 + t / 2;
      seen_by_u[i].push_back(code);
      seen_by_u[j].push_back(code);
    }
  }
  for (auto& v : seen_by_v) std::sort(v.begin(), v.end());
  for (auto& u : seen_by_u) std::sort(u.begin(), u.end());
  const auto rank_v = ranks(seen_by_v);
  const auto rank_u = ranks(seen_by_u);
  std::vector<std::array<std::uint64_t, 3>> block_inv;
  for (const Block& b : blocks) {
    const std::uint64_t a = rank_v[b[1] - f];
    const std::uint64_t c = rank_v[b[2] - f];
    block_inv.push_back({rank_u[b[0]], std::min(a, c), std::max(a, c)});
  }
  const auto rank_b = ranks(block_inv);

  std::vector<std::uint64_t> keys;
  keys.reserve(point_count(n) + blocks.size());
  for (int u = 0; u < f; ++u) keys.push_back(rank_u[u]);
  for (int v = 0; v < n; ++v) keys.push_back((std::uint64_t{1} << 48) | rank_v[v]);
  for (std::uint64_t r : rank_b) keys.push_back((std::uint64_t{2} << 48) | r);
  return keys;
}

CanonicalResult canonicalize_factorization(int n, std::span<const Block> blocks) {
  return canonicalize(to_colored_graph(n, blocks), factorization_keys(n, blocks));
}

PointGroup aut_group(const Factorization& x) {
  const int m = point_count(x.n());
  const CanonicalResult c = canonicalize_factorization(x.n(), x.blocks());
  PointGroup out;
  out.order = c.aut_order;
  for (const Permutation& g : c.aut_generators) out.generators.emplace_back(g.begin(), g.begin() + m);
  return out;
}

AutType type_of(int n, std::span<const int> alpha) {
  const int p = permutation_order(alpha);
  if (!is_prime(p)) throw std::invalid_argument("permutation does not have prime order");
  AutType t{p, 0, 0};
  for (int x = 0; x < point_count(n); ++x) {
    if (alpha[x] != x) continue;
    (is_u_point(n, x) ? t.f_u : t.f_v) += 1;
  }
  return t;
}

std::vector<PrimeGroup> prime_subgroups(int n, const PointGroup& group) {
  const int m = point_count(n);
  const auto elements = group_elements(m, group.generators);
  std::set<Permutation> seen;
  std::vector<PrimeGroup> out;
  for (const Permutation& g : elements) {
    if (is_identity(g) || seen.count(g)) continue;
    const int p = permutation_order(g);
    if (!is_prime(p)) continue;
    Permutation least = g;
    Permutation cur = g;
    for (int i = 1; i < p; ++i) {
      seen.insert(cur);
      least = std::min(least, cur);
      cur = compose(g, cur);
    }
    out.push_back({n, type_of(n, least), least});
  }
  std::sort(out.begin(), out.end(), [](const PrimeGroup& a, const PrimeGroup& b) {
    return std::tie(a.type, a.generator) < std::tie(b.type, b.generator);
  });
  return out;
}

}  // namespace onefact
