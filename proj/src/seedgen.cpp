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

#include "onefact/seedgen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "onefact/canon.hpp"

namespace onefact {

namespace {

enum Color { kU = 0, kUAnchor, kV, kVAnchor, kBlock, kTail, kHead };

struct State {
  std::vector<int> anchor;
  std::vector<Block> blocks;
  std::array<std::uint32_t, point_count(kMaxVertices)> cov{};

  bool covered(int x, int y) const { return (cov[x] >> y) & 1U; }
  void cover(int x, int y) {
    cov[x] |= 1U << y;
    cov[y] |= 1U << x;
  }
};

bool less_state(const State& a, const State& b) {
  return std::tie(a.anchor, a.blocks) < std::tie(b.anchor, b.blocks);
}

class Grower {
 public:
  Grower(const AutType& t, int n) : n_(n), m_(point_count(n)), group_(fix_group_representative(t, n)) {}

  const PrimeGroup& group() const { return group_; }
  std::size_t states_seen() const { return states_seen_; }

  bool is_fixed(int x) const { return group_.generator[x] == x; }

  // Adds the orbit of `b` if it is internally consistent and avoids
  // covered pairs.
  bool try_add_orbit(const State& s, const Block& b, State& out) const {
    out = s;
    for (const Block& blk : block_orbit(b, group_.generator)) {
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (out.covered(blk[i], blk[j])) return false;
          out.cover(blk[i], blk[j]);
        }
      }
      out.blocks.push_back(blk);
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return true;
  }

  std::vector<std::uint8_t> key(const State& s) const {
    ++states_seen_;
    return seed_key(Seed{group_, s.anchor, s.blocks});
  }

  using Layer = std::map<std::vector<std::uint8_t>, State>;

  void offer(Layer& layer, State&& s) const {
    auto k = key(s);
    auto it = layer.find(k);
    if (it == layer.end()) {
      layer.emplace(std::move(k), std::move(s));
    } else if (less_state(s, it->second)) {
      it->second = std::move(s);
    }
  }

  static std::vector<State> values(Layer& layer) {
    std::vector<State> out;
    out.reserve(layer.size());
    for (auto& [k, s] : layer) out.push_back(std::move(s));
    return out;
  }

  // Completes every block through anchor point x, one orbit at a time.
  std::vector<State> saturate(std::vector<State> current, int x) const {
    std::vector<State> done;
    while (!current.empty()) {
      Layer next;
      for (const State& s : current) {
        int need = -1;
        if (is_u_point(n_, x)) {
          for (int a = n_ - 1; a < m_ && need < 0; ++a)
            if (!s.covered(x, a)) need = a;
        } else {
          for (int u = 0; u < n_ - 1 && need < 0; ++u)
            if (!s.covered(x, u)) need = u;
        }
        if (need < 0) {
          done.push_back(s);
          continue;
        }
        for (int b = n_ - 1; b < m_; ++b) {
          if (b == x || b == need || s.covered(x, b) || s.covered(need, b)) continue;
          State t;
          if (try_add_orbit(s, make_block(x, need, b), t)) offer(next, std::move(t));
        }
      }
      current = values(next);
    }
    return done;
  }

  std::vector<State> add_anchor(const std::vector<State>& states, bool in_u, Slot slot) const {
    Layer next;
    for (const State& s : states) {
      const int lo = in_u ? 0 : n_ - 1;
      const int hi = in_u ? n_ - 1 : m_;
      for (int x = lo; x < hi; ++x) {
        if (std::count(s.anchor.begin(), s.anchor.end(), x)) continue;
        if (is_fixed(x) != (slot == Slot::kFixed)) continue;
        State t = s;
        t.anchor.push_back(x);
        std::sort(t.anchor.begin(), t.anchor.end());
        offer(next, std::move(t));
      }
    }
    return values(next);
  }

  // Third anchor point: the partner of v1 in the factor of the U anchor.
  std::vector<State> add_partner_anchor(const std::vector<State>& states, Slot v1_slot, Slot v2_slot) const {
    Layer next;
    for (const State& s : states) {
      const int u = anchor_in(s, true);
      for (const Block& b : s.blocks) {
        if (b[0] != u) continue;
        for (int side = 1; side <= 2; ++side) {
          const int v1 = b[side];
          const int v2 = b[3 - side];
          if (is_fixed(v1) != (v1_slot == Slot::kFixed) || is_fixed(v2) != (v2_slot == Slot::kFixed)) continue;
          State t = s;
          t.anchor.push_back(v1);
          t.anchor.push_back(v2);
          std::sort(t.anchor.begin(), t.anchor.end());
          offer(next, std::move(t));
        }
      }
    }
    return values(next);
  }

  int anchor_in(const State& s, bool in_u) const {
    for (int x : s.anchor)
      if (is_u_point(n_, x) == in_u) return x;
    return -1;
  }

  bool saturated(const State& s, int x) const {
    const int want = is_u_point(n_, x) ? n_ : 2 * n_ - 2;
    return std::popcount(s.cov[x]) == want;
  }

  // Saturates every anchor point, one at a time; the order does not matter
  // because saturation enumerates all completions.
  std::vector<State> saturate_anchors(std::vector<State> states) const {
    while (true) {
      Layer merged;
      bool progressed = false;
      for (State& s : states) {
        int x = -1;
        for (int a : s.anchor)
          if (x < 0 && !saturated(s, a)) x = a;
        if (x < 0) {
          offer(merged, std::move(s));
          continue;
        }
        progressed = true;
        for (State& t : saturate({s}, x)) offer(merged, std::move(t));
      }
      states = values(merged);
      if (!progressed) return states;
    }
  }

 private:
  int n_;
  int m_;
  PrimeGroup group_;
  mutable std::size_t states_seen_ = 0;
};

}  // namespace

PrimeGroup fix_group_representative(const AutType& t, int n) {
  if (rejection(n, t)) throw std::invalid_argument("type is not admissible");
  PrimeGroup g{n, t, identity_permutation(point_count(n))};
  auto cycles = [&](int first, int fixed, int end) {
    for (int start = first + fixed; start < end; start += t.p) {
      for (int i = 0; i < t.p; ++i) g.generator[start + i] = start + (i + 1) % t.p;
    }
  };
  cycles(0, t.f_u, n - 1);
  cycles(n - 1, t.f_v, point_count(n));
  return g;
}

BigCount normalizer_order(const AutType& t, int n) {
  auto part = [&](int size, int fixed) {
    const int c = (size - fixed) / t.p;
    BigCount pc = 1;
    for (int i = 0; i < c; ++i) pc *= t.p;
    return factorial(fixed) * pc * factorial(c);
  };
  return BigCount(t.p - 1) * part(n - 1, t.f_u) * part(n, t.f_v);
}

std::vector<Block> block_orbit(const Block& b, std::span<const int> alpha) {
  std::vector<Block> out{b};
  Block cur = b;
  while (true) {
    cur = make_block(alpha[cur[0]], alpha[cur[1]], alpha[cur[2]]);
    if (cur == b) break;
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColoredGraph seed_graph(int n, std::span<const int> alpha, std::span<const int> anchor,
                        std::span<const Block> blocks, int power) {
  const int m = point_count(n);
  const Permutation a = onefact::power(alpha, power);
  int moved = 0;
  for (int x = 0; x < m; ++x) moved += a[x] != x;
  const int p = permutation_order(alpha);
  const bool gadgets = p > 2;
  ColoredGraph g(m + static_cast<int>(blocks.size()) + (gadgets ? 2 * moved : 0));
  for (int x = 0; x < m; ++x) {
    const bool in_t = std::find(anchor.begin(), anchor.end(), x) != anchor.end();
    g.set_color(x, is_u_point(n, x) ? (in_t ? kUAnchor : kU) : (in_t ? kVAnchor : kV));
  }
  int next = m;
  for (const Block& b : blocks) {
    g.set_color(next, kBlock);
    for (int x : b) g.add_edge(next, x);
    ++next;
  }
  for (int x = 0; x < m; ++x) {
    if (a[x] == x) continue;
    if (!gadgets) {
      g.add_edge(x, a[x]);
      continue;
    }
    g.set_color(next, kTail);
    g.set_color(next + 1, kHead);
    g.add_edge(next, x);
    g.add_edge(next + 1, a[x]);
    g.add_edge(next, next + 1);
    next += 2;
  }
  return g;
}

std::vector<std::uint8_t> seed_key(const Seed& s) {
  const int p = s.group.type.p;
  std::vector<std::uint8_t> best;
  for (int j = 1; j < p; ++j) {
    auto form = canonicalize(seed_graph(s.group.n, s.group.generator, s.anchor, s.blocks, j)).canonical_form;
    if (j == 1 || form < best) best = std::move(form);
  }
  return best;
}

SeedClass seed_class_of(const Seed& s) {
  const int n = s.group.n;
  const int m = point_count(n);
  const int p = s.group.type.p;
  const CanonicalResult c1 = canonicalize(seed_graph(n, s.group.generator, s.anchor, s.blocks, 1));
  SeedClass out{s, c1.aut_order, {}};
  for (const Permutation& g : c1.aut_generators) out.aut_generators.emplace_back(g.begin(), g.begin() + m);
  int matches = 1;
  for (int j = 2; j < p; ++j) {
    const CanonicalResult cj = canonicalize(seed_graph(n, s.group.generator, s.anchor, s.blocks, j));
    if (cj.canonical_form != c1.canonical_form) continue;
    ++matches;
    const Permutation cj_inv = inverse(cj.canonical_labeling);
    Permutation gamma(m);
    for (int x = 0; x < m; ++x) gamma[x] = cj_inv[c1.canonical_labeling[x]];
    out.aut_generators.push_back(std::move(gamma));
  }
  out.aut_order *= matches;
  return out;
}

bool is_valid_seed(const Seed& s) {
  const int n = s.group.n;
  const int m = point_count(n);
  const Permutation& alpha = s.group.generator;
  if (!is_permutation_of(alpha, m)) return false;
  for (int x = 0; x < m; ++x)
    if (is_u_point(n, x) != is_u_point(n, alpha[x])) return false;
  try {
    if (type_of(n, alpha) != s.group.type) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (rejection(n, s.group.type)) return false;

  // Anchor composition.
  const AnchorSchema schema = anchor_schema_for(s.group.type, n);
  std::vector<Slot> want_v;
  for (Slot sl : {schema.vertex1, schema.vertex2})
    if (sl != Slot::kAbsent) want_v.push_back(sl);
  std::vector<Slot> got_v;
  int got_u = 0;
  Slot u_slot = Slot::kAbsent;
  for (std::size_t i = 0; i < s.anchor.size(); ++i) {
    const int x = s.anchor[i];
    if (x < 0 || x >= m || (i > 0 && s.anchor[i - 1] >= x)) return false;
    const Slot sl = alpha[x] == x ? Slot::kFixed : Slot::kMoved;
    if (is_u_point(n, x)) {
      ++got_u;
      u_slot = sl;
    } else {
      got_v.push_back(sl);
    }
  }
  if (got_u != (schema.one_factor == Slot::kAbsent ? 0 : 1)) return false;
  if (got_u == 1 && u_slot != schema.one_factor) return false;
  std::sort(want_v.begin(), want_v.end());
  std::sort(got_v.begin(), got_v.end());
  if (want_v != got_v) return false;

  // (a')-(c'), closure, (d'), (e'), (f'), (g').
  if (!std::is_sorted(s.blocks.begin(), s.blocks.end())) return false;
  if (std::adjacent_find(s.blocks.begin(), s.blocks.end()) != s.blocks.end()) return false;
  if (!blocks_are_consistent(n, s.blocks, false)) return false;
  for (const Block& b : s.blocks) {
    const Block image = make_block(alpha[b[0]], alpha[b[1]], alpha[b[2]]);
    if (!std::binary_search(s.blocks.begin(), s.blocks.end(), image)) return false;
  }
  auto touches = [&](const Block& b) {
    for (int x : b)
      if (std::find(s.anchor.begin(), s.anchor.end(), x) != s.anchor.end()) return true;
    return false;
  };
  for (int x : s.anchor) {
    int deg = 0;
    for (const Block& b : s.blocks) deg += std::count(b.begin(), b.end(), x);
    if (deg != (is_u_point(n, x) ? n / 2 : n - 1)) return false;
  }
  for (const Block& b : s.blocks) {
    bool hit = false;
    for (const Block& o : block_orbit(b, alpha)) hit = hit || touches(o);
    if (!hit) return false;
  }
  bool contains_anchor = s.anchor.empty();
  for (const Block& b : s.blocks) {
    bool all = true;
    for (int x : s.anchor) all = all && std::find(b.begin(), b.end(), x) != b.end();
    contains_anchor = contains_anchor || all;
  }
  return contains_anchor;
}

std::vector<SeedClass> classify_seeds(const AutType& t, int n, SeedStats* stats) {
  Grower grower(t, n);
  const AnchorSchema schema = anchor_schema_for(t, n);
  std::vector<State> states(1);
  if (schema.one_factor != Slot::kAbsent) {
    states = grower.saturate_anchors(grower.add_anchor(states, true, schema.one_factor));
    if (schema.vertex2 == Slot::kAbsent) {
      states = grower.add_anchor(states, false, schema.vertex1);
    } else {
      states = grower.add_partner_anchor(states, schema.vertex1, schema.vertex2);
    }
  } else {
    states = grower.saturate_anchors(grower.add_anchor(states, false, schema.vertex1));
    states = grower.add_anchor(states, false, schema.vertex2);
  }
  states = grower.saturate_anchors(std::move(states));
  std::vector<SeedClass> out;
  for (const State& s : states) out.push_back(seed_class_of(Seed{grower.group(), s.anchor, s.blocks}));
  std::sort(out.begin(), out.end(), [](const SeedClass& a, const SeedClass& b) {
    return std::tie(a.seed.anchor, a.seed.blocks) < std::tie(b.seed.anchor, b.seed.blocks);
  });
  if (stats) stats->partial_states = grower.states_seen();
  return out;
}

}  // namespace onefact
