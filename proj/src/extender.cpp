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

#include "onefact/extender.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "onefact/canon.hpp"

namespace onefact {

namespace {

using Key = std::vector<int>;

std::vector<std::uint32_t> coverage(int n, std::span<const Block> blocks) {
  std::vector<std::uint32_t> cov(point_count(n), 0);
  for (const Block& b : blocks) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) cov[b[i]] |= 1U << b[j];
      }
    }
  }
  return cov;
}

// Least element among the generators of ⟨g⟩ after relabeling by `lab`.
Permutation subgroup_label(std::span<const int> g, std::span<const int> lab) {
  const int m = static_cast<int>(g.size());
  Permutation best;
  Permutation cur(g.begin(), g.end());
  const Permutation gen(g.begin(), g.end());
  while (!is_identity(cur)) {
    Permutation conj(m);
    for (int x = 0; x < m; ++x) conj[lab[x]] = lab[cur[x]];
    if (best.empty() || conj < best) best = std::move(conj);
    cur = compose(gen, cur);
  }
  return best;
}

Key seed_label(const AutType& t, std::span<const int> g, std::span<const int> anchor, std::span<const int> lab) {
  Key key{t.p, t.f_u, t.f_v};
  const Permutation sub = subgroup_label(g, lab);
  key.insert(key.end(), sub.begin(), sub.end());
  std::vector<int> image;
  for (int x : anchor) image.push_back(lab[x]);
  std::sort(image.begin(), image.end());
  key.insert(key.end(), image.begin(), image.end());
  return key;
}

// All anchors of the schema for subgroup ⟨g⟩ inside the factorization.
std::vector<std::vector<int>> anchors_in(int n, std::span<const Block> blocks, std::span<const int> g,
                                         const AnchorSchema& schema) {
  const int m = point_count(n);
  auto kind = [&](int x) { return g[x] == x ? Slot::kFixed : Slot::kMoved; };
  std::vector<std::vector<int>> out;
  if (schema.one_factor == Slot::kAbsent) {
    for (int a = n - 1; a < m; ++a) {
      if (kind(a) != schema.vertex1) continue;
      for (int b = n - 1; b < m; ++b) {
        if (b == a || kind(b) != schema.vertex2) continue;
        if (schema.vertex1 == schema.vertex2 && b < a) continue;
        out.push_back({std::min(a, b), std::max(a, b)});
      }
    }
  } else if (schema.vertex2 == Slot::kAbsent) {
    for (int u = 0; u < n - 1; ++u) {
      if (kind(u) != schema.one_factor) continue;
      for (int v = n - 1; v < m; ++v)
        if (kind(v) == schema.vertex1) out.push_back({u, v});
    }
  } else {
    for (const Block& b : blocks) {
      if (kind(b[0]) != schema.one_factor) continue;
      const Slot s1 = kind(b[1]);
      const Slot s2 = kind(b[2]);
      if ((s1 == schema.vertex1 && s2 == schema.vertex2) || (s1 == schema.vertex2 && s2 == schema.vertex1)) {
        out.push_back({b[0], b[1], b[2]});
      }
    }
  }
  return out;
}

struct PrimeSub {
  AutType type;
  Permutation generator;
};

std::vector<PrimeSub> prime_subgroups_of(int n, const std::vector<Permutation>& elements) {
  std::set<Permutation> seen;
  std::vector<PrimeSub> out;
  for (const Permutation& g : elements) {
    if (is_identity(g) || seen.count(g)) continue;
    const int order = permutation_order(g);
    bool prime = order > 1;
    for (int d = 2; d * d <= order; ++d) prime = prime && order % d != 0;
    if (!prime) continue;
    Permutation cur = g;
    for (int i = 1; i < order; ++i) {
      seen.insert(cur);
      cur = compose(g, cur);
    }
    out.push_back({type_of(n, g), g});
  }
  return out;
}

}  // namespace

CoverInstance build_cover_instance(const Seed& s) {
  const int n = s.group.n;
  const int m = point_count(n);
  CoverInstance c;
  c.n = n;
  c.seed_blocks = s.blocks;
  const auto cov = coverage(n, s.blocks);
  for (int x = 0; x < m; ++x) {
    for (int y = std::max(x + 1, n - 1); y < m; ++y) {
      if (!((cov[x] >> y) & 1U)) c.items.emplace_back(x, y);
    }
  }
  for (int u = 0; u < n - 1; ++u) {
    for (int a = n - 1; a < m; ++a) {
      if ((cov[u] >> a) & 1U) continue;
      for (int b = a + 1; b < m; ++b) {
        if (((cov[u] >> b) & 1U) || ((cov[a] >> b) & 1U)) continue;
        const Block blk = make_block(u, a, b);
        std::vector<Block> orbit = block_orbit(blk, s.group.generator);
        if (orbit.front() != blk) continue;
        if (blocks_are_consistent(n, orbit, false)) c.options.push_back(std::move(orbit));
      }
    }
  }
  return c;
}

std::uint64_t solve_cover(const CoverInstance& c, const std::function<void(const std::vector<Block>&)>& on_solution,
                          const SolveOptions& options) {
  const int m = point_count(c.n);
  std::vector<int> item_id(static_cast<std::size_t>(m) * m, -1);
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    item_id[c.items[i].first * m + c.items[i].second] = static_cast<int>(i);
  }
  ExactCover dlx(static_cast<int>(c.items.size()));
  std::vector<int> row;
  for (const auto& orbit : c.options) {
    row.clear();
    for (const Block& b : orbit) {
      row.push_back(item_id[b[0] * m + b[1]]);
      row.push_back(item_id[b[0] * m + b[2]]);
      row.push_back(item_id[b[1] * m + b[2]]);
    }
    dlx.add_option(row);
  }
  std::vector<Block> blocks;
  return dlx.solve(
      [&](std::span<const int> chosen) {
        blocks = c.seed_blocks;
        for (int o : chosen) blocks.insert(blocks.end(), c.options[o].begin(), c.options[o].end());
        std::sort(blocks.begin(), blocks.end());
        on_solution(blocks);
      },
      options);
}

Acceptance accept_canonical(const Factorization& x, const SeedClass& generator) {
  const int n = x.n();
  const int m = point_count(n);
  Acceptance result;

  // Least in the orbit of the generating seed's automorphism group.
  {
    std::set<std::vector<Block>> orbit{x.blocks()};
    std::vector<std::vector<Block>> queue{x.blocks()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Permutation& g : generator.aut_generators) {
        std::vector<Block> image = permute_blocks(queue[i], g);
        if (image < x.blocks()) return result;
        if (orbit.insert(image).second) queue.push_back(std::move(image));
      }
    }
  }

  const CanonicalResult c = canonicalize_factorization(n, x.blocks());
  const Permutation lab(c.canonical_labeling.begin(), c.canonical_labeling.begin() + m);
  std::vector<Permutation> gens;
  for (const Permutation& g : c.aut_generators) gens.emplace_back(g.begin(), g.begin() + m);
  const std::vector<Permutation> elements = group_elements(m, gens);
  const std::vector<PrimeSub> subs = prime_subgroups_of(n, elements);

  Key least;
  for (const PrimeSub& sub : subs) {
    const AnchorSchema schema = anchor_schema_for(sub.type, n);
    for (const auto& anchor : anchors_in(n, x.blocks(), sub.generator, schema)) {
      Key k = seed_label(sub.type, sub.generator, anchor, lab);
      if (least.empty() || k < least) least = std::move(k);
    }
  }

  const Seed& s = generator.seed;
  bool canonical = false;
  for (const Permutation& gamma : elements) {
    if (seed_label(s.group.type, s.group.generator, s.anchor, compose(lab, gamma)) == least) {
      canonical = true;
      break;
    }
  }
  if (!canonical) return result;

  result.accepted = true;
  const std::vector<Block> relabeled = permute_blocks(x.blocks(), lab);
  result.summary.form = Factorization(n, relabeled).serialize();
  result.summary.aut_order = c.aut_order;
  for (const PrimeSub& sub : subs) ++result.summary.prime_subgroups[sub.type];
  return result;
}

ExtensionOutcome extend_seed(const SeedClass& seed, std::size_t seed_index, const SolveOptions& options) {
  ExtensionOutcome out;
  out.type = seed.seed.group.type;
  out.seed_index = seed_index;
  out.seed_aut_order = seed.aut_order;
  const int n = seed.seed.group.n;
  const CoverInstance inst = build_cover_instance(seed.seed);
  out.ext_count = solve_cover(
      inst,
      [&](const std::vector<Block>& blocks) {
        Acceptance a = accept_canonical(Factorization(n, blocks), seed);
        if (a.accepted) out.accepted.push_back(std::move(a.summary));
      },
      options);
  std::sort(out.accepted.begin(), out.accepted.end(),
            [](const ClassSummary& a, const ClassSummary& b) { return a.form < b.form; });
  return out;
}

std::map<BigCount, BigCount> tally_outcomes(const std::vector<ExtensionOutcome>& outcomes) {
  std::set<std::vector<std::uint8_t>> seen;
  std::map<BigCount, BigCount> tally;
  for (const ExtensionOutcome& o : outcomes) {
    for (const ClassSummary& c : o.accepted) {
      if (!seen.insert(c.form).second) throw std::logic_error("class accepted twice");
      tally[c.aut_order] += 1;
    }
  }
  return tally;
}

SymmetricClassification classify_symmetric(int n, const SolveOptions& options) {
  SymmetricClassification out;
  for (const AutType& t : admissible_types(n)) {
    const auto seeds = classify_seeds(t, n);
    for (std::size_t i = 0; i < seeds.size(); ++i) out.outcomes.push_back(extend_seed(seeds[i], i, options));
  }
  out.tally = tally_outcomes(out.outcomes);
  return out;
}

}  // namespace onefact
