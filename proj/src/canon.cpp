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

#include "onefact/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <limits>
#include <stdexcept>

namespace onefact {

ColoredGraph::ColoredGraph(int m) : m_(m), adj_(m), colors_(m, 0) {
  if (m < 0) throw std::invalid_argument("negative order");
}

void ColoredGraph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loops are not allowed");
  if (a < 0 || b < 0 || a >= m_ || b >= m_) throw std::out_of_range("vertex out of range");
  if (has_edge(a, b)) return;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

bool ColoredGraph::has_edge(int a, int b) const {
  const auto& row = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const int other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::find(row.begin(), row.end(), other) != row.end();
}

void ColoredGraph::set_color(int v, int c) {
  if (c < 0) throw std::invalid_argument("colors are nonnegative");
  colors_[v] = c;
}

int ColoredGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return static_cast<int>(total / 2);
}

ColoredGraph ColoredGraph::permuted(std::span<const int> perm) const {
  ColoredGraph out(m_);
  for (int v = 0; v < m_; ++v) {
    out.colors_[perm[v]] = colors_[v];
    for (int w : adj_[v]) out.adj_[perm[v]].push_back(perm[w]);
  }
  return out;
}

std::vector<std::uint8_t> ColoredGraph::serialize() const {
  std::vector<std::uint8_t> out;
  auto put16 = [&](int x) {
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
    out.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
  };
  put16(m_);
  for (int c : colors_) put16(c);
  const std::size_t bits = static_cast<std::size_t>(m_) * (m_ > 0 ? m_ - 1 : 0) / 2;
  std::vector<std::uint8_t> mask((bits + 7) / 8, 0);
  for (int i = 0; i < m_; ++i) {
    const std::size_t row_base = static_cast<std::size_t>(i) * m_ - static_cast<std::size_t>(i) * (i + 1) / 2;
    for (int j : adj_[i]) {
      if (j <= i) continue;
      const std::size_t bit = row_base + (j - i - 1);
      mask[bit / 8] |= static_cast<std::uint8_t>(1U << (bit % 8));
    }
  }
  out.insert(out.end(), mask.begin(), mask.end());
  return out;
}

namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // cell start -> one past its end
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

// Search over the individualization-refinement tree. Leaves are ordered by
// (refinement trace, relabeled adjacency); the least leaf is canonical.
class Engine {
 public:
  Engine(int m, std::vector<int> offsets, std::vector<int> targets)
      : m_(m),
        words_((m + 63) / 64),
        offsets_(std::move(offsets)),
        targets_(std::move(targets)),
        count_(m, 0),
        in_queue_(m, 0),
        cell_touched_(m, 0) {}

  // Cells of the root partition are the distinct keys in increasing order.
  void run(std::span<const std::uint64_t> keys);

  std::vector<int> best_lab;
  std::vector<Permutation> generators;
  BigCount group_order = 1;

 private:
  std::span<const int> adj(int v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::uint64_t refine(Partition& p, std::vector<int>& queue);
  void individualize(Partition& p, int v, std::vector<int>& queue);
  int target_cell(const Partition& p) const;
  std::vector<std::uint64_t> certificate(const Partition& p) const;
  int compare_to_best(int level) const;
  int explore(const Partition& parent, int level, int v);
  int leaf(const Partition& p, int level);
  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab);
  bool fixes_path(const Permutation& g) const;

  int m_;
  int words_;
  std::vector<int> offsets_;
  std::vector<int> targets_;

  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::vector<char> cell_touched_;
  std::vector<int> touched_vertices_;
  std::vector<int> touched_cells_;
  std::vector<int> splitter_;

  std::vector<std::uint64_t> first_trace_;
  std::vector<int> first_path_;
  std::vector<int> first_lab_;
  std::vector<std::uint64_t> first_cert_;

  std::vector<std::uint64_t> best_trace_;
  std::vector<int> best_path_;
  std::vector<std::uint64_t> best_cert_;

  std::vector<std::uint64_t> cur_trace_;
  std::vector<int> cur_path_;
};

std::uint64_t Engine::refine(Partition& p, std::vector<int>& queue) {
  std::uint64_t trace = 0x51ed27a1b3c5d7e9ULL;
  std::size_t head = 0;
  while (head < queue.size() && !p.discrete()) {
    const int ws = queue[head++];
    in_queue_[ws] = 0;
    splitter_.assign(p.lab.begin() + ws, p.lab.begin() + p.cell_end[ws]);
    for (int w : splitter_) {
      for (int v : adj(w)) {
        if (count_[v]++ == 0) {
          touched_vertices_.push_back(v);
          const int c = p.cell_of[v];
          if (!cell_touched_[c]) {
            cell_touched_[c] = 1;
            touched_cells_.push_back(c);
          }
        }
      }
    }
    std::sort(touched_cells_.begin(), touched_cells_.end());
    trace = mix(trace, static_cast<std::uint64_t>(ws));
    for (int c : touched_cells_) {
      cell_touched_[c] = 0;
      const int end = p.cell_end[c];
      if (end - c == 1) continue;
      auto first = p.lab.begin() + c;
      auto last = p.lab.begin() + end;
      const int c0 = count_[*first];
      if (std::all_of(first, last, [&](int v) { return count_[v] == c0; })) {
        trace = mix(trace, (static_cast<std::uint64_t>(c) << 32) | static_cast<std::uint64_t>(c0));
        continue;
      }
      std::sort(first, last, [&](int a, int b) {
        return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
      });
      const bool was_queued = in_queue_[c];
      int largest_start = c;
      int largest_size = 0;
      int start = c;
      int pieces = 0;
      while (start < end) {
        int stop = start + 1;
        while (stop < end && count_[p.lab[stop]] == count_[p.lab[start]]) ++stop;
        p.cell_end[start] = stop;
        for (int i = start; i < stop; ++i) {
          p.cell_of[p.lab[i]] = start;
          p.pos[p.lab[i]] = i;
        }
        trace = mix(trace, (static_cast<std::uint64_t>(stop - start) << 32) |
                               static_cast<std::uint64_t>(count_[p.lab[start]]));
        if (stop - start > largest_size) {
          largest_size = stop - start;
          largest_start = start;
        }
        ++pieces;
        start = stop;
      }
      p.cells += pieces - 1;
      for (int s = c; s < end; s = p.cell_end[s]) {
        if (was_queued) {
          if (s != c) {
            in_queue_[s] = 1;
            queue.push_back(s);
          }
        } else if (s != largest_start) {
          in_queue_[s] = 1;
          queue.push_back(s);
        }
      }
    }
    touched_cells_.clear();
    for (int v : touched_vertices_) count_[v] = 0;
    touched_vertices_.clear();
  }
  for (std::size_t i = head; i < queue.size(); ++i) in_queue_[queue[i]] = 0;
  queue.clear();
  return mix(trace, static_cast<std::uint64_t>(p.cells));
}

void Engine::individualize(Partition& p, int v, std::vector<int>& queue) {
  const int c = p.cell_of[v];
  const int end = p.cell_end[c];
  const int at = p.pos[v];
  const int u = p.lab[c];
  p.lab[at] = u;
  p.pos[u] = at;
  p.lab[c] = v;
  p.pos[v] = c;
  p.cell_end[c] = c + 1;
  p.cell_end[c + 1] = end;
  for (int i = c + 1; i < end; ++i) p.cell_of[p.lab[i]] = c + 1;
  ++p.cells;
  in_queue_[c] = 1;
  queue.push_back(c);
}

int Engine::target_cell(const Partition& p) const {
  int best = -1;
  int best_size = std::numeric_limits<int>::max();
  for (int c = 0; c < m_; c = p.cell_end[c]) {
    const int size = p.cell_end[c] - c;
    if (size > 1 && size < best_size) {
      best = c;
      best_size = size;
      if (size == 2) break;
    }
  }
  return best;
}

std::vector<std::uint64_t> Engine::certificate(const Partition& p) const {
  std::vector<std::uint64_t> cert(static_cast<std::size_t>(m_) * words_, 0);
  for (int i = 0; i < m_; ++i) {
    std::uint64_t* row = cert.data() + static_cast<std::size_t>(i) * words_;
    for (int w : adj(p.lab[i])) {
      const int j = p.pos[w];
      row[j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return cert;
}

int Engine::compare_to_best(int level) const {
  for (int i = 0; i <= level; ++i) {
    if (i >= static_cast<int>(best_trace_.size())) return 1;
    if (cur_trace_[i] != best_trace_[i]) return cur_trace_[i] < best_trace_[i] ? -1 : 1;
  }
  return 0;
}

void Engine::add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
  Permutation g(m_);
  for (int i = 0; i < m_; ++i) g[from_lab[i]] = to_lab[i];
  generators.push_back(std::move(g));
}

bool Engine::fixes_path(const Permutation& g) const {
  for (int v : cur_path_) {
    if (g[v] != v) return false;
  }
  return true;
}

int divergence(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

int Engine::leaf(const Partition& p, int level) {
  const bool eq_first = static_cast<int>(first_trace_.size()) == level + 1 &&
                        std::equal(cur_trace_.begin(), cur_trace_.begin() + level + 1, first_trace_.begin());
  std::vector<std::uint64_t> cert = certificate(p);
  if (eq_first && cert == first_cert_) {
    add_generator(first_lab_, p.lab);
    return divergence(cur_path_, first_path_);
  }
  int cmp = compare_to_best(level);
  if (cmp == 0 && static_cast<int>(best_trace_.size()) != level + 1) {
    cmp = level + 1 < static_cast<int>(best_trace_.size()) ? -1 : 1;
  }
  if (cmp == 0) {
    if (cert == best_cert_) {
      add_generator(best_lab, p.lab);
      return divergence(cur_path_, best_path_);
    }
    cmp = cert < best_cert_ ? -1 : 1;
  }
  if (cmp < 0) {
    best_lab = p.lab;
    best_cert_ = std::move(cert);
    best_trace_.assign(cur_trace_.begin(), cur_trace_.begin() + level + 1);
    best_path_ = cur_path_;
  }
  return kNoJump;
}

int Engine::explore(const Partition& parent, int level, int v) {
  const int here = level + 1;
  Partition p = parent;
  std::vector<int> queue;
  individualize(p, v, queue);
  const std::uint64_t trace = refine(p, queue);
  if (static_cast<int>(cur_trace_.size()) <= here) cur_trace_.resize(here + 1);
  cur_trace_[here] = trace;

  const bool eq_first = here < static_cast<int>(first_trace_.size()) &&
                        std::equal(cur_trace_.begin(), cur_trace_.begin() + here + 1, first_trace_.begin());
  if (!eq_first && compare_to_best(here) > 0) return kNoJump;
  if (p.discrete()) return leaf(p, here);

  const int c = target_cell(p);
  const int end = p.cell_end[c];
  const std::vector<int> cell(p.lab.begin() + c, p.lab.begin() + end);
  std::vector<int> explored;
  OrbitPartition orbits(m_);
  std::size_t seen_gens = 0;
  for (int w : cell) {
    for (; seen_gens < generators.size(); ++seen_gens) {
      if (fixes_path(generators[seen_gens])) orbits.add_generator(generators[seen_gens]);
    }
    bool redundant = false;
    for (int x : explored) {
      if (orbits.find(x) == orbits.find(w)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    cur_path_.push_back(w);
    const int jump = explore(p, here, w);
    cur_path_.pop_back();
    if (jump < here) return jump;
    explored.push_back(w);
    if (!eq_first && compare_to_best(here) > 0) return kNoJump;
  }
  return kNoJump;
}

void Engine::run(std::span<const std::uint64_t> keys) {
  Partition root;
  root.lab.resize(m_);
  root.pos.resize(m_);
  root.cell_of.resize(m_);
  root.cell_end.assign(m_ + 1, 0);
  std::iota(root.lab.begin(), root.lab.end(), 0);
  std::stable_sort(root.lab.begin(), root.lab.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> queue;
  std::uint64_t root_trace = 0x7a3c9d1e5f2b4a68ULL;
  for (int i = 0; i < m_;) {
    int j = i + 1;
    while (j < m_ && keys[root.lab[j]] == keys[root.lab[i]]) ++j;
    root.cell_end[i] = j;
    for (int k = i; k < j; ++k) {
      root.cell_of[root.lab[k]] = i;
      root.pos[root.lab[k]] = k;
    }
    root_trace = mix(root_trace, static_cast<std::uint64_t>(j - i));
    queue.push_back(i);
    in_queue_[i] = 1;
    ++root.cells;
    i = j;
  }
  root_trace = mix(root_trace, refine(root, queue));

  std::vector<Partition> nodes;
  first_trace_.push_back(root_trace);
  Partition p = root;
  while (!p.discrete()) {
    nodes.push_back(p);
    const int v = p.lab[target_cell(p)];
    first_path_.push_back(v);
    individualize(p, v, queue);
    first_trace_.push_back(refine(p, queue));
  }
  first_lab_ = p.lab;
  first_cert_ = certificate(p);
  best_lab = first_lab_;
  best_cert_ = first_cert_;
  best_trace_ = first_trace_;
  best_path_ = first_path_;
  cur_trace_ = first_trace_;

  for (int level = static_cast<int>(nodes.size()) - 1; level >= 0; --level) {
    const Partition& node = nodes[level];
    const int vl = first_path_[level];
    const int c = node.cell_of[vl];
    const std::vector<int> cell(node.lab.begin() + c, node.lab.begin() + node.cell_end[c]);
    cur_path_.assign(first_path_.begin(), first_path_.begin() + level);
    cur_trace_.assign(first_trace_.begin(), first_trace_.begin() + level + 1);

    OrbitPartition orbits(m_);
    std::size_t seen_gens = 0;
    std::vector<int> explored{vl};
    for (int w : cell) {
      if (w == vl) continue;
      for (; seen_gens < generators.size(); ++seen_gens) orbits.add_generator(generators[seen_gens]);
      bool redundant = false;
      for (int x : explored) {
        if (orbits.find(x) == orbits.find(w)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      cur_path_.push_back(w);
      explore(node, level, w);
      cur_path_.pop_back();
      explored.push_back(w);
    }
    for (; seen_gens < generators.size(); ++seen_gens) orbits.add_generator(generators[seen_gens]);
    group_order *= orbits.orbit_size(vl);
  }
}

struct Csr {
  std::vector<int> offsets;
  std::vector<int> targets;
};

Csr csr_of(const ColoredGraph& g) {
  Csr out;
  out.offsets.reserve(g.order() + 1);
  out.offsets.push_back(0);
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) out.targets.push_back(w);
    out.offsets.push_back(static_cast<int>(out.targets.size()));
  }
  return out;
}

Csr csr_of(const DenseGraph& g) {
  Csr out;
  out.offsets.push_back(0);
  for (int v = 0; v < g.order(); ++v) {
    std::uint16_t row = g.neighbors(v);
    while (row) {
      out.targets.push_back(std::countr_zero(row));
      row &= row - 1;
    }
    out.offsets.push_back(static_cast<int>(out.targets.size()));
  }
  return out;
}

// Triangle count of each vertex and the sum over its neighbors; an
// isomorphism-invariant split of regular graphs before any individualization.
std::vector<std::uint64_t> triangle_invariant(const DenseGraph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> tri{};
  for (int v = 0; v < n; ++v) {
    std::uint16_t row = g.neighbors(v);
    int t = 0;
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      t += std::popcount(static_cast<unsigned>(g.neighbors(w) & g.neighbors(v)));
    }
    tri[v] = t / 2;
  }
  std::vector<std::uint64_t> keys(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t around = 0;
    std::uint16_t row = g.neighbors(v);
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      around += tri[w];
    }
    keys[v] = (static_cast<std::uint64_t>(g.degree(v)) << 48) |
              (static_cast<std::uint64_t>(tri[v]) << 24) | around;
  }
  return keys;
}

Permutation labeling_from_lab(const std::vector<int>& lab) {
  Permutation out(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) out[lab[i]] = static_cast<int>(i);
  return out;
}

}  // namespace

CanonicalResult canonicalize(const ColoredGraph& g) {
  std::vector<std::uint64_t> keys(g.order());
  for (int v = 0; v < g.order(); ++v) keys[v] = static_cast<std::uint64_t>(g.color(v));
  return canonicalize(g, keys);
}

CanonicalResult canonicalize(const ColoredGraph& g, std::span<const std::uint64_t> keys) {
  const int m = g.order();
  if (static_cast<int>(keys.size()) != m) throw std::invalid_argument("one key per vertex");
  Csr csr = csr_of(g);
  Engine engine(m, std::move(csr.offsets), std::move(csr.targets));
  engine.run(keys);
  CanonicalResult out;
  out.canonical_labeling = labeling_from_lab(engine.best_lab);
  out.canonical_form = g.permuted(out.canonical_labeling).serialize();
  out.aut_order = engine.group_order;
  out.aut_generators = std::move(engine.generators);
  return out;
}

namespace {
struct DenseRun {
  Permutation labeling;
  DenseGraph canonical;
  BigCount order;
  std::vector<Permutation> generators;
};

DenseRun run_dense(const DenseGraph& g) {
  Csr csr = csr_of(g);
  const auto keys = triangle_invariant(g);
  Engine engine(g.order(), std::move(csr.offsets), std::move(csr.targets));
  engine.run(keys);
  Permutation labeling = labeling_from_lab(engine.best_lab);
  DenseGraph canonical = g.permuted(labeling);
  return {std::move(labeling), canonical, engine.group_order, std::move(engine.generators)};
}
}  // namespace

CanonicalResult canonicalize(const DenseGraph& g) {
  DenseRun run = run_dense(g);
  CanonicalResult out;
  out.canonical_form = form_bytes(run.canonical.edge_mask());
  out.canonical_labeling = std::move(run.labeling);
  out.aut_order = run.order;
  out.aut_generators = std::move(run.generators);
  return out;
}

DenseCanonical canonical_dense(const DenseGraph& g) {
  DenseRun run = run_dense(g);
  return {run.canonical.edge_mask(), static_cast<std::uint64_t>(run.order)};
}

std::vector<std::uint8_t> form_bytes(EdgeMask mask) {
  std::vector<std::uint8_t> out(16);
  for (int i = 0; i < 16; ++i) out[i] = static_cast<std::uint8_t>(mask >> (8 * i));
  return out;
}

EdgeMask form_mask(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != 16) throw std::invalid_argument("canonical forms are 16 bytes");
  EdgeMask mask = 0;
  for (int i = 15; i >= 0; --i) mask = (mask << 8) | bytes[i];
  return mask;
}

BigCount aut_order_graph(const DenseGraph& g) { return run_dense(g).order; }

}  // namespace onefact
