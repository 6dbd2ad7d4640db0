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

// Small permutation-group helpers. Permutations are image arrays:
// p[x] is the image of x.

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace onefact {

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_identity(std::span<const int> p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// (a * b)(x) = a(b(x)).
inline Permutation compose(std::span<const int> a, std::span<const int> b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Permutation inverse(std::span<const int> p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

inline Permutation power(std::span<const int> p, int e) {
  Permutation out = identity_permutation(static_cast<int>(p.size()));
  for (int i = 0; i < e; ++i) out = compose(p, out);
  return out;
}

inline int permutation_order(std::span<const int> p) {
  Permutation q(p.begin(), p.end());
  int order = 1;
  while (!is_identity(q)) {
    q = compose(p, q);
    ++order;
  }
  return order;
}

inline bool is_permutation_of(std::span<const int> p, int m) {
  if (static_cast<int>(p.size()) != m) return false;
  std::vector<char> seen(m, 0);
  for (int x : p) {
    if (x < 0 || x >= m || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// All elements of the group generated by `gens`; throws past `limit`.
inline std::vector<Permutation> group_elements(int m, std::span<const Permutation> gens,
                                               std::size_t limit = 1'000'000) {
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  Permutation id = identity_permutation(m);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = compose(g, out[i]);
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
        if (out.size() > limit) throw std::length_error("group too large to enumerate");
      }
    }
  }
  return out;
}

// Union-find orbits of the group generated by `gens`.
class OrbitPartition {
 public:
  explicit OrbitPartition(int m) : parent_(m), size_(m, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  void add_generator(std::span<const int> g) {
    for (int x = 0; x < static_cast<int>(g.size()); ++x) merge(x, g[x]);
  }

  int orbit_size(int x) { return size_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace onefact
