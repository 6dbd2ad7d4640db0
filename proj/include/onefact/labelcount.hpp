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

// Labeled one-factorization counts of regular graphs, level by level.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "onefact/bigcount.hpp"
#include "onefact/graph.hpp"

namespace onefact {

struct ClassRecord {
  EdgeMask form = 0;
  std::uint64_t aut_order = 1;
  // An accumulator while a level is being built; LF(G) once finalized.
  BigCount value;
};

// Byte-wise order of the 16-byte little-endian forms.
bool form_less(EdgeMask a, EdgeMask b);

// A finalized level: every isomorphism class of one-factorizable k-regular
// graphs on n vertices with its LF value, sorted by form_less.
struct Level {
  int n = 0;
  int k = 0;
  std::vector<ClassRecord> records;

  const ClassRecord* find(EdgeMask form) const;
  // LF of the class of `g`, zero when the class is absent.
  BigCount lf_of(const DenseGraph& g) const;
};

Level level_zero(int n);

// Sharded open-addressing table keyed by canonical form. Safe for
// concurrent add() calls.
class LevelStore {
 public:
  LevelStore(int n, int k, std::size_t expected_records = 0);
  ~LevelStore();
  LevelStore(const LevelStore&) = delete;
  LevelStore& operator=(const LevelStore&) = delete;

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const;

  void add(EdgeMask form, std::uint64_t aut_order, const BigCount& amount);
  // Raw accumulator, or nullopt for an absent form.
  std::optional<BigCount> accumulator(EdgeMask form) const;

  // Accumulators hold k·LF(G)·n!/|Aut(G)|; converts them to LF(G). Throws
  // std::domain_error if a division is not exact.
  Level finalize() &&;

 private:
  struct Shard;
  Shard& shard_for(std::uint32_t hash) const;

  int n_;
  int k_;
  std::vector<std::unique_ptr<Shard>> shards_;
};

struct AccumulateOptions {
  int threads = 1;
  // Called with the number of source classes processed so far.
  std::function<void(std::size_t)> progress;
};

// Builds level k = prev.k + 1 by extending every class of `prev` with every
// perfect matching of its complement.
Level forward_accumulate_level(const Level& prev, const AccumulateOptions& options = {});

struct DgmReport {
  bool ok = true;
  std::vector<EdgeMask> mismatches;
};

// Recomputes LF of each class of `level` as the sum of LF(G - F) over the
// one-factors F through the least edge of G.
DgmReport verify_dgm_level(const Level& level, const Level& below, int threads = 1);

// LF(K_n) from levels k and n-1-k. Throws std::domain_error if the binomial
// does not divide the sum.
BigCount verify_mitm(const Level& level, const Level& complementary);

// Labeled one-factorizations summed over all k-regular graphs on n vertices.
BigCount labeled_total(const Level& level);
std::vector<BigCount> distinct_factorization_table(const std::vector<Level>& levels);

}  // namespace onefact
