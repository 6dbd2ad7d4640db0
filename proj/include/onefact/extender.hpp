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

// Extends classified seeds to full one-factorizations by exact cover over
// Π-orbits of blocks, keeping one representative per isomorphism class by
// canonical augmentation.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "onefact/exact_cover.hpp"
#include "onefact/seedgen.hpp"

namespace onefact {

struct CoverInstance {
  int n = 0;
  std::vector<Block> seed_blocks;
  // Uncovered U–V and V–V pairs, x < y.
  std::vector<std::pair<int, int>> items;
  // Each option is one Π-orbit of blocks.
  std::vector<std::vector<Block>> options;
};

CoverInstance build_cover_instance(const Seed& s);

// Calls `on_solution` with the full sorted block list (seed blocks plus the
// chosen orbits) of every exact cover; returns the number of covers.
std::uint64_t solve_cover(const CoverInstance& c, const std::function<void(const std::vector<Block>&)>& on_solution,
                          const SolveOptions& options = {});

struct ClassSummary {
  // Serialized block list of the canonically relabeled factorization.
  std::vector<std::uint8_t> form;
  BigCount aut_order;
  // Number of prime-order subgroups of Aut(X) of each type.
  std::map<AutType, int> prime_subgroups;
};

struct Acceptance {
  bool accepted = false;
  // Filled only for accepted factorizations.
  ClassSummary summary;
};

// Canonical augmentation test for a factorization built from `generator`.
Acceptance accept_canonical(const Factorization& x, const SeedClass& generator);

struct ExtensionOutcome {
  AutType type;
  std::size_t seed_index = 0;
  BigCount seed_aut_order;
  BigCount ext_count;
  std::vector<ClassSummary> accepted;
};

ExtensionOutcome extend_seed(const SeedClass& seed, std::size_t seed_index, const SolveOptions& options = {});

struct SymmetricClassification {
  std::vector<ExtensionOutcome> outcomes;
  // aut order -> number of accepted classes.
  std::map<BigCount, BigCount> tally;
};

// Tallies outcomes; throws std::logic_error if a class was accepted twice.
std::map<BigCount, BigCount> tally_outcomes(const std::vector<ExtensionOutcome>& outcomes);

SymmetricClassification classify_symmetric(int n, const SolveOptions& options = {});

}  // namespace onefact
