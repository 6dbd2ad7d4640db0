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

// Seeds (Π, T, S): a prime-order group, an anchor point set T, and the
// Π-closed blocks through T that any symmetric one-factorization containing
// the anchor must have. Classified up to conjugation-compatible isomorphism.

#include <cstdint>
#include <vector>

#include "onefact/autotypes.hpp"
#include "onefact/bigcount.hpp"
#include "onefact/gdd.hpp"

namespace onefact {

struct Seed {
  PrimeGroup group;
  std::vector<int> anchor;    // sorted points
  std::vector<Block> blocks;  // sorted
};

struct SeedClass {
  Seed seed;
  BigCount aut_order;
  // Point permutations γ with γΠγ⁻¹ = Π, γ(T) = T, γ(S) = S.
  std::vector<Permutation> aut_generators;
};

// Fixed points first within U and within V, then consecutive p-cycles.
PrimeGroup fix_group_representative(const AutType& t, int n);

// Order of the normalizer of Π in the group of all point permutations
// fixing U and V setwise.
BigCount normalizer_order(const AutType& t, int n);

// Distinct blocks of the orbit of `b` under ⟨alpha⟩, sorted.
std::vector<Block> block_orbit(const Block& b, std::span<const int> alpha);

// Colored graph of the seed with Π drawn through its power alpha^power:
// point-vertices first (U, U in T, V, V in T), then blocks, then arc gadgets.
ColoredGraph seed_graph(int n, std::span<const int> alpha, std::span<const int> anchor,
                        std::span<const Block> blocks, int power = 1);

// Isomorphism invariant of the seed: least canonical form over all
// generators of Π.
std::vector<std::uint8_t> seed_key(const Seed& s);

// Full automorphism group of the seed.
SeedClass seed_class_of(const Seed& s);

// Independent check of the seed conditions against the type's anchor
// schema.
bool is_valid_seed(const Seed& s);

struct SeedStats {
  std::size_t partial_states = 0;
};

std::vector<SeedClass> classify_seeds(const AutType& t, int n, SeedStats* stats = nullptr);

}  // namespace onefact
