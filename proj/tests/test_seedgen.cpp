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

#include <random>
#include <set>

#include "doctest.h"
#include "onefact/autotypes.hpp"
#include "onefact/seedgen.hpp"
#include "oracles.hpp"

using namespace onefact;

namespace {

// A permutation commuting with alpha: shuffles fixed points within U and
// within V, shuffles cycles within each side and rotates each cycle.
Permutation random_centralizer_element(const PrimeGroup& g, std::mt19937_64& rng) {
  const int n = g.n;
  const int p = g.type.p;
  Permutation out = identity_permutation(point_count(n));
  auto side = [&](int first, int fixed, int end) {
    const auto pf = testing::random_permutation(fixed, rng);
    for (int i = 0; i < fixed; ++i) out[first + i] = first + pf[i];
    const int cycles = (end - first - fixed) / p;
    const auto pc = testing::random_permutation(cycles, rng);
    for (int c = 0; c < cycles; ++c) {
      const int shift = static_cast<int>(rng() % p);
      for (int i = 0; i < p; ++i) out[first + fixed + c * p + i] = first + fixed + pc[c] * p + (i + shift) % p;
    }
  };
  side(0, g.type.f_u, n - 1);
  side(n - 1, g.type.f_v, point_count(n));
  return out;
}

}  // namespace

TEST_CASE("fixed group representatives have the requested type") {
  for (int n : {6, 8, 10, 12, 14}) {
    for (const AutType& t : admissible_types(n)) {
      const PrimeGroup g = fix_group_representative(t, n);
      CHECK(type_of(n, g.generator) == t);
      CHECK(permutation_order(g.generator) == t.p);
    }
  }
  CHECK_THROWS(fix_group_representative({2, 1, 0}, 14));
}

TEST_CASE("normalizer orders") {
  // (p-1) · f! p^c c! on each side.
  CHECK(normalizer_order({13, 0, 1}, 14) == 12 * (13) * (13));
  CHECK(normalizer_order({7, 6, 0}, 14) == BigCount(6) * (720 * 7) * (49 * 2));
  CHECK(normalizer_order({2, 1, 2}, 14) == BigCount(64 * 720) * (2 * 64 * 720));
}

TEST_CASE("seeds are valid, distinct and their groups divide the normalizer") {
  for (int n : {6, 8, 10}) {
    for (const AutType& t : admissible_types(n)) {
      const auto seeds = classify_seeds(t, n);
      CHECK_FALSE(seeds.empty());
      std::set<std::vector<std::uint8_t>> keys;
      for (const SeedClass& s : seeds) {
        CHECK(is_valid_seed(s.seed));
        CHECK(keys.insert(seed_key(s.seed)).second);
        CHECK(normalizer_order(t, n) % s.aut_order == 0);
        for (const Permutation& g : s.aut_generators) {
          CHECK(permute_blocks(s.seed.blocks, g) == s.seed.blocks);
        }
      }
    }
  }
}

TEST_CASE("orbit-stabilizer against direct seed enumeration") {
  for (int n : {4, 6, 8}) {
    for (const AutType& t : admissible_types(n)) {
      BigCount total = 0;
      for (const SeedClass& s : classify_seeds(t, n)) total += normalizer_order(t, n) / s.aut_order;
      CHECK_MESSAGE(total == testing::brute_labeled_seed_count(t, n),
                    "n=" << n << " type " << t.p << "," << t.f_u << "," << t.f_v);
    }
  }
}

TEST_CASE("seed keys ignore relabeling by the centralizer and the choice of generator") {
  std::mt19937_64 rng(11);
  for (const AutType& t : admissible_types(10)) {
    const auto seeds = classify_seeds(t, 10);
    for (std::size_t i = 0; i < seeds.size(); i += 5) {
      const Seed& s = seeds[i].seed;
      const Permutation gamma = random_centralizer_element(s.group, rng);
      Seed moved = s;
      for (int& x : moved.anchor) x = gamma[x];
      std::sort(moved.anchor.begin(), moved.anchor.end());
      moved.blocks = permute_blocks(s.blocks, gamma);
      REQUIRE(is_valid_seed(moved));
      CHECK(seed_key(moved) == seed_key(s));
      CHECK(seed_class_of(moved).aut_order == seeds[i].aut_order);
      if (t.p > 2) {
        Seed powered = s;
        powered.group.generator = power(s.group.generator, 2);
        CHECK(seed_key(powered) == seed_key(s));
      }
    }
  }
}

TEST_CASE("small seed classes for K14") {
  CHECK(classify_seeds({13, 0, 1}, 14).size() == 14);
  CHECK(classify_seeds({5, 3, 4}, 14).size() == 8);
  CHECK(classify_seeds({7, 6, 0}, 14).size() == 9);
}

TEST_CASE("invalid seeds are recognized") {
  const auto seeds = classify_seeds({2, 1, 2}, 8);
  REQUIRE_FALSE(seeds.empty());
  Seed s = seeds.front().seed;
  Seed missing = s;
  missing.blocks.pop_back();
  CHECK_FALSE(is_valid_seed(missing));
  Seed wrong_anchor = s;
  wrong_anchor.anchor = {0, 1};
  CHECK_FALSE(is_valid_seed(wrong_anchor));
}
