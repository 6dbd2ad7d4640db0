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

#include <set>

#include "doctest.h"
#include "onefact/autotypes.hpp"
#include "onefact/extender.hpp"
#include "oracles.hpp"

using namespace onefact;

namespace {

std::map<std::vector<std::uint8_t>, BigCount> accepted_forms(const std::vector<ExtensionOutcome>& outcomes) {
  std::map<std::vector<std::uint8_t>, BigCount> out;
  for (const ExtensionOutcome& o : outcomes)
    for (const ClassSummary& c : o.accepted) CHECK(out.emplace(c.form, c.aut_order).second);
  return out;
}

std::vector<ExtensionOutcome> run_all(int n, const SolveOptions& opts) {
  std::vector<ExtensionOutcome> out;
  for (const AutType& t : admissible_types(n)) {
    const auto seeds = classify_seeds(t, n);
    for (std::size_t i = 0; i < seeds.size(); ++i) out.push_back(extend_seed(seeds[i], i, opts));
  }
  return out;
}

}  // namespace

TEST_CASE("cover solutions are one-factorizations containing the seed") {
  for (int n : {6, 8, 10}) {
    for (const AutType& t : admissible_types(n)) {
      const auto seeds = classify_seeds(t, n);
      for (std::size_t i = 0; i < seeds.size(); i += (n == 10 ? 7 : 1)) {
        const Seed& s = seeds[i].seed;
        const CoverInstance c = build_cover_instance(s);
        for (const auto& orbit : c.options) CHECK(block_orbit(orbit.front(), s.group.generator) == orbit);
        solve_cover(c, [&](const std::vector<Block>& blocks) {
          REQUIRE_NOTHROW(Factorization(n, blocks));
          CHECK(permute_blocks(blocks, s.group.generator) == blocks);
          for (const Block& b : s.blocks) CHECK(std::binary_search(blocks.begin(), blocks.end(), b));
        });
      }
    }
  }
}

TEST_CASE("symmetric classes for K6 and K8 match exhaustive search") {
  for (int n : {4, 6, 8}) {
    const auto got = accepted_forms(run_all(n, {}));
    CHECK(got == testing::brute_symmetric_classes(n));
  }
}

TEST_CASE("symmetric classes for K10 match exhaustive search" * doctest::timeout(1200)) {
  const auto outcomes = run_all(10, {});
  const auto got = accepted_forms(outcomes);
  CHECK(got.size() == 98);
  CHECK(got == testing::brute_symmetric_classes(10));
}

TEST_CASE("acceptance does not depend on the solver's option order") {
  for (int n : {8, 10}) {
    SolveOptions rev;
    rev.reverse = true;
    CHECK(accepted_forms(run_all(n, rev)) == accepted_forms(run_all(n, {})));
  }
}

TEST_CASE("split workers reproduce the single run") {
  const auto whole = run_all(8, {});
  for (int workers : {2, 3}) {
    std::map<std::pair<AutType, std::size_t>, BigCount> ext;
    std::map<std::vector<std::uint8_t>, BigCount> forms;
    for (int w = 0; w < workers; ++w) {
      SolveOptions opts;
      opts.split_depth = 1;
      opts.worker = w;
      opts.workers = workers;
      for (const ExtensionOutcome& o : run_all(8, opts)) {
        ext[{o.type, o.seed_index}] += o.ext_count;
        for (const ClassSummary& c : o.accepted) CHECK(forms.emplace(c.form, c.aut_order).second);
      }
    }
    for (const ExtensionOutcome& o : whole) CHECK(ext[{o.type, o.seed_index}] == o.ext_count);
    CHECK(forms == accepted_forms(whole));
  }
}

TEST_CASE("class summaries") {
  const SymmetricClassification c = classify_symmetric(8);
  std::map<BigCount, BigCount> expected{{16, 1}, {24, 1}, {42, 1}, {64, 1}, {96, 1}, {1344, 1}};
  CHECK(c.tally == expected);
  for (const ExtensionOutcome& o : c.outcomes) {
    for (const ClassSummary& s : o.accepted) {
      std::vector<Block> blocks;
      for (std::size_t i = 0; i < s.form.size(); i += 3) blocks.push_back({s.form[i], s.form[i + 1], s.form[i + 2]});
      const Factorization x(8, blocks);
      CHECK(aut_group(x).order == s.aut_order);
      int subgroups = 0;
      for (const auto& [t, k] : s.prime_subgroups) subgroups += k;
      CHECK(subgroups == static_cast<int>(prime_subgroups(8, aut_group(x)).size()));
      CHECK(s.prime_subgroups.count(o.type) == 1);
    }
  }
  auto doubled = c.outcomes;
  for (const auto& o : c.outcomes)
    if (!o.accepted.empty()) doubled.push_back(o);
  CHECK_THROWS_AS(tally_outcomes(doubled), std::logic_error);
}
