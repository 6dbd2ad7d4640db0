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

#include "doctest.h"
#include "onefact/census.hpp"
#include "onefact/extender.hpp"

using namespace onefact;

namespace {

std::map<BigCount, BigCount> published_nontrivial() {
  const std::vector<std::pair<int, long long>> rows{
      {2, 10300646080}, {3, 4497762}, {4, 104560}, {5, 2742}, {6, 9247}, {8, 1790}, {10, 168}, {12, 76},
      {13, 10},         {16, 109},    {21, 1},     {24, 3},   {32, 13},  {39, 3},  {42, 2},  {48, 1},
      {64, 3},          {84, 1},      {156, 1},    {192, 1}};
  std::map<BigCount, BigCount> out;
  for (auto [i, c] : rows) out[i] = c;
  return out;
}

}  // namespace

TEST_CASE("small hand-checked census") {
  // 12·N1 + 12·2/2 + 12·1/3 = 52 gives N1 = 3.
  const std::map<BigCount, BigCount> nontrivial{{2, 2}, {3, 1}};
  const CensusResult r = solve_census(12, 52, nontrivial);
  CHECK(r.n1 == 3);
  CHECK(r.total == 6);
  CHECK(census_omega(12, r.n1, nontrivial) == 52);
  CHECK_THROWS(solve_census(12, 53, nontrivial));
  CHECK_THROWS(solve_census(12, 10, nontrivial));
  CHECK_THROWS(solve_census(12, 52, {{1, 1}}));
}

TEST_CASE("census for K14 from the published group order counts") {
  CensusInput in;
  in.n = 14;
  in.lf_kn = from_decimal("98758655816833727741338583040");
  in.nontrivial = published_nontrivial();
  const CensusResult r = solve_census(in);
  CHECK(to_decimal(r.n1) == "1132835411296799774");
  CHECK(to_decimal(r.total) == "1132835421602062347");
  CHECK(census_omega(gamma_order(14), r.n1, in.nontrivial) == factorial(13) * in.lf_kn);
}

TEST_CASE("census round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const BigCount gamma = factorial(static_cast<int>(4 + rng() % 20));
    std::map<BigCount, BigCount> nontrivial;
    const int rows = static_cast<int>(rng() % 6);
    for (int r = 0; r < rows; ++r) {
      // Group orders must divide Γ for the sum to be integral.
      BigCount i = 2 + rng() % 30;
      if (gamma % i != 0) continue;
      nontrivial[i] = BigCount(rng() % 1000000);
    }
    const BigCount n1 = BigCount(rng()) * BigCount(rng());
    const BigCount omega = census_omega(gamma, n1, nontrivial);
    const CensusResult r = solve_census(gamma, omega, nontrivial);
    CHECK(r.n1 == n1);
    BigCount total = n1;
    for (const auto& [i, c] : nontrivial) total += c;
    CHECK(r.total == total);
  }
}

TEST_CASE("census and double counts for K8") {
  const SymmetricClassification c = classify_symmetric(8);
  const CensusResult r = solve_census(CensusInput{8, 6240, c.tally});
  CHECK(r.n1 == 0);
  CHECK(r.total == 6);
  for (const AutType& t : admissible_types(8)) CHECK(double_count_check(t, 8, c.outcomes).ok);
  const std::string report = census_report(r, c.tally);
  CHECK(report.rfind("1 0\n", 0) == 0);
  CHECK(report.find("total 6\n") != std::string::npos);
  CHECK(double_count_report(8, c.outcomes).find("MISMATCH") == std::string::npos);

  // Dropping one extension breaks the identity for its type.
  auto broken = c.outcomes;
  for (auto& o : broken) {
    if (o.ext_count > 0) {
      o.ext_count -= 1;
      CHECK_FALSE(double_count_check(o.type, 8, broken).ok);
      break;
    }
  }
}
