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

// Orbit counting: recovers the number of asymmetric isomorphism classes
// from the labeled total and the classes with nontrivial automorphisms.

#include <map>
#include <string>
#include <vector>

#include "onefact/bigcount.hpp"
#include "onefact/extender.hpp"

namespace onefact {

struct CensusInput {
  int n = 0;
  BigCount lf_kn;
  // Group order i >= 2 -> number of classes N_i.
  std::map<BigCount, BigCount> nontrivial;
};

struct CensusResult {
  BigCount n1;
  BigCount total;
};

// Order of the group of point permutations fixing U and V: (n-1)!·n!.
BigCount gamma_order(int n);

// Solves |Ω| = |Γ|·Σ N_i/i for N_1. Throws std::domain_error if N_1 is not
// a nonnegative integer.
CensusResult solve_census(const BigCount& gamma, const BigCount& omega, const std::map<BigCount, BigCount>& nontrivial);
CensusResult solve_census(const CensusInput& c);

// |Γ|·Σ_{i>=1} N_i/i; throws if not integral.
BigCount census_omega(const BigCount& gamma, const BigCount& n1, const std::map<BigCount, BigCount>& nontrivial);

struct DoubleCount {
  BigCount lhs;
  BigCount rhs;
  bool ok = false;
};

// Counts (X, seed of type t inside X) pairs once from the classes and once
// from the seeds.
DoubleCount double_count_check(const AutType& t, int n, const std::vector<ExtensionOutcome>& outcomes);

// Plain-text tables: "i N_i" per line plus the total, and the double count
// per type.
std::string census_report(const CensusResult& result, const std::map<BigCount, BigCount>& nontrivial);
std::string double_count_report(int n, const std::vector<ExtensionOutcome>& outcomes);

}  // namespace onefact
