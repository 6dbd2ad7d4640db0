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

// Prime-order automorphism types (p, f_U, f_V) that can occur in a
// one-factorization of K_n, and the anchor shape used to seed each search.

#include <optional>
#include <string_view>
#include <vector>

#include "onefact/gdd.hpp"

namespace onefact {

enum class Slot { kAbsent, kFixed, kMoved };

// Which anchor points a seed carries: one U-point, then two V-points.
struct AnchorSchema {
  Slot one_factor = Slot::kAbsent;
  Slot vertex1 = Slot::kAbsent;
  Slot vertex2 = Slot::kAbsent;
  friend bool operator==(const AnchorSchema&, const AnchorSchema&) = default;
};

// Reasons a candidate type is impossible.
enum class Rule {
  kNotPrime,
  kDivisibility,
  kIdentity,
  // Fixed points with f_U, f_V >= 1 carry a one-factorization of K_{f_V}.
  kFixedSubfactorization,
  // f_V <= n/2, with equality only for involutions.
  kFixedVertexBound,
  // n = 2 (mod 4), p = 2, f_V = 0 forces f_U <= n/2.
  kInvolutionFactorBound,
  // n = 4, 6 (mod 8), p = 2, f_V = 0 forbids f_U = 1.
  kInvolutionSingleFactor,
  // Every factor fixed while some vertex moves forces p = 2.
  kAllFactorsFixed,
  // Two fixed vertices lie in a fixed block, so f_U = 0 forces f_V <= 1.
  kFixedPairBlock,
};

std::string_view rule_name(Rule r);

bool passes_fixed_subfactorization(int n, const AutType& t);
bool passes_fixed_vertex_bound(int n, const AutType& t);
bool passes_involution_factor_bound(int n, const AutType& t);
bool passes_involution_single_factor(int n, const AutType& t);
bool passes_all_factors_fixed(int n, const AutType& t);
bool passes_fixed_pair_block(int n, const AutType& t);

// First rule that rejects `t`, or nullopt if `t` is admissible.
std::optional<Rule> rejection(int n, const AutType& t);

// Every (p, f_U, f_V) with p prime, 0 <= f_U <= n-1, 0 <= f_V <= n.
std::vector<AutType> candidate_types(int n);
std::vector<AutType> admissible_types(int n);

AnchorSchema anchor_schema_for(const AutType& t, int n);

// Number of seeds of type t inside any one-factorization X for a fixed
// prime-order subgroup of Aut(X) of that type.
int seed_m_value(const AutType& t, int n);

}  // namespace onefact
