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

#include "onefact/autotypes.hpp"

#include <stdexcept>

namespace onefact {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kNotPrime: return "not-prime";
    case Rule::kDivisibility: return "cycle-divisibility";
    case Rule::kIdentity: return "identity";
    case Rule::kFixedSubfactorization: return "fixed-subfactorization";
    case Rule::kFixedVertexBound: return "fixed-vertex-bound";
    case Rule::kInvolutionFactorBound: return "involution-factor-bound";
    case Rule::kInvolutionSingleFactor: return "involution-single-factor";
    case Rule::kAllFactorsFixed: return "all-factors-fixed";
    case Rule::kFixedPairBlock: return "fixed-pair-block";
  }
  return "unknown";
}

bool passes_fixed_subfactorization(int, const AutType& t) {
  if (t.f_u < 1 || t.f_v < 1) return true;
  return t.f_u == t.f_v - 1 && t.f_v % 2 == 0;
}

bool passes_fixed_vertex_bound(int n, const AutType& t) {
  if (2 * t.f_v > n) return false;
  if (2 * t.f_v == n) return t.p == 2;
  return true;
}

bool passes_involution_factor_bound(int n, const AutType& t) {
  if (n % 4 != 2 || t.p != 2 || t.f_v != 0) return true;
  return 2 * t.f_u <= n;
}

bool passes_involution_single_factor(int n, const AutType& t) {
  if ((n % 8 != 4 && n % 8 != 6) || t.p != 2 || t.f_v != 0) return true;
  return t.f_u != 1;
}

bool passes_all_factors_fixed(int n, const AutType& t) {
  if (t.f_u != n - 1 || t.f_v == n) return true;
  return t.p == 2;
}

bool passes_fixed_pair_block(int, const AutType& t) { return t.f_u > 0 || t.f_v <= 1; }

std::optional<Rule> rejection(int n, const AutType& t) {
  if (!is_prime(t.p)) return Rule::kNotPrime;
  if (t.f_u < 0 || t.f_v < 0 || t.f_u > n - 1 || t.f_v > n || (n - 1 - t.f_u) % t.p != 0 ||
      (n - t.f_v) % t.p != 0) {
    return Rule::kDivisibility;
  }
  if (t.f_u == n - 1 && t.f_v == n) return Rule::kIdentity;
  if (!passes_fixed_subfactorization(n, t)) return Rule::kFixedSubfactorization;
  if (!passes_fixed_vertex_bound(n, t)) return Rule::kFixedVertexBound;
  if (!passes_involution_factor_bound(n, t)) return Rule::kInvolutionFactorBound;
  if (!passes_involution_single_factor(n, t)) return Rule::kInvolutionSingleFactor;
  if (!passes_all_factors_fixed(n, t)) return Rule::kAllFactorsFixed;
  if (!passes_fixed_pair_block(n, t)) return Rule::kFixedPairBlock;
  return std::nullopt;
}

std::vector<AutType> candidate_types(int n) {
  std::vector<AutType> out;
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (int fu = 0; fu <= n - 1; ++fu) {
      if ((n - 1 - fu) % p != 0) continue;
      for (int fv = 0; fv <= n; ++fv) {
        if ((n - fv) % p == 0) out.push_back({p, fu, fv});
      }
    }
  }
  return out;
}

std::vector<AutType> admissible_types(int n) {
  if (n < 4 || n > kMaxVertices || n % 2 != 0) throw std::invalid_argument("order must be even, 4..14");
  std::vector<AutType> out;
  for (const AutType& t : candidate_types(n)) {
    if (!rejection(n, t)) out.push_back(t);
  }
  return out;
}

AnchorSchema anchor_schema_for(const AutType& t, int n) {
  if (rejection(n, t)) throw std::invalid_argument("type is not admissible");
  if (t.f_u >= 1 && t.f_v >= 1) {
    if (t.p == 2) return {Slot::kAbsent, Slot::kFixed, Slot::kMoved};
    return {Slot::kFixed, Slot::kFixed, Slot::kFixed};
  }
  if (t.f_u == 0) return {Slot::kMoved, t.f_v >= 1 ? Slot::kFixed : Slot::kMoved, Slot::kMoved};
  if (t.p == 2) return {Slot::kFixed, Slot::kMoved, Slot::kAbsent};
  return {Slot::kMoved, Slot::kMoved, Slot::kMoved};
}

int seed_m_value(const AutType& t, int n) {
  const AnchorSchema s = anchor_schema_for(t, n);
  const int moved_v = n - t.f_v;
  if (s.one_factor == Slot::kAbsent) return t.f_v * moved_v;
  if (s.vertex2 == Slot::kAbsent) return t.f_u * moved_v;
  if (s.one_factor == Slot::kFixed) return t.f_v * (t.f_v - 1) / 2;
  if (s.vertex1 == Slot::kFixed) return t.f_v * (n - 1);
  // Every block through a moved factor; its two vertices are both moved
  // because f_V = 0 here.
  return (n - 1 - t.f_u) * n / 2;
}

}  // namespace onefact
