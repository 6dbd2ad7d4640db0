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

#include "onefact/census.hpp"

#include <sstream>
#include <stdexcept>

namespace onefact {

BigCount gamma_order(int n) { return factorial(n - 1) * factorial(n); }

CensusResult solve_census(const BigCount& gamma, const BigCount& omega, const std::map<BigCount, BigCount>& nontrivial) {
  BigCount l = 1;
  for (const auto& [i, count] : nontrivial) {
    if (i < 2) throw std::invalid_argument("nontrivial group orders start at 2");
    if (count < 0) throw std::invalid_argument("negative class count");
    l = lcm(l, i);
  }
  BigCount weighted = 0;
  BigCount total = 0;
  for (const auto& [i, count] : nontrivial) {
    weighted += count * (l / i);
    total += count;
  }
  const BigCount numerator = omega * l - gamma * weighted;
  if (numerator < 0) throw std::domain_error("negative count of asymmetric classes");
  const BigCount n1 = exact_div(numerator, gamma * l);
  return {n1, total + n1};
}

CensusResult solve_census(const CensusInput& c) {
  return solve_census(gamma_order(c.n), factorial(c.n - 1) * c.lf_kn, c.nontrivial);
}

BigCount census_omega(const BigCount& gamma, const BigCount& n1, const std::map<BigCount, BigCount>& nontrivial) {
  BigCount sum = gamma * n1;
  for (const auto& [i, count] : nontrivial) sum += exact_div(gamma * count, i);
  return sum;
}

DoubleCount double_count_check(const AutType& t, int n, const std::vector<ExtensionOutcome>& outcomes) {
  const BigCount gamma = gamma_order(n);
  const int m = seed_m_value(t, n);
  DoubleCount out;
  for (const ExtensionOutcome& o : outcomes) {
    if (o.type == t) out.rhs += exact_div(gamma, o.seed_aut_order) * o.ext_count;
    for (const ClassSummary& c : o.accepted) {
      auto it = c.prime_subgroups.find(t);
      if (it == c.prime_subgroups.end()) continue;
      out.lhs += exact_div(gamma, c.aut_order) * m * it->second;
    }
  }
  out.ok = out.lhs == out.rhs;
  return out;
}

std::string census_report(const CensusResult& result, const std::map<BigCount, BigCount>& nontrivial) {
  std::ostringstream os;
  os << "1 " << to_decimal(result.n1) << '\n';
  for (const auto& [i, count] : nontrivial) os << to_decimal(i) << ' ' << to_decimal(count) << '\n';
  os << "total " << to_decimal(result.total) << '\n';
  return os.str();
}

std::string double_count_report(int n, const std::vector<ExtensionOutcome>& outcomes) {
  std::ostringstream os;
  for (const AutType& t : admissible_types(n)) {
    const DoubleCount d = double_count_check(t, n, outcomes);
    os << t.p << ' ' << t.f_u << ' ' << t.f_v << ' ' << seed_m_value(t, n) << ' ' << to_decimal(d.lhs) << ' '
       << to_decimal(d.rhs) << ' ' << (d.ok ? "ok" : "MISMATCH") << '\n';
  }
  return os.str();
}

}  // namespace onefact
