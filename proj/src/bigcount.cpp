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

#include "onefact/bigcount.hpp"

#include <stdexcept>

namespace onefact {

BigCount factorial(int n) {
  BigCount result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigCount result = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad decimal digit in '" + std::string(text) + "'");
    }
    result *= 10;
    result += c - '0';
  }
  return result;
}

std::vector<std::uint8_t> to_le_bytes(const BigCount& value) {
  if (value < 0) throw std::domain_error("negative count");
  std::vector<std::uint8_t> out;
  boost::multiprecision::export_bits(value, std::back_inserter(out), 8, false);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigCount from_le_bytes(std::span<const std::uint8_t> bytes) {
  BigCount result = 0;
  if (!bytes.empty()) {
    boost::multiprecision::import_bits(result, bytes.begin(), bytes.end(), 8, false);
  }
  return result;
}

BigCount exact_div(const BigCount& value, const BigCount& divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  BigCount q, r;
  boost::multiprecision::divide_qr(value, divisor, q, r);
  if (r != 0) {
    throw std::domain_error(to_decimal(value) + " is not divisible by " + to_decimal(divisor));
  }
  return q;
}

BigCount lcm(const BigCount& a, const BigCount& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace onefact
