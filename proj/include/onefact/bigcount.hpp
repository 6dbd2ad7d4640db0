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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace onefact {

// Arbitrary-precision nonnegative integer used for every count in the
// pipeline. Values below 2^128 are stored inline.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(int n);
BigCount binomial(int n, int k);

std::string to_decimal(const BigCount& value);
BigCount from_decimal(std::string_view text);

// Little-endian magnitude, no leading zero bytes (zero encodes as empty).
std::vector<std::uint8_t> to_le_bytes(const BigCount& value);
BigCount from_le_bytes(std::span<const std::uint8_t> bytes);

// Throws std::domain_error when `divisor` does not divide `value`.
BigCount exact_div(const BigCount& value, const BigCount& divisor);

BigCount lcm(const BigCount& a, const BigCount& b);

}  // namespace onefact
