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

// On-disk formats: binary level files, text seed and outcome files, and an
// append-only run manifest.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "onefact/extender.hpp"
#include "onefact/labelcount.hpp"
#include "onefact/seedgen.hpp"

namespace onefact {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint16_t kLevelFormatVersion = 1;

// Header "OF1L", u16 version, u8 n, u8 k, u64 record count, then per record
// the 16-byte form, a u8 length L and L bytes of LF, all little-endian.
std::vector<std::uint8_t> encode_level(const Level& level);
// Validates layout, order, and that every form is a canonical k-regular
// graph; throws FormatError.
Level decode_level(std::span<const std::uint8_t> bytes);

void write_level_file(const std::filesystem::path& path, const Level& level);
Level read_level_file(const std::filesystem::path& path);
std::string level_file_name(int k);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
// Writes to a temporary sibling and renames it into place.
void write_bytes_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
std::string checksum_hex(std::span<const std::uint8_t> bytes);

std::string encode_seeds(const AutType& t, int n, const std::vector<SeedClass>& seeds);
// Recomputes automorphism groups and checks them against the stored orders.
std::vector<SeedClass> decode_seeds(const std::string& text, AutType* type = nullptr, int* n = nullptr);
std::string seed_file_name(const AutType& t);

std::string encode_outcomes(const std::vector<ExtensionOutcome>& outcomes);
std::vector<ExtensionOutcome> decode_outcomes(const std::string& text);
// Sums extension counts and concatenates accepted classes per (type, seed).
std::vector<ExtensionOutcome> merge_outcomes(const std::vector<std::vector<ExtensionOutcome>>& parts);

// Lines "unit <id> <checksum>" appended as work completes.
class RunManifest {
 public:
  explicit RunManifest(std::filesystem::path path);

  // Starts or resumes a run; a mismatching header throws FormatError.
  void open(const std::string& header);
  bool done(const std::string& unit) const;
  std::string checksum(const std::string& unit) const;
  void record(const std::string& unit, const std::string& checksum);

 private:
  std::filesystem::path path_;
  std::map<std::string, std::string> done_;
};

std::string read_text(const std::filesystem::path& path);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace onefact
