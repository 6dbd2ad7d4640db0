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

#include "onefact/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/crc.hpp>

#include "onefact/canon.hpp"

namespace onefact {

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t value = 0;
  for (int i = bytes - 1; i >= 0; --i) value = (value << 8) | in[at + i];
  return value;
}

std::string hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::vector<std::uint8_t> unhex(const std::string& text) {
  if (text.size() % 2 != 0) throw FormatError("odd-length hex string");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(std::stoi(text.substr(i, 2), nullptr, 16)));
  }
  return out;
}

std::vector<int> parse_ints(std::istringstream& in) {
  std::vector<int> out;
  std::string tok;
  while (in >> tok && tok != "|") out.push_back(std::stoi(tok));
  return out;
}

std::string type_text(const AutType& t) {
  return std::to_string(t.p) + "," + std::to_string(t.f_u) + "," + std::to_string(t.f_v);
}

AutType parse_type(const std::string& text) {
  AutType t;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> t.p >> c1 >> t.f_u >> c2 >> t.f_v) || c1 != ',' || c2 != ',') {
    throw FormatError("bad type '" + text + "'");
  }
  return t;
}

}  // namespace

std::vector<std::uint8_t> encode_level(const Level& level) {
  std::vector<std::uint8_t> out{'O', 'F', '1', 'L'};
  put_le(out, kLevelFormatVersion, 2);
  put_le(out, static_cast<std::uint64_t>(level.n), 1);
  put_le(out, static_cast<std::uint64_t>(level.k), 1);
  put_le(out, level.records.size(), 8);
  for (const ClassRecord& r : level.records) {
    const auto form = form_bytes(r.form);
    out.insert(out.end(), form.begin(), form.end());
    const auto value = to_le_bytes(r.value);
    if (value.size() > 255) throw FormatError("LF value too large for a level record");
    out.push_back(static_cast<std::uint8_t>(value.size()));
    out.insert(out.end(), value.begin(), value.end());
  }
  return out;
}

Level decode_level(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16 || !std::equal(bytes.begin(), bytes.begin() + 4, "OF1L")) {
    throw FormatError("not a level file");
  }
  if (get_le(bytes, 4, 2) != kLevelFormatVersion) throw FormatError("unsupported level file version");
  Level level;
  level.n = static_cast<int>(bytes[6]);
  level.k = static_cast<int>(bytes[7]);
  if (level.n < 1 || level.n > kMaxVertices || level.k >= std::max(level.n, 1)) {
    throw FormatError("bad order or degree in level header");
  }
  const std::uint64_t count = get_le(bytes, 8, 8);
  std::size_t at = 16;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (at + 17 > bytes.size()) throw FormatError("truncated level record");
    const EdgeMask form = form_mask(bytes.subspan(at, 16));
    const std::size_t len = bytes[at + 16];
    at += 17;
    if (at + len > bytes.size()) throw FormatError("truncated LF value");
    if (len > 0 && bytes[at + len - 1] == 0) throw FormatError("non-minimal LF encoding");
    BigCount value = from_le_bytes(bytes.subspan(at, len));
    at += len;
    if (value == 0) throw FormatError("zero LF value");
    if (!level.records.empty() && !form_less(level.records.back().form, form)) {
      throw FormatError("level records out of order");
    }
    const DenseGraph g = DenseGraph::from_edge_mask(level.n, form);
    if ((form >> pair_count(level.n)) != 0 || !is_k_regular(g, level.k)) {
      throw FormatError("record is not a k-regular graph");
    }
    const DenseCanonical c = canonical_dense(g);
    if (c.form != form) throw FormatError("record form is not canonical");
    level.records.push_back({form, c.aut_order, std::move(value)});
  }
  if (at != bytes.size()) throw FormatError("trailing bytes after level records");
  return level;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string checksum_hex(std::span<const std::uint8_t> bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum() << ':' << std::dec << bytes.size();
  return os.str();
}

void write_level_file(const std::filesystem::path& path, const Level& level) {
  write_bytes_atomic(path, encode_level(level));
}

Level read_level_file(const std::filesystem::path& path) { return decode_level(read_bytes(path)); }

std::string level_file_name(int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "level_%02d.of1l", k);
  return buf;
}

std::string read_text(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  return {bytes.begin(), bytes.end()};
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  write_bytes_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string encode_seeds(const AutType& t, int n, const std::vector<SeedClass>& seeds) {
  std::ostringstream os;
  os << "onefact-seeds 1\n";
  os << "n " << n << "\n";
  os << "type " << type_text(t) << "\n";
  os << "count " << seeds.size() << "\n";
  for (const SeedClass& s : seeds) {
    os << "seed " << to_decimal(s.aut_order) << " |";
    for (int x : s.seed.group.generator) os << ' ' << x;
    os << " |";
    for (int x : s.seed.anchor) os << ' ' << x;
    os << " |";
    for (const Block& b : s.seed.blocks) os << ' ' << int(b[0]) << '.' << int(b[1]) << '.' << int(b[2]);
    os << '\n';
  }
  return os.str();
}

std::vector<SeedClass> decode_seeds(const std::string& text, AutType* type, int* n) {
  std::istringstream in(text);
  std::string line, word;
  int version = 0, order = 0;
  std::size_t count = 0;
  std::string type_str;
  if (!(in >> word >> version) || word != "onefact-seeds" || version != 1) throw FormatError("not a seed file");
  if (!(in >> word >> order) || word != "n") throw FormatError("missing order");
  if (!(in >> word >> type_str) || word != "type") throw FormatError("missing type");
  if (!(in >> word >> count) || word != "count") throw FormatError("missing count");
  const AutType t = parse_type(type_str);
  std::getline(in, line);
  std::vector<SeedClass> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string aut, bar;
    if (!(ls >> word >> aut >> bar) || word != "seed" || bar != "|") throw FormatError("bad seed line");
    Seed s;
    s.group.n = order;
    s.group.type = t;
    s.group.generator = parse_ints(ls);
    s.anchor = parse_ints(ls);
    std::string tok;
    while (ls >> tok) {
      int a, b, c;
      char d1, d2;
      std::istringstream bs(tok);
      if (!(bs >> a >> d1 >> b >> d2 >> c) || d1 != '.' || d2 != '.') throw FormatError("bad block '" + tok + "'");
      s.blocks.push_back(make_block(a, b, c));
    }
    if (!is_valid_seed(s)) throw FormatError("invalid seed in seed file");
    SeedClass cls = seed_class_of(s);
    if (cls.aut_order != from_decimal(aut)) throw FormatError("seed automorphism order mismatch");
    out.push_back(std::move(cls));
  }
  if (out.size() != count) throw FormatError("seed count mismatch");
  if (type) *type = t;
  if (n) *n = order;
  return out;
}

std::string seed_file_name(const AutType& t) {
  return "seeds_" + std::to_string(t.p) + "_" + std::to_string(t.f_u) + "_" + std::to_string(t.f_v) + ".txt";
}

std::string encode_outcomes(const std::vector<ExtensionOutcome>& outcomes) {
  std::ostringstream os;
  os << "onefact-outcomes 1\n";
  for (const ExtensionOutcome& o : outcomes) {
    os << "outcome " << type_text(o.type) << ' ' << o.seed_index << ' ' << to_decimal(o.seed_aut_order) << ' '
       << to_decimal(o.ext_count) << ' ' << o.accepted.size() << '\n';
    for (const ClassSummary& c : o.accepted) {
      os << "class " << to_decimal(c.aut_order) << ' ';
      bool first = true;
      for (const auto& [t, k] : c.prime_subgroups) {
        os << (first ? "" : ";") << type_text(t) << ':' << k;
        first = false;
      }
      if (first) os << '-';
      os << ' ' << hex(c.form) << '\n';
    }
  }
  return os.str();
}

std::vector<ExtensionOutcome> decode_outcomes(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "onefact-outcomes 1") throw FormatError("not an outcome file");
  std::vector<ExtensionOutcome> out;
  std::size_t pending = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "outcome") {
      if (pending != 0) throw FormatError("missing class lines");
      std::string type, aut, ext;
      ExtensionOutcome o;
      if (!(ls >> type >> o.seed_index >> aut >> ext >> pending)) throw FormatError("bad outcome line");
      o.type = parse_type(type);
      o.seed_aut_order = from_decimal(aut);
      o.ext_count = from_decimal(ext);
      out.push_back(std::move(o));
    } else if (word == "class") {
      if (out.empty() || pending == 0) throw FormatError("unexpected class line");
      std::string aut, subs, form;
      if (!(ls >> aut >> subs >> form)) throw FormatError("bad class line");
      ClassSummary c;
      c.aut_order = from_decimal(aut);
      c.form = unhex(form);
      if (subs != "-") {
        std::istringstream ss(subs);
        std::string item;
        while (std::getline(ss, item, ';')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw FormatError("bad subgroup entry");
          c.prime_subgroups[parse_type(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
        }
      }
      out.back().accepted.push_back(std::move(c));
      --pending;
    } else {
      throw FormatError("unknown line '" + line + "'");
    }
  }
  if (pending != 0) throw FormatError("truncated outcome file");
  return out;
}

std::vector<ExtensionOutcome> merge_outcomes(const std::vector<std::vector<ExtensionOutcome>>& parts) {
  std::map<std::pair<AutType, std::size_t>, ExtensionOutcome> merged;
  for (const auto& part : parts) {
    for (const ExtensionOutcome& o : part) {
      auto [it, fresh] = merged.try_emplace({o.type, o.seed_index}, o);
      if (fresh) continue;
      ExtensionOutcome& m = it->second;
      if (m.seed_aut_order != o.seed_aut_order) throw FormatError("inconsistent seed data across parts");
      m.ext_count += o.ext_count;
      m.accepted.insert(m.accepted.end(), o.accepted.begin(), o.accepted.end());
    }
  }
  std::vector<ExtensionOutcome> out;
  for (auto& [key, o] : merged) {
    std::sort(o.accepted.begin(), o.accepted.end(),
              [](const ClassSummary& a, const ClassSummary& b) { return a.form < b.form; });
    out.push_back(std::move(o));
  }
  return out;
}

RunManifest::RunManifest(std::filesystem::path path) : path_(std::move(path)) {}

void RunManifest::open(const std::string& header) {
  done_.clear();
  if (!std::filesystem::exists(path_)) {
    std::ofstream out(path_, std::ios::app);
    out << "run " << header << '\n';
    if (!out) throw std::runtime_error("cannot write manifest " + path_.string());
    return;
  }
  std::istringstream in(read_text(path_));
  std::string line;
  if (!std::getline(in, line) || line != "run " + header) {
    throw FormatError("manifest belongs to a different run: " + path_.string());
  }
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word, unit, sum;
    // A torn last line from an interrupted append is ignored.
    if (ls >> word >> unit >> sum && word == "unit") done_[unit] = sum;
  }
}

bool RunManifest::done(const std::string& unit) const { return done_.count(unit) > 0; }

std::string RunManifest::checksum(const std::string& unit) const {
  auto it = done_.find(unit);
  return it == done_.end() ? std::string() : it->second;
}

void RunManifest::record(const std::string& unit, const std::string& checksum) {
  std::ofstream out(path_, std::ios::app);
  out << "unit " << unit << ' ' << checksum << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot append to manifest " + path_.string());
  done_[unit] = checksum;
}

}  // namespace onefact
