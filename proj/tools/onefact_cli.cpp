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

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "onefact/autotypes.hpp"
#include "onefact/census.hpp"
#include "onefact/extender.hpp"
#include "onefact/io.hpp"
#include "onefact/labelcount.hpp"
#include "onefact/seedgen.hpp"

namespace fs = std::filesystem;
using namespace onefact;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

AutType parse_type_arg(const std::string& text) {
  AutType t;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> t.p >> c1 >> t.f_u >> c2 >> t.f_v) || c1 != ',' || c2 != ',') {
    throw CLI::ValidationError("--type", "expected p,fU,fV");
  }
  return t;
}

std::string type_tag(const AutType& t) {
  return std::to_string(t.p) + "_" + std::to_string(t.f_u) + "_" + std::to_string(t.f_v);
}

// Loads a level file if the manifest vouches for it, otherwise returns nullopt.
std::optional<Level> load_checked(const fs::path& dir, RunManifest& manifest, int k) {
  const std::string unit = "level" + std::to_string(k);
  const fs::path file = dir / level_file_name(k);
  if (!manifest.done(unit) || !fs::exists(file)) return std::nullopt;
  const auto bytes = read_bytes(file);
  if (checksum_hex(bytes) != manifest.checksum(unit)) {
    std::cerr << "level " << k << ": checksum mismatch, recomputing\n";
    return std::nullopt;
  }
  return decode_level(bytes);
}

std::vector<Level> build_levels(int n, int max_level, int threads, const std::optional<fs::path>& dir, bool quiet) {
  std::optional<RunManifest> manifest;
  if (dir) {
    fs::create_directories(*dir);
    manifest.emplace(*dir / "manifest.txt");
    manifest->open("count-labeled n=" + std::to_string(n));
  }
  std::vector<Level> levels{level_zero(n)};
  for (int k = 1; k <= max_level; ++k) {
    if (manifest) {
      if (auto loaded = load_checked(*dir, *manifest, k)) {
        if (!quiet) std::cerr << "level " << k << ": " << loaded->records.size() << " classes (resumed)\n";
        levels.push_back(std::move(*loaded));
        continue;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    AccumulateOptions opts;
    opts.threads = threads;
    if (!quiet) {
      const std::size_t total = levels.back().records.size();
      opts.progress = [k, total](std::size_t done) {
        if (done % 100000 == 0) std::cerr << "level " << k << ": " << done << "/" << total << " sources\n";
      };
    }
    levels.push_back(forward_accumulate_level(levels.back(), opts));
    if (!quiet) {
      std::cerr << "level " << k << ": " << levels.back().records.size() << " classes in " << seconds_since(start)
                << " s\n";
    }
    if (manifest) {
      const auto bytes = encode_level(levels.back());
      write_bytes_atomic(*dir / level_file_name(k), bytes);
      manifest->record("level" + std::to_string(k), checksum_hex(bytes));
    }
  }
  return levels;
}

std::vector<std::optional<Level>> read_levels(const fs::path& dir, int& n) {
  std::vector<std::optional<Level>> levels;
  n = 0;
  for (int k = 0; k < kMaxVertices; ++k) {
    const fs::path file = dir / level_file_name(k);
    if (k == 0 || !fs::exists(file)) {
      levels.emplace_back();
      continue;
    }
    Level level = read_level_file(file);
    if (n != 0 && level.n != n) throw FormatError("level files of different orders in " + dir.string());
    if (level.k != k) throw FormatError("level file " + file.string() + " has the wrong degree");
    n = level.n;
    levels.emplace_back(std::move(level));
  }
  if (n == 0) throw std::runtime_error("no level files in " + dir.string());
  levels[0] = level_zero(n);
  levels.resize(n);
  return levels;
}

BigCount lf_of_complete(int n, const std::string& lf_text, const std::optional<fs::path>& levels_dir) {
  if (!lf_text.empty()) return from_decimal(lf_text);
  if (levels_dir) {
    const fs::path file = *levels_dir / level_file_name(n - 1);
    if (fs::exists(file)) {
      const Level top = read_level_file(file);
      if (top.n == n && top.records.size() == 1) return top.records[0].value;
    }
  }
  std::cerr << "computing LF(K_" << n << ") from scratch\n";
  return build_levels(n, n - 1, 1, std::nullopt, true).back().records.at(0).value;
}

void write_reports(int n, const BigCount& lf, const std::vector<ExtensionOutcome>& outcomes, const fs::path& out_dir) {
  const auto nontrivial = tally_outcomes(outcomes);
  const CensusResult census = solve_census(CensusInput{n, lf, nontrivial});
  const std::string report = census_report(census, nontrivial);
  write_text_atomic(out_dir / "census.txt", report);
  write_text_atomic(out_dir / "double_count.txt", double_count_report(n, outcomes));
  std::cout << report;
}

int cmd_count_labeled(int n, const std::string& levels_dir, int threads, int max_level) {
  if (max_level < 0 || max_level > n - 1) max_level = n - 1;
  std::optional<fs::path> dir;
  if (!levels_dir.empty()) dir = levels_dir;
  const auto levels = build_levels(n, max_level, threads, dir, false);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    std::cout << "level " << k << " classes " << levels[k].records.size() << " labeled "
              << to_decimal(labeled_total(levels[k])) << "\n";
  }
  if (max_level == n - 1) std::cout << "LF(K_" << n << ") = " << to_decimal(levels.back().records.at(0).value) << "\n";
  return 0;
}

int cmd_verify(const std::string& levels_dir, const std::string& mode, int threads) {
  int n = 0;
  const auto levels = read_levels(levels_dir, n);
  bool ok = true;
  if (mode == "dgm") {
    for (int k = 1; k < n; ++k) {
      if (!levels[k] || !levels[k - 1]) continue;
      const DgmReport r = verify_dgm_level(*levels[k], *levels[k - 1], threads);
      std::cout << "dgm level " << k << (r.ok ? " ok" : " MISMATCH") << " (" << r.mismatches.size()
                << " mismatched classes)\n";
      ok = ok && r.ok;
    }
  } else if (mode == "mitm") {
    std::optional<BigCount> reference;
    if (levels[n - 1]) reference = levels[n - 1]->records.at(0).value;
    for (int k = 0; k < n; ++k) {
      if (!levels[k] || !levels[n - 1 - k]) continue;
      const BigCount value = verify_mitm(*levels[k], *levels[n - 1 - k]);
      if (!reference) reference = value;
      const bool match = value == *reference;
      std::cout << "mitm k=" << k << " " << to_decimal(value) << (match ? " ok" : " MISMATCH") << "\n";
      ok = ok && match;
    }
  } else if (mode == "table") {
    for (int k = 1; k < n; ++k) {
      if (levels[k]) std::cout << k << " " << to_decimal(labeled_total(*levels[k])) << "\n";
    }
  } else {
    throw CLI::ValidationError("--mode", "expected dgm, mitm or table");
  }
  return ok ? 0 : 1;
}

struct ClassifyArgs {
  int n = 0;
  std::string out_dir;
  std::string type;
  bool seeds_only = false;
  int split_depth = -1;
  std::string worker = "0/1";
  bool reverse = false;
  std::string lf;
  std::string levels_dir;
};

int cmd_classify(const ClassifyArgs& a) {
  const fs::path out_dir = a.out_dir;
  fs::create_directories(out_dir);
  SolveOptions opts;
  opts.split_depth = a.split_depth;
  opts.reverse = a.reverse;
  {
    char slash = 0;
    std::istringstream in(a.worker);
    if (!(in >> opts.worker >> slash >> opts.workers) || slash != '/' || opts.workers < 1 || opts.worker < 0 ||
        opts.worker >= opts.workers) {
      throw CLI::ValidationError("--worker", "expected i/m with 0 <= i < m");
    }
    if (opts.workers > 1 && opts.split_depth < 0) opts.split_depth = 2;
  }
  std::vector<AutType> types = admissible_types(a.n);
  if (!a.type.empty()) {
    const AutType t = parse_type_arg(a.type);
    if (auto rule = rejection(a.n, t)) {
      std::cerr << "type " << a.type << " is not admissible: " << rule_name(*rule) << "\n";
      return 2;
    }
    types = {t};
  }
  const std::string worker_tag = opts.workers > 1 ? ".w" + std::to_string(opts.worker) + "of" +
                                                        std::to_string(opts.workers)
                                                  : "";
  RunManifest manifest(out_dir / ("manifest" + worker_tag + ".txt"));
  manifest.open("classify n=" + std::to_string(a.n) + " split=" + std::to_string(opts.split_depth) +
                " reverse=" + std::to_string(a.reverse));

  std::vector<ExtensionOutcome> all;
  for (const AutType& t : types) {
    const fs::path seed_file = out_dir / seed_file_name(t);
    std::vector<SeedClass> seeds;
    const std::string seed_unit = "seeds_" + type_tag(t);
    if (manifest.done(seed_unit) && fs::exists(seed_file)) {
      const std::string text = read_text(seed_file);
      const auto bytes = std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
      if (checksum_hex(bytes) == manifest.checksum(seed_unit)) seeds = decode_seeds(text);
    }
    if (seeds.empty()) {
      const auto start = std::chrono::steady_clock::now();
      seeds = classify_seeds(t, a.n);
      const std::string text = encode_seeds(t, a.n, seeds);
      write_text_atomic(seed_file, text);
      manifest.record(seed_unit, checksum_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                                        text.size())));
      std::cerr << "type " << type_tag(t) << ": " << seeds.size() << " seeds in " << seconds_since(start) << " s\n";
    }
    std::cout << "seeds " << t.p << "," << t.f_u << "," << t.f_v << " " << seeds.size() << "\n";
    if (a.seeds_only) continue;

    const fs::path outcome_file = out_dir / ("outcomes_" + type_tag(t) + worker_tag + ".txt");
    const std::string ext_unit = "extend_" + type_tag(t);
    std::vector<ExtensionOutcome> outcomes;
    bool resumed = false;
    if (manifest.done(ext_unit) && fs::exists(outcome_file)) {
      const std::string text = read_text(outcome_file);
      const auto bytes = std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
      if (checksum_hex(bytes) == manifest.checksum(ext_unit)) {
        outcomes = decode_outcomes(text);
        resumed = true;
      }
    }
    if (!resumed) {
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t i = 0; i < seeds.size(); ++i) outcomes.push_back(extend_seed(seeds[i], i, opts));
      const std::string text = encode_outcomes(outcomes);
      write_text_atomic(outcome_file, text);
      manifest.record(ext_unit, checksum_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                                       text.size())));
      std::cerr << "type " << type_tag(t) << ": extended in " << seconds_since(start) << " s\n";
    }
    all.insert(all.end(), outcomes.begin(), outcomes.end());
  }
  if (a.seeds_only || opts.workers > 1 || !a.type.empty()) return 0;
  std::optional<fs::path> levels_dir;
  if (!a.levels_dir.empty()) levels_dir = a.levels_dir;
  write_reports(a.n, lf_of_complete(a.n, a.lf, levels_dir), all, out_dir);
  return 0;
}

int cmd_merge(int n, const std::vector<std::string>& inputs, const std::string& out_dir, const std::string& lf,
              const std::string& levels_dir) {
  std::vector<std::vector<ExtensionOutcome>> parts;
  for (const auto& file : inputs) parts.push_back(decode_outcomes(read_text(file)));
  const auto merged = merge_outcomes(parts);
  fs::create_directories(out_dir);
  write_text_atomic(fs::path(out_dir) / "outcomes_merged.txt", encode_outcomes(merged));
  std::optional<fs::path> dir;
  if (!levels_dir.empty()) dir = levels_dir;
  write_reports(n, lf_of_complete(n, lf, dir), merged, out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and classifying one-factorizations of complete graphs"};
  app.require_subcommand(1);

  int n = 0;
  std::string levels_dir;
  int threads = 1;
  int max_level = -1;
  auto* count = app.add_subcommand("count-labeled", "Count labeled one-factorizations level by level");
  count->add_option("--n", n, "Order of the complete graph")->required()->check(CLI::IsMember({2, 4, 6, 8, 10, 12, 14}));
  count->add_option("--levels-dir", levels_dir, "Directory for level files and the run manifest");
  count->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  count->add_option("--max-level", max_level, "Stop after this degree");

  std::string mode = "dgm";
  auto* verify = app.add_subcommand("verify", "Cross-check stored level files");
  verify->add_option("--levels-dir", levels_dir, "Directory holding level files")->required();
  verify->add_option("--mode", mode, "dgm, mitm or table");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify one-factorizations with nontrivial automorphisms");
  classify->add_option("--n", ca.n, "Order of the complete graph")->required()->check(CLI::IsMember({4, 6, 8, 10, 12, 14}));
  classify->add_option("--out-dir", ca.out_dir, "Output directory")->required();
  classify->add_option("--type", ca.type, "Restrict to one automorphism type p,fU,fV");
  classify->add_flag("--seeds-only", ca.seeds_only, "Stop after writing seed files");
  classify->add_option("--split-depth", ca.split_depth, "Search depth at which work is split between workers");
  classify->add_option("--worker", ca.worker, "This worker's share, as i/m");
  classify->add_flag("--reverse", ca.reverse, "Try exact cover options in reverse order");
  classify->add_option("--lf", ca.lf, "LF(K_n) in decimal for the census");
  classify->add_option("--levels-dir", ca.levels_dir, "Read LF(K_n) from a stored top level");

  std::vector<std::string> inputs;
  std::string out_dir, lf;
  auto* merge = app.add_subcommand("merge", "Merge worker outcome files and write the census");
  merge->add_option("--n", n, "Order of the complete graph")->required();
  merge->add_option("--out-dir", out_dir, "Output directory")->required();
  merge->add_option("--lf", lf, "LF(K_n) in decimal");
  merge->add_option("--levels-dir", levels_dir, "Read LF(K_n) from a stored top level");
  merge->add_option("inputs", inputs, "Outcome files")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*count) return cmd_count_labeled(n, levels_dir, threads, max_level);
    if (*verify) return cmd_verify(levels_dir, mode, threads);
    if (*classify) return cmd_classify(ca);
    if (*merge) return cmd_merge(n, inputs, out_dir, lf, levels_dir);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
