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

// Acceptance checks. Prints one PASS/FAIL line per criterion. Exits nonzero
// when a computed value disagrees with its reference; a criterion that could
// only be partly checked at desk scale prints FAIL with the reason but does
// not change the exit status.
//
// Usage: acceptance [--levels-dir DIR] [--only N]
//   DIR holds level files of an extended n = 14 count-labeled run.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "onefact/autotypes.hpp"
#include "onefact/census.hpp"
#include "onefact/extender.hpp"
#include "onefact/io.hpp"
#include "onefact/labelcount.hpp"
#include "onefact/regular.hpp"
#include "oracles.hpp"

using namespace onefact;
namespace fs = std::filesystem;

namespace {

// Exact comparisons throughout; the only tolerances are wall-clock limits.
constexpr double kMaxSecondsN8 = 10;
constexpr double kMaxSecondsN10 = 600;
constexpr double kMaxSecondsN12 = 3 * 3600;
constexpr double kMaxSecondsSeeds14 = 3 * 3600;
constexpr int kRelabelingsPerSize = 1000;

enum class Status { kPass, kFail, kIncomplete };

struct Verdict {
  Status status = Status::kPass;
  std::string detail;
};

struct Context {
  fs::path work;
  std::optional<fs::path> levels14;
};

struct Run {
  int exit_code = 0;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(ONEFACT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::string value_after(const std::string& text, const std::string& prefix) {
  for (const auto& line : lines_of(text))
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return "";
}

void fail(Verdict& v, const std::string& why) {
  v.status = Status::kFail;
  v.detail += (v.detail.empty() ? "" : "; ") + why;
}

void note(Verdict& v, const std::string& what) { v.detail += (v.detail.empty() ? "" : "; ") + what; }

// MITM lines "mitm k=.. <value> ok"; all must agree with `expected`.
void check_mitm(Verdict& v, const Run& r, int n, const std::string& expected) {
  const auto lines = lines_of(r.out);
  int agreeing = 0;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string tag, k, value;
    in >> tag >> k >> value;
    if (tag == "mitm" && value == expected) ++agreeing;
  }
  if (r.exit_code != 0 || agreeing != n) {
    fail(v, "meet-in-the-middle agrees for " + std::to_string(agreeing) + "/" + std::to_string(n) + " values of k");
  } else {
    note(v, "meet-in-the-middle equal for all " + std::to_string(n) + " k");
  }
}

void check_runtime(Verdict& v, double seconds, double limit) {
  if (seconds > limit) fail(v, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
}

Verdict criterion1(const Context& ctx) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = ctx.work / "n8";
  const Run count = run_cli("count-labeled --n 8 --levels-dir " + (dir / "levels").string());
  const Run classify =
      run_cli("classify --n 8 --out-dir " + (dir / "classify").string() + " --levels-dir " + (dir / "levels").string());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string lf = value_after(count.out, "LF(K_8) = ");
  const std::string oracle = to_decimal(count_labeled_factorizations_bruteforce(DenseGraph::complete(8)));
  if (count.exit_code != 0 || lf != oracle) fail(v, "LF(K_8) = " + lf + ", exhaustive count " + oracle);
  else note(v, "LF(K_8) = " + lf + " matches exhaustive count");
  const std::string total = value_after(classify.out, "total ");
  if (classify.exit_code != 0 || total != "6") fail(v, "NF(K_8) = " + total + ", expected 6");
  else note(v, "NF(K_8) = 6");
  check_runtime(v, secs, kMaxSecondsN8);
  return v;
}

Verdict criterion2(const Context& ctx) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = ctx.work / "n10";
  const std::string levels = (dir / "levels").string();
  const Run count = run_cli("count-labeled --n 10 --levels-dir " + levels);
  const std::string lf = value_after(count.out, "LF(K_10) = ");
  check_mitm(v, run_cli("verify --mode mitm --levels-dir " + levels), 10, lf);
  const Run classify = run_cli("classify --n 10 --out-dir " + (dir / "classify").string() + " --levels-dir " + levels);
  const std::string total = value_after(classify.out, "total ");
  if (classify.exit_code != 0 || total != "396") fail(v, "NF(K_10) = " + total + ", expected 396");
  else note(v, "NF(K_10) = 396");
  std::ifstream dc(dir / "classify" / "double_count.txt");
  std::string line;
  std::size_t ok = 0, rows = 0;
  while (std::getline(dc, line)) {
    ++rows;
    ok += line.size() >= 3 && line.compare(line.size() - 3, 3, " ok") == 0;
  }
  if (rows != admissible_types(10).size() || ok != rows) {
    fail(v, "double count holds for " + std::to_string(ok) + "/" + std::to_string(rows) + " types");
  } else {
    note(v, "double count holds for all " + std::to_string(rows) + " types");
  }
  check_runtime(v, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), kMaxSecondsN10);
  return v;
}

Verdict criterion3(const Context& ctx) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const std::string levels = (ctx.work / "n12" / "levels").string();
  const Run count = run_cli("count-labeled --n 12 --levels-dir " + levels);
  const std::string lf = value_after(count.out, "LF(K_12) = ");
  if (count.exit_code != 0 || lf.empty()) fail(v, "forward accumulation failed");
  const Run dgm = run_cli("verify --mode dgm --levels-dir " + levels);
  int dgm_ok = 0;
  for (const auto& line : lines_of(dgm.out)) dgm_ok += line.find(" ok ") != std::string::npos;
  if (dgm.exit_code != 0 || dgm_ok != 11) fail(v, "DGM recurrence holds on " + std::to_string(dgm_ok) + "/11 levels");
  else note(v, "DGM recurrence holds on all 11 levels");
  check_mitm(v, run_cli("verify --mode mitm --levels-dir " + levels), 12, lf);
  note(v, "LF(K_12) = " + lf);
  check_runtime(v, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), kMaxSecondsN12);
  return v;
}

Verdict criterion4(const Context& ctx) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const Run r = run_cli("classify --n 14 --seeds-only --out-dir " + (ctx.work / "n14").string());
  const std::map<std::string, std::string> expected{
      {"2,1,2", "2579"}, {"2,3,0", "695"}, {"2,3,4", "10256"}, {"2,5,0", "894"}, {"2,5,6", "1206"},
      {"2,7,0", "447"},  {"3,1,2", "65"},  {"5,3,4", "8"},     {"7,6,0", "9"},   {"13,0,1", "14"}};
  std::map<std::string, std::string> got;
  for (const auto& line : lines_of(r.out)) {
    std::istringstream in(line);
    std::string tag, type, count;
    if (in >> tag >> type >> count && tag == "seeds") got[type] = count;
  }
  if (r.exit_code != 0 || got != expected) {
    std::string seen;
    for (const auto& [t, c] : got) seen += " " + t + ":" + c;
    fail(v, "seed counts" + seen);
  } else {
    note(v, "seed counts match for all 10 types");
  }
  check_runtime(v, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
                kMaxSecondsSeeds14);
  return v;
}

Verdict criterion5(const Context& ctx) {
  Verdict v;
  const std::vector<std::size_t> classes{1,        1,        4,       504,   87977, 3459360, 21609293,
                                         21609301, 3459386, 88193, 540,   13,    1,       1};
  const std::vector<std::string> table{
      "", "135135", "5338373040", "78634135419840", "461142306338313600", "1078882420304271623040",
      "972197327694773750169600", "315828427387711768964628480", "33491835583595013396417085440",
      "1006698095378044123991615078400", "7024525682952576878777802424320", "8573318527281503086919968358400",
      "1283862525618838460637401579520", "98758655816833727741338583040"};
  const int n = 14;
  std::vector<bool> verified(n, false);

  // (13)!! perfect matchings of K_14, each the single factorization of itself.
  BigCount double_factorial = 1;
  for (int i = 13; i > 1; i -= 2) double_factorial *= i;
  if (to_decimal(double_factorial) != table[1]) fail(v, "13!! differs from the k = 1 row");

  // Low degrees by forward accumulation.
  int table_rows = 0;
  std::vector<Level> levels{level_zero(n)};
  for (int k = 1; k <= 4; ++k) levels.push_back(forward_accumulate_level(levels.back()));
  for (int k = 0; k <= 4; ++k) {
    if (levels[k].records.size() != classes[k]) fail(v, "k=" + std::to_string(k) + " class count");
    else verified[k] = true;
    if (k >= 1) {
      if (to_decimal(labeled_total(levels[k])) != table[k]) fail(v, "k=" + std::to_string(k) + " table row");
      else ++table_rows;
    }
  }

  // High degrees as complements of low-degree regular graphs.
  for (int k = 0; k <= 4; ++k) {
    std::size_t count = 0;
    for (EdgeMask form : regular_graph_classes(n, k)) {
      count += is_one_factorizable(complement(DenseGraph::from_edge_mask(n, form)));
    }
    if (count != classes[n - 1 - k]) fail(v, "k=" + std::to_string(n - 1 - k) + " class count");
    else verified[n - 1 - k] = true;
  }

  // Middle degrees only from stored level files of an extended run.
  if (ctx.levels14) {
    for (int k = 5; k < n; ++k) {
      const fs::path file = *ctx.levels14 / level_file_name(k);
      if (!fs::exists(file)) continue;
      const Level level = read_level_file(file);
      if (level.n != n || level.k != k) {
        fail(v, file.string() + " is not an n=14 level file of degree " + std::to_string(k));
        continue;
      }
      if (level.records.size() != classes[k]) fail(v, "k=" + std::to_string(k) + " class count in level file");
      else verified[k] = true;
      if (to_decimal(labeled_total(level)) != table[k]) fail(v, "k=" + std::to_string(k) + " table row in level file");
      else ++table_rows;
      if (k == n - 1 && to_decimal(level.records.at(0).value) != table[13]) fail(v, "LF(K_14)");
    }
  }
  std::string done, missing;
  for (int k = 0; k < n; ++k) (verified[k] ? done : missing) += " " + std::to_string(k);
  note(v, "class counts verified for k =" + done + "; " + std::to_string(table_rows) + " labeled-total rows verified");
  if (v.status == Status::kPass && !missing.empty()) {
    v.status = Status::kIncomplete;
    note(v, "k =" + missing + " need the extended level run (pass --levels-dir)");
  }
  return v;
}

Factorization rotational(int n) {
  const int m = n - 1;
  std::vector<OneFactor> factors;
  for (int i = 0; i < m; ++i) {
    std::vector<VertexPair> pairs{{i, m}};
    for (int j = 1; j <= (m - 1) / 2; ++j) pairs.emplace_back((i - j + m) % m, (i + j) % m);
    factors.push_back(OneFactor::from_pairs(n, pairs));
  }
  return Factorization::from_graphical(factors);
}

Verdict criterion6(const Context&) {
  Verdict v;
  std::mt19937_64 rng(20261016);

  // (a) Canonical labeling invariance, plain graphs of every order and
  // one-factorizations of every even order.
  int relabel_failures = 0;
  for (int n = 1; n <= kMaxVertices; ++n) {
    const DenseGraph g = testing::random_graph(n, 0.5, rng);
    const DenseCanonical base = canonical_dense(g);
    for (int t = 0; t < kRelabelingsPerSize; ++t) {
      const DenseCanonical c = canonical_dense(g.permuted(testing::random_permutation(n, rng)));
      relabel_failures += c.form != base.form || c.aut_order != base.aut_order;
    }
  }
  for (int n = 4; n <= kMaxVertices; n += 2) {
    // A random factorization: the rotational one with its factors mixed.
    Factorization x = rotational(n);
    {
      std::vector<int> perm = testing::random_permutation(n - 1, rng);
      for (int i = 0; i < n; ++i) perm.push_back(n - 1 + i);
      x = Factorization(n, permute_blocks(x.blocks(), perm));
    }
    const CanonicalResult base = canonicalize_factorization(n, x.blocks());
    for (int t = 0; t < kRelabelingsPerSize; ++t) {
      std::vector<int> perm = testing::random_permutation(n - 1, rng);
      for (int i : testing::random_permutation(n, rng)) perm.push_back(n - 1 + i);
      const Factorization y(n, permute_blocks(x.blocks(), perm));
      const CanonicalResult c = canonicalize_factorization(n, y.blocks());
      relabel_failures += c.canonical_form != base.canonical_form || c.aut_order != base.aut_order;
    }
  }
  if (relabel_failures) fail(v, std::to_string(relabel_failures) + " relabelings changed the canonical form");
  else note(v, "(a) canonical forms stable under " + std::to_string(kRelabelingsPerSize) + " relabelings per size");

  // (b) Every exact-cover solution is a one-factorization containing its seed.
  std::uint64_t solutions = 0, invalid = 0;
  for (int n : {6, 8, 10}) {
    for (const AutType& t : admissible_types(n)) {
      for (const SeedClass& s : classify_seeds(t, n)) {
        solve_cover(build_cover_instance(s.seed), [&](const std::vector<Block>& blocks) {
          ++solutions;
          if (!blocks_are_consistent(n, blocks, true) ||
              static_cast<int>(blocks.size()) != block_count(n) ||
              !std::includes(blocks.begin(), blocks.end(), s.seed.blocks.begin(), s.seed.blocks.end())) {
            ++invalid;
          }
        });
      }
    }
  }
  if (invalid) fail(v, std::to_string(invalid) + " invalid cover solutions");
  else note(v, "(b) all " + std::to_string(solutions) + " cover solutions are factorizations");

  // (c) Accepted classes against exhaustive classification.
  for (int n : {6, 8, 10}) {
    std::map<std::vector<std::uint8_t>, BigCount> accepted;
    for (const ExtensionOutcome& o : classify_symmetric(n).outcomes)
      for (const ClassSummary& c : o.accepted) accepted.emplace(c.form, c.aut_order);
    const auto brute = testing::brute_symmetric_classes(n);
    if (accepted != brute) {
      fail(v, "n=" + std::to_string(n) + ": " + std::to_string(accepted.size()) + " accepted vs " +
                  std::to_string(brute.size()) + " exhaustive");
    }
  }
  if (v.status == Status::kPass) note(v, "(c) symmetric classes match exhaustive search for n = 6, 8, 10");

  // (d) Census from the published group-order counts.
  const std::vector<std::pair<int, long long>> rows{
      {2, 10300646080}, {3, 4497762}, {4, 104560}, {5, 2742}, {6, 9247}, {8, 1790}, {10, 168}, {12, 76},
      {13, 10},         {16, 109},    {21, 1},     {24, 3},   {32, 13},  {39, 3},  {42, 2},  {48, 1},
      {64, 3},          {84, 1},      {156, 1},    {192, 1}};
  CensusInput in;
  in.n = 14;
  in.lf_kn = from_decimal("98758655816833727741338583040");
  for (auto [i, c] : rows) in.nontrivial[i] = c;
  const CensusResult r = solve_census(in);
  const bool round_trip = census_omega(gamma_order(14), r.n1, in.nontrivial) == factorial(13) * in.lf_kn;
  if (to_decimal(r.n1) != "1132835411296799774" || to_decimal(r.total) != "1132835421602062347" || !round_trip) {
    fail(v, "census gives N1 = " + to_decimal(r.n1) + ", total " + to_decimal(r.total));
  } else {
    note(v, "(d) census total 1132835421602062347");
  }
  return v;
}

Verdict criterion7(const Context&) {
  Verdict v;
  const std::vector<AutType> expected{{2, 1, 2}, {2, 3, 0}, {2, 3, 4}, {2, 5, 0}, {2, 5, 6},
                                      {2, 7, 0}, {3, 1, 2}, {5, 3, 4}, {7, 6, 0}, {13, 0, 1}};
  if (admissible_types(14) != expected) fail(v, "admissible types differ");
  std::map<std::string, int> by_rule;
  for (const AutType& t : candidate_types(14)) {
    if (auto r = rejection(14, t)) ++by_rule[std::string(rule_name(*r))];
  }
  std::string summary;
  for (const auto& [rule, count] : by_rule) summary += " " + rule + ":" + std::to_string(count);
  const bool lemmas = !passes_fixed_subfactorization(14, {2, 3, 2}) && !passes_fixed_vertex_bound(14, {2, 7, 8}) &&
                      !passes_involution_factor_bound(14, {2, 9, 0}) &&
                      !passes_involution_single_factor(14, {2, 1, 0});
  if (!lemmas) fail(v, "a lemma check accepts a type it must reject");
  note(v, "10 types; rejections" + summary);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--levels-dir" && i + 1 < argc) ctx.levels14 = fs::path(argv[++i]);
    else if (arg == "--only" && i + 1 < argc) only = std::stoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--levels-dir DIR] [--only N]\n";
      return 2;
    }
  }
  ctx.work = fs::temp_directory_path() / ("onefact_acceptance_" + std::to_string(getpid()));
  fs::remove_all(ctx.work);
  fs::create_directories(ctx.work);

  const std::vector<std::function<Verdict(const Context&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                                       criterion5, criterion6, criterion7};
  bool mismatch = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != static_cast<int>(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i](ctx);
    } catch (const std::exception& e) {
      v = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    mismatch = mismatch || v.status == Status::kFail;
    std::printf("criterion %zu: %s (%.1f s) %s\n", i + 1, v.status == Status::kPass ? "PASS" : "FAIL", secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(ctx.work);
  return mismatch ? 1 : 0;
}
