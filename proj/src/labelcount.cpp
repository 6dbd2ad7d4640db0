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

#include "onefact/labelcount.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "onefact/canon.hpp"

namespace onefact {

namespace {

constexpr std::size_t kShards = 64;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::uint32_t form_hash(EdgeMask form) {
  const auto lo = static_cast<std::uint64_t>(form);
  const auto hi = static_cast<std::uint64_t>(form >> 64);
  const std::uint32_t h = static_cast<std::uint32_t>(mix64(lo ^ mix64(hi)));
  return h == 0 ? 1 : h;
}

template <class Fn>
void run_parallel(std::size_t count, int threads, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

bool form_less(EdgeMask a, EdgeMask b) {
  const auto alo = __builtin_bswap64(static_cast<std::uint64_t>(a));
  const auto blo = __builtin_bswap64(static_cast<std::uint64_t>(b));
  if (alo != blo) return alo < blo;
  return __builtin_bswap64(static_cast<std::uint64_t>(a >> 64)) <
         __builtin_bswap64(static_cast<std::uint64_t>(b >> 64));
}

const ClassRecord* Level::find(EdgeMask form) const {
  auto it = std::lower_bound(records.begin(), records.end(), form,
                             [](const ClassRecord& r, EdgeMask f) { return form_less(r.form, f); });
  if (it == records.end() || it->form != form) return nullptr;
  return &*it;
}

BigCount Level::lf_of(const DenseGraph& g) const {
  const ClassRecord* r = find(canonical_dense(g).form);
  return r ? r->value : BigCount(0);
}

Level level_zero(int n) {
  Level out;
  out.n = n;
  out.k = 0;
  out.records.push_back({0, static_cast<std::uint64_t>(factorial(n)), 1});
  return out;
}

struct LevelStore::Shard {
  mutable std::mutex mu;
  std::vector<std::uint32_t> tags;
  std::vector<EdgeMask> forms;
  std::vector<std::uint64_t> auts;
  std::vector<BigCount> values;
  std::size_t used = 0;

  explicit Shard(std::size_t capacity) { resize(capacity); }

  void resize(std::size_t capacity) {
    tags.assign(capacity, 0);
    forms.assign(capacity, 0);
    auts.assign(capacity, 0);
    values.assign(capacity, BigCount(0));
  }

  std::size_t probe(std::uint32_t tag, EdgeMask form) const {
    const std::size_t mask = tags.size() - 1;
    std::size_t i = (static_cast<std::size_t>(tag) * 0x9e3779b1U >> 7) & mask;
    while (tags[i] != 0 && !(tags[i] == tag && forms[i] == form)) i = (i + 1) & mask;
    return i;
  }

  void grow() {
    std::vector<std::uint32_t> old_tags = std::move(tags);
    std::vector<EdgeMask> old_forms = std::move(forms);
    std::vector<std::uint64_t> old_auts = std::move(auts);
    std::vector<BigCount> old_values = std::move(values);
    resize(old_tags.size() * 2);
    for (std::size_t j = 0; j < old_tags.size(); ++j) {
      if (old_tags[j] == 0) continue;
      const std::size_t i = probe(old_tags[j], old_forms[j]);
      tags[i] = old_tags[j];
      forms[i] = old_forms[j];
      auts[i] = old_auts[j];
      values[i] = std::move(old_values[j]);
    }
  }
};

LevelStore::LevelStore(int n, int k, std::size_t expected_records) : n_(n), k_(k) {
  std::size_t per_shard = 16;
  while (per_shard * kShards * 7 / 10 < expected_records) per_shard *= 2;
  for (std::size_t s = 0; s < kShards; ++s) shards_.push_back(std::make_unique<Shard>(per_shard));
}

LevelStore::~LevelStore() = default;

LevelStore::Shard& LevelStore::shard_for(std::uint32_t hash) const {
  return *shards_[hash % kShards];
}

std::size_t LevelStore::size() const {
  std::size_t total = 0;
  for (const auto& s : shards_) {
    std::lock_guard lock(s->mu);
    total += s->used;
  }
  return total;
}

void LevelStore::add(EdgeMask form, std::uint64_t aut_order, const BigCount& amount) {
  const std::uint32_t tag = form_hash(form);
  Shard& s = shard_for(tag);
  std::lock_guard lock(s.mu);
  std::size_t i = s.probe(tag, form);
  if (s.tags[i] == 0) {
    if ((s.used + 1) * 10 > s.tags.size() * 7) {
      s.grow();
      i = s.probe(tag, form);
    }
    s.tags[i] = tag;
    s.forms[i] = form;
    s.auts[i] = aut_order;
    ++s.used;
  }
  s.values[i] += amount;
}

std::optional<BigCount> LevelStore::accumulator(EdgeMask form) const {
  const std::uint32_t tag = form_hash(form);
  const Shard& s = shard_for(tag);
  std::lock_guard lock(s.mu);
  const std::size_t i = s.probe(tag, form);
  if (s.tags[i] == 0) return std::nullopt;
  return s.values[i];
}

Level LevelStore::finalize() && {
  Level out;
  out.n = n_;
  out.k = k_;
  const BigCount n_fact = factorial(n_);
  for (auto& shard : shards_) {
    for (std::size_t i = 0; i < shard->tags.size(); ++i) {
      if (shard->tags[i] == 0) continue;
      BigCount scaled = exact_div(shard->values[i] * shard->auts[i], n_fact);
      out.records.push_back({shard->forms[i], shard->auts[i], exact_div(scaled, k_)});
    }
    shard.reset();
  }
  shards_.clear();
  std::sort(out.records.begin(), out.records.end(),
            [](const ClassRecord& a, const ClassRecord& b) { return form_less(a.form, b.form); });
  return out;
}

Level forward_accumulate_level(const Level& prev, const AccumulateOptions& options) {
  const int n = prev.n;
  if (prev.k + 1 > n - 1) throw std::invalid_argument("level is already complete");
  LevelStore store(n, prev.k + 1, prev.records.size() * 4);
  const BigCount n_fact = factorial(n);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  run_parallel(prev.records.size(), options.threads, [&](std::size_t idx) {
    const ClassRecord& rec = prev.records[idx];
    const DenseGraph h = DenseGraph::from_edge_mask(n, rec.form);
    const BigCount weight = exact_div(n_fact, rec.aut_order) * rec.value;
    for_each_one_factor(complement(h), std::nullopt, [&](const OneFactor& f) {
      const DenseCanonical c = canonical_dense(union_with_factor(h, f));
      store.add(c.form, c.aut_order, weight);
    });
    const std::size_t finished = ++done;
    if (options.progress) {
      std::lock_guard lock(progress_mu);
      options.progress(finished);
    }
  });
  return std::move(store).finalize();
}

DgmReport verify_dgm_level(const Level& level, const Level& below, int threads) {
  DgmReport report;
  std::mutex mu;
  run_parallel(level.records.size(), threads, [&](std::size_t idx) {
    const ClassRecord& rec = level.records[idx];
    const DenseGraph g = DenseGraph::from_edge_mask(level.n, rec.form);
    BigCount sum = 0;
    if (auto e = first_edge(g)) {
      for_each_one_factor(g, e, [&](const OneFactor& f) { sum += below.lf_of(remove_factor(g, f)); });
    } else {
      sum = 1;
    }
    if (sum != rec.value) {
      std::lock_guard lock(mu);
      report.ok = false;
      report.mismatches.push_back(rec.form);
    }
  });
  std::sort(report.mismatches.begin(), report.mismatches.end(), form_less);
  return report;
}

BigCount verify_mitm(const Level& level, const Level& complementary) {
  const int n = level.n;
  if (complementary.n != n || level.k + complementary.k != n - 1) {
    throw std::invalid_argument("levels are not complementary");
  }
  const BigCount n_fact = factorial(n);
  BigCount sum = 0;
  for (const ClassRecord& rec : level.records) {
    const DenseGraph g = DenseGraph::from_edge_mask(n, rec.form);
    sum += exact_div(n_fact, rec.aut_order) * rec.value * complementary.lf_of(complement(g));
  }
  return exact_div(sum, binomial(n - 1, level.k));
}

BigCount labeled_total(const Level& level) {
  const BigCount n_fact = factorial(level.n);
  BigCount sum = 0;
  for (const ClassRecord& rec : level.records) sum += exact_div(n_fact, rec.aut_order) * rec.value;
  return sum;
}

std::vector<BigCount> distinct_factorization_table(const std::vector<Level>& levels) {
  std::vector<BigCount> out;
  out.reserve(levels.size());
  for (const Level& level : levels) out.push_back(labeled_total(level));
  return out;
}

}  // namespace onefact
