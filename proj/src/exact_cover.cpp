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

#include "onefact/exact_cover.hpp"

#include <limits>
#include <stdexcept>

namespace onefact {

ExactCover::ExactCover(int items) : items_(items) {
  if (items < 0) throw std::invalid_argument("negative item count");
  const int nodes = items + 1;
  left_.resize(nodes);
  right_.resize(nodes);
  up_.resize(nodes);
  down_.resize(nodes);
  column_.resize(nodes);
  option_of_.assign(nodes, -1);
  size_.assign(nodes, 0);
  for (int i = 0; i < nodes; ++i) {
    left_[i] = (i + nodes - 1) % nodes;
    right_[i] = (i + 1) % nodes;
    up_[i] = down_[i] = column_[i] = i;
  }
}

int ExactCover::add_option(std::span<const int> items) {
  if (items.empty()) throw std::invalid_argument("empty option");
  const int id = option_count();
  const int first = static_cast<int>(left_.size());
  option_start_.push_back(first);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const int item = items[k];
    if (item < 0 || item >= items_) throw std::out_of_range("item out of range");
    const int c = item + 1;
    for (std::size_t j = 0; j < k; ++j)
      if (items[j] == item) throw std::invalid_argument("repeated item in option");
    const int node = static_cast<int>(left_.size());
    const int last = static_cast<int>(items.size()) - 1;
    left_.push_back(k == 0 ? first + last : node - 1);
    right_.push_back(k == static_cast<std::size_t>(last) ? first : node + 1);
    up_.push_back(up_[c]);
    down_.push_back(c);
    column_.push_back(c);
    option_of_.push_back(id);
    down_[up_[c]] = node;
    up_[c] = node;
    ++size_[c];
  }
  return id;
}

void ExactCover::cover(int c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (int i = down_[c]; i != c; i = down_[i]) {
    for (int j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
  }
}

void ExactCover::uncover(int c) {
  for (int i = up_[c]; i != c; i = up_[i]) {
    for (int j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

void ExactCover::search(int depth) {
  const bool splitting = opts_.split_depth >= 0 && opts_.workers > 1;
  if (splitting && depth == opts_.split_depth) {
    if (unit_counter_++ % opts_.workers != static_cast<std::uint64_t>(opts_.worker)) return;
  }
  if (right_[0] == 0) {
    if (splitting && depth < opts_.split_depth &&
        unit_counter_++ % opts_.workers != static_cast<std::uint64_t>(opts_.worker)) {
      return;
    }
    ++solutions_;
    (*callback_)(chosen_);
    return;
  }
  int best = -1;
  int best_size = std::numeric_limits<int>::max();
  for (int c = right_[0]; c != 0; c = right_[c]) {
    if (size_[c] < best_size) {
      best = c;
      best_size = size_[c];
      if (best_size <= 1) break;
    }
  }
  if (best_size == 0) return;
  cover(best);
  const bool rev = opts_.reverse;
  for (int r = rev ? up_[best] : down_[best]; r != best; r = rev ? up_[r] : down_[r]) {
    chosen_.push_back(option_of_[r]);
    for (int j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
    search(depth + 1);
    for (int j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
    chosen_.pop_back();
  }
  uncover(best);
}

std::uint64_t ExactCover::solve(const std::function<void(std::span<const int>)>& on_solution,
                                const SolveOptions& options) {
  if (options.workers < 1 || options.worker < 0 || options.worker >= options.workers) {
    throw std::invalid_argument("bad worker assignment");
  }
  callback_ = &on_solution;
  opts_ = options;
  unit_counter_ = 0;
  solutions_ = 0;
  chosen_.clear();
  search(0);
  callback_ = nullptr;
  return solutions_;
}

}  // namespace onefact
