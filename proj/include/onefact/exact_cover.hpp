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

// Exact cover by dancing links with the minimum-remaining-values rule.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace onefact {

struct SolveOptions {
  // With split_depth >= 0, the search nodes at that depth (and solutions
  // found above it) are numbered in visiting order and only those with
  // number % workers == worker are explored.
  int split_depth = -1;
  int worker = 0;
  int workers = 1;
  // Try options of an item in reverse insertion order.
  bool reverse = false;
};

class ExactCover {
 public:
  explicit ExactCover(int items);

  int item_count() const { return items_; }
  int option_count() const { return static_cast<int>(option_start_.size()); }

  // Items must be distinct and in range; returns the option id.
  int add_option(std::span<const int> items);

  // Calls `on_solution` with the chosen option ids of every exact cover;
  // returns the number of covers visited.
  std::uint64_t solve(const std::function<void(std::span<const int>)>& on_solution,
                      const SolveOptions& options = {});

 private:
  void cover(int c);
  void uncover(int c);
  void search(int depth);

  int items_;
  // Node arrays; nodes 0..items_ are the header row (0 is the root).
  std::vector<int> left_, right_, up_, down_, column_, option_of_;
  std::vector<int> size_;
  std::vector<int> option_start_;

  std::vector<int> chosen_;
  const std::function<void(std::span<const int>)>* callback_ = nullptr;
  SolveOptions opts_;
  std::uint64_t unit_counter_ = 0;
  std::uint64_t solutions_ = 0;
};

}  // namespace onefact
