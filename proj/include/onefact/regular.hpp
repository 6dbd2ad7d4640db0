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

// Reference generators for regular graphs, used to cross-check the level
// pipeline at small orders.

#include <cstdint>
#include <functional>
#include <vector>

#include "onefact/graph.hpp"

namespace onefact {

// Canonical forms of all k-regular graphs on n vertices, one per
// isomorphism class, sorted by form_less.
std::vector<EdgeMask> regular_graph_classes(int n, int k);

// Every labeled k-regular graph on n vertices. Exponential; n <= 8.
void for_each_labeled_regular_graph(int n, int k, const std::function<void(const DenseGraph&)>& fn);

// Whether the edge set of `g` splits into perfect matchings.
bool is_one_factorizable(const DenseGraph& g);

}  // namespace onefact
