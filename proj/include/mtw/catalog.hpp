// Copyright 2026 The Authors.
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

#ifndef MTW_CATALOG_HPP_
#define MTW_CATALOG_HPP_

#include <string>
#include <vector>

#include "mtw/pispace.hpp"

namespace mtw {

struct CatalogEntry {
  std::string name;
  FamilySpec spec;
};

// Fixed instance list: uniform(n, r) for n <= 7, boolean(n) for n <= 6,
// every simple graph on 2..5 vertices with an edge up to isomorphism plus two
// multigraphs, and 20 seeded random linear matroids over GF(2) and GF(3)
// with at most 6 columns.
const std::vector<CatalogEntry>& catalog();

std::vector<CatalogEntry> catalog_with_ground_at_most(int n);

// One representative edge list per isomorphism class of simple graphs on
// `vertices` vertices with at least one edge.
std::vector<std::vector<std::pair<int, int>>> simple_graphs_up_to_isomorphism(int vertices);

}  // namespace mtw

#endif  // MTW_CATALOG_HPP_
