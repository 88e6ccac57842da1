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

#include "mtw/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

namespace mtw {
namespace {

int ground_size(const FamilySpec& spec) {
  struct Visitor {
    int operator()(const UniformSpec& s) const { return s.n; }
    int operator()(const BooleanSpec& s) const { return s.n; }
    int operator()(const GraphicSpec& s) const { return static_cast<int>(s.edges.size()); }
    int operator()(const LinearSpec& s) const { return static_cast<int>(s.columns.size()); }
    int operator()(const ExplicitSpec& s) const { return static_cast<int>(s.ground.size()); }
  };
  return std::visit(Visitor{}, spec);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](FamilySpec spec) { out.push_back({describe(spec), std::move(spec)}); };
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) add(UniformSpec{n, r});
  }
  for (int n = 1; n <= 6; ++n) add(BooleanSpec{n});
  for (int v = 2; v <= 5; ++v) {
    for (auto& edges : simple_graphs_up_to_isomorphism(v)) add(GraphicSpec{v, std::move(edges)});
  }
  // A doubled edge and a self-loop on the triangle; a digon with a pendant edge.
  add(GraphicSpec{3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}});
  add(GraphicSpec{3, {{0, 1}, {0, 1}, {1, 2}}});
  std::mt19937_64 rng(20260415);
  for (std::int64_t p : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      LinearSpec spec;
      spec.p = p;
      const int rows = 2 + static_cast<int>(rng() % 3);
      const int cols = 3 + static_cast<int>(rng() % 4);
      for (int c = 0; c < cols; ++c) {
        std::vector<std::int64_t> column(rows);
        for (auto& x : column) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        spec.columns.push_back(std::move(column));
      }
      add(std::move(spec));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> simple_graphs_up_to_isomorphism(int vertices) {
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) all_edges.emplace_back(u, v);
  }
  const int e = static_cast<int>(all_edges.size());
  std::vector<std::vector<int>> relabel;
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image(e);
    for (int i = 0; i < e; ++i) {
      int a = perm[all_edges[i].first], b = perm[all_edges[i].second];
      if (a > b) std::swap(a, b);
      image[i] = static_cast<int>(std::find(all_edges.begin(), all_edges.end(), std::make_pair(a, b)) -
                                  all_edges.begin());
    }
    relabel.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask = 1; mask < (1U << e); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& image : relabel) {
      std::uint32_t m = 0;
      for (int i = 0; i < e; ++i) {
        if (mask >> i & 1U) m |= 1U << image[i];
      }
      canon = std::min(canon, m);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < e; ++i) {
      if (canon >> i & 1U) edges.push_back(all_edges[i]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<CatalogEntry> catalog_with_ground_at_most(int n) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog()) {
    if (ground_size(e.spec) <= n) out.push_back(e);
  }
  return out;
}

}  // namespace mtw
