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

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "catch2/catch_amalgamated.hpp"
#include "mtw/catalog.hpp"
#include "mtw/complexes.hpp"
#include "oracles.hpp"

using mtw::Face;
using mtw::Poset;
using mtw::SimplicialComplex;
using mtw::Subset;

namespace {

const mtw::GraphicSpec kTriangle{3, {{0, 1}, {1, 2}, {0, 2}}};

mtw::PiSpace build(const mtw::FamilySpec& s) { return mtw::build_family(s); }

std::vector<std::string> names(int n) { return oracle::labels(n); }

// Every face of k, by brute force over vertex subsets.
std::set<Face> faces_brute(const SimplicialComplex& k) {
  std::set<Face> out;
  for (const Face& f : k.facets()) {
    const int s = static_cast<int>(f.size());
    for (std::uint32_t mask = 0; mask < (1U << s); ++mask) {
      Face g;
      for (int i = 0; i < s; ++i) {
        if (mask >> i & 1U) g.push_back(f[i]);
      }
      out.insert(g);
    }
  }
  return out;
}

std::set<Face> faces_of(const SimplicialComplex& k) {
  std::set<Face> out;
  for (int d = -1; d <= k.dimension(); ++d) {
    for (const Face& f : k.faces(d)) out.insert(f);
  }
  return out;
}

Poset random_set_poset(std::mt19937_64& rng, int count) {
  std::set<Subset> pool;
  while (static_cast<int>(pool.size()) < count) pool.insert(Subset(rng() & 0x1f));
  std::vector<Subset> sets(pool.begin(), pool.end());
  std::vector<std::string> labels;
  for (Subset s : sets) labels.push_back(mtw::to_string(s));
  return Poset::of_sets(sets, labels);
}

}  // namespace

TEST_CASE("independence complexes") {
  const auto u42 = mtw::independence_complex(build(mtw::UniformSpec{4, 2}));
  CHECK(u42.dimension() == 1);
  CHECK(u42.facets().size() == 6);
  CHECK(mtw::f_vector(u42) == std::vector<long long>{4, 6});
  const auto b3 = mtw::independence_complex(build(mtw::BooleanSpec{3}));
  CHECK(b3.facets() == std::vector<Face>{{0, 1, 2}});
  CHECK(mtw::f_vector(b3) == std::vector<long long>{3, 3, 1});
  const auto tri = mtw::independence_complex(build(kTriangle));
  CHECK(tri.facets() == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(mtw::f_vector(tri) == std::vector<long long>{3, 3});
  const auto loops = mtw::independence_complex(build(mtw::UniformSpec{3, 0}));
  CHECK_FALSE(loops.is_void());
  CHECK(loops.dimension() == -1);
  CHECK(loops.facets() == std::vector<Face>{{}});
}

TEST_CASE("complexes keep maximal generators") {
  const SimplicialComplex k(names(4), {{2, 1}, {0, 1, 2}, {3}, {1}, {3}});
  CHECK(k.facets() == std::vector<Face>{{0, 1, 2}, {3}});
  CHECK(k.contains({0, 2}));
  CHECK_FALSE(k.contains({0, 3}));
  CHECK(k.contains({}));
  CHECK_FALSE(SimplicialComplex().contains({}));
  CHECK(SimplicialComplex().is_void());
}

TEST_CASE("faces by dimension agree with brute-force expansion") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Face> gens;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < count; ++g) {
      Face f;
      for (int v = 0; v < 7; ++v) {
        if (rng() % 2) f.push_back(v);
      }
      gens.push_back(f);
    }
    const SimplicialComplex k(names(7), gens);
    CHECK(faces_of(k) == faces_brute(k));
    for (int d = -1; d <= k.dimension(); ++d) {
      CHECK(std::is_sorted(k.faces(d).begin(), k.faces(d).end()));
      for (const Face& f : k.faces(d)) CHECK(static_cast<int>(f.size()) == d + 1);
    }
    // Links: faces tau disjoint from sigma with tau + sigma a face.
    for (const Face& sigma : k.faces(std::min(1, k.dimension()))) {
      std::set<Face> want;
      for (const Face& t : faces_brute(k)) {
        Face u;
        std::set_union(t.begin(), t.end(), sigma.begin(), sigma.end(), std::back_inserter(u));
        Face common;
        std::set_intersection(t.begin(), t.end(), sigma.begin(), sigma.end(), std::back_inserter(common));
        if (common.empty() && faces_brute(k).count(u)) want.insert(t);
      }
      CHECK(faces_of(k.link(sigma)) == want);
    }
  }
}

TEST_CASE("face enumeration is capped and safe under concurrent readers") {
  const auto k = mtw::independence_complex(build(mtw::BooleanSpec{10}));
  mtw::Caps small;
  small.max_faces = 100;
  CHECK_THROWS_AS(k.faces(2, small), mtw::Error);
  const auto other = mtw::independence_complex(build(mtw::BooleanSpec{12}));
  std::vector<long long> totals(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { totals[t] = other.face_count(); });
  for (auto& t : threads) t.join();
  for (long long x : totals) CHECK(x == 4096);
}

TEST_CASE("posets validate their relation") {
  CHECK_THROWS_AS(Poset(names(2), {{1}, {0}}), mtw::Error);  // not irreflexive via 0<1<0
  CHECK_THROWS_AS(Poset(names(1), {{0}}), mtw::Error);
  CHECK_THROWS_AS(Poset(names(3), {{}, {0}, {1}}), mtw::Error);  // 0 < 1 < 2 without 0 < 2
  const Poset chain(names(3), {{}, {0}, {0, 1}});
  CHECK(chain.less(0, 2));
  CHECK_FALSE(chain.less(2, 0));
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(chain.height() == 2);
  CHECK(Poset().height() == -1);
}

TEST_CASE("order complexes") {
  const Poset two(names(2), {{}, {0}});
  CHECK(mtw::order_complex(two).facets() == std::vector<Face>{{0, 1}});
  const Poset antichain(names(4), {{}, {}, {}, {}});
  const auto ac = mtw::order_complex(antichain);
  CHECK(ac.facets().size() == 4);
  CHECK(ac.dimension() == 0);
  CHECK(mtw::order_complex(Poset()).is_void());
  const Poset chain(names(3), {{}, {0}, {0, 1}});
  const auto middle = mtw::order_complex(chain, {0, 2});
  CHECK(middle.vertex_labels() == std::vector<std::string>{"1"});
  CHECK(middle.facets() == std::vector<Face>{{0}});

  const auto b3 = build(mtw::BooleanSpec{3});
  const auto hexagon = mtw::proper_part_complex(b3, mtw::flats(b3));
  CHECK(hexagon.vertex_count() == 6);
  CHECK(mtw::f_vector(hexagon) == std::vector<long long>{6, 6});
  const auto u1 = build(mtw::UniformSpec{3, 1});
  CHECK(mtw::proper_part_complex(u1, mtw::flats(u1)).is_void());
}

TEST_CASE("order complex faces are exactly the chains") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = random_set_poset(rng, 3 + static_cast<int>(rng() % 8));
    std::vector<int> exclude;
    for (int i = 0; i < p.size(); ++i) {
      if (rng() % 4 == 0) exclude.push_back(i);
    }
    const auto k = mtw::order_complex(p, exclude);
    std::vector<int> kept;
    for (int i = 0; i < p.size(); ++i) {
      if (std::find(exclude.begin(), exclude.end(), i) == exclude.end()) kept.push_back(i);
    }
    std::set<Face> chains;
    const int n = static_cast<int>(kept.size());
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      Face f;
      bool chain = true;
      for (int a = 0; a < n; ++a) {
        if (!(mask >> a & 1U)) continue;
        for (int b = 0; b < a; ++b) {
          if ((mask >> b & 1U) && !p.less(kept[a], kept[b]) && !p.less(kept[b], kept[a])) chain = false;
        }
        f.push_back(a);
      }
      if (chain) chains.insert(f);
    }
    if (n == 0) {
      CHECK(k.is_void());
    } else {
      CHECK(faces_of(k) == chains);
    }
  }
}

TEST_CASE("injective words") {
  CHECK(mtw::injective_words(build(mtw::BooleanSpec{1})).size() == 1);
  const auto b3 = mtw::injective_words(build(mtw::BooleanSpec{3}));
  CHECK(b3.size() == 15);
  CHECK(b3.height() == 2);
  CHECK(b3.labels().front() == "(0)");
  CHECK(b3.labels().back() == "(2,1,0)");
  const auto u31 = mtw::injective_words(build(mtw::UniformSpec{3, 1}));
  CHECK(u31.size() == 3);
  CHECK(u31.covers().empty());
  for (const auto& e : mtw::catalog_with_ground_at_most(5)) {
    const auto m = build(e.spec);
    const auto p = mtw::injective_words(m);
    CHECK(p.height() == m.rank() - 1);
  }
  // (0,1) < (2,0,1) but (1,0) is not below it.
  const auto words = mtw::words_of(build(mtw::BooleanSpec{3}));
  auto index = [&](std::vector<int> w) {
    return static_cast<int>(std::find(words.begin(), words.end(), mtw::Word{w}) - words.begin());
  };
  CHECK(b3.less(index({0, 1}), index({2, 0, 1})));
  CHECK_FALSE(b3.less(index({1, 0}), index({2, 0, 1})));
  mtw::Caps caps;
  caps.max_word_rank = 2;
  CHECK_THROWS_AS(mtw::injective_words(build(mtw::BooleanSpec{3}), -1, caps), mtw::Error);
}

TEST_CASE("barycentric subdivision") {
  const SimplicialComplex edge(names(2), {{0, 1}});
  const auto sd = mtw::barycentric_subdivision(edge);
  CHECK(sd.vertex_count() == 3);
  CHECK(sd.facets().size() == 2);
  CHECK(mtw::barycentric_check(build(mtw::BooleanSpec{2})));
  CHECK(mtw::barycentric_check(build(mtw::UniformSpec{3, 1})));
  CHECK(mtw::barycentric_check(build(kTriangle)));
  CHECK(mtw::barycentric_check(build(mtw::UniformSpec{2, 0})));
  for (const auto& e : mtw::catalog()) CHECK(mtw::barycentric_check(build(e.spec)));
}
