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

#include "catch2/catch_amalgamated.hpp"
#include "mtw/catalog.hpp"
#include "mtw/closure.hpp"
#include "oracles.hpp"

using mtw::BooleanSpec;
using mtw::Flat;
using mtw::GraphicSpec;
using mtw::PiSpace;
using mtw::Subset;
using mtw::UniformSpec;

namespace {

const GraphicSpec kTriangle{3, {{0, 1}, {1, 2}, {0, 2}}};
const GraphicSpec kK4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

PiSpace build(const mtw::FamilySpec& s) { return mtw::build_family(s); }

// Small matroids: uniform, graphic and random linear, ground at most 7.
std::vector<PiSpace> small_matroids() {
  std::vector<PiSpace> out;
  for (const auto& e : mtw::catalog_with_ground_at_most(6)) out.push_back(build(e.spec));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) out.push_back(build(oracle::random_linear(rng, i % 2 ? 3 : 2, 3, 7)));
  return out;
}

}  // namespace

TEST_CASE("rank, loops and circuits on named instances") {
  const PiSpace u42 = build(UniformSpec{4, 2});
  CHECK(mtw::rank_of(u42, Subset{0, 1, 2}) == 2);
  CHECK(mtw::rank_of(u42, Subset()) == 0);
  CHECK(mtw::rank_of(build(kK4), Subset::full(6)) == 3);
  CHECK(mtw::loops(u42).empty());
  CHECK(mtw::loops(build(GraphicSpec{2, {{0, 1}, {1, 1}}})) == Subset{1});

  CHECK(mtw::circuits(build(UniformSpec{3, 2})).size() == 1);
  CHECK(mtw::circuits(build(UniformSpec{3, 2}))[0].members == Subset{0, 1, 2});
  CHECK(mtw::circuits(build(kTriangle))[0].members == Subset{0, 1, 2});
  CHECK(mtw::circuits(build(BooleanSpec{3})).empty());
}

TEST_CASE("closure and flats on named instances") {
  const PiSpace u42 = build(UniformSpec{4, 2});
  CHECK(mtw::closure(u42, Subset{0, 1}) == Subset::full(4));
  CHECK(mtw::closure(u42, Subset()) == mtw::loops(u42));
  CHECK(mtw::closure(build(kTriangle), Subset{0}) == Subset{0});
  CHECK(mtw::is_flat(u42, Subset{0}));
  CHECK_FALSE(mtw::is_flat(u42, Subset{0, 1}));
  CHECK(mtw::is_flat(u42, Subset::full(4)));

  const auto u32 = mtw::flats(build(UniformSpec{3, 2}));
  CHECK(u32.sets() == std::vector<Subset>{Subset(), Subset{0}, Subset{1}, Subset{2}, Subset{0, 1, 2}});
  CHECK(mtw::flats(build(BooleanSpec{3})).elements.size() == 8);
  const auto tri = mtw::flats(build(kTriangle));
  CHECK(tri.elements.size() == 5);
  CHECK(tri.covers.size() == 6);
  CHECK(mtw::flats(build(kK4)).elements.size() == 15);  // Bell number B_4
}

TEST_CASE("lattice elements and covers") {
  const auto lattice = mtw::flats(build(UniformSpec{3, 2}));
  CHECK(lattice.bottom() == 0);
  CHECK(lattice.top() == 4);
  CHECK(lattice.covers ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(lattice.index_of(Subset{1}) == 2);
  CHECK_FALSE(lattice.index_of(Subset{0, 1}));
}

TEST_CASE("flats agree with the definitional brute-force oracle") {
  for (const PiSpace& m : small_matroids()) {
    CAPTURE(m.provenance());
    auto want = oracle::flats(m);
    std::sort(want.begin(), want.end());
    auto got = mtw::flats(m).sets();
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    auto by_closure = mtw::flats_by_independent_closure(m).sets();
    std::sort(by_closure.begin(), by_closure.end());
    CHECK(by_closure == want);
    for (const auto& f : mtw::flats(m).elements) CHECK(f.rank == oracle::rank(m, f.members));
  }
}

TEST_CASE("closure laws on every subset") {
  for (const PiSpace& m : small_matroids()) {
    CAPTURE(m.provenance());
    const auto cs = mtw::circuits(m);
    std::vector<Subset> cs_want = oracle::circuits(m);
    std::vector<Subset> cs_got;
    for (const auto& c : cs) cs_got.push_back(c.members);
    std::sort(cs_want.begin(), cs_want.end());
    CHECK(cs_got == cs_want);
    for (Subset x : oracle::all_subsets(m.size())) {
      const Subset c = mtw::closure(m, x);
      CHECK(c == oracle::closure(m, x));
      CHECK(x.is_subset_of(c));
      CHECK(mtw::rank_of(m, c) == mtw::rank_of(m, x));
      CHECK(mtw::closure(m, c) == c);
      CHECK(mtw::closure_from_circuits(cs, x) == c);
      CHECK(mtw::is_flat(m, x) == mtw::is_closed(m, x));
      // Monotone: adding one element never shrinks the closure.
      for (int y = 0; y < m.size(); ++y) CHECK(c.is_subset_of(mtw::closure(m, x.with(y))));
    }
  }
}

TEST_CASE("closure on non-matroid families follows the circuit definition") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const PiSpace m = oracle::random_downward(rng, 1 + static_cast<int>(rng() % 6));
    const auto cs = mtw::circuits(m);
    for (Subset x : oracle::all_subsets(m.size())) {
      CHECK(mtw::closure(m, x) == oracle::closure(m, x));
      CHECK(mtw::closure(m, x, mtw::ClosureStrategy::kCircuit) == oracle::closure(m, x));
    }
  }
}

TEST_CASE("meets and joins") {
  const PiSpace u42 = build(UniformSpec{4, 2});
  const Flat a{Subset{0}, 1}, b{Subset{1}, 1}, top{Subset::full(4), 2};
  CHECK(mtw::join(u42, a, b).members == Subset::full(4));
  CHECK(mtw::meet(u42, a, top) == a);
  const PiSpace tri = build(kTriangle);
  CHECK(mtw::join(tri, {Subset{0}, 1}, {Subset{1}, 1}).members == Subset{0, 1, 2});

  for (const PiSpace& m : small_matroids()) {
    const auto lattice = mtw::flats(m);
    const auto sets = lattice.sets();
    std::set<Subset> members(sets.begin(), sets.end());
    for (const auto& f : lattice.elements) {
      for (const auto& g : lattice.elements) {
        CHECK(members.count(f.members & g.members) == 1);
        CHECK(mtw::join(m, f, g).members == mtw::join_upper_bounds(lattice, f.members, g.members));
      }
    }
  }
}

TEST_CASE("geometric lattices and deletion of a flat") {
  for (const auto& spec : std::vector<mtw::FamilySpec>{UniformSpec{4, 2}, kK4, BooleanSpec{4}}) {
    const PiSpace m = build(spec);
    const auto lattice = mtw::flats(m);
    const auto r = mtw::verify_geometric(m, lattice);
    CHECK(r.ok());
    CHECK(r.witnesses.empty());
    for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
      auto rest = lattice.elements;
      rest.erase(rest.begin() + static_cast<long>(i));
      CHECK_FALSE(mtw::verify_geometric(m, mtw::make_lattice(rest)).ok());
    }
  }
  // Adding a non-flat is caught as well.
  const PiSpace u42 = build(UniformSpec{4, 2});
  auto elements = mtw::flats(u42).elements;
  elements.push_back({Subset{0, 1}, 2});
  const auto r = mtw::verify_geometric(u42, mtw::make_lattice(elements));
  CHECK_FALSE(r.lattice);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("a non-matroid closure lattice is rejected") {
  // Flats {}, {0,2}, {1,2}, M: the two atoms overlap.
  mtw::ExplicitSpec s;
  s.ground = {"0", "1", "2"};
  s.sets = {{}, {"0"}, {"1"}, {"0", "1"}, {"2"}};
  const PiSpace m = build(s);
  CHECK_FALSE(mtw::verify_geometric(m).ok());
}

TEST_CASE("contraction") {
  const PiSpace k4 = build(kK4);
  // Complement of edge 01.
  const PiSpace c = mtw::contract(k4, Subset::full(6).without(0));
  CHECK(c.rank() == 2);
  CHECK(mtw::check_axioms(c).ok());
  const PiSpace u42 = build(UniformSpec{4, 2});
  CHECK(mtw::contract(u42, Subset{1, 2, 3}).rank() == 1);
  const PiSpace same = mtw::contract(u42, Subset::full(4));
  CHECK(oracle::independent(same) == oracle::independent(u42));
}

TEST_CASE("contraction does not depend on the maximal independent set chosen") {
  std::mt19937_64 rng(4242);
  std::vector<PiSpace> ms = small_matroids();
  for (int trial = 0; trial < 80; ++trial) {
    const PiSpace& m = ms[rng() % ms.size()];
    const Subset keep(rng() & Subset::full(m.size()).bits());
    const Subset rest = Subset::full(m.size()) - keep;
    const PiSpace ref = mtw::contract(m, keep);
    const int r = mtw::rank_of(m, rest);
    for (Subset tau : oracle::all_subsets(m.size())) {
      if (!tau.is_subset_of(rest) || tau.size() != r || !m.independent(tau)) continue;
      CHECK(oracle::independent(mtw::contract_with(m, keep, tau)) == oracle::independent(ref));
    }
  }
}

TEST_CASE("upper intervals") {
  const PiSpace k4 = build(kK4);
  CHECK(mtw::upper_interval_check(k4, {Subset{0}, 1}));
  CHECK(mtw::upper_interval_check(k4, {Subset(), 0}));
  CHECK(mtw::upper_interval_check(k4, {Subset::full(6), 3}));
  CHECK_THROWS_AS(mtw::upper_interval_check(k4, {Subset{0, 1}, 2}), mtw::Error);
  const PiSpace loopy = build(GraphicSpec{3, {{0, 1}, {1, 2}, {2, 2}}});
  CHECK(mtw::upper_interval_check(loopy, {mtw::loops(loopy), 0}));
}

TEST_CASE("phi") {
  const PiSpace u42 = build(UniformSpec{4, 2});
  CHECK(mtw::phi(u42, Subset()).members == mtw::loops(u42));
  CHECK(mtw::phi(u42, Subset{0}).members == Subset{0});
  CHECK(mtw::phi(u42, Subset{0, 1}).members == Subset::full(4));
  CHECK(mtw::phi(u42, Subset{0, 1}).rank == 2);
  CHECK_THROWS_AS(mtw::phi(u42, Subset{0, 1, 2}), mtw::Error);
}

TEST_CASE("closed sets") {
  const auto u32 = mtw::closed_sets(build(UniformSpec{3, 2}));
  CHECK(u32.elements == mtw::flats(build(UniformSpec{3, 2})).sets());
  CHECK(mtw::closed_sets(build(BooleanSpec{3})).elements.size() == 8);
  CHECK(mtw::closed_sets(build(kTriangle)).elements.size() == 5);
  // Closed sets of a non-matroid family are fixed points of the closure.
  mtw::ExplicitSpec s;
  s.ground = {"0", "1", "2"};
  s.sets = {{}, {"0"}, {"1"}, {"0", "1"}, {"2"}};
  const PiSpace m = build(s);
  for (Subset x : mtw::closed_sets(m).elements) CHECK(oracle::closure(m, x) == x);
}

TEST_CASE("inclusion covers are the transitive reduction") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Subset> pool;
    while (pool.size() < 12) pool.insert(Subset(rng() & 0x3f));
    std::vector<Subset> els(pool.begin(), pool.end());
    std::vector<std::pair<int, int>> want;
    const int n = static_cast<int>(els.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || !els[i].is_subset_of(els[j])) continue;
        bool between = false;
        for (int k = 0; k < n; ++k) {
          if (k != i && k != j && els[i].is_subset_of(els[k]) && els[k].is_subset_of(els[j])) between = true;
        }
        if (!between) want.emplace_back(i, j);
      }
    }
    std::sort(want.begin(), want.end());
    CHECK(mtw::inclusion_covers(els) == want);
  }
}
