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

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "mtw/closure.hpp"
#include "mtw/gallery.hpp"

using mtw::AscChainFamily;
using mtw::Subset;
using mtw::SymbolicSet;

namespace {

int a_index(int n) { return 2 * (n - 1); }
int b_index(int n) { return 2 * (n - 1) + 1; }

// Circuits of the truncated family, written out directly.
std::vector<Subset> truncated_circuits(int t) {
  std::vector<Subset> out;
  for (int n = 1; n <= t - 2; ++n) {
    Subset c;
    for (int m = n + 1; m <= t; ++m) c = c.with(a_index(m));
    for (int j = 1; j <= n; ++j) c = c.with(b_index(j));
    out.push_back(c);
  }
  return out;
}

Subset brute_closure(const std::vector<Subset>& circuits, Subset x, int ground) {
  Subset out = x;
  for (int e = 0; e < ground; ++e) {
    for (Subset c : circuits) {
      if (c.contains(e) && c.is_subset_of(x.with(e))) out = out.with(e);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closure of the first chain sets") {
  const auto x1 = SymbolicSet::tail(1);
  SymbolicSet want = x1;
  want.b_finite = {1};
  CHECK(mtw::asc_chain_closure(x1) == want);
  CHECK(mtw::asc_chain_closure(SymbolicSet{}) == SymbolicSet{});
  SymbolicSet finite;
  finite.a_finite = {1, 2, 3};
  finite.b_finite = {1, 2};
  finite.rest_finite = {2, 5};
  CHECK(mtw::asc_chain_closure(finite) == finite);
  // Everything from a_2 on plus b_1, b_2: P_3 is missing only b_3.
  SymbolicSet x3 = SymbolicSet::tail(1);
  x3.b_finite = {1, 2};
  SymbolicSet x4 = x3;
  x4.b_finite.insert(3);
  CHECK(mtw::asc_chain_closure(x3) == x4);
  // Every a-element present: P_1 is missing only b_1.
  SymbolicSet all = SymbolicSet::tail(0);
  SymbolicSet all_b1 = all;
  all_b1.b_finite = {1};
  CHECK(mtw::asc_chain_closure(all) == all_b1);
}

TEST_CASE("tails are folded into canonical form") {
  SymbolicSet x = SymbolicSet::tail(4);
  x.a_finite = {2, 3, 4, 7};
  const auto n = x.normalized();
  CHECK(n.a_tail == 1);
  CHECK(n.a_finite.empty());
  CHECK(mtw::to_string(SymbolicSet::tail(1)) == "{a_m for m>1}");
}

TEST_CASE("unsupported shapes are rejected") {
  SymbolicSet a_as_rest;
  a_as_rest.rest_finite = {6};
  CHECK_THROWS_AS(mtw::asc_chain_closure(a_as_rest), mtw::Error);
  SymbolicSet b_as_rest;
  b_as_rest.rest_finite = {7};
  CHECK_THROWS_AS(mtw::asc_chain_closure(b_as_rest), mtw::Error);
  CHECK_THROWS_AS(mtw::asc_chain_closure(SymbolicSet::tail(-1)), mtw::Error);
  SymbolicSet zero_b;
  zero_b.b_finite = {0};
  CHECK_THROWS_AS(mtw::asc_chain_closure(zero_b), mtw::Error);
  try {
    mtw::asc_chain_closure(a_as_rest);
  } catch (const mtw::Error& e) {
    CHECK(e.kind() == mtw::ErrorKind::kUnsupportedShape);
  }
}

TEST_CASE("the closure chain ascends strictly") {
  for (long long steps : {1LL, 2LL, 10LL, 50LL}) {
    const auto r = mtw::verify_asc_chain(steps);
    CHECK(r.ok);
    CHECK(r.steps == steps);
    CHECK_FALSE(r.failed_at.has_value());
    for (const auto& s : r.trace) {
      CHECK(s.law_holds);
      CHECK_FALSE(s.closed);
      CHECK(s.closure.a_tail == 1);
      CHECK(static_cast<long long>(s.closure.b_finite.size()) == s.n);
    }
  }
  CHECK_THROWS_AS(mtw::verify_asc_chain(0), mtw::Error);
}

TEST_CASE("a mutated circuit family breaks the chain") {
  const auto r = mtw::verify_asc_chain(10, AscChainFamily::mutated());
  CHECK_FALSE(r.ok);
  CHECK(r.failed_at == 2);
  const auto later = mtw::verify_asc_chain(10, AscChainFamily::mutated(5));
  CHECK_FALSE(later.ok);
  CHECK(later.failed_at == 5);
  CHECK(mtw::verify_asc_chain(4, AscChainFamily::mutated(5)).ok);
}

TEST_CASE("truncated instance carries the written circuits") {
  for (int t = 3; t <= 6; ++t) {
    const auto m = mtw::truncated_asc_chain(t);
    std::vector<Subset> got;
    for (const auto& c : mtw::circuits(m)) got.push_back(c.members);
    auto want = truncated_circuits(t);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(m.size() == 2 * t);
  }
  CHECK_THROWS_AS(mtw::truncated_asc_chain(2), mtw::Error);
  CHECK_THROWS_AS(mtw::truncated_asc_chain(33), mtw::Error);
}

TEST_CASE("symbolic closure agrees with the truncated brute force") {
  constexpr int kT = 14;
  const auto circuits = truncated_circuits(kT);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    SymbolicSet x;
    if (rng() % 5) x.a_tail = static_cast<long long>(rng() % 6);
    for (int m = 1; m <= 8; ++m) {
      if (rng() % 3 == 0) x.a_finite.insert(m);
      if (rng() % 2 == 0) x.b_finite.insert(m);
    }
    const auto symbolic = mtw::asc_chain_closure(x);
    CAPTURE(mtw::to_string(x));
    CHECK(mtw::truncate(symbolic, kT) == brute_closure(circuits, mtw::truncate(x, kT), 2 * kT));
  }
}

TEST_CASE("connectivity sweeps") {
  const auto rows = mtw::connectivity_sweep("boolean", 1, 3, 8);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.verified);
    CHECK_FALSE(r.skipped);
    CHECK(r.faces == r.n + r.n * (r.n - 1) / 2);
  }
  for (const auto& r : mtw::connectivity_sweep("uniform:2", 1, 4, 9)) CHECK(r.verified);
  for (const auto& r : mtw::connectivity_sweep("complete", 1, 2, 5)) CHECK(r.verified);
  for (const auto& r : mtw::connectivity_sweep("path", 0, 2, 5)) CHECK(r.verified);
  // K_3 has rank 2, so its 2-skeleton is the whole complex, a cycle.
  const auto k3 = mtw::connectivity_sweep("complete", 2, 3, 4);
  CHECK_FALSE(k3[0].verified);
  CHECK(k3[1].verified);
  mtw::Caps small;
  small.max_faces = 20;
  const auto capped = mtw::connectivity_sweep("boolean", 2, 3, 6, small);
  CHECK_FALSE(capped.front().skipped);
  CHECK(capped.back().skipped);
  CHECK_THROWS_AS(mtw::connectivity_sweep("nonsense", 1, 3, 4), mtw::Error);
  CHECK_THROWS_AS(mtw::connectivity_sweep("boolean", -1, 3, 4), mtw::Error);
  CHECK_THROWS_AS(mtw::connectivity_sweep("boolean", 1, 5, 4), mtw::Error);
}

TEST_CASE("sweep csv") {
  mtw::SweepRow a{"boolean", 3, 1, true, false, 7, 12};
  mtw::SweepRow b{"boolean", 4, 1, false, true, 0, 3};
  CHECK(mtw::sweep_csv({a, b}, false) == "family,n,k,verified,faces\nboolean,3,1,true,7\nboolean,4,1,skipped,0\n");
  CHECK(mtw::sweep_csv({a}, true) == "family,n,k,verified,faces,millis\nboolean,3,1,true,7,12\n");
}
