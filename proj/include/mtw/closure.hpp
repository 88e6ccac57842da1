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

#ifndef MTW_CLOSURE_HPP_
#define MTW_CLOSURE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtw/errors.hpp"
#include "mtw/pispace.hpp"
#include "mtw/subset.hpp"

namespace mtw {

// A minimal dependent set.
struct Circuit {
  Subset members;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Flat {
  Subset members;
  int rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

enum class ClosureStrategy { kRank, kCircuit };

// Covering pairs (lower, upper) of the strict inclusion order on `elements`,
// sorted lexicographically.
std::vector<std::pair<int, int>> inclusion_covers(const std::vector<Subset>& elements);

// The lattice of flats. Elements are sorted by (rank, members), so the loop
// set comes first and the full ground set last.
struct FlatsLattice {
  std::vector<Flat> elements;
  std::vector<std::pair<int, int>> covers;

  int bottom() const { return 0; }
  int top() const { return static_cast<int>(elements.size()) - 1; }
  std::optional<int> index_of(Subset s) const;
  std::vector<Subset> sets() const;
};

// Sorts `elements` and derives the Hasse diagram by transitive reduction.
// Used for lattices read from input or deliberately corrupted in tests.
FlatsLattice make_lattice(std::vector<Flat> elements);

struct ClosedSetPoset {
  std::vector<Subset> elements;
  std::vector<std::pair<int, int>> covers;
};

struct GeometricReport {
  // Bounded by the loops and M, made of flats of M, closed under meets and
  // joins, and the covers of each F partition M - F.
  bool lattice = true;
  bool ranked = true;
  bool atomistic = true;
  bool semimodular = true;
  std::vector<std::string> witnesses;
  bool ok() const { return lattice && ranked && atomistic && semimodular; }
};

// Greedy maximal independent subset of x, scanning indices ascending.
Subset greedy_basis(const PiSpace& m, Subset x);
int rank_of(const PiSpace& m, Subset x);

Subset loops(const PiSpace& m);
std::vector<Circuit> circuits(const PiSpace& m, const Caps& caps = {});

Subset closure(const PiSpace& m, Subset x, ClosureStrategy strategy = ClosureStrategy::kRank,
               const Caps& caps = {});
// x plus every element completing some listed circuit inside x.
Subset closure_from_circuits(const std::vector<Circuit>& circuits, Subset x);

// Checks the defining exchange property directly: sigma + y independent for
// every y outside f and sigma ranging over the bases of f (every independent
// subset of f when the ground has at most 12 elements).
bool is_flat(const PiSpace& m, Subset f, const Caps& caps = {});
bool is_closed(const PiSpace& m, Subset f);

FlatsLattice flats(const PiSpace& m, const Caps& caps = {});
// Closures of all independent sets, deduplicated. Reference enumeration for
// flats(), which grows the lattice rank by rank.
FlatsLattice flats_by_independent_closure(const PiSpace& m, const Caps& caps = {});

Flat meet(const PiSpace& m, const Flat& f, const Flat& g);
// Cl(sigma + tau) for greedy bases sigma of f and tau of g.
Flat join(const PiSpace& m, const Flat& f, const Flat& g);
// Intersection of all upper bounds of f and g among the lattice elements.
Subset join_upper_bounds(const FlatsLattice& lattice, Subset f, Subset g);

GeometricReport verify_geometric(const PiSpace& m, const FlatsLattice& lattice);
GeometricReport verify_geometric(const PiSpace& m, const Caps& caps = {});

// Contraction of m by m - keep, relative to the greedy maximal independent
// subset of m - keep. The ground of the result is `keep`.
PiSpace contract(const PiSpace& m, Subset keep);
PiSpace contract_with(const PiSpace& m, Subset keep, Subset tau);

// Checks that G -> G - F is an order isomorphism from the flats above f onto
// the flats of contract(m, M - f).
bool upper_interval_check(const PiSpace& m, const Flat& f, const Caps& caps = {});

// Smallest flat containing the independent set sigma.
Flat phi(const PiSpace& m, Subset sigma);

ClosedSetPoset closed_sets(const PiSpace& m, const Caps& caps = {});

}  // namespace mtw

#endif  // MTW_CLOSURE_HPP_
