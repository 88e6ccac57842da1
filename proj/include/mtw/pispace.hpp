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

#ifndef MTW_PISPACE_HPP_
#define MTW_PISPACE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mtw/errors.hpp"
#include "mtw/subset.hpp"

namespace mtw {

// Ordered list of distinct element labels; element i is labels()[i].
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset all() const { return Subset::full(size()); }

  std::optional<int> index_of(const std::string& label) const;
  // Throws OutOfRange for labels that are not in the ground set.
  Subset parse(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  // Ground set on the listed positions of this one, in the listed order.
  GroundSet sub(const std::vector<int>& positions) const;

 private:
  std::vector<std::string> labels_;
};

struct UniformSpec {
  int n = 0;
  int r = 0;
};
struct BooleanSpec {
  int n = 0;
};
struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
struct LinearSpec {
  std::int64_t p = 2;
  std::vector<std::vector<std::int64_t>> columns;
};
enum class ExplicitForm { kIndependent, kBases, kCircuits };
struct ExplicitSpec {
  std::vector<std::string> ground;
  ExplicitForm form = ExplicitForm::kIndependent;
  std::vector<std::vector<std::string>> sets;
  bool complete_downward = false;
};

using FamilySpec = std::variant<UniformSpec, BooleanSpec, GraphicSpec, LinearSpec, ExplicitSpec>;

std::string describe(const FamilySpec& spec);

// A finite pi-space (M, I(M)): a ground set with a pure independence oracle.
// Immutable once built; copies share the oracle.
class PiSpace {
 public:
  using Oracle = std::function<bool(Subset)>;

  // `matroid` marks families known to satisfy the exchange axiom, for which
  // the greedy rank is exact; other families get an exhaustive rank.
  PiSpace(GroundSet ground, Oracle oracle, std::string provenance, bool matroid);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::string& provenance() const { return provenance_; }
  bool matroid_by_construction() const { return matroid_; }

  // Oracle call without range checking; see is_independent.
  bool independent(Subset s) const { return (*oracle_)(s); }

 private:
  GroundSet ground_;
  std::shared_ptr<const Oracle> oracle_;
  std::string provenance_;
  bool matroid_ = false;
  int rank_ = 0;
};

struct AxiomWitness {
  Subset sigma;
  Subset tau;
};

struct AxiomReport {
  bool i1_holds = true;
  bool i2_holds = true;
  bool i2prime_holds = true;
  // I1 witnesses have sigma independent and tau a dependent subset of it;
  // exchange witnesses have |sigma| > |tau| with no x in sigma - tau
  // extending tau.
  std::vector<AxiomWitness> i1_witnesses;
  std::vector<AxiomWitness> i2_witnesses;
  std::vector<AxiomWitness> i2prime_witnesses;
  bool ok() const { return i1_holds && i2_holds && i2prime_holds; }
};

PiSpace build_family(const FamilySpec& spec);

bool is_independent(const PiSpace& m, Subset s);

// All independent sets, lexicographically ordered. Visits only sets reachable
// by single-element extension, so it relies on downward closure.
std::vector<Subset> independent_sets(const PiSpace& m, const Caps& caps = {});

// Depth-first walk over independent subsets of `within` in lexicographic
// order. Returning false from fn prunes the extensions of that set.
void for_each_independent(const PiSpace& m, Subset within, const std::function<bool(Subset)>& fn);

AxiomReport check_axioms(const PiSpace& m, const Caps& caps = {});

PiSpace restriction(const PiSpace& m, Subset keep);
PiSpace skeleton(const PiSpace& m, int k);
PiSpace link(const PiSpace& m, Subset sigma);
std::vector<Subset> bases(const PiSpace& m, const Caps& caps = {});

// Positions in m's ground set of the elements of link(m, sigma) and of
// restriction(m, keep), in the order the derived ground set lists them.
std::vector<int> positions_of(Subset s);

// Finite identity I_fin = I = I_W on an arbitrary family of subsets. The
// weak closure I_W holds the sets all of whose finite subsets are members.
struct SetFamily {
  int ground_size = 0;
  std::vector<Subset> members;
};
struct WClosureReport {
  bool equal = true;
  // A member with a non-member subset, when equality fails.
  std::optional<Subset> member;
  std::optional<Subset> missing_subset;
};
WClosureReport w_closure_check(const SetFamily& family);
bool w_equals_fin_check(const PiSpace& m, const Caps& caps = {});

}  // namespace mtw

#endif  // MTW_PISPACE_HPP_
