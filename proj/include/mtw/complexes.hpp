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

#ifndef MTW_COMPLEXES_HPP_
#define MTW_COMPLEXES_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mtw/closure.hpp"
#include "mtw/errors.hpp"
#include "mtw/pispace.hpp"

namespace mtw {

// Sorted vertex indices.
using Face = std::vector<int>;

// Finite abstract simplicial complex stored by its facets. A complex with no
// facets at all is the void complex; the complex whose only face is the empty
// face has the single facet {} and dimension -1.
class SimplicialComplex {
 public:
  SimplicialComplex();
  // Keeps the inclusion-maximal members of `generators`.
  SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Face> generators);
  // Caller guarantees the facets are sorted, distinct and pairwise non-nested.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels, std::vector<Face> facets);

  bool is_void() const { return facets_.empty(); }
  int dimension() const { return dimension_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<Face>& facets() const { return facets_; }

  // Faces of dimension d (-1 <= d <= dimension()), sorted lexicographically.
  // Filled once on first use; throws CapExceeded past caps.max_faces.
  const std::vector<Face>& faces(int d, const Caps& caps = {}) const;
  long long face_count(const Caps& caps = {}) const;

  bool contains(const Face& f) const;
  SimplicialComplex link(const Face& sigma) const;

 private:
  struct FaceCache;
  const std::vector<std::vector<Face>>& all_faces(const Caps& caps) const;

  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  int dimension_ = -1;
  std::vector<std::vector<int>> facets_by_vertex_;
  std::shared_ptr<FaceCache> cache_;
};

// Counts of faces in dimensions 0..dim; the empty face is not counted.
std::vector<long long> f_vector(const SimplicialComplex& k, const Caps& caps = {});

// Finite poset given by its strict down-sets.
class Poset {
 public:
  Poset() = default;
  // below[i] lists the elements strictly less than i. Throws InvalidSpec when
  // the relation is not irreflexive and transitive.
  Poset(std::vector<std::string> labels, std::vector<std::vector<int>> below);
  static Poset from_predicate(std::vector<std::string> labels, const std::function<bool(int, int)>& less);
  // Strict inclusion order on the given sets.
  static Poset of_sets(const std::vector<Subset>& sets, std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool less(int a, int b) const;
  const std::vector<std::vector<int>>& below() const { return below_; }
  // Covering pairs (lower, upper) among elements not excluded.
  std::vector<std::pair<int, int>> covers(const std::vector<bool>& excluded = {}) const;
  // Number of elements in a longest chain, minus one; -1 for the empty poset.
  int height() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> below_;
};

// Chains of P avoiding the excluded elements. Vertices are the remaining
// elements in index order; facets are the maximal chains.
SimplicialComplex order_complex(const Poset& p, const std::vector<int>& exclude = {}, const Caps& caps = {});

SimplicialComplex independence_complex(const PiSpace& m, const Caps& caps = {});
// Nonempty independent sets under strict inclusion, in lexicographic order.
Poset independence_poset(const PiSpace& m, const Caps& caps = {});
Poset flats_poset(const PiSpace& m, const FlatsLattice& lattice);
Poset closed_set_poset(const PiSpace& m, const ClosedSetPoset& closed);

// Order complex of the lattice minus its bottom and top. A lattice with a
// single element or an empty proper part yields the void complex.
SimplicialComplex proper_part_complex(const PiSpace& m, const FlatsLattice& lattice, const Caps& caps = {});
SimplicialComplex proper_part_complex(const PiSpace& m, const ClosedSetPoset& closed, const Caps& caps = {});

// An injective word: distinct letters whose underlying set is independent.
struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// All nonempty words with at most max_letters letters (rank when negative),
// ordered by length then lexicographically.
std::vector<Word> words_of(const PiSpace& m, int max_letters = -1, const Caps& caps = {});
// Words under the subword order (u < w when u arises by deleting letters of w).
Poset injective_words(const PiSpace& m, int max_letters = -1, const Caps& caps = {});

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, const Caps& caps = {});
// Order complex of I(M) - {empty} against the barycentric subdivision of the
// independence complex, via the vertex map sending a chain element to the
// face with the same vertices.
bool barycentric_check(const PiSpace& m, const Caps& caps = {});

}  // namespace mtw

#endif  // MTW_COMPLEXES_HPP_
