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

#ifndef MTW_HOMOLOGY_HPP_
#define MTW_HOMOLOGY_HPP_

#include <map>
#include <string>
#include <vector>

#include "mtw/complexes.hpp"
#include "mtw/errors.hpp"
#include "mtw/smith.hpp"

namespace mtw {

// Signed incidence of i-faces (columns) on (i-1)-faces (rows), both in
// lexicographic order. For i = 0 the single row is the empty face.
SparseMatrix boundary_matrix(const SimplicialComplex& k, int i, const Caps& caps = {});

struct HomologyProfile {
  // Set for the void complex, which has no faces and no homology to report.
  bool degenerate = false;
  int dimension = -1;
  // Reduced Betti numbers for every degree -1..dimension.
  std::map<int, long long> betti;
  // Invariant factors > 1, only for degrees that have torsion.
  std::map<int, std::vector<Integer>> torsion;

  long long euler_characteristic() const;  // sum of (-1)^i betti_i
  bool acyclic() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& k, const Caps& caps = {});

struct Sphericity {
  bool degenerate = false;
  bool spherical = false;
  int dimension = -1;
  long long spheres = 0;
};

Sphericity sphericity(const HomologyProfile& h);
Sphericity sphericity(const SimplicialComplex& k, const Caps& caps = {});
bool is_spherical(const SimplicialComplex& k, const Caps& caps = {});

// sum of (-1)^i f_i over faces including the empty one.
long long reduced_euler_characteristic(const SimplicialComplex& k, const Caps& caps = {});

struct CmFailure {
  Face face;
  int expected_dimension = 0;
  int observed_dimension = 0;
  HomologyProfile observed;
};

struct CmReport {
  bool overall = false;
  bool degenerate = false;
  // Links are checked for spherical homology only; fundamental groups are not.
  std::string notion = "homological";
  std::vector<CmFailure> failures;
};

CmReport verify_cm(const SimplicialComplex& k, const Caps& caps = {});

// Homological m-connectivity: non-void and reduced homology zero in degrees
// -1..m. Always true for m <= -2.
bool connectivity(const SimplicialComplex& k, int m, const Caps& caps = {});

}  // namespace mtw

#endif  // MTW_HOMOLOGY_HPP_
