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

#include "mtw/homology.hpp"

#include <algorithm>
#include <optional>

#include "mtw/parallel.hpp"

namespace mtw {

SparseMatrix boundary_matrix(const SimplicialComplex& k, int i, const Caps& caps) {
  if (k.is_void() || i < 0 || i > k.dimension()) {
    throw Error(ErrorKind::kDimensionOutOfRange,
                "boundary index " + std::to_string(i) + " outside 0.." + std::to_string(k.dimension()));
  }
  const std::vector<Face>& lower = k.faces(i - 1, caps);
  const std::vector<Face>& upper = k.faces(i, caps);
  SparseMatrix m;
  m.rows = static_cast<int>(lower.size());
  m.cols = static_cast<int>(upper.size());
  m.columns.resize(upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face& f = upper[c];
    auto& col = m.columns[c];
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g;
      g.reserve(f.size() - 1);
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t != j) g.push_back(f[t]);
      }
      const auto it = std::lower_bound(lower.begin(), lower.end(), g);
      col.emplace_back(static_cast<int>(it - lower.begin()), j % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (auto [d, b] : betti) chi += (d % 2 == 0 ? 1 : -1) * b;
  return chi;
}

bool HomologyProfile::acyclic() const {
  if (degenerate) return false;
  for (auto [d, b] : betti) {
    if (b != 0) return false;
  }
  return torsion.empty();
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const Caps& caps) {
  HomologyProfile h;
  h.dimension = k.dimension();
  if (k.is_void()) {
    h.degenerate = true;
    return h;
  }
  const int dim = k.dimension();
  k.face_count(caps);
  // factors[i] are the invariant factors of the boundary from dimension i.
  std::vector<std::vector<Integer>> factors(dim + 1);
  parallel_for(static_cast<std::size_t>(dim + 1), [&](std::size_t i) {
    factors[i] = smith_invariants(boundary_matrix(k, static_cast<int>(i), caps));
  });
  auto rank = [&](int i) -> long long {
    return i < 0 || i > dim ? 0 : static_cast<long long>(factors[i].size());
  };
  for (int d = -1; d <= dim; ++d) {
    const long long f = static_cast<long long>(k.faces(d, caps).size());
    h.betti[d] = f - rank(d) - rank(d + 1);
    if (d + 1 <= dim) {
      std::vector<Integer> t;
      for (const Integer& x : factors[d + 1]) {
        if (x > 1) t.push_back(x);
      }
      if (!t.empty()) h.torsion[d] = std::move(t);
    }
  }
  return h;
}

Sphericity sphericity(const HomologyProfile& h) {
  Sphericity s;
  s.dimension = h.dimension;
  if (h.degenerate) {
    s.degenerate = true;
    return s;
  }
  s.spherical = true;
  for (auto [d, b] : h.betti) {
    if (d < h.dimension && b != 0) s.spherical = false;
  }
  if (!h.torsion.empty()) s.spherical = false;
  s.spheres = h.betti.count(h.dimension) ? h.betti.at(h.dimension) : 0;
  return s;
}

Sphericity sphericity(const SimplicialComplex& k, const Caps& caps) {
  return sphericity(reduced_homology(k, caps));
}

bool is_spherical(const SimplicialComplex& k, const Caps& caps) { return sphericity(k, caps).spherical; }

long long reduced_euler_characteristic(const SimplicialComplex& k, const Caps& caps) {
  if (k.is_void()) return 0;
  long long chi = 0;
  for (int d = -1; d <= k.dimension(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.faces(d, caps).size());
  }
  return chi;
}

CmReport verify_cm(const SimplicialComplex& k, const Caps& caps) {
  CmReport report;
  if (k.is_void()) {
    report.degenerate = true;
    return report;
  }
  std::vector<const Face*> all;
  for (int d = -1; d <= k.dimension(); ++d) {
    for (const Face& f : k.faces(d, caps)) all.push_back(&f);
  }
  std::vector<std::optional<CmFailure>> slots(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    const Face& sigma = *all[i];
    const SimplicialComplex lk = k.link(sigma);
    const int expected = k.dimension() - static_cast<int>(sigma.size());
    HomologyProfile h = reduced_homology(lk, caps);
    if (lk.dimension() == expected && sphericity(h).spherical) return;
    slots[i] = CmFailure{sigma, expected, lk.dimension(), std::move(h)};
  });
  // Faces were listed by dimension then lexicographically, which is the
  // emission order.
  for (auto& s : slots) {
    if (s) report.failures.push_back(std::move(*s));
  }
  report.overall = report.failures.empty();
  return report;
}

bool connectivity(const SimplicialComplex& k, int m, const Caps& caps) {
  if (m <= -2) return true;
  if (k.is_void()) return false;
  const HomologyProfile h = reduced_homology(k, caps);
  for (auto [d, b] : h.betti) {
    if (d <= m && b != 0) return false;
  }
  for (const auto& [d, t] : h.torsion) {
    if (d <= m) return false;
  }
  return true;
}

}  // namespace mtw
