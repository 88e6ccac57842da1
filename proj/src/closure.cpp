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

#include "mtw/closure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mtw/parallel.hpp"

namespace mtw {
namespace {

void require_cap(const PiSpace& m, const Caps& caps) {
  if (m.size() > caps.max_ground) {
    throw Error(ErrorKind::kCapExceeded, "ground size " + std::to_string(m.size()) + " exceeds enumeration cap " +
                                             std::to_string(caps.max_ground));
  }
}

bool flat_order(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.members < b.members;
}

FlatsLattice finish(std::vector<Flat> elements) {
  std::sort(elements.begin(), elements.end(), flat_order);
  FlatsLattice lattice;
  lattice.elements = std::move(elements);
  lattice.covers = inclusion_covers(lattice.sets());
  return lattice;
}

std::string set_str(Subset s) { return to_string(s); }

}  // namespace

std::vector<std::pair<int, int>> inclusion_covers(const std::vector<Subset>& elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<int> by_size(n);
  for (int i = 0; i < n; ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int a, int b) { return elements[a].size() < elements[b].size(); });
  std::vector<std::vector<int>> ups(n);
  parallel_for(n, [&](std::size_t i) {
    std::vector<int> found;
    for (int j : by_size) {
      if (elements[j] == elements[i] || !elements[i].is_subset_of(elements[j])) continue;
      bool blocked = false;
      for (int c : found) {
        if (elements[c].is_subset_of(elements[j])) {
          blocked = true;
          break;
        }
      }
      if (!blocked) found.push_back(j);
    }
    std::sort(found.begin(), found.end());
    ups[i] = std::move(found);
  });
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j : ups[i]) covers.emplace_back(i, j);
  }
  return covers;
}

std::optional<int> FlatsLattice::index_of(Subset s) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].members == s) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<Subset> FlatsLattice::sets() const {
  std::vector<Subset> out;
  out.reserve(elements.size());
  for (const auto& f : elements) out.push_back(f.members);
  return out;
}

FlatsLattice make_lattice(std::vector<Flat> elements) { return finish(std::move(elements)); }

Subset greedy_basis(const PiSpace& m, Subset x) {
  Subset basis;
  x.for_each([&](int i) {
    if (m.independent(basis.with(i))) basis = basis.with(i);
  });
  return basis;
}

int rank_of(const PiSpace& m, Subset x) { return greedy_basis(m, x).size(); }

Subset loops(const PiSpace& m) {
  Subset out;
  for (int x = 0; x < m.size(); ++x) {
    if (!m.independent(Subset::singleton(x))) out = out.with(x);
  }
  return out;
}

std::vector<Circuit> circuits(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  std::vector<Circuit> out;
  const int n = m.size();
  // Every circuit C is (C - max C) + max C with C - max C independent.
  for_each_independent(m, m.ground().all(), [&](Subset sigma) {
    for (int x = sigma.max_element() + 1; x < n; ++x) {
      Subset c = sigma.with(x);
      if (m.independent(c)) continue;
      bool minimal = true;
      sigma.for_each([&](int y) {
        if (minimal && !m.independent(c.without(y))) minimal = false;
      });
      if (minimal) out.push_back({c});
    }
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.members < b.members; });
  return out;
}

Subset closure_from_circuits(const std::vector<Circuit>& cs, Subset x) {
  Subset out = x;
  for (const auto& c : cs) {
    Subset outside = c.members - x;
    if (outside.size() == 1) out |= outside;
  }
  return out;
}

Subset closure(const PiSpace& m, Subset x, ClosureStrategy strategy, const Caps& caps) {
  if (!x.is_subset_of(m.ground().all())) {
    throw Error(ErrorKind::kOutOfRange, "subset " + to_string(x) + " exceeds the ground set");
  }
  if (strategy == ClosureStrategy::kCircuit) return closure_from_circuits(circuits(m, caps), x);
  if (!m.matroid_by_construction()) {
    // Greedy rank is unreliable here. A circuit through y inside X + y exists
    // iff some independent sigma in X has sigma + y dependent.
    Subset out = x;
    for (int y = 0; y < m.size(); ++y) {
      if (x.contains(y)) continue;
      bool found = false;
      for_each_independent(m, x, [&](Subset sigma) {
        if (!found && !m.independent(sigma.with(y))) found = true;
        return !found;
      });
      if (found) out = out.with(y);
    }
    return out;
  }
  const int r = rank_of(m, x);
  Subset out = x;
  for (int y = 0; y < m.size(); ++y) {
    if (!x.contains(y) && rank_of(m, x.with(y)) == r) out = out.with(y);
  }
  return out;
}

bool is_closed(const PiSpace& m, Subset f) { return closure(m, f) == f; }

bool is_flat(const PiSpace& m, Subset f, const Caps& caps) {
  require_cap(m, caps);
  if (!f.is_subset_of(m.ground().all())) {
    throw Error(ErrorKind::kOutOfRange, "subset " + to_string(f) + " exceeds the ground set");
  }
  const Subset outside = m.ground().all() - f;
  const bool all_sigma = m.size() <= 12;
  bool flat = true;
  for_each_independent(m, f, [&](Subset sigma) {
    if (!flat) return false;
    bool maximal = true;
    f.for_each([&](int y) {
      if (maximal && !sigma.contains(y) && m.independent(sigma.with(y))) maximal = false;
    });
    if (all_sigma || maximal) {
      outside.for_each([&](int x) {
        if (flat && !m.independent(sigma.with(x))) flat = false;
      });
    }
    return flat;
  });
  return flat;
}

FlatsLattice flats_by_independent_closure(const PiSpace& m, const Caps& caps) {
  require_cap(m, caps);
  std::set<Subset> seen;
  std::vector<Flat> elements;
  for_each_independent(m, m.ground().all(), [&](Subset sigma) {
    Subset c = closure(m, sigma);
    if (seen.insert(c).second) elements.push_back({c, sigma.size()});
    return true;
  });
  return finish(std::move(elements));
}

FlatsLattice flats(const PiSpace& m, const Caps& caps) {
  if (!m.matroid_by_construction()) return flats_by_independent_closure(m, caps);
  require_cap(m, caps);
  // Every flat of rank k + 1 is Cl(sigma + x) for a basis sigma of a rank-k
  // flat F and some x outside F.
  std::vector<Flat> elements;
  std::vector<Subset> layer{closure(m, Subset())};
  for (int k = 0; !layer.empty(); ++k) {
    for (Subset f : layer) elements.push_back({f, k});
    std::vector<std::vector<Subset>> next_parts(layer.size());
    parallel_for(layer.size(), [&](std::size_t i) {
      Subset f = layer[i];
      Subset sigma = greedy_basis(m, f);
      for (int x = 0; x < m.size(); ++x) {
        if (!f.contains(x)) next_parts[i].push_back(closure(m, sigma.with(x)));
      }
    });
    std::set<Subset> next;
    for (auto& part : next_parts) next.insert(part.begin(), part.end());
    layer.assign(next.begin(), next.end());
  }
  return finish(std::move(elements));
}

Flat meet(const PiSpace& m, const Flat& f, const Flat& g) {
  Subset s = f.members & g.members;
  return {s, rank_of(m, s)};
}

Flat join(const PiSpace& m, const Flat& f, const Flat& g) {
  Subset sigma = greedy_basis(m, f.members);
  Subset tau = greedy_basis(m, g.members);
  Subset s = closure(m, sigma | tau);
  return {s, rank_of(m, s)};
}

Subset join_upper_bounds(const FlatsLattice& lattice, Subset f, Subset g) {
  Subset both = f | g;
  std::optional<Subset> acc;
  for (const auto& e : lattice.elements) {
    if (both.is_subset_of(e.members)) acc = acc ? (*acc & e.members) : e.members;
  }
  return acc.value_or(both);
}

GeometricReport verify_geometric(const PiSpace& m, const FlatsLattice& lattice) {
  GeometricReport report;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (report.witnesses.size() < 32) report.witnesses.push_back(why);
  };
  const auto& els = lattice.elements;
  if (els.empty()) {
    fail(report.lattice, "lattice: no elements");
    report.ranked = report.atomistic = report.semimodular = false;
    return report;
  }
  const Subset ground = m.ground().all();
  std::set<Subset> members;
  for (const auto& e : els) members.insert(e.members);
  if (els[lattice.bottom()].members != loops(m)) fail(report.lattice, "lattice: bottom is not the loop set");
  if (els[lattice.top()].members != ground) fail(report.lattice, "lattice: top is not the ground set");
  for (const auto& e : els) {
    if (!is_closed(m, e.members)) fail(report.lattice, "lattice: " + set_str(e.members) + " is not a flat");
  }

  const int n = static_cast<int>(els.size());
  std::vector<std::vector<int>> ups(n);
  for (auto [lo, hi] : lattice.covers) ups[lo].push_back(hi);
  for (int i = 0; i < n; ++i) {
    Subset f = els[i].members;
    if (f == ground) continue;
    Subset seen;
    bool disjoint = true;
    for (int j : ups[i]) {
      Subset part = els[j].members - f;
      if (part.intersects(seen)) disjoint = false;
      seen |= part;
    }
    if (!disjoint || seen != ground - f) {
      fail(report.lattice, "lattice: covers of " + set_str(f) + " do not partition its complement");
    }
  }

  if (rank_of(m, els[lattice.bottom()].members) != 0) fail(report.ranked, "ranked: bottom has positive rank");
  for (const auto& e : els) {
    if (rank_of(m, e.members) != e.rank) {
      fail(report.ranked, "ranked: label of " + set_str(e.members) + " differs from its rank");
    }
  }
  for (auto [lo, hi] : lattice.covers) {
    if (rank_of(m, els[hi].members) != rank_of(m, els[lo].members) + 1) {
      fail(report.ranked, "ranked: cover " + set_str(els[lo].members) + " < " + set_str(els[hi].members) +
                              " is not a rank step");
    }
  }

  std::vector<Subset> atoms;
  for (int j : ups[lattice.bottom()]) atoms.push_back(els[j].members);
  for (const auto& e : els) {
    Subset spanned = els[lattice.bottom()].members;
    std::optional<Subset> acc;
    bool any = false;
    for (Subset a : atoms) {
      if (!a.is_subset_of(e.members)) continue;
      any = true;
      spanned |= a;
    }
    if (any) {
      for (const auto& u : els) {
        if (spanned.is_subset_of(u.members)) acc = acc ? (*acc & u.members) : u.members;
      }
      spanned = acc.value_or(spanned);
    }
    if (spanned != e.members) {
      fail(report.atomistic, "atomistic: " + set_str(e.members) + " is not the join of its atoms");
    }
  }

  std::vector<std::vector<std::string>> row_failures(n);
  std::vector<std::uint8_t> meet_missing(n);
  parallel_for(n, [&](std::size_t i) {
    for (int j = static_cast<int>(i); j < n; ++j) {
      Subset f = els[i].members;
      Subset g = els[j].members;
      Subset mt = f & g;
      if (members.count(mt) == 0) meet_missing[i] = 1;
      Subset jn = join_upper_bounds(lattice, f, g);
      if (rank_of(m, f) + rank_of(m, g) < rank_of(m, jn) + rank_of(m, mt)) {
        row_failures[i].push_back("semimodular: " + set_str(f) + ", " + set_str(g));
      }
    }
  });
  for (int i = 0; i < n; ++i) {
    if (meet_missing[i]) fail(report.lattice, "lattice: an intersection with " + set_str(els[i].members) + " is missing");
    for (const auto& w : row_failures[i]) fail(report.semimodular, w);
  }
  return report;
}

GeometricReport verify_geometric(const PiSpace& m, const Caps& caps) {
  return verify_geometric(m, flats(m, caps));
}

PiSpace contract_with(const PiSpace& m, Subset keep, Subset tau) {
  if (!keep.is_subset_of(m.ground().all())) {
    throw Error(ErrorKind::kOutOfRange, "subset " + to_string(keep) + " exceeds the ground set");
  }
  auto positions = positions_of(keep);
  return PiSpace(m.ground().sub(positions),
                 [m, positions, tau](Subset s) { return m.independent(expand(s, positions) | tau); },
                 "derived(contract," + m.provenance() + ")", m.matroid_by_construction());
}

PiSpace contract(const PiSpace& m, Subset keep) {
  if (!keep.is_subset_of(m.ground().all())) {
    throw Error(ErrorKind::kOutOfRange, "subset " + to_string(keep) + " exceeds the ground set");
  }
  return contract_with(m, keep, greedy_basis(m, m.ground().all() - keep));
}

bool upper_interval_check(const PiSpace& m, const Flat& f, const Caps& caps) {
  if (!is_closed(m, f.members)) {
    throw Error(ErrorKind::kInvalidSpec, set_str(f.members) + " is not a flat");
  }
  const Subset rest = m.ground().all() - f.members;
  const FlatsLattice upper = flats(m, caps);
  const auto positions = positions_of(rest);
  const FlatsLattice target = flats(contract(m, rest), caps);

  std::vector<Subset> domain, image;
  for (const auto& g : upper.elements) {
    if (!f.members.is_subset_of(g.members)) continue;
    domain.push_back(g.members);
    image.push_back(compress(g.members - f.members, positions));
  }
  if (domain.size() != target.elements.size()) return false;
  std::set<Subset> hit;
  for (Subset s : image) {
    if (!target.index_of(s)) return false;
    hit.insert(s);
  }
  if (hit.size() != domain.size()) return false;
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = 0; b < domain.size(); ++b) {
      if (domain[a].is_subset_of(domain[b]) != image[a].is_subset_of(image[b])) return false;
    }
  }
  return true;
}

Flat phi(const PiSpace& m, Subset sigma) {
  if (!is_independent(m, sigma)) {
    throw Error(ErrorKind::kDependentSeed, "phi of dependent set " + set_str(sigma));
  }
  return {closure(m, sigma), sigma.size()};
}

ClosedSetPoset closed_sets(const PiSpace& m, const Caps& caps) {
  std::vector<Subset> elements;
  if (m.size() <= 16) {
    const std::uint64_t total = std::uint64_t{1} << m.size();
    std::vector<std::uint8_t> closed(total);
    parallel_for(total, [&](std::size_t b) { closed[b] = closure(m, Subset(b)) == Subset(b) ? 1 : 0; });
    for (std::uint64_t b = 0; b < total; ++b) {
      if (closed[b]) elements.emplace_back(b);
    }
  } else if (m.matroid_by_construction()) {
    elements = flats(m, caps).sets();
  } else {
    throw Error(ErrorKind::kCapExceeded, "closed-set scan needs a ground of at most 16 elements");
  }
  std::vector<std::pair<int, Subset>> keyed;
  for (Subset s : elements) keyed.emplace_back(rank_of(m, s), s);
  std::sort(keyed.begin(), keyed.end());
  ClosedSetPoset poset;
  for (auto& [r, s] : keyed) poset.elements.push_back(s);
  poset.covers = inclusion_covers(poset.elements);
  return poset;
}

}  // namespace mtw
