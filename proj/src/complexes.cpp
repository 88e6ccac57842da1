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

#include "mtw/complexes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace mtw {

struct SimplicialComplex::FaceCache {
  std::mutex mu;
  bool filled = false;
  long long total = 0;
  std::vector<std::vector<Face>> by_dim;  // index d + 1
};

namespace {

bool is_subface(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void cap_faces(long long count, const Caps& caps, const char* what) {
  if (count > caps.max_faces) {
    throw Error(ErrorKind::kCapExceeded, std::string(what) + " count " + std::to_string(count) +
                                             " exceeds face cap " + std::to_string(caps.max_faces));
  }
}

std::string set_label(const GroundSet& ground, Subset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ",";
    out += ground.label(i);
    first = false;
  });
  return out + "}";
}

// Appends every k-element subset of f to out.
void k_subsets(const Face& f, int k, std::vector<Face>& out) {
  const int n = static_cast<int>(f.size());
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Face g(k);
    for (int i = 0; i < k; ++i) g[i] = f[idx[i]];
    out.push_back(std::move(g));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Face> generators)
    : SimplicialComplex() {
  for (Face& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  std::sort(generators.begin(), generators.end(),
            [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Face> kept;
  for (Face& g : generators) {
    bool nested = false;
    for (const Face& k : kept) {
      if (k.size() > g.size() && is_subface(g, k)) {
        nested = true;
        break;
      }
    }
    if (!nested) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  *this = from_facets(std::move(vertex_labels), std::move(kept));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_labels, std::vector<Face> facets) {
  SimplicialComplex k;
  k.labels_ = std::move(vertex_labels);
  k.facets_ = std::move(facets);
  k.dimension_ = -1;
  k.facets_by_vertex_.assign(k.labels_.size(), {});
  for (std::size_t i = 0; i < k.facets_.size(); ++i) {
    const Face& f = k.facets_[i];
    k.dimension_ = std::max(k.dimension_, static_cast<int>(f.size()) - 1);
    for (int v : f) {
      if (v < 0 || v >= k.vertex_count()) {
        throw Error(ErrorKind::kOutOfRange, "facet vertex " + std::to_string(v) + " has no label");
      }
      k.facets_by_vertex_[v].push_back(static_cast<int>(i));
    }
  }
  return k;
}

const std::vector<std::vector<Face>>& SimplicialComplex::all_faces(const Caps& caps) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->filled) {
    std::vector<std::vector<Face>> by_dim;
    long long total = 0;
    for (const Face& f : facets_) {
      if (f.size() > 40) cap_faces(caps.max_faces + 1, caps, "face");
    }
    for (int d = -1; d <= dimension_; ++d) {
      std::vector<Face> layer;
      for (const Face& f : facets_) k_subsets(f, d + 1, layer);
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
      total += static_cast<long long>(layer.size());
      cap_faces(total, caps, "face");
      by_dim.push_back(std::move(layer));
    }
    cache_->by_dim = std::move(by_dim);
    cache_->total = total;
    cache_->filled = true;
  }
  cap_faces(cache_->total, caps, "face");
  return cache_->by_dim;
}

const std::vector<Face>& SimplicialComplex::faces(int d, const Caps& caps) const {
  if (d < -1 || d > dimension_) {
    throw Error(ErrorKind::kDimensionOutOfRange,
                "dimension " + std::to_string(d) + " outside -1.." + std::to_string(dimension_));
  }
  return all_faces(caps)[d + 1];
}

long long SimplicialComplex::face_count(const Caps& caps) const {
  all_faces(caps);
  return cache_->total;
}

bool SimplicialComplex::contains(const Face& f) const {
  if (is_void()) return false;
  if (f.empty()) return true;
  for (int v : f) {
    if (v < 0 || v >= vertex_count()) return false;
  }
  const std::vector<int>* best = &facets_by_vertex_[f[0]];
  for (int v : f) {
    if (facets_by_vertex_[v].size() < best->size()) best = &facets_by_vertex_[v];
  }
  for (int i : *best) {
    if (is_subface(f, facets_[i])) return true;
  }
  return false;
}

SimplicialComplex SimplicialComplex::link(const Face& sigma) const {
  std::vector<Face> out;
  auto take = [&](const Face& f) {
    if (!is_subface(sigma, f)) return;
    Face rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  };
  if (sigma.empty()) {
    for (const Face& f : facets_) take(f);
  } else {
    for (int v : sigma) {
      if (v < 0 || v >= vertex_count()) return from_facets(labels_, {});
    }
    const std::vector<int>* best = &facets_by_vertex_[sigma[0]];
    for (int v : sigma) {
      if (facets_by_vertex_[v].size() < best->size()) best = &facets_by_vertex_[v];
    }
    for (int i : *best) take(facets_[i]);
  }
  // Distinct facets containing sigma stay distinct and non-nested after
  // removing sigma.
  std::sort(out.begin(), out.end());
  return from_facets(labels_, std::move(out));
}

std::vector<long long> f_vector(const SimplicialComplex& k, const Caps& caps) {
  std::vector<long long> out;
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(static_cast<long long>(k.faces(d, caps).size()));
  return out;
}

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<int>> below)
    : labels_(std::move(labels)), below_(std::move(below)) {
  if (below_.size() != labels_.size()) {
    throw Error(ErrorKind::kInvalidSpec, "poset relation size does not match element count");
  }
  const int n = size();
  for (int i = 0; i < n; ++i) {
    auto& b = below_[i];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (int j : b) {
      if (j < 0 || j >= n) throw Error(ErrorKind::kInvalidSpec, "poset relation names unknown element");
      if (j == i) throw Error(ErrorKind::kInvalidSpec, "poset relation is not irreflexive at " + labels_[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j : below_[i]) {
      if (!std::includes(below_[i].begin(), below_[i].end(), below_[j].begin(), below_[j].end())) {
        throw Error(ErrorKind::kInvalidSpec,
                    "poset relation is not transitive at " + labels_[j] + " < " + labels_[i]);
      }
    }
  }
}

Poset Poset::from_predicate(std::vector<std::string> labels, const std::function<bool(int, int)>& less) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> below(n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (less(a, b)) below[b].push_back(a);
    }
  }
  return Poset(std::move(labels), std::move(below));
}

Poset Poset::of_sets(const std::vector<Subset>& sets, std::vector<std::string> labels) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<int>> below(n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (a != b && sets[a].is_subset_of(sets[b]) && sets[a] != sets[b]) below[b].push_back(a);
    }
  }
  return Poset(std::move(labels), std::move(below));
}

bool Poset::less(int a, int b) const { return std::binary_search(below_[b].begin(), below_[b].end(), a); }

std::vector<std::pair<int, int>> Poset::covers(const std::vector<bool>& excluded) const {
  const int n = size();
  auto out_of_play = [&](int i) { return !excluded.empty() && excluded[i]; };
  std::vector<std::pair<int, int>> out;
  std::vector<char> shadowed(n, 0);
  for (int b = 0; b < n; ++b) {
    if (out_of_play(b)) continue;
    for (int c : below_[b]) {
      if (out_of_play(c)) continue;
      for (int a : below_[c]) shadowed[a] = 1;
    }
    for (int a : below_[b]) {
      if (!out_of_play(a) && !shadowed[a]) out.emplace_back(a, b);
    }
    for (int c : below_[b]) {
      for (int a : below_[c]) shadowed[a] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Poset::height() const {
  // Elements are not assumed topologically sorted; longest chains by memoized
  // recursion over the down-sets.
  const int n = size();
  std::vector<int> longest(n, -1);
  std::function<int(int)> depth = [&](int i) {
    if (longest[i] >= 0) return longest[i];
    int best = 0;
    for (int j : below_[i]) best = std::max(best, depth(j) + 1);
    return longest[i] = best;
  };
  int h = -1;
  for (int i = 0; i < n; ++i) h = std::max(h, depth(i));
  return h;
}

SimplicialComplex order_complex(const Poset& p, const std::vector<int>& exclude, const Caps& caps) {
  const int n = p.size();
  std::vector<bool> excluded(n, false);
  for (int e : exclude) {
    if (e >= 0 && e < n) excluded[e] = true;
  }
  std::vector<int> vertex_of(n, -1);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    if (excluded[i]) continue;
    vertex_of[i] = static_cast<int>(labels.size());
    labels.push_back(p.labels()[i]);
  }
  std::vector<std::vector<int>> up(n);
  std::vector<bool> has_down(n, false);
  for (auto [a, b] : p.covers(excluded)) {
    up[a].push_back(b);
    has_down[b] = true;
  }
  std::vector<Face> facets;
  std::vector<int> chain;
  std::function<void(int)> walk = [&](int x) {
    chain.push_back(vertex_of[x]);
    if (up[x].empty()) {
      Face f(chain);
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
      cap_faces(static_cast<long long>(facets.size()), caps, "maximal chain");
    } else {
      for (int y : up[x]) walk(y);
    }
    chain.pop_back();
  };
  for (int i = 0; i < n; ++i) {
    if (!excluded[i] && !has_down[i]) walk(i);
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex independence_complex(const PiSpace& m, const Caps& caps) {
  std::vector<Subset> maximal = bases(m, caps);
  cap_faces(static_cast<long long>(maximal.size()), caps, "facet");
  std::sort(maximal.begin(), maximal.end());
  std::vector<Face> facets;
  facets.reserve(maximal.size());
  for (Subset s : maximal) facets.push_back(s.indices());
  return SimplicialComplex::from_facets(m.ground().labels(), std::move(facets));
}

Poset independence_poset(const PiSpace& m, const Caps& caps) {
  std::vector<Subset> sets;
  for (Subset s : independent_sets(m, caps)) {
    if (!s.empty()) sets.push_back(s);
  }
  std::vector<std::string> labels;
  for (Subset s : sets) labels.push_back(set_label(m.ground(), s));
  return Poset::of_sets(sets, std::move(labels));
}

Poset flats_poset(const PiSpace& m, const FlatsLattice& lattice) {
  std::vector<std::string> labels;
  for (const Flat& f : lattice.elements) labels.push_back(set_label(m.ground(), f.members));
  return Poset::of_sets(lattice.sets(), std::move(labels));
}

Poset closed_set_poset(const PiSpace& m, const ClosedSetPoset& closed) {
  std::vector<std::string> labels;
  for (Subset s : closed.elements) labels.push_back(set_label(m.ground(), s));
  return Poset::of_sets(closed.elements, std::move(labels));
}

SimplicialComplex proper_part_complex(const PiSpace& m, const FlatsLattice& lattice, const Caps& caps) {
  if (lattice.elements.empty()) return SimplicialComplex();
  return order_complex(flats_poset(m, lattice), {lattice.bottom(), lattice.top()}, caps);
}

SimplicialComplex proper_part_complex(const PiSpace& m, const ClosedSetPoset& closed, const Caps& caps) {
  if (closed.elements.empty()) return SimplicialComplex();
  std::vector<int> bounds;
  int bottom = 0;
  for (int i = 0; i < static_cast<int>(closed.elements.size()); ++i) {
    if (closed.elements[i].size() < closed.elements[bottom].size()) bottom = i;
    if (closed.elements[i] == m.ground().all()) bounds.push_back(i);
  }
  bounds.push_back(bottom);
  return order_complex(closed_set_poset(m, closed), bounds, caps);
}

std::vector<Word> words_of(const PiSpace& m, int max_letters, const Caps& caps) {
  const int length = max_letters < 0 ? m.rank() : std::min(max_letters, m.rank());
  if (length > caps.max_word_rank) {
    throw Error(ErrorKind::kCapExceeded, "word length " + std::to_string(length) + " exceeds word cap " +
                                             std::to_string(caps.max_word_rank));
  }
  std::vector<Word> words;
  for (Subset s : independent_sets(m, caps)) {
    if (s.empty() || s.size() > length) continue;
    std::vector<int> letters = s.indices();
    do {
      words.push_back(Word{letters});
      cap_faces(static_cast<long long>(words.size()), caps, "word");
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  });
  return words;
}

Poset injective_words(const PiSpace& m, int max_letters, const Caps& caps) {
  std::vector<Word> words = words_of(m, max_letters, caps);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(words.size()); ++i) index.emplace(words[i].letters, i);
  std::vector<std::vector<int>> below(words.size());
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(words.size()); ++i) {
    const std::vector<int>& w = words[i].letters;
    const int len = static_cast<int>(w.size());
    for (std::uint32_t mask = 1; mask + 1 < (1U << len); ++mask) {
      std::vector<int> sub;
      for (int j = 0; j < len; ++j) {
        if (mask >> j & 1U) sub.push_back(w[j]);
      }
      below[i].push_back(index.at(sub));
    }
    std::string label = "(";
    for (int j = 0; j < len; ++j) label += (j ? "," : "") + m.ground().label(w[j]);
    labels.push_back(label + ")");
  }
  return Poset(std::move(labels), std::move(below));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, const Caps& caps) {
  std::map<Face, int> vertex_of;
  std::vector<std::string> labels;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const Face& f : k.faces(d, caps)) {
      vertex_of.emplace(f, static_cast<int>(labels.size()));
      std::string label = "{";
      for (std::size_t i = 0; i < f.size(); ++i) label += (i ? "," : "") + k.vertex_labels()[f[i]];
      labels.push_back(label + "}");
    }
  }
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    if (f.empty()) continue;
    Face order(f);
    do {
      Face chain;
      Face prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(vertex_of.at(prefix));
      }
      std::sort(chain.begin(), chain.end());
      facets.push_back(std::move(chain));
      cap_faces(static_cast<long long>(facets.size()), caps, "facet");
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

bool barycentric_check(const PiSpace& m, const Caps& caps) {
  std::vector<Subset> sets;
  for (Subset s : independent_sets(m, caps)) {
    if (!s.empty()) sets.push_back(s);
  }
  const SimplicialComplex chains = order_complex(independence_poset(m, caps), {}, caps);
  const SimplicialComplex k = independence_complex(m, caps);
  const SimplicialComplex sd = barycentric_subdivision(k, caps);
  if (chains.is_void() || sd.is_void()) return chains.is_void() == sd.is_void();
  if (chains.vertex_count() != sd.vertex_count()) return false;
  if (f_vector(chains, caps) != f_vector(sd, caps)) return false;

  std::map<Face, int> sd_vertex;
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto& layer = k.faces(d, caps);
    for (const Face& f : layer) sd_vertex.emplace(f, static_cast<int>(sd_vertex.size()));
  }
  std::vector<int> image(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto it = sd_vertex.find(sets[i].indices());
    if (it == sd_vertex.end()) return false;
    image[i] = it->second;
  }
  std::vector<Face> mapped;
  for (const Face& f : chains.facets()) {
    Face g;
    for (int v : f) g.push_back(image[v]);
    std::sort(g.begin(), g.end());
    mapped.push_back(std::move(g));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == sd.facets();
}

}  // namespace mtw
