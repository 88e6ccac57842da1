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

#ifndef MTW_GALLERY_HPP_
#define MTW_GALLERY_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mtw/errors.hpp"
#include "mtw/pispace.hpp"

namespace mtw {

// Ground set: the natural numbers, with a_n = 3n and b_n = 3n + 1 for n >= 1.
// The circuits are P_n = {a_m : m > n} + {b_1, ..., b_n}.
long long a_element(long long n);
long long b_element(long long n);

// Subsets of the naturals of the form
//   {a_m : m > a_tail} + {a_m : m in a_finite} + {b_m : m in b_finite} + rest.
// Without a tail the set is finite.
struct SymbolicSet {
  std::optional<long long> a_tail;
  std::set<long long> a_finite;
  std::set<long long> b_finite;
  std::set<long long> rest_finite;

  static SymbolicSet tail(long long t);
  bool contains(long long x) const;
  // Folds tail-adjacent a-indices into the tail; the result is canonical.
  SymbolicSet normalized() const;
  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;
};

std::string to_string(const SymbolicSet& x);

// The circuit family. With dropped_b = n0 the circuit P_{n0} loses b_{n0};
// the shrunken set then swallows P_{n0 - 1}, which stops being minimal.
struct AscChainFamily {
  std::optional<long long> dropped_b;

  static AscChainFamily standard() { return {}; }
  static AscChainFamily mutated(long long n0 = 2) { return AscChainFamily{n0}; }
  bool has_circuit(long long n) const;
  // Whether b_j lies in circuit n.
  bool circuit_has_b(long long n, long long j) const;
};

// Cl(X): X plus every x with x in C contained in X + {x} for some circuit C.
// Throws UnsupportedShape for sets outside the encoded family.
SymbolicSet asc_chain_closure(const SymbolicSet& x, const AscChainFamily& family = AscChainFamily::standard());

struct AscChainStep {
  long long n = 0;
  SymbolicSet x;
  SymbolicSet closure;
  bool law_holds = false;  // Cl(X_n) = X_n + {b_n}, strictly larger
  bool closed = false;
};

struct AscChainReport {
  bool ok = false;
  long long steps = 0;
  // First n where the chain law or non-closedness fails.
  std::optional<long long> failed_at;
  std::vector<AscChainStep> trace;
};

// Iterates X_1 = {a_m : m >= 2}, X_{n+1} = Cl(X_n).
AscChainReport verify_asc_chain(long long steps, const AscChainFamily& family = AscChainFamily::standard());

// Finite comparison instance on a_1..a_T, b_1..b_T with circuits
// {a_m : n < m <= T} + {b_1..b_n} for n <= T - 2.
PiSpace truncated_asc_chain(int t);
// Members of x among a_1..a_T, b_1..b_T, as a subset of truncated_asc_chain(T).
Subset truncate(const SymbolicSet& x, int t);

struct SweepRow {
  std::string family;
  int n = 0;
  int k = 0;
  bool verified = false;
  bool skipped = false;
  long long faces = 0;
  long long millis = 0;
};

// Families: boolean, uniform-half (uniform(n, ceil(n/2))), uniform:R, path
// and complete (graphic on n vertices).
FamilySpec sweep_family(const std::string& family, int n);
// For each n in [n_lo, n_hi]: the k-skeleton of the independence complex is
// checked for homological (k-1)-connectivity. Rows over a cap are skipped.
std::vector<SweepRow> connectivity_sweep(const std::string& family, int k, int n_lo, int n_hi,
                                         const Caps& caps = {});
std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_timing = true);

}  // namespace mtw

#endif  // MTW_GALLERY_HPP_
