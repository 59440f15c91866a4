// Copyright 2026 The quandles Authors
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

#pragma once

#include <string>
#include <vector>

#include "quandles/quandle.hpp"

namespace quandles {

class OrderTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Relabeling-invariant fingerprint. Isomorphic quandles have equal
/// profiles; a mismatch is a cheap refutation.
struct InvariantProfile {
  int order = 0;
  std::vector<int> orbit_sizes;                      // sorted ascending
  std::vector<std::vector<int>> column_cycle_types;  // sorted multiset
  std::vector<int> fixed_point_counts;               // sorted ascending

  bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile profile(const Quandle& q);

/// Either a bijection witnessing an isomorphism (re-verified before it is
/// returned) or the name of the invariant that refutes one.
struct IsoCertificate {
  bool isomorphic = false;
  std::vector<int> bijection;  // f with f(x *_a y) = f(x) *_b f(y)
  std::string refutation;      // "order", "orbit_sizes", ...
};

/// True iff f is a bijection with f(x *_a y) = f(x) *_b f(y) for all x, y.
bool is_quandle_isomorphism(const Quandle& a, const Quandle& b,
                            const std::vector<int>& f);

/// Isomorphism decision. Profiles are compared first; otherwise a
/// backtracking search runs over partial bijections, ordering source
/// elements smallest-orbit-first and most-constrained-first, pruning
/// candidates by per-element column cycle type and orbit size, and
/// propagating f(x * y) = f(x) * f(y) to a fixpoint after every
/// assignment. Since inner automorphisms act transitively within each
/// orbit, the very first image only ranges over one representative per
/// orbit of b.
IsoCertificate are_isomorphic(const Quandle& a, const Quandle& b);

/// Ground-truth oracle: tries all n! bijections. Requires order <= 9
/// (OrderTooLargeError beyond that).
bool brute_force_isomorphic(const Quandle& a, const Quandle& b);

}  // namespace quandles
