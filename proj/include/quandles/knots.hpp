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

#include <optional>

#include "quandles/alexander.hpp"

namespace quandles {

class UnsupportedTwistError : public Error {
 public:
  using Error::Error;
};

/// Knot quandle of the m-twist-spun trefoil, 1 <= m <= 5. It is the
/// generalized Alexander quandle (G_m, phi_m) on the fundamental group of
/// the fiber: the trivial group, Z/3, the quaternion group, SL(2,3), or
/// SL(2,5) for m = 1..5, giving orders 1, 3, 8, 24, 120. For m >= 6 the
/// quandle is infinite and the call is rejected.
Quandle twist_spun_trefoil_quandle(int m);

/// The monodromy used for twist_spun_trefoil_quandle(m). For m = 1 it is
/// the identity and for m = 2 the standard involution of Z/3; for
/// m = 3, 4, 5 it is the canonical choice among monodromy_candidates(m)
/// (the lexicographically least permutation).
const GroupAutomorphism& trefoil_monodromy(int m);

/// All automorphisms of G_m of order exactly m whose generalized
/// Alexander quandle is connected, m in {3, 4, 5}. Connectivity is the
/// necessary screen: the knot quandle of a knot is connected. Which
/// candidate is the geometric monodromy is not decided here; the list is
/// deterministic (lexicographic) and every member has the right order
/// and cardinality.
std::vector<GroupAutomorphism> monodromy_candidates(int m);

/// Knot quandle of the 2-twist-spun 2-bridge knot of type (p, q):
/// p odd >= 3, gcd(p, q) = 1, |q| < p. The result is the generalized
/// Alexander quandle (Z/p, inversion), whose table does not depend on q;
/// q is validated and recorded in the name only.
Quandle twist_spun_two_bridge_quandle(int p, int q);

/// Whether the 2-twist-spun 2-bridge knots of types (p, q) and (p, q')
/// are equivalent: q' == +-q^(+-1) (mod p).
bool two_bridge_equivalent(int p, int q, int q_prime);

/// One equivalence class of 2-bridge parameters: residues closed under
/// negation and inversion mod p, sorted ascending (minimal representative
/// first).
struct TwoBridgeClass {
  int p = 0;
  std::vector<int> representatives;
};

/// Partition of the units mod p (p odd >= 3) into equivalence classes,
/// ordered by minimal representative.
std::vector<TwoBridgeClass> equivalence_classes(int p);

/// l mutually inequivalent 2-bridge parameters sharing one knot quandle.
struct KnotTuple {
  int p = 0;
  std::vector<int> q;  // minimal representative of each class, l of them
};

/// Smallest odd p <= p_max with at least l equivalence classes, together
/// with the minimal representative of each of the first l classes. The
/// corresponding 2-twist-spun knots are pairwise inequivalent but share
/// the dihedral quandle of order p. nullopt when no p <= p_max suffices.
std::optional<KnotTuple> find_tuple(int l, int p_max);

}  // namespace quandles
