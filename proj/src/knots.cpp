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

#include "quandles/knots.hpp"

#include <algorithm>
#include <numeric>

#include "quandles/quandle.hpp"

namespace quandles {

namespace {

FiniteGroup fiber_group(int m) {
  switch (m) {
    case 1:
      return cyclic_group(1);
    case 2:
      return cyclic_group(3);
    case 3:
      return quaternion_group();
    case 4:
      return special_linear_group(3);
    case 5:
      return special_linear_group(5);
    default:
      throw Error("no fiber group for m = " + std::to_string(m));
  }
}

GroupAutomorphism compute_monodromy(int m) {
  if (m == 1) return identity_automorphism(cyclic_group(1));
  if (m == 2) return inversion_automorphism(cyclic_group(3));
  auto candidates = monodromy_candidates(m);
  if (candidates.empty()) {
    throw Error("no connected order-" + std::to_string(m) +
                " monodromy candidate exists");
  }
  // candidates are sorted lexicographically; take the least
  return candidates.front();
}

void validate_two_bridge(int p, int q) {
  if (p < 3 || p % 2 == 0) {
    throw Error("2-bridge parameter p must be odd and >= 3, got " +
                std::to_string(p));
  }
  if (q <= -p || q >= p) {
    throw Error("2-bridge parameter q must satisfy |q| < p");
  }
  if (std::gcd(p, q) != 1) {
    throw Error("2-bridge parameters must be coprime, got (" +
                std::to_string(p) + ", " + std::to_string(q) + ")");
  }
}

// Inverse of a unit mod p via the extended Euclidean algorithm (p need
// not be prime).
int mod_inverse(int q, int p) {
  int old_r = q % p, r = p;
  int old_s = 1, s = 0;
  while (r != 0) {
    const int quot = old_r / r;
    int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && old_r != -1) {
    throw Error(std::to_string(q) + " is not invertible mod " +
                std::to_string(p));
  }
  int inv = old_r == 1 ? old_s : -old_s;
  return ((inv % p) + p) % p;
}

}  // namespace

std::vector<GroupAutomorphism> monodromy_candidates(int m) {
  if (m < 3 || m > 5) {
    throw Error("monodromy candidates are searched for m in {3, 4, 5}");
  }
  const FiniteGroup g = fiber_group(m);
  std::vector<GroupAutomorphism> result;
  for (auto& phi : enumerate_automorphisms_of_order(g, m, /*exact=*/true)) {
    if (is_connected(alexander_quandle(g, phi))) {
      result.push_back(std::move(phi));
    }
  }
  return result;
}

const GroupAutomorphism& trefoil_monodromy(int m) {
  if (m < 1 || m > 5) {
    throw UnsupportedTwistError("monodromy available for m in 1..5 only");
  }
  static const GroupAutomorphism cached[5] = {
      compute_monodromy(1), compute_monodromy(2), compute_monodromy(3),
      compute_monodromy(4), compute_monodromy(5)};
  return cached[m - 1];
}

Quandle twist_spun_trefoil_quandle(int m) {
  if (m < 1) {
    throw UnsupportedTwistError("twist parameter must be >= 1, got " +
                                std::to_string(m));
  }
  if (m > 5) {
    throw UnsupportedTwistError(
        "m = " + std::to_string(m) +
        " is out of range: the knot quandle of the m-twist-spun trefoil "
        "is infinite for m >= 6");
  }
  const GroupAutomorphism& phi = trefoil_monodromy(m);
  Quandle q = alexander_quandle(*phi.group, phi);
  return Quandle(q.order(), q.table(), "trefoil-" + std::to_string(m));
}

Quandle twist_spun_two_bridge_quandle(int p, int q) {
  validate_two_bridge(p, q);
  const FiniteGroup g = cyclic_group(p);
  Quandle result = alexander_quandle(g, inversion_automorphism(g));
  return Quandle(result.order(), result.table(),
                 "twobridge-" + std::to_string(p) + "-" + std::to_string(q));
}

bool two_bridge_equivalent(int p, int q, int q_prime) {
  validate_two_bridge(p, q);
  validate_two_bridge(p, q_prime);
  const int qm = ((q % p) + p) % p;
  const int qpm = ((q_prime % p) + p) % p;
  const int inv = mod_inverse(qm, p);
  return qpm == qm || qpm == p - qm || qpm == inv || qpm == p - inv;
}

std::vector<TwoBridgeClass> equivalence_classes(int p) {
  if (p < 3 || p % 2 == 0) {
    throw Error("equivalence classes are defined for odd p >= 3");
  }
  std::vector<char> seen(p, 0);
  std::vector<TwoBridgeClass> classes;
  for (int r = 1; r < p; ++r) {
    if (seen[r] || std::gcd(r, p) != 1) continue;
    // close {r} under negation and inversion mod p
    std::vector<int> members = {r};
    seen[r] = 1;
    for (size_t i = 0; i < members.size(); ++i) {
      const int neg = p - members[i];
      const int inv = mod_inverse(members[i], p);
      for (int next : {neg, inv}) {
        if (!seen[next]) {
          seen[next] = 1;
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back({p, std::move(members)});
  }
  return classes;
}

std::optional<KnotTuple> find_tuple(int l, int p_max) {
  if (l < 2) throw Error("tuple length must be >= 2");
  for (int p = 3; p <= p_max; p += 2) {
    const auto classes = equivalence_classes(p);
    if (static_cast<int>(classes.size()) < l) continue;
    KnotTuple tuple;
    tuple.p = p;
    for (int i = 0; i < l; ++i) {
      tuple.q.push_back(classes[i].representatives.front());
    }
    return tuple;
  }
  return std::nullopt;
}

}  // namespace quandles
