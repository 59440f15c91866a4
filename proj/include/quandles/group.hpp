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

#include <memory>
#include <string>
#include <vector>

#include "quandles/error.hpp"

namespace quandles {

class NotBijectiveError : public Error {
 public:
  using Error::Error;
};

/// Carries the first pair (a, b) with perm[a*b] != perm[a]*perm[b].
class NotHomomorphismError : public Error {
 public:
  NotHomomorphismError(const std::string& what, int a, int b)
      : Error(what), a(a), b(b) {}
  int a, b;
};

class IllFormedSubgroupError : public Error {
 public:
  using Error::Error;
};

/// A finite group stored as an explicit multiplication table.
///
/// Element 0 is always the two-sided identity. Construction verifies the
/// identity, associativity, and inverse axioms exhaustively and throws
/// Error on the first violation; an instance therefore always denotes a
/// genuine group. Immutable after construction.
class FiniteGroup {
 public:
  /// mult is the flattened n-by-n table, row a column b = a*b.
  FiniteGroup(int order, std::vector<int> mult, std::string name);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int mult(int a, int b) const { return mult_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  /// Order of an element: smallest t >= 1 with a^t = identity.
  int element_order(int a) const;

  /// Same order and identical multiplication table (names may differ).
  bool same_table(const FiniteGroup& other) const;

 private:
  int order_;
  std::string name_;
  std::vector<int> mult_;
  std::vector<int> inv_;
};

/// A validated automorphism of a finite group, stored as the permutation
/// of element indices. The group is shared so the value is self-contained.
struct GroupAutomorphism {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> perm;

  int apply(int a) const { return perm[a]; }
};

/// A validated subgroup: sorted member indices, contains the identity,
/// closed under multiplication and inverse.
struct Subgroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> members;

  int index_in_group() const {
    return group->order() / static_cast<int>(members.size());
  }
};

/// Z/pZ under addition, p >= 1. mult[a][b] = (a+b) mod p.
FiniteGroup cyclic_group(int p);

/// The quaternion group of order 8. Elements are indexed
/// 1, -1, i, -i, j, -j, k, -k (index 0 = 1), with i^2 = j^2 = k^2 = ijk = -1.
FiniteGroup quaternion_group();

/// SL(2, F_q) for q in {3, 5}: all 2x2 matrices over the q-element field
/// with determinant 1. Element 0 is the identity matrix; the rest are
/// ordered lexicographically by their entries (a, b, c, d).
FiniteGroup special_linear_group(int q);

/// Validates perm as an automorphism of g. Throws NotBijectiveError or
/// NotHomomorphismError (with the first violating pair).
GroupAutomorphism automorphism_from_permutation(const FiniteGroup& g,
                                                std::vector<int> perm);

GroupAutomorphism identity_automorphism(const FiniteGroup& g);

/// The map a -> a^-1, validated. An automorphism only when g is abelian.
GroupAutomorphism inversion_automorphism(const FiniteGroup& g);

/// Smallest t >= 1 with perm^t = identity.
int automorphism_order(const GroupAutomorphism& a);

/// The subgroup {g : perm[g] = g} of elements fixed by the automorphism.
Subgroup fixed_subgroup(const GroupAutomorphism& a);

/// Validates a member list as a subgroup of g (sorted, deduplicated).
/// Throws IllFormedSubgroupError when not closed or missing the identity.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members);

/// All automorphisms of g, found by backtracking on the images of a
/// greedily chosen generating set. Sorted lexicographically by
/// permutation. Requires g.order() <= 120.
std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g);

/// Automorphisms whose order divides m, or equals m exactly when
/// exact is set. Sorted lexicographically by permutation.
std::vector<GroupAutomorphism> enumerate_automorphisms_of_order(
    const FiniteGroup& g, int m, bool exact = false);

// Text formats.
//   group:        line 1 "group <n> <name>", then n rows of n indices.
//   automorphism: line 1 "aut <n>", line 2 the permutation.
std::string to_text(const FiniteGroup& g);
std::string to_text(const GroupAutomorphism& a);
FiniteGroup parse_group_text(const std::string& text);
/// Returns the raw permutation; bind it to a group with
/// automorphism_from_permutation.
std::vector<int> parse_automorphism_text(const std::string& text);

}  // namespace quandles
