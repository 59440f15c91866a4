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

#include <array>
#include <memory>

#include "quandles/group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

/// Thrown when a subgroup used for a quotient contains an element moved
/// by the automorphism. Carries the first such element.
class SubgroupNotFixedError : public Error {
 public:
  SubgroupNotFixedError(const std::string& what, int element)
      : Error(what), element(element) {}
  int element;
};

/// Right cosets Hx of a subgroup, ordered by minimal element.
struct CosetSpace {
  std::shared_ptr<const FiniteGroup> group;
  Subgroup subgroup;
  std::vector<std::vector<int>> cosets;  // each sorted ascending
  std::vector<int> rep;                  // element -> coset index
};

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h);

/// The quandle on the underlying set of g with x * y = phi(x y^-1) y.
Quandle alexander_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);

/// The quandle on the right cosets H\G with Hx * Hy = H phi(x y^-1) y.
/// Requires phi to fix every element of h (SubgroupNotFixedError
/// otherwise). Well-definedness over representative choices is verified
/// exhaustively during construction.
Quandle quotient_quandle(const FiniteGroup& g, const GroupAutomorphism& phi,
                         const Subgroup& h);

/// Result of checking that Hx * Hy does not depend on the chosen
/// representatives. When the fixed-subgroup hypothesis fails the report
/// names the moved element; any independence counterexample is the tuple
/// (x, x', y, y') with Hx = Hx', Hy = Hy' but H phi(xy^-1)y != H phi(x'y'^-1)y'.
struct IndependenceReport {
  bool subgroup_fixed = true;
  int unfixed_element = -1;
  bool independent = true;
  std::array<int, 4> counterexample = {-1, -1, -1, -1};
};

IndependenceReport check_representative_independence(const FiniteGroup& g,
                                                     const GroupAutomorphism& phi,
                                                     const Subgroup& h);

}  // namespace quandles
