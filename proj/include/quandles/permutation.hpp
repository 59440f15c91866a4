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

#include <vector>

namespace quandles {

/// True iff perm is a bijection on {0, ..., perm.size()-1}.
bool is_permutation(const std::vector<int>& perm);

/// Cycle lengths of a permutation, sorted ascending (a partition of n).
std::vector<int> cycle_type(const std::vector<int>& perm);

/// Composition: result[i] = outer[inner[i]].
std::vector<int> compose(const std::vector<int>& outer,
                         const std::vector<int>& inner);

/// Inverse permutation.
std::vector<int> inverse_permutation(const std::vector<int>& perm);

std::vector<int> identity_permutation(int n);

}  // namespace quandles
