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

#include "quandles/error.hpp"

namespace quandles {

/// A finite quandle as a dense n-by-n operation table, op[x][y] = x * y.
/// The constructor checks entries are in range; axiom checking is
/// validate_quandle's job.
class Quandle {
 public:
  Quandle(int order, std::vector<int> op, std::string name);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int op(int x, int y) const { return op_[x * order_ + y]; }
  const std::vector<int>& table() const { return op_; }

  bool same_table(const Quandle& other) const {
    return order_ == other.order_ && op_ == other.op_;
  }

 private:
  int order_;
  std::string name_;
  std::vector<int> op_;
};

enum class QuandleAxiom { None, Q1, Q2, Q3 };

/// Outcome of an axiom check: either ok, or the first violated axiom with
/// a witnessing tuple (unused slots are -1).
struct QuandleReport {
  bool ok = true;
  QuandleAxiom violated = QuandleAxiom::None;
  int x = -1, y = -1, z = -1;
  std::string message;
};

/// Checks Q1 (idempotence), Q2 (each column is a bijection), and Q3
/// (right self-distributivity), in that order, exhaustively.
QuandleReport validate_quandle(const Quandle& q);

/// op[x][y] = x for all x, y.
Quandle trivial_quandle(int p);

/// op[x][y] = (2y - x) mod p, p >= 2. The order-1 case is the trivial
/// quandle of order 1 and is rejected here.
Quandle dihedral_quandle(int p);

/// Partition of {0..n-1} under the equivalence generated by
/// x ~ op[x][y] for all y (union-find, so column inverses are implied).
/// Orbits are sorted and listed by minimal element.
std::vector<std::vector<int>> orbits(const Quandle& q);

bool is_connected(const Quandle& q);

struct ColumnPermutation {
  std::vector<int> perm;        // x -> op[x][y]
  std::vector<int> cycle_type;  // cycle lengths, ascending
};

/// The right-translation permutation of column y, with its cycle type.
ColumnPermutation column_permutation(const Quandle& q, int y);

/// The quandle with op'[sigma[x]][sigma[y]] = sigma[op[x][y]].
Quandle relabel(const Quandle& q, const std::vector<int>& sigma,
                std::string name = "");

// Text format: line 1 "quandle <n> <name>", then n rows of n indices.
// Lines starting with '#' and blank lines are ignored on input.
std::string to_text(const Quandle& q);
Quandle parse_quandle_text(const std::string& text);

}  // namespace quandles
