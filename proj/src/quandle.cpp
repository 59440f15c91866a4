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

#include "quandles/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quandles/permutation.hpp"
#include "table_text.hpp"

namespace quandles {

Quandle::Quandle(int order, std::vector<int> op, std::string name)
    : order_(order), name_(std::move(name)), op_(std::move(op)) {
  if (order_ < 1) throw Error("quandle order must be >= 1");
  if (op_.size() != static_cast<size_t>(order_) * order_) {
    throw Error("operation table size does not match order " +
                std::to_string(order_));
  }
  for (int v : op_) {
    if (v < 0 || v >= order_) {
      throw Error("operation table entry " + std::to_string(v) +
                  " out of range");
    }
  }
}

QuandleReport validate_quandle(const Quandle& q) {
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    if (q.op(x, x) != x) {
      return {false, QuandleAxiom::Q1, x, -1, -1,
              "Q1 fails: " + std::to_string(x) + " * " + std::to_string(x) +
                  " = " + std::to_string(q.op(x, x))};
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<int> seen_at(n, -1);
    for (int x = 0; x < n; ++x) {
      const int v = q.op(x, y);
      if (seen_at[v] != -1) {
        return {false, QuandleAxiom::Q2, x, y, -1,
                "Q2 fails: column " + std::to_string(y) + " maps both " +
                    std::to_string(seen_at[v]) + " and " + std::to_string(x) +
                    " to " + std::to_string(v)};
      }
      seen_at[v] = x;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = q.op(x, y);
      for (int z = 0; z < n; ++z) {
        if (q.op(xy, z) != q.op(q.op(x, z), q.op(y, z))) {
          return {false, QuandleAxiom::Q3, x, y, z,
                  "Q3 fails at (" + std::to_string(x) + ", " +
                      std::to_string(y) + ", " + std::to_string(z) + ")"};
        }
      }
    }
  }
  return {};
}

Quandle trivial_quandle(int p) {
  if (p < 1) throw Error("trivial quandle order must be >= 1");
  std::vector<int> op(static_cast<size_t>(p) * p);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) op[x * p + y] = x;
  }
  return Quandle(p, std::move(op), "trivial-" + std::to_string(p));
}

Quandle dihedral_quandle(int p) {
  if (p < 2) throw Error("dihedral quandle order must be >= 2");
  std::vector<int> op(static_cast<size_t>(p) * p);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) op[x * p + y] = ((2 * y - x) % p + p) % p;
  }
  return Quandle(p, std::move(op), "dihedral-" + std::to_string(p));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> orbits(const Quandle& q) {
  const int n = q.order();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) uf.unite(x, q.op(x, y));
  }
  std::vector<std::vector<int>> by_root(n);
  for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> result;
  for (auto& orbit : by_root) {
    if (!orbit.empty()) result.push_back(std::move(orbit));
  }
  // members were collected in ascending order, so front() is the minimum
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

bool is_connected(const Quandle& q) { return orbits(q).size() == 1; }

ColumnPermutation column_permutation(const Quandle& q, int y) {
  if (y < 0 || y >= q.order()) throw Error("column index out of range");
  std::vector<int> perm(q.order());
  for (int x = 0; x < q.order(); ++x) perm[x] = q.op(x, y);
  auto type = cycle_type(perm);
  return {std::move(perm), std::move(type)};
}

Quandle relabel(const Quandle& q, const std::vector<int>& sigma,
                std::string name) {
  if (sigma.size() != static_cast<size_t>(q.order()) || !is_permutation(sigma)) {
    throw Error("relabeling must be a permutation of the quandle elements");
  }
  const int n = q.order();
  std::vector<int> op(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      op[sigma[x] * n + sigma[y]] = sigma[q.op(x, y)];
    }
  }
  return Quandle(n, std::move(op),
                 name.empty() ? q.name() + "-relabeled" : std::move(name));
}

std::string to_text(const Quandle& q) {
  std::ostringstream out;
  out << "quandle " << q.order() << ' ' << q.name() << '\n';
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) {
      if (y) out << ' ';
      out << q.op(x, y);
    }
    out << '\n';
  }
  return out.str();
}

Quandle parse_quandle_text(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError("empty quandle file", 1);
  auto header = detail::tokenize(lines[0].text);
  if (header.size() < 3 || header[0] != "quandle") {
    throw ParseError("expected header 'quandle <n> <name>'", lines[0].number);
  }
  const int n = detail::parse_index(header[1], lines[0].number);
  if (n < 1) throw ParseError("quandle order must be >= 1", lines[0].number);
  std::string name(lines[0].text.substr(
      header[2].data() - lines[0].text.data()));
  if (static_cast<int>(lines.size()) != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  }
  std::vector<int> op;
  op.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto row = detail::parse_row(lines[x + 1], n, n);
    op.insert(op.end(), row.begin(), row.end());
  }
  return Quandle(n, std::move(op), std::move(name));
}

}  // namespace quandles
