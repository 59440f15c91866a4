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

#include "quandles/group.hpp"

#include <algorithm>
#include <sstream>

#include "quandles/permutation.hpp"
#include "table_text.hpp"

namespace quandles {

namespace {

constexpr int kMaxEnumerationOrder = 120;

std::string describe(const std::string& who, int a, int b) {
  return who + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name)
    : order_(order), name_(std::move(name)), mult_(std::move(table)) {
  if (order_ < 1) throw Error("group order must be >= 1");
  if (mult_.size() != static_cast<size_t>(order_) * order_) {
    throw Error("multiplication table size does not match order " +
                std::to_string(order_));
  }
  for (int v : mult_) {
    if (v < 0 || v >= order_) {
      throw Error("multiplication table entry " + std::to_string(v) +
                  " out of range");
    }
  }
  for (int a = 0; a < order_; ++a) {
    if (mult(0, a) != a || mult(a, 0) != a) {
      throw Error("element 0 is not a two-sided identity at " +
                  std::to_string(a));
    }
  }
  // orders stay <= 120 throughout, so all n^3 triples are checked
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = mult(a, b);
      for (int c = 0; c < order_; ++c) {
        if (mult(ab, c) != mult(a, mult(b, c))) {
          throw Error("associativity fails at (" + std::to_string(a) + ", " +
                      std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mult(a, b) == 0) {
        if (inv_[a] != -1) {
          throw Error("element " + std::to_string(a) +
                      " has more than one inverse");
        }
        inv_[a] = b;
      }
    }
    if (inv_[a] == -1) {
      throw Error("element " + std::to_string(a) + " has no inverse");
    }
    if (mult(inv_[a], a) != 0) {
      throw Error("inverse of " + std::to_string(a) + " is one-sided");
    }
  }
}

int FiniteGroup::element_order(int a) const {
  int t = 1;
  int x = a;
  while (x != 0) {
    x = mult(x, a);
    ++t;
  }
  return t;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && mult_ == other.mult_;
}

FiniteGroup cyclic_group(int p) {
  if (p < 1) throw Error("cyclic group order must be >= 1");
  std::vector<int> mult(static_cast<size_t>(p) * p);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) mult[a * p + b] = (a + b) % p;
  }
  return FiniteGroup(p, std::move(mult), "Z/" + std::to_string(p));
}

namespace {

// Quaternion units as (axis, sign): axis 0 is the real unit, axes 1..3
// are i, j, k; index layout 1, -1, i, -i, j, -j, k, -k.
int quat_axis(int idx) { return idx < 2 ? 0 : idx / 2; }
int quat_sign(int idx) { return idx & 1; }
int quat_index(int axis, int sign) {
  return axis == 0 ? sign : 2 * axis + sign;
}

int quat_mult(int x, int y) {
  const int ax = quat_axis(x), ay = quat_axis(y);
  int sign = quat_sign(x) ^ quat_sign(y);
  if (ax == 0) return quat_index(ay, sign);
  if (ay == 0) return quat_index(ax, sign);
  if (ax == ay) return quat_index(0, sign ^ 1);  // i^2 = j^2 = k^2 = -1
  const bool cyclic = ay == ax % 3 + 1;          // ij=k, jk=i, ki=j
  return quat_index(6 - ax - ay, sign ^ (cyclic ? 0 : 1));
}

}  // namespace

FiniteGroup quaternion_group() {
  std::vector<int> mult(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) mult[a * 8 + b] = quat_mult(a, b);
  }
  return FiniteGroup(8, std::move(mult), "Q8");
}

FiniteGroup special_linear_group(int q) {
  if (q != 3 && q != 5) {
    throw Error("special_linear_group supports q in {3, 5}, got " +
                std::to_string(q));
  }
  // Matrices ((a, b), (c, d)) with ad - bc = 1, identity first, the rest
  // in lexicographic order of (a, b, c, d).
  std::vector<std::array<int, 4>> elems;
  elems.push_back({1, 0, 0, 1});
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        for (int d = 0; d < q; ++d) {
          if (((a * d - b * c) % q + q) % q != 1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          elems.push_back({a, b, c, d});
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> index_of(q * q * q * q, -1);
  auto key = [q](const std::array<int, 4>& m) {
    return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
  };
  for (int i = 0; i < n; ++i) index_of[key(elems[i])] = i;

  std::vector<int> mult(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const auto& x = elems[i];
    for (int j = 0; j < n; ++j) {
      const auto& y = elems[j];
      std::array<int, 4> prod = {
          (x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
          (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
      mult[i * n + j] = index_of[key(prod)];
    }
  }
  return FiniteGroup(n, std::move(mult), "SL(2," + std::to_string(q) + ")");
}

GroupAutomorphism automorphism_from_permutation(const FiniteGroup& g,
                                                std::vector<int> perm) {
  if (perm.size() != static_cast<size_t>(g.order())) {
    throw Error("permutation length " + std::to_string(perm.size()) +
                " does not match group order " + std::to_string(g.order()));
  }
  if (!is_permutation(perm)) {
    throw NotBijectiveError("the map is not a bijection on group elements");
  }
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (perm[g.mult(a, b)] != g.mult(perm[a], perm[b])) {
        throw NotHomomorphismError(
            "not a homomorphism at " + describe("pair", a, b), a, b);
      }
    }
  }
  return GroupAutomorphism{std::make_shared<const FiniteGroup>(g),
                           std::move(perm)};
}

GroupAutomorphism identity_automorphism(const FiniteGroup& g) {
  return automorphism_from_permutation(g, identity_permutation(g.order()));
}

GroupAutomorphism inversion_automorphism(const FiniteGroup& g) {
  std::vector<int> perm(g.order());
  for (int a = 0; a < g.order(); ++a) perm[a] = g.inv(a);
  return automorphism_from_permutation(g, std::move(perm));
}

int automorphism_order(const GroupAutomorphism& a) {
  const std::vector<int> identity = identity_permutation(
      static_cast<int>(a.perm.size()));
  std::vector<int> power = a.perm;
  int t = 1;
  while (power != identity) {
    power = compose(a.perm, power);
    ++t;
  }
  return t;
}

Subgroup fixed_subgroup(const GroupAutomorphism& a) {
  std::vector<int> members;
  for (size_t i = 0; i < a.perm.size(); ++i) {
    if (a.perm[i] == static_cast<int>(i)) members.push_back(static_cast<int>(i));
  }
  Subgroup h = make_subgroup(*a.group, std::move(members));
  h.group = a.group;  // share rather than re-copy
  return h;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int m : members) {
    if (m < 0 || m >= g.order()) {
      throw IllFormedSubgroupError("member " + std::to_string(m) +
                                   " out of range");
    }
  }
  if (members.empty() || members.front() != 0) {
    throw IllFormedSubgroupError("a subgroup must contain the identity 0");
  }
  auto contains = [&members](int x) {
    return std::binary_search(members.begin(), members.end(), x);
  };
  for (int a : members) {
    if (!contains(g.inv(a))) {
      throw IllFormedSubgroupError("not closed under inverse at " +
                                   std::to_string(a));
    }
    for (int b : members) {
      if (!contains(g.mult(a, b))) {
        throw IllFormedSubgroupError("not closed under product at " +
                                     describe("pair", a, b));
      }
    }
  }
  return Subgroup{std::make_shared<const FiniteGroup>(g), std::move(members)};
}

namespace {

// Backtracking enumeration state: partial map on the subgroup generated
// by the generators assigned so far.
struct AutSearch {
  const FiniteGroup& g;
  std::vector<int> gens;
  std::vector<int> gen_order;
  std::vector<int> map;        // element -> image, -1 when undetermined
  std::vector<char> used;      // image already taken
  std::vector<int> known;      // determined elements, a closed subgroup
  std::vector<int> elem_order;
  std::vector<std::vector<int>>* out;
  std::shared_ptr<const FiniteGroup> shared;

  // Closes `map` over products of known elements. Verifies consistency on
  // every pair each round, so a clean fixpoint pass certifies the full
  // homomorphism property once `known` covers the whole group.
  bool close() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < known.size(); ++i) {
        for (size_t j = 0; j < known.size(); ++j) {
          const int a = known[i], b = known[j];
          const int c = g.mult(a, b);
          const int v = g.mult(map[a], map[b]);
          if (map[c] == -1) {
            if (used[v]) return false;
            map[c] = v;
            used[v] = 1;
            known.push_back(c);
            grew = true;
          } else if (map[c] != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void unwind(size_t mark) {
    while (known.size() > mark) {
      const int e = known.back();
      known.pop_back();
      used[map[e]] = 0;
      map[e] = -1;
    }
  }

  void extend(size_t idx) {
    if (idx == gens.size()) {
      out->push_back(map);
      return;
    }
    const int gen = gens[idx];
    for (int y = 0; y < g.order(); ++y) {
      if (used[y] || elem_order[y] != gen_order[idx]) continue;
      const size_t mark = known.size();
      map[gen] = y;
      used[y] = 1;
      known.push_back(gen);
      if (close()) extend(idx + 1);
      unwind(mark);
    }
  }
};

}  // namespace

std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw Error("automorphism enumeration is bounded to order <= " +
                std::to_string(kMaxEnumerationOrder));
  }
  const int n = g.order();

  std::vector<int> elem_order(n);
  for (int a = 0; a < n; ++a) elem_order[a] = g.element_order(a);

  // Greedy generating set: keep adding the smallest element outside the
  // subgroup generated so far.
  std::vector<char> generated(n, 0);
  generated[0] = 1;
  int generated_count = 1;
  std::vector<int> gens;
  auto close_generated = [&](int seed) {
    if (!generated[seed]) {
      generated[seed] = 1;
      ++generated_count;
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!generated[a]) continue;
        for (int b = 0; b < n; ++b) {
          if (!generated[b]) continue;
          const int c = g.mult(a, b);
          if (!generated[c]) {
            generated[c] = 1;
            ++generated_count;
            grew = true;
          }
        }
      }
    }
  };
  while (generated_count < n) {
    int next = 0;
    while (generated[next]) ++next;
    gens.push_back(next);
    close_generated(next);
  }

  std::vector<std::vector<int>> perms;
  AutSearch search{g, gens, {}, std::vector<int>(n, -1),
                   std::vector<char>(n, 0), {}, elem_order, &perms, nullptr};
  for (int gen : gens) search.gen_order.push_back(elem_order[gen]);
  search.map[0] = 0;
  search.used[0] = 1;
  search.known.push_back(0);
  search.extend(0);

  std::sort(perms.begin(), perms.end());
  auto shared = std::make_shared<const FiniteGroup>(g);
  std::vector<GroupAutomorphism> result;
  result.reserve(perms.size());
  for (auto& perm : perms) {
    result.push_back(GroupAutomorphism{shared, std::move(perm)});
  }
  return result;
}

std::vector<GroupAutomorphism> enumerate_automorphisms_of_order(
    const FiniteGroup& g, int m, bool exact) {
  if (m < 1) throw Error("automorphism order bound must be >= 1");
  std::vector<GroupAutomorphism> all = enumerate_automorphisms(g);
  std::vector<GroupAutomorphism> result;
  for (auto& a : all) {
    const int t = automorphism_order(a);
    if (exact ? t == m : m % t == 0) result.push_back(std::move(a));
  }
  return result;
}

std::string to_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.order() << ' ' << g.name() << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mult(a, b);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const GroupAutomorphism& a) {
  std::ostringstream out;
  out << "aut " << a.perm.size() << '\n';
  for (size_t i = 0; i < a.perm.size(); ++i) {
    if (i) out << ' ';
    out << a.perm[i];
  }
  out << '\n';
  return out.str();
}

FiniteGroup parse_group_text(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError("empty group file", 1);
  auto header = detail::tokenize(lines[0].text);
  if (header.size() < 3 || header[0] != "group") {
    throw ParseError("expected header 'group <n> <name>'", lines[0].number);
  }
  const int n = detail::parse_index(header[1], lines[0].number);
  if (n < 1) throw ParseError("group order must be >= 1", lines[0].number);
  std::string name(lines[0].text.substr(
      header[2].data() - lines[0].text.data()));
  if (static_cast<int>(lines.size()) != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  }
  std::vector<int> mult;
  mult.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto row = detail::parse_row(lines[a + 1], n, n);
    mult.insert(mult.end(), row.begin(), row.end());
  }
  return FiniteGroup(n, std::move(mult), std::move(name));
}

std::vector<int> parse_automorphism_text(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError("empty automorphism file", 1);
  auto header = detail::tokenize(lines[0].text);
  if (header.size() != 2 || header[0] != "aut") {
    throw ParseError("expected header 'aut <n>'", lines[0].number);
  }
  const int n = detail::parse_index(header[1], lines[0].number);
  if (n < 1) throw ParseError("permutation length must be >= 1",
                              lines[0].number);
  if (lines.size() != 2) {
    throw ParseError("expected exactly one permutation line",
                     lines.size() > 1 ? lines[1].number : lines[0].number);
  }
  return detail::parse_row(lines[1], n, n);
}

}  // namespace quandles
