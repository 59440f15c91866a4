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

#include "quandles/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quandles/permutation.hpp"

namespace quandles {

InvariantProfile profile(const Quandle& q) {
  InvariantProfile p;
  p.order = q.order();
  for (const auto& orbit : orbits(q)) {
    p.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(p.orbit_sizes.begin(), p.orbit_sizes.end());
  for (int y = 0; y < q.order(); ++y) {
    auto type = column_permutation(q, y).cycle_type;
    p.fixed_point_counts.push_back(static_cast<int>(
        std::count(type.begin(), type.end(), 1)));
    p.column_cycle_types.push_back(std::move(type));
  }
  std::sort(p.column_cycle_types.begin(), p.column_cycle_types.end());
  std::sort(p.fixed_point_counts.begin(), p.fixed_point_counts.end());
  return p;
}

bool is_quandle_isomorphism(const Quandle& a, const Quandle& b,
                            const std::vector<int>& f) {
  if (a.order() != b.order()) return false;
  if (f.size() != static_cast<size_t>(a.order()) || !is_permutation(f)) {
    return false;
  }
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < a.order(); ++y) {
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
    }
  }
  return true;
}

namespace {

const char* first_profile_difference(const InvariantProfile& a,
                                     const InvariantProfile& b) {
  if (a.order != b.order) return "order";
  if (a.orbit_sizes != b.orbit_sizes) return "orbit_sizes";
  if (a.column_cycle_types != b.column_cycle_types) {
    return "column_cycle_types";
  }
  if (a.fixed_point_counts != b.fixed_point_counts) {
    return "fixed_point_counts";
  }
  return nullptr;
}

struct IsoSearch {
  const Quandle& a;
  const Quandle& b;
  int n;
  std::vector<int> inv_a, inv_b;        // interned column-cycle-type ids
  std::vector<int> orbit_size_a, orbit_size_b;  // per element
  std::vector<int> orbit_id_b;
  std::vector<int> orbit_min_b;         // per b-orbit
  std::vector<int> order;               // assignment order of a's elements
  std::vector<int> f, f_inv;            // partial bijection, -1 = unset
  std::vector<int> assigned;            // a-elements in assignment order

  IsoSearch(const Quandle& a, const Quandle& b) : a(a), b(b), n(a.order()) {
    std::map<std::vector<int>, int> ids;
    auto intern = [&ids](const Quandle& q, std::vector<int>& out) {
      for (int y = 0; y < q.order(); ++y) {
        auto type = column_permutation(q, y).cycle_type;
        out.push_back(ids.emplace(std::move(type),
                                  static_cast<int>(ids.size())).first->second);
      }
    };
    intern(a, inv_a);
    intern(b, inv_b);

    orbit_size_a.assign(n, 0);
    orbit_size_b.assign(n, 0);
    orbit_id_b.assign(n, 0);
    auto orbits_a = orbits(a);
    for (const auto& orbit : orbits_a) {
      for (int x : orbit) orbit_size_a[x] = static_cast<int>(orbit.size());
    }
    const auto orbits_b = orbits(b);
    for (size_t i = 0; i < orbits_b.size(); ++i) {
      orbit_min_b.push_back(orbits_b[i].front());
      for (int y : orbits_b[i]) {
        orbit_size_b[y] = static_cast<int>(orbits_b[i].size());
        orbit_id_b[y] = static_cast<int>(i);
      }
    }

    // Assignment order: smallest orbit first, then fewest candidates.
    std::vector<int> candidate_count(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (inv_b[y] == inv_a[x]) ++candidate_count[x];
      }
    }
    std::sort(orbits_a.begin(), orbits_a.end(),
              [](const auto& l, const auto& r) {
                return l.size() != r.size() ? l.size() < r.size()
                                            : l.front() < r.front();
              });
    for (auto& orbit : orbits_a) {
      std::sort(orbit.begin(), orbit.end(), [&](int l, int r) {
        return candidate_count[l] != candidate_count[r]
                   ? candidate_count[l] < candidate_count[r]
                   : l < r;
      });
      order.insert(order.end(), orbit.begin(), orbit.end());
    }

    f.assign(n, -1);
    f_inv.assign(n, -1);
  }

  // Assigns f(x) = y, then forces f(u * v) = f(u) * f(v) to a fixpoint
  // over all assigned pairs. Returns false on any conflict.
  bool assign(int x, int y) {
    f[x] = y;
    f_inv[y] = x;
    assigned.push_back(x);
    for (size_t qi = assigned.size() - 1; qi < assigned.size(); ++qi) {
      const int u = assigned[qi];
      for (size_t vi = 0; vi < assigned.size(); ++vi) {
        const int v = assigned[vi];
        for (const auto& [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
          const int w = a.op(s, t);
          const int image = b.op(f[s], f[t]);
          if (f[w] == -1) {
            if (f_inv[image] != -1) return false;
            if (inv_a[w] != inv_b[image]) return false;
            if (orbit_size_a[w] != orbit_size_b[image]) return false;
            f[w] = image;
            f_inv[image] = w;
            assigned.push_back(w);
          } else if (f[w] != image) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (assigned.size() > mark) {
      const int x = assigned.back();
      assigned.pop_back();
      f_inv[f[x]] = -1;
      f[x] = -1;
    }
  }

  bool dfs(size_t next) {
    while (next < order.size() && f[order[next]] != -1) ++next;
    if (next == order.size()) return true;
    const int x = order[next];
    // Inner automorphisms act transitively within each orbit of b, so the
    // first image only needs to range over orbit representatives.
    const bool first = assigned.empty();
    for (int y = 0; y < n; ++y) {
      if (f_inv[y] != -1) continue;
      if (inv_b[y] != inv_a[x]) continue;
      if (orbit_size_b[y] != orbit_size_a[x]) continue;
      if (first && orbit_min_b[orbit_id_b[y]] != y) continue;
      const size_t mark = assigned.size();
      if (assign(x, y) && dfs(next + 1)) return true;
      undo(mark);
    }
    return false;
  }
};

}  // namespace

IsoCertificate are_isomorphic(const Quandle& a, const Quandle& b) {
  if (const char* field = first_profile_difference(profile(a), profile(b))) {
    return {false, {}, field};
  }
  IsoSearch search(a, b);
  if (!search.dfs(0)) return {false, {}, "exhausted_search"};
  if (!is_quandle_isomorphism(a, b, search.f)) {
    throw Error("internal error: isomorphism certificate failed verification");
  }
  return {true, std::move(search.f), ""};
}

bool brute_force_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  if (n > 9) {
    throw OrderTooLargeError("brute force is bounded to order <= 9, got " +
                             std::to_string(n));
  }
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n; ++y) {
        if (f[a.op(x, y)] != b.op(f[x], f[y])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace quandles
