// Test-only oracles, independent of the library's implementation paths:
// exhaustive path enumeration for distances, transitive-closure components,
// materialized filter member lists, and a fully exhaustive finite-exception
// search.  Everything here is brute force on purpose.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "redprod/connectivity.hpp"
#include "redprod/filter.hpp"
#include "redprod/structure.hpp"

namespace redprod::testing {

// All tuples of the product space, lexicographic.
inline std::vector<ProductPoint> all_tuples(const std::vector<BinaryStructure>& factors) {
  std::vector<ProductPoint> out;
  ProductPoint cur(factors.size(), 0);
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(factors.size()) - 1;
    for (; k >= 0; --k) {
      if (++cur[k] < factors[k].size()) break;
      cur[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

// All subsets of {0,...,n-1}.
inline std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Does some oriented chain of exactly len steps join x to y in the
// reflexivized structure?  Enumerates every point tuple and pattern.
inline bool path_of_length_exists(const BinaryStructure& s, int x, int y, int len) {
  int n = len - 1;  // interior points
  std::vector<int> points(n, 0);
  while (true) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      PathWitness w;
      w.points = points;
      for (int k = 0; k < len; ++k) w.pattern.push_back((bits >> k) & 1u);
      if (check_path(s, x, y, w)) return true;
    }
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++points[k] < s.size()) break;
      points[k] = 0;
    }
    if (k < 0) break;
  }
  return false;
}

// Least path length by exhaustive enumeration; the search may stop at
// size steps since shortest paths never revisit a point.
inline ExtendedDistance oracle_distance(const BinaryStructure& s, int x, int y) {
  if (x == y) return ExtendedDistance::finite(0);
  for (int len = 1; len <= s.size(); ++len)
    if (path_of_length_exists(s, x, y, len)) return ExtendedDistance::finite(len);
  return ExtendedDistance::infinite();
}

// Components via the transitive closure of the symmetrized reflexivization.
inline Partition oracle_components(const BinaryStructure& s) {
  int n = s.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (auto [u, v] : s.edges()) {
    reach[u][v] = true;
    reach[v][u] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  std::vector<int> cls(n, -1);
  Partition out;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> members;
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) {
        cls[j] = static_cast<int>(out.size());
        members.push_back(j);
      }
    out.push_back(std::move(members));
  }
  return normalize_partition(std::move(out));
}

// Member list of the filter generated by the family: close the family under
// pairwise intersection, then take all supersets.
inline std::vector<IndexSet> oracle_filter_members(int n, const std::vector<IndexSet>& gens) {
  std::vector<IndexSet> closed = gens;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < closed.size(); ++a)
      for (std::size_t b = 0; b < closed.size(); ++b) {
        IndexSet meet = closed[a].intersect(closed[b]);
        if (std::find(closed.begin(), closed.end(), meet) == closed.end()) {
          closed.push_back(meet);
          grew = true;
        }
      }
  }
  std::vector<IndexSet> members;
  for (const IndexSet& cand : all_subsets(n))
    for (const IndexSet& base : closed)
      if (base.subset_of(cand)) {
        members.push_back(cand);
        break;
      }
  return members;
}

// Fully exhaustive finite-exception search: every K and every n up to the
// stationarity bound.
inline std::optional<ConditionBWitness> oracle_condition_b(
    const std::vector<BinaryStructure>& factors, const Filter& f) {
  int n_factors = f.index_size();
  int bound = 0;
  for (const auto& x : factors) bound = std::max(bound, x.size());
  for (int n = 0; n <= bound; ++n) {
    IndexSet a(n_factors);
    for (int i = 0; i < n_factors; ++i)
      if (satisfies_conn_formula(factors[i], n)) a.insert(i);
    for (const IndexSet& k : all_subsets(n_factors)) {
      bool all_conn = true;
      for (int i : k.elements())
        if (!is_connected(factors[i])) all_conn = false;
      if (all_conn && f.member(a.unite(k))) return ConditionBWitness{k, n};
    }
  }
  return std::nullopt;
}

}  // namespace redprod::testing
