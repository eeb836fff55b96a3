// Connectivity of reduced products by two independent routes: breadth-first
// search on the materialized quotient, and the filter-theoretic criteria
// (the finite-exception condition over the diameter stratification, and the
// pairwise bounded-distance-set criterion).  Includes the constructive path
// lifting and the witness builder that assembles an explicit quotient path
// from per-coordinate paths.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "redprod/product.hpp"

namespace redprod {

// A_n = indices whose factor satisfies the bounded-diameter property at n;
// layers partition the index set together with the disconnected remainder.
struct DiameterStratification {
  std::vector<IndexSet> a;       // a[n] for n = 0..bound, a monotone chain
  std::vector<IndexSet> layers;  // layers[0] = a[0], layers[n] = a[n] \ a[n-1]
  IndexSet i_inf;                // indices with disconnected factor
  int bound = 0;                 // max factor size; a[] is stationary beyond
};

struct ConditionBWitness {
  IndexSet k;  // finite exception set; every factor in it is connected
  int n = 0;   // a[n] together with k is a member of the filter
};

// One lifted hop: from and to agree outside the active coordinate set, and
// every consecutive pair of waypoints is related in the quotient with the
// segment's shared orientation pattern.
struct PathSegment {
  ProductPoint from;
  std::vector<ProductPoint> mids;
  ProductPoint to;
  std::vector<std::uint8_t> pattern;  // size = mids.size() + 1; empty for a zero-step segment
};

struct ProductPathWitness {
  std::vector<PathSegment> segments;  // empty when the endpoints are equivalent
};

bool connected_bfs(const ReducedProduct& rp);
Partition components_bfs(const ReducedProduct& rp);

DiameterStratification stratify(const std::vector<BinaryStructure>& factors, const Filter& f);

// Smallest n whose canonical exception set kernel \ a[n] consists of
// connected factors; absent when no (K, n) pair exists.
std::optional<ConditionBWitness> condition_b(const std::vector<BinaryStructure>& factors,
                                             const Filter& f);

// True iff some n bounded by the largest factor size puts the set
// {i : distance(X_i, x_i, y_i) <= n+1} in the filter.
bool connected_criterion(const std::vector<BinaryStructure>& factors, const Filter& f,
                         const ProductPoint& x, const ProductPoint& y);
// The smallest witnessing n, or absent.
std::optional<int> criterion_witness(const std::vector<BinaryStructure>& factors,
                                     const Filter& f, const ProductPoint& x,
                                     const ProductPoint& y);

// Partition of quotient classes computed purely by the pairwise criterion on
// representatives; no search on the quotient graph.
Partition components_criterion(const ReducedProduct& rp);

// Lifts per-coordinate paths sharing one orientation pattern to a quotient
// segment.  Requires x and y to agree outside `active`, and each coordinate
// witness to validate with the shared pattern.
PathSegment lift_path(const std::vector<BinaryStructure>& factors, const Filter& f,
                      const ProductPoint& x, const ProductPoint& y, const IndexSet& active,
                      const std::vector<std::uint8_t>& pattern,
                      const std::map<int, std::vector<int>>& coordinate_witnesses);

// Builds an explicit quotient path whenever the criterion holds: shortest
// per-coordinate paths are padded to one length, grouped by orientation
// pattern, and lifted hop by hop through the interpolating points.
std::optional<ProductPathWitness> build_path_witness(
    const std::vector<BinaryStructure>& factors, const Filter& f, const ProductPoint& x,
    const ProductPoint& y);

// Checks a witness end to end: segment chaining, per-step quotient relation,
// and equivalence of the final waypoint with y.
bool validate_witness(const std::vector<BinaryStructure>& factors, const Filter& f,
                      const ProductPoint& x, const ProductPoint& y,
                      const ProductPathWitness& w);

struct EquivalenceReport {
  bool bfs_connected = false;
  std::optional<ConditionBWitness> condition_b_witness;
  bool agree = false;
};

// Runs both oracles on one instance; on finite index sets they must agree.
EquivalenceReport verify_equivalence(const std::vector<BinaryStructure>& factors,
                                     const Filter& f, ProductOptions opts = {});

}  // namespace redprod
