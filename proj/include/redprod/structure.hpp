// Finite binary structures <X, rho> and single-structure notions:
// reflexivization, symmetrization, oriented paths, distance, components,
// diameter, and the bounded-distance connectivity property.
//
// Path semantics: a path of length n+1 from x to y is a pair (points, pattern)
// with |pattern| = |points| + 1, where pattern bit 0 means a forward rho step
// and bit 1 an inverse step.  All distance and connectivity operations work on
// the reflexivization of the relation.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace redprod {

class BinaryStructure {
public:
  explicit BinaryStructure(int size);
  BinaryStructure(int size, std::initializer_list<std::pair<int, int>> edges);

  int size() const { return size_; }
  void add_edge(int u, int v);
  bool relates(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted
  std::int64_t edge_count() const;

  bool operator==(const BinaryStructure& other) const = default;

private:
  void check_element(int u) const;
  int size_;
  std::vector<std::uint64_t> edges_;  // sorted encoded pairs u*size+v
};

struct PathWitness {
  std::vector<int> points;            // intermediate points, possibly empty
  std::vector<std::uint8_t> pattern;  // orientation bits; size = points.size()+1
};

class ExtendedDistance {
public:
  static ExtendedDistance infinite() { return ExtendedDistance(-1); }
  static ExtendedDistance finite(std::int64_t v);

  bool is_infinite() const { return v_ < 0; }
  std::int64_t value() const;  // InputError when infinite
  bool leq(std::int64_t bound) const { return !is_infinite() && v_ <= bound; }

  bool operator==(const ExtendedDistance& other) const = default;
  // Infinity compares greater than every finite distance.
  bool operator<(const ExtendedDistance& other) const;

private:
  explicit ExtendedDistance(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

using Partition = std::vector<std::vector<int>>;

BinaryStructure reflexivize(const BinaryStructure& x);
BinaryStructure symmetrize(const BinaryStructure& x);

// True iff the chain x rho^{e0} z0 ... z_{n-1} rho^{en} y holds in the
// reflexivized structure.
bool check_path(const BinaryStructure& x, int from, int to, const PathWitness& w);

ExtendedDistance distance(const BinaryStructure& x, int from, int to);
std::vector<std::vector<ExtendedDistance>> all_pairs_distances(const BinaryStructure& x);

// Classes of the reachability equivalence; classes ordered by least element,
// elements ascending.
Partition components(const BinaryStructure& x);
bool is_connected(const BinaryStructure& x);

// All pairwise distances <= n+1.
bool satisfies_conn_formula(const BinaryStructure& x, int n);
ExtendedDistance diameter(const BinaryStructure& x);

// The line on n points with an edge between u and v iff |u-v| = 1 (finite
// truncation of the linear graph on the naturals).
BinaryStructure path_graph(int n);

Partition normalize_partition(Partition classes);

}  // namespace redprod
