#include "redprod/structure.hpp"

#include <algorithm>
#include <queue>

#include "redprod/errors.hpp"

namespace redprod {

BinaryStructure::BinaryStructure(int size) : size_(size) {
  if (size < 1) throw InputError("structure universe must be nonempty");
}

BinaryStructure::BinaryStructure(int size, std::initializer_list<std::pair<int, int>> edges)
    : BinaryStructure(size) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void BinaryStructure::check_element(int u) const {
  if (u < 0 || u >= size_) throw InputError("element out of universe range");
}

void BinaryStructure::add_edge(int u, int v) {
  check_element(u);
  check_element(v);
  std::uint64_t code = static_cast<std::uint64_t>(u) * size_ + v;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), code);
  if (it == edges_.end() || *it != code) edges_.insert(it, code);
}

bool BinaryStructure::relates(int u, int v) const {
  if (u < 0 || u >= size_ || v < 0 || v >= size_) return false;
  std::uint64_t code = static_cast<std::uint64_t>(u) * size_ + v;
  return std::binary_search(edges_.begin(), edges_.end(), code);
}

std::vector<std::pair<int, int>> BinaryStructure::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (std::uint64_t code : edges_)
    out.emplace_back(static_cast<int>(code / size_), static_cast<int>(code % size_));
  return out;
}

std::int64_t BinaryStructure::edge_count() const {
  return static_cast<std::int64_t>(edges_.size());
}

ExtendedDistance ExtendedDistance::finite(std::int64_t v) {
  if (v < 0) throw InputError("finite distance must be nonnegative");
  return ExtendedDistance(v);
}

std::int64_t ExtendedDistance::value() const {
  if (is_infinite()) throw InputError("infinite distance has no finite value");
  return v_;
}

bool ExtendedDistance::operator<(const ExtendedDistance& other) const {
  if (is_infinite()) return false;
  if (other.is_infinite()) return true;
  return v_ < other.v_;
}

BinaryStructure reflexivize(const BinaryStructure& x) {
  BinaryStructure r = x;
  for (int u = 0; u < x.size(); ++u) r.add_edge(u, u);
  return r;
}

BinaryStructure symmetrize(const BinaryStructure& x) {
  BinaryStructure r = x;
  for (auto [u, v] : x.edges()) r.add_edge(v, u);
  return r;
}

namespace {

// Adjacency of the symmetrized reflexivization, loops dropped (they never
// shorten a path).
std::vector<std::vector<int>> reach_adjacency(const BinaryStructure& x) {
  std::vector<std::vector<int>> adj(x.size());
  for (auto [u, v] : x.edges()) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

std::vector<std::int64_t> bfs_from(const std::vector<std::vector<int>>& adj, int from) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool check_path(const BinaryStructure& x, int from, int to, const PathWitness& w) {
  if (from < 0 || from >= x.size() || to < 0 || to >= x.size())
    throw InputError("path endpoint out of universe range");
  for (int z : w.points)
    if (z < 0 || z >= x.size()) throw InputError("witness point out of universe range");
  if (w.pattern.size() != w.points.size() + 1)
    throw InputError("pattern length must be points length + 1");
  for (auto b : w.pattern)
    if (b > 1) throw InputError("orientation bits must be 0 or 1");

  auto step = [&](int u, int v, std::uint8_t bit) {
    if (u == v) return true;  // reflexivized relation
    return bit == 0 ? x.relates(u, v) : x.relates(v, u);
  };
  int cur = from;
  for (std::size_t k = 0; k < w.pattern.size(); ++k) {
    int next = k + 1 == w.pattern.size() ? to : w.points[k];
    if (!step(cur, next, w.pattern[k])) return false;
    cur = next;
  }
  return true;
}

ExtendedDistance distance(const BinaryStructure& x, int from, int to) {
  if (from < 0 || from >= x.size() || to < 0 || to >= x.size())
    throw InputError("element out of universe range");
  if (from == to) return ExtendedDistance::finite(0);
  auto d = bfs_from(reach_adjacency(x), from);
  return d[to] < 0 ? ExtendedDistance::infinite() : ExtendedDistance::finite(d[to]);
}

std::vector<std::vector<ExtendedDistance>> all_pairs_distances(const BinaryStructure& x) {
  auto adj = reach_adjacency(x);
  std::vector<std::vector<ExtendedDistance>> out;
  out.reserve(x.size());
  for (int u = 0; u < x.size(); ++u) {
    auto d = bfs_from(adj, u);
    std::vector<ExtendedDistance> row;
    row.reserve(x.size());
    for (int v = 0; v < x.size(); ++v)
      row.push_back(d[v] < 0 ? ExtendedDistance::infinite() : ExtendedDistance::finite(d[v]));
    out.push_back(std::move(row));
  }
  return out;
}

Partition normalize_partition(Partition classes) {
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

Partition components(const BinaryStructure& x) {
  auto adj = reach_adjacency(x);
  std::vector<bool> seen(x.size(), false);
  Partition classes;
  for (int s = 0; s < x.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cls;
    std::queue<int> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      cls.push_back(u);
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return normalize_partition(std::move(classes));
}

bool is_connected(const BinaryStructure& x) { return components(x).size() == 1; }

bool satisfies_conn_formula(const BinaryStructure& x, int n) {
  if (n < 0) throw InputError("n must be a natural number");
  auto adj = reach_adjacency(x);
  for (int u = 0; u < x.size(); ++u) {
    auto d = bfs_from(adj, u);
    for (int v = 0; v < x.size(); ++v)
      if (d[v] < 0 || d[v] > n + 1) return false;
  }
  return true;
}

ExtendedDistance diameter(const BinaryStructure& x) {
  auto adj = reach_adjacency(x);
  std::int64_t best = 0;
  for (int u = 0; u < x.size(); ++u) {
    auto d = bfs_from(adj, u);
    for (int v = 0; v < x.size(); ++v) {
      if (d[v] < 0) return ExtendedDistance::infinite();
      best = std::max(best, d[v]);
    }
  }
  return ExtendedDistance::finite(best);
}

BinaryStructure path_graph(int n) {
  BinaryStructure x(n);
  for (int u = 0; u + 1 < n; ++u) {
    x.add_edge(u, u + 1);
    x.add_edge(u + 1, u);
  }
  return x;
}

}  // namespace redprod
