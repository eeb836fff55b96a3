// Subsets of a finite index set I = {0, ..., universe-1}.
#pragma once

#include <initializer_list>
#include <vector>

namespace redprod {

class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(int universe);
  IndexSet(int universe, std::initializer_list<int> elems);
  static IndexSet full(int universe);
  static IndexSet of(int universe, const std::vector<int>& elems);

  int universe_size() const { return universe_; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool contains(int i) const;
  void insert(int i);
  void erase(int i);

  bool subset_of(const IndexSet& other) const;
  bool superset_of(const IndexSet& other) const { return other.subset_of(*this); }
  IndexSet intersect(const IndexSet& other) const;
  IndexSet unite(const IndexSet& other) const;
  IndexSet difference(const IndexSet& other) const;
  IndexSet complement() const;

  std::vector<int> elements() const;  // ascending

  bool operator==(const IndexSet& other) const = default;

private:
  void check_universe(const IndexSet& other) const;
  int universe_ = 0;
  std::vector<bool> bits_;
};

}  // namespace redprod
