// Filters on a finite index set, stored by generators with derived kernel.
// Every filter on a finite set is principal, so membership is a kernel
// superset test and no member list is ever materialized.
#pragma once

#include <vector>

#include "redprod/index_set.hpp"

namespace redprod {

class Filter {
public:
  // The filter generated by the family: all supersets of the generators'
  // intersection.  Throws ImproperFilterError if the intersection is empty
  // while properness is required.
  Filter(int index_size, std::vector<IndexSet> generators, bool proper_required = true);

  static Filter trivial(int index_size);                 // {I}
  static Filter principal(int index_size, IndexSet kernel);

  int index_size() const { return index_size_; }
  const std::vector<IndexSet>& generators() const { return generators_; }
  const IndexSet& kernel() const { return kernel_; }
  bool proper() const { return !kernel_.empty(); }

  bool member(const IndexSet& a) const;

  bool operator==(const Filter& other) const = default;

private:
  int index_size_;
  std::vector<IndexSet> generators_;
  IndexSet kernel_;
};

Filter make_filter(int index_size, std::vector<IndexSet> generators,
                   bool proper_required = true);
bool member(const Filter& f, const IndexSet& a);
const IndexSet& kernel(const Filter& f);

// Restriction by a member set J, renumbered onto {0, ..., |J|-1}.
// indices[k] gives the original index of coordinate k.
struct FilterRestriction {
  Filter filter;
  std::vector<int> indices;
};

// Requires member(f, j); kernel is preserved (relabelled).
FilterRestriction restrict(const Filter& f, const IndexSet& j);

// On a finite index set the ultrafilters are exactly the principal filters
// with singleton kernel.
bool is_ultrafilter(const Filter& f);

}  // namespace redprod
