#include "redprod/filter.hpp"

#include <algorithm>

#include "redprod/errors.hpp"

namespace redprod {

Filter::Filter(int index_size, std::vector<IndexSet> generators, bool proper_required)
    : index_size_(index_size), generators_(std::move(generators)), kernel_(index_size) {
  if (index_size < 1) throw InputError("index set must be nonempty");
  if (generators_.empty()) throw InputError("generator family must be nonempty");
  kernel_ = IndexSet::full(index_size);
  for (const auto& g : generators_) {
    if (g.universe_size() != index_size)
      throw InputError("generator not a subset of the index set");
    kernel_ = kernel_.intersect(g);
  }
  if (proper_required && kernel_.empty())
    throw ImproperFilterError("generators have empty intersection");
}

Filter Filter::trivial(int index_size) {
  return Filter(index_size, {IndexSet::full(index_size)});
}

Filter Filter::principal(int index_size, IndexSet kernel) {
  return Filter(index_size, {std::move(kernel)});
}

bool Filter::member(const IndexSet& a) const {
  if (a.universe_size() != index_size_)
    throw InputError("membership query not a subset of the index set");
  return kernel_.subset_of(a);
}

Filter make_filter(int index_size, std::vector<IndexSet> generators, bool proper_required) {
  return Filter(index_size, std::move(generators), proper_required);
}

bool member(const Filter& f, const IndexSet& a) { return f.member(a); }

const IndexSet& kernel(const Filter& f) { return f.kernel(); }

FilterRestriction restrict(const Filter& f, const IndexSet& j) {
  if (!f.member(j)) throw PreconditionError("restriction set is not a member of the filter");
  std::vector<int> indices = j.elements();
  std::vector<int> position(f.index_size(), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) position[indices[k]] = static_cast<int>(k);

  int m = static_cast<int>(indices.size());
  std::vector<IndexSet> gens;
  gens.reserve(f.generators().size());
  for (const auto& g : f.generators()) {
    // g itself need not be a subset of J; the restricted filter is generated
    // by the intersections g ∩ J, whose meet is still the kernel.
    IndexSet gj(m);
    for (int i : g.intersect(j).elements()) gj.insert(position[i]);
    gens.push_back(std::move(gj));
  }
  return FilterRestriction{Filter(m, std::move(gens), !f.kernel().empty()), std::move(indices)};
}

bool is_ultrafilter(const Filter& f) {
  if (!f.proper()) throw InputError("ultrafilter test requires a proper filter");
  return f.kernel().count() == 1;
}

}  // namespace redprod
