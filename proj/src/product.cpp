#include "redprod/product.hpp"

#include <algorithm>

#include "redprod/errors.hpp"

namespace redprod {

void check_point(const std::vector<BinaryStructure>& factors, const ProductPoint& x) {
  if (x.size() != factors.size())
    throw InputError("point dimension does not match the factor count");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= factors[i].size())
      throw InputError("point coordinate out of factor universe");
}

bool equiv_mod_filter(const Filter& f, const ProductPoint& x, const ProductPoint& y) {
  if (x.size() != y.size() || static_cast<int>(x.size()) != f.index_size())
    throw InputError("points are not dimensioned over the filter's index set");
  IndexSet agreement(f.index_size());
  for (int i = 0; i < f.index_size(); ++i)
    if (x[i] == y[i]) agreement.insert(i);
  return f.member(agreement);
}

ReducedProduct::ReducedProduct(std::vector<BinaryStructure> factors, Filter filter,
                               ProductOptions opts)
    : factors_(std::move(factors)), filter_(std::move(filter)), opts_(opts), quotient_(1) {
  if (static_cast<int>(factors_.size()) != filter_.index_size())
    throw InputError("factor count does not match the filter's index set");

  tuple_count_ = 1;
  for (const auto& x : factors_) {
    tuple_count_ *= static_cast<std::uint64_t>(x.size());
    if (tuple_count_ > opts_.tuple_cap)
      throw SizeCapError("tuple space exceeds the enumeration cap");
  }

  if (opts_.reflexivize_factors)
    for (auto& x : factors_) x = reflexivize(x);

  kernel_indices_ = filter_.kernel().elements();

  // Tuples agreeing on the kernel are identified, so classes are exactly the
  // kernel-coordinate assignments; the canonical (coordinatewise-minimal)
  // representative extends an assignment by zeros.
  std::uint64_t classes = 1;
  for (int k : kernel_indices_) classes *= static_cast<std::uint64_t>(factors_[k].size());
  class_size_ = classes == 0 ? 0 : tuple_count_ / classes;

  reps_.reserve(classes);
  ProductPoint rep(factors_.size(), 0);
  std::vector<int> odometer(kernel_indices_.size(), 0);
  for (std::uint64_t c = 0; c < classes; ++c) {
    for (std::size_t k = 0; k < kernel_indices_.size(); ++k)
      rep[kernel_indices_[k]] = odometer[k];
    reps_.push_back(rep);
    for (int k = static_cast<int>(kernel_indices_.size()) - 1; k >= 0; --k) {
      if (++odometer[k] < factors_[kernel_indices_[k]].size()) break;
      odometer[k] = 0;
    }
  }

  // Membership in the filter is a kernel-superset test, so the quotient
  // relation depends only on kernel coordinates and is representative-free.
  BinaryStructure q(static_cast<int>(reps_.size()));
  for (int a = 0; a < static_cast<int>(reps_.size()); ++a) {
    for (int b = 0; b < static_cast<int>(reps_.size()); ++b) {
      bool rel = true;
      for (int k : kernel_indices_) {
        if (!factors_[k].relates(reps_[a][k], reps_[b][k])) {
          rel = false;
          break;
        }
      }
      if (rel) q.add_edge(a, b);
    }
  }
  quotient_ = std::move(q);
}

int ReducedProduct::class_of(const ProductPoint& x) const {
  check_point(factors_, x);
  std::uint64_t rank = 0;
  for (int k : kernel_indices_)
    rank = rank * static_cast<std::uint64_t>(factors_[k].size()) + static_cast<std::uint64_t>(x[k]);
  return static_cast<int>(rank);
}

ReducedProduct build_reduced_product(std::vector<BinaryStructure> factors, Filter filter,
                                     ProductOptions opts) {
  return ReducedProduct(std::move(factors), std::move(filter), opts);
}

ReducedProduct build_direct_product(std::vector<BinaryStructure> factors, ProductOptions opts) {
  Filter trivial = Filter::trivial(static_cast<int>(factors.size()));
  return ReducedProduct(std::move(factors), std::move(trivial), opts);
}

RestrictionIso restrict_iso(const ReducedProduct& rp, const IndexSet& j) {
  FilterRestriction fr = restrict(rp.filter(), j);

  std::vector<BinaryStructure> sub_factors;
  sub_factors.reserve(fr.indices.size());
  for (int i : fr.indices) sub_factors.push_back(rp.factors()[i]);

  // Factors inside rp already carry the chosen relation convention.
  ProductOptions opts = rp.options();
  opts.reflexivize_factors = false;
  ReducedProduct target(std::move(sub_factors), fr.filter, opts);

  std::vector<int> forward(rp.class_count(), -1);
  std::vector<int> hit(target.class_count(), 0);
  for (int a = 0; a < rp.class_count(); ++a) {
    const ProductPoint& rep = rp.representative(a);
    ProductPoint restricted;
    restricted.reserve(fr.indices.size());
    for (int i : fr.indices) restricted.push_back(rep[i]);
    forward[a] = target.class_of(restricted);
    ++hit[forward[a]];
  }

  for (int c : hit)
    if (c != 1) throw Error("internal", "restriction map failed to be a bijection");
  for (int a = 0; a < rp.class_count(); ++a)
    for (int b = 0; b < rp.class_count(); ++b)
      if (rp.quotient().relates(a, b) != target.quotient().relates(forward[a], forward[b]))
        throw Error("internal", "restriction map failed to preserve the relation");

  return RestrictionIso{std::move(fr.indices), std::move(target), std::move(forward)};
}

}  // namespace redprod
