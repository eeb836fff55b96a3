// Direct products, the agreement equivalence modulo a filter, materialized
// reduced products, and the restriction isomorphism.
#pragma once

#include <cstdint>
#include <vector>

#include "redprod/filter.hpp"
#include "redprod/structure.hpp"

namespace redprod {

// One coordinate per index; coordinate i lives in the universe of factor i.
using ProductPoint = std::vector<int>;

struct ProductOptions {
  bool reflexivize_factors = true;     // connectivity semantics; formulas use raw
  std::uint64_t tuple_cap = 1'000'000; // full tuple-space enumeration bound
};

// x ~_F y iff the agreement set {i : x_i = y_i} is a member of the filter.
bool equiv_mod_filter(const Filter& f, const ProductPoint& x, const ProductPoint& y);

class ReducedProduct {
public:
  ReducedProduct(std::vector<BinaryStructure> factors, Filter filter, ProductOptions opts);

  const std::vector<BinaryStructure>& factors() const { return factors_; }
  const Filter& filter() const { return filter_; }
  const ProductOptions& options() const { return opts_; }

  int class_count() const { return static_cast<int>(reps_.size()); }
  // Canonical representative: coordinatewise-minimal tuple in the class.
  const ProductPoint& representative(int cls) const { return reps_[cls]; }
  int class_of(const ProductPoint& x) const;
  std::uint64_t tuple_count() const { return tuple_count_; }
  std::uint64_t class_size() const { return class_size_; }

  // Quotient structure over class ids; relation [x] rho [y] iff the
  // coordinatewise relation set is a member of the filter.
  const BinaryStructure& quotient() const { return quotient_; }

private:
  std::vector<BinaryStructure> factors_;
  Filter filter_;
  ProductOptions opts_;
  std::vector<int> kernel_indices_;
  std::vector<ProductPoint> reps_;
  BinaryStructure quotient_;
  std::uint64_t tuple_count_ = 0;
  std::uint64_t class_size_ = 0;
};

ReducedProduct build_reduced_product(std::vector<BinaryStructure> factors, Filter filter,
                                     ProductOptions opts = {});
ReducedProduct build_direct_product(std::vector<BinaryStructure> factors,
                                    ProductOptions opts = {});

// The Fact-style restriction isomorphism f([x]) = [x restricted to J].
struct RestrictionIso {
  std::vector<int> indices;   // J, ascending: original index of coordinate k
  ReducedProduct target;      // product of the J-factors over the restricted filter
  std::vector<int> forward;   // class id in source -> class id in target
};

// Requires member(filter, J).  The returned map is checked to be a bijection
// preserving the quotient relation in both directions.
RestrictionIso restrict_iso(const ReducedProduct& rp, const IndexSet& j);

// Validates coordinate ranges of a point against factor universes.
void check_point(const std::vector<BinaryStructure>& factors, const ProductPoint& x);

}  // namespace redprod
