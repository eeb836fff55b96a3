#include "redprod/fuzz.hpp"

#include <algorithm>
#include <chrono>

#include "redprod/errors.hpp"

namespace redprod {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

BinaryStructure random_structure(std::mt19937_64& rng, int max_size) {
  int size = 1 + static_cast<int>(pick(rng, max_size));
  // Edge probability from {0.1, ..., 0.6}, applied with integer thresholds
  // so runs are identical across platforms.
  std::uint64_t threshold = (1 + pick(rng, 6)) * 100000;
  BinaryStructure x(size);
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      if (pick(rng, 1000000) < threshold) x.add_edge(u, v);
  return x;
}

Filter random_filter(std::mt19937_64& rng, int index_size, bool trivial_only) {
  if (trivial_only) return Filter::trivial(index_size);
  switch (pick(rng, 3)) {
    case 0:
      return Filter::trivial(index_size);
    case 1: {
      IndexSet kern(index_size);
      kern.insert(static_cast<int>(pick(rng, index_size)));
      for (int i = 0; i < index_size; ++i)
        if (pick(rng, 2) == 0) kern.insert(i);
      return Filter::principal(index_size, kern);
    }
    default: {
      // Random generator families, resampled until the intersection is
      // nonempty (a filter on a finite set must be proper here).
      for (int attempt = 0; attempt < 64; ++attempt) {
        int count = 1 + static_cast<int>(pick(rng, 3));
        std::vector<IndexSet> gens;
        IndexSet meet = IndexSet::full(index_size);
        for (int g = 0; g < count; ++g) {
          IndexSet s(index_size);
          for (int i = 0; i < index_size; ++i)
            if (pick(rng, 2) == 0) s.insert(i);
          meet = meet.intersect(s);
          gens.push_back(std::move(s));
        }
        if (!meet.empty()) return Filter(index_size, std::move(gens));
      }
      return Filter::trivial(index_size);
    }
  }
}

ProductPoint random_point(std::mt19937_64& rng, const std::vector<BinaryStructure>& factors) {
  ProductPoint p;
  p.reserve(factors.size());
  for (const auto& x : factors) p.push_back(static_cast<int>(pick(rng, x.size())));
  return p;
}

bool same_class(const Partition& parts, int a, int b) {
  for (const auto& cls : parts)
    if (std::find(cls.begin(), cls.end(), a) != cls.end())
      return std::find(cls.begin(), cls.end(), b) != cls.end();
  return false;
}

}  // namespace

RandomInstance random_instance(std::mt19937_64& rng, const FuzzConfig& cfg) {
  int index_size = 1 + static_cast<int>(pick(rng, cfg.max_index));
  std::vector<BinaryStructure> factors;
  factors.reserve(index_size);
  for (int i = 0; i < index_size; ++i) factors.push_back(random_structure(rng, cfg.max_size));
  Filter filter = random_filter(rng, index_size, cfg.trivial_filter_only);
  return RandomInstance{std::move(factors), std::move(filter)};
}

VerifyStats run_verify(std::uint64_t seed, int trials, const FuzzConfig& cfg,
                       int pairs_per_instance) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  VerifyStats stats;
  stats.seed = seed;
  ProductOptions opts;
  opts.tuple_cap = cfg.tuple_cap;

  for (int t = 0; t < trials; ++t) {
    RandomInstance inst = random_instance(rng, cfg);
    ++stats.trials;

    ReducedProduct rp = build_reduced_product(inst.factors, inst.filter, opts);
    EquivalenceReport eq = verify_equivalence(inst.factors, inst.filter, opts);
    if (eq.agree) ++stats.equivalence_agree;

    Partition bfs = components_bfs(rp);
    if (bfs == components_criterion(rp)) ++stats.components_agree;

    for (int p = 0; p < pairs_per_instance; ++p) {
      ProductPoint x = random_point(rng, inst.factors);
      ProductPoint y = random_point(rng, inst.factors);
      ++stats.witness_pairs;
      bool criterion = connected_criterion(inst.factors, inst.filter, x, y);
      bool bfs_joined = same_class(bfs, rp.class_of(x), rp.class_of(y));
      auto witness = build_path_witness(inst.factors, inst.filter, x, y);
      bool valid = !witness || validate_witness(inst.factors, inst.filter, x, y, *witness);
      if (criterion == bfs_joined && witness.has_value() == criterion)
        ++stats.witness_agree;
      if (valid) ++stats.witness_valid;
    }

    IndexSet j = inst.filter.kernel();
    for (int i = 0; i < inst.filter.index_size(); ++i)
      if (pick(rng, 2) == 0) j.insert(i);
    ++stats.restriction_checks;
    RestrictionIso iso = restrict_iso(rp, j);  // verifies itself or throws
    if (static_cast<int>(iso.forward.size()) == rp.class_count()) ++stats.restriction_ok;

    if (inst.filter.kernel() == IndexSet::full(inst.filter.index_size())) {
      ++stats.direct_checks;
      bool all_connected = std::all_of(inst.factors.begin(), inst.factors.end(),
                                       [](const BinaryStructure& x) { return is_connected(x); });
      if (connected_bfs(rp) == all_connected) ++stats.direct_agree;
    }
  }

  stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

PreserveStats run_preservation(std::uint64_t seed, int checks_per_family, int horn_max_n,
                               int positive_max_n, const FuzzConfig& cfg) {
  std::mt19937_64 rng(seed);
  PreserveStats stats;
  stats.seed = seed;
  ProductOptions opts;
  opts.tuple_cap = cfg.tuple_cap;

  while (stats.horn_checks < checks_per_family) {
    RandomInstance inst = random_instance(rng, cfg);
    int n = static_cast<int>(pick(rng, horn_max_n + 1));
    Formula phi = Formula::negate(build_dist_formula(n));
    std::vector<ProductPoint> points = {random_point(rng, inst.factors),
                                        random_point(rng, inst.factors)};
    PreservationVerdict v = check_horn_preservation(inst.factors, inst.filter, phi, points, opts);
    ++stats.horn_checks;
    if (v.hypothesis_in_filter) ++stats.horn_hypothesis_hits;
    if (v.violated) ++stats.horn_violations;
  }

  while (stats.positive_checks < checks_per_family) {
    RandomInstance inst = random_instance(rng, cfg);
    int n = static_cast<int>(pick(rng, positive_max_n + 1));
    Formula phi = build_conn_sentence(n);
    PreservationVerdict v = check_positive_factor_preservation(inst.factors, inst.filter, phi, opts);
    ++stats.positive_checks;
    if (v.hypothesis_in_filter) ++stats.positive_hypothesis_hits;
    if (v.violated) ++stats.positive_violations;
  }
  return stats;
}

FormulaHarnessStats run_formula_harness(const Formula& phi, std::uint64_t seed, int trials,
                                        const FuzzConfig& cfg) {
  FormulaHarnessStats stats;
  stats.seed = seed;
  stats.ran_horn = is_horn(phi);
  stats.ran_positive = is_positive(phi) && phi.is_sentence();
  if (!stats.ran_horn && !stats.ran_positive)
    throw InputError("formula is neither Horn nor a positive sentence; nothing to check");

  std::mt19937_64 rng(seed);
  ProductOptions opts;
  opts.tuple_cap = cfg.tuple_cap;
  for (int t = 0; t < trials; ++t) {
    RandomInstance inst = random_instance(rng, cfg);
    if (stats.ran_horn) {
      std::vector<ProductPoint> points;
      for (int k = 0; k < phi.arity(); ++k) points.push_back(random_point(rng, inst.factors));
      PreservationVerdict v =
          check_horn_preservation(inst.factors, inst.filter, phi, points, opts);
      ++stats.horn_checks;
      if (v.hypothesis_in_filter) ++stats.horn_hypothesis_hits;
      if (v.violated) ++stats.horn_violations;
    }
    if (stats.ran_positive) {
      PreservationVerdict v =
          check_positive_factor_preservation(inst.factors, inst.filter, phi, opts);
      ++stats.positive_checks;
      if (v.hypothesis_in_filter) ++stats.positive_hypothesis_hits;
      if (v.violated) ++stats.positive_violations;
    }
  }
  return stats;
}

}  // namespace redprod
