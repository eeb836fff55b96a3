// Seeded random instance generation and the batch harnesses behind the
// verify and preserve commands.  All randomness is drawn from mt19937_64 via
// modulo, so a seed pins every run exactly.
#pragma once

#include <cstdint>
#include <random>

#include "redprod/connectivity.hpp"
#include "redprod/formula.hpp"

namespace redprod {

struct FuzzConfig {
  int max_index = 4;
  int max_size = 4;
  bool trivial_filter_only = false;
  std::uint64_t tuple_cap = 1'000'000;
};

struct RandomInstance {
  std::vector<BinaryStructure> factors;
  Filter filter;
};

// Random factors with edge probability drawn from {0.1, ..., 0.6} and a
// random proper generator family (resampled until the kernel is nonempty).
RandomInstance random_instance(std::mt19937_64& rng, const FuzzConfig& cfg);

struct VerifyStats {
  std::uint64_t seed = 0;
  int trials = 0;
  int equivalence_agree = 0;   // search oracle vs. finite-exception condition
  int components_agree = 0;    // partition equality of the two component routes
  int witness_pairs = 0;
  int witness_agree = 0;       // witness presence matches the criterion
  int witness_valid = 0;       // returned witnesses validate end to end
  int restriction_checks = 0;  // restriction isomorphisms built and verified
  int restriction_ok = 0;
  int direct_checks = 0;       // trivial-filter instances
  int direct_agree = 0;        // product connected iff all factors connected
  double elapsed_seconds = 0;
};

VerifyStats run_verify(std::uint64_t seed, int trials, const FuzzConfig& cfg,
                       int pairs_per_instance = 12);

struct PreserveStats {
  std::uint64_t seed = 0;
  int horn_checks = 0;
  int horn_violations = 0;
  int horn_hypothesis_hits = 0;
  int positive_checks = 0;
  int positive_violations = 0;
  int positive_hypothesis_hits = 0;
};

// Runs the negated bounded-distance family (n <= horn_max_n) through the Horn
// harness and the bounded-diameter sentences (n <= positive_max_n) through
// the factor-preservation harness, checks_per_family times each.
PreserveStats run_preservation(std::uint64_t seed, int checks_per_family, int horn_max_n = 3,
                               int positive_max_n = 2, const FuzzConfig& cfg = {3, 3, false});

struct FormulaHarnessStats {
  std::uint64_t seed = 0;
  bool ran_horn = false;
  bool ran_positive = false;
  int horn_checks = 0;
  int horn_violations = 0;
  int horn_hypothesis_hits = 0;
  int positive_checks = 0;
  int positive_violations = 0;
  int positive_hypothesis_hits = 0;
};

// Dispatches a user formula to whichever harnesses its classification
// permits; throws InputError when neither applies.
FormulaHarnessStats run_formula_harness(const Formula& phi, std::uint64_t seed, int trials,
                                        const FuzzConfig& cfg = {3, 3, false});

}  // namespace redprod
