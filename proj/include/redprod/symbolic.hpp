// Symbolic reduced powers of the linear graph on the naturals over the
// Fréchet filter and principal filters, restricted to eventually-affine
// sequences.  Distance sets of catalog pairs are finite or cofinite, which
// makes the pairwise bounded-distance-set criterion decidable and lets the
// module reproduce the disconnection phenomena at infinite index scale.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "redprod/structure.hpp"

namespace redprod {

// i -> prefix[i] for i < |prefix|, then i -> slope*i + intercept.
class SymbolicSequence {
public:
  static SymbolicSequence constant(std::uint64_t c);
  static SymbolicSequence affine(std::uint64_t slope, std::uint64_t intercept);
  static SymbolicSequence eventually_affine(std::vector<std::uint64_t> prefix,
                                            std::uint64_t slope, std::uint64_t intercept);

  std::uint64_t value(std::uint64_t i) const;
  std::uint64_t slope() const { return slope_; }
  std::uint64_t intercept() const { return intercept_; }
  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  bool is_constant() const { return prefix_.empty() && slope_ == 0; }

  std::string to_string() const;
  bool operator==(const SymbolicSequence& other) const = default;

private:
  SymbolicSequence(std::vector<std::uint64_t> prefix, std::uint64_t slope,
                   std::uint64_t intercept);
  std::vector<std::uint64_t> prefix_;
  std::uint64_t slope_;
  std::uint64_t intercept_;
};

// A subset of the naturals that is finite or cofinite, the normal form of
// boolean combinations of explicit finite sets, cofinite complements, and
// solution sets of affine distance bounds.
class DefinableIndexSet {
public:
  static DefinableIndexSet finite(std::set<std::uint64_t> elements);
  static DefinableIndexSet cofinite(std::set<std::uint64_t> excluded);
  static DefinableIndexSet empty() { return finite({}); }
  static DefinableIndexSet all() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_finite() const { return !cofinite_; }
  bool is_empty() const { return !cofinite_ && exceptional_.empty(); }
  bool contains(std::uint64_t i) const;
  // Elements when finite, excluded elements when cofinite.
  const std::set<std::uint64_t>& exceptions() const { return exceptional_; }

  DefinableIndexSet complement() const;
  DefinableIndexSet intersect(const DefinableIndexSet& other) const;
  DefinableIndexSet unite(const DefinableIndexSet& other) const;
  bool subset_of(const DefinableIndexSet& other) const;

  std::string to_string() const;
  bool operator==(const DefinableIndexSet& other) const = default;

private:
  DefinableIndexSet(bool cofinite, std::set<std::uint64_t> exceptional)
      : cofinite_(cofinite), exceptional_(std::move(exceptional)) {}
  bool cofinite_;
  std::set<std::uint64_t> exceptional_;
};

enum class SymbolicFilterKind { Frechet, PrincipalFinite, PrincipalCofinite };

class SymbolicFilter {
public:
  static SymbolicFilter frechet();
  // Principal filter generated by the finite nonempty kernel.
  static SymbolicFilter principal_finite(std::set<std::uint64_t> kernel);
  // Principal filter generated by the cofinite set excluding the given indices.
  static SymbolicFilter principal_cofinite(std::set<std::uint64_t> excluded);

  SymbolicFilterKind kind() const { return kind_; }
  const std::set<std::uint64_t>& support() const { return support_; }
  bool member(const DefinableIndexSet& a) const;

  std::string to_string() const;
  bool operator==(const SymbolicFilter& other) const = default;

private:
  SymbolicFilter(SymbolicFilterKind kind, std::set<std::uint64_t> support)
      : kind_(kind), support_(std::move(support)) {}
  SymbolicFilterKind kind_;
  std::set<std::uint64_t> support_;  // kernel or excluded set; empty for Frechet
};

// Distance in the linear graph: |x - y|.
std::uint64_t gdist(std::uint64_t x, std::uint64_t y);

// {i : |x(i) - y(i)| <= m}, normalized to finite-or-cofinite form.
DefinableIndexSet distance_set(const SymbolicSequence& x, const SymbolicSequence& y,
                               std::uint64_t m);

struct SymbolicCertificate {
  bool connected = false;
  std::optional<std::uint64_t> witness_n;  // minimal n with the distance set in the filter
  std::string reason;
  // Sampled (n, distance_set(x, y, n+1)) pairs for a human-checkable trace.
  std::vector<std::pair<std::uint64_t, DefinableIndexSet>> samples;
};

// Classes of x and y joined by a quotient path iff some distance set belongs
// to the filter; decidable for catalog sequences by slope comparison.
SymbolicCertificate symbolic_connected(const SymbolicSequence& x, const SymbolicSequence& y,
                                       const SymbolicFilter& f);

struct DisconnectionWitness {
  SymbolicSequence x;
  SymbolicSequence y;
  SymbolicCertificate certificate;  // under the Fréchet filter
  std::string conclusion;
};

// The constant-zero / identity-plus-two pair: every distance set is finite,
// so the pair is split in the power of the linear graph over any filter
// containing the cofinite sets and over every non-principal ultrafilter.
DisconnectionWitness frechet_disconnection_witness();

// Condition for powers over filters containing the cofinite sets: some
// profile entry {i : factor i satisfies the bounded-diameter property at n}
// is a member.  Gated to the Frechet and PrincipalCofinite kinds.
bool remark_b_prime_check(const std::map<std::uint64_t, DefinableIndexSet>& diameter_profile,
                          const SymbolicFilter& f);
std::optional<std::uint64_t> remark_b_prime_witness(
    const std::map<std::uint64_t, DefinableIndexSet>& diameter_profile,
    const SymbolicFilter& f);

// Profile of a homogeneous power of a finite structure: full set where the
// bounded-diameter property holds, empty set elsewhere.
std::map<std::uint64_t, DefinableIndexSet> homogeneous_profile(const BinaryStructure& x,
                                                               std::uint64_t max_n);
// Profile of the linear-graph power: empty at every n.
std::map<std::uint64_t, DefinableIndexSet> linear_graph_profile(std::uint64_t max_n);

struct PowerConnectivity {
  bool connected = false;
  std::string reasoning;
  std::optional<DisconnectionWitness> witness;      // set when disconnected via a pair
  std::optional<bool> remark_b_prime;               // set when the remark gate applies
};

// Connectivity of the power of the linear graph over a catalog filter.
PowerConnectivity linear_graph_power_connected(const SymbolicFilter& f);
// Connectivity of the homogeneous power of a finite structure; only filters
// containing the cofinite sets are in scope here (principal kernels reduce to
// a finite product handled by the finite modules).
PowerConnectivity finite_power_connected(const BinaryStructure& x, const SymbolicFilter& f);

}  // namespace redprod
