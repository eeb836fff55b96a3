// First-order formulas over the one-binary-relation language: construction,
// syntactic classification (basic Horn / Horn / positive), Tarskian
// evaluation on finite structures, the bounded-distance and bounded-diameter
// builders, and the empirical preservation harnesses.
//
// Variables are de Bruijn levels: the free slots of a formula of arity m are
// levels 0..m-1, and a quantifier always binds the topmost level of its body
// (so exists/forall map arity m+1 to arity m).  Evaluation therefore takes an
// assignment of exactly arity-many elements.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "redprod/product.hpp"
#include "redprod/structure.hpp"

namespace redprod {

enum class FormulaKind { Rel, Eq, Not, And, Or, Exists, Forall };

class Formula {
public:
  static Formula rel(int u, int v);
  static Formula eq(int u, int v);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula exists(Formula body);
  static Formula forall(Formula body);

  FormulaKind kind() const;
  int arity() const { return arity_; }
  bool is_sentence() const { return arity_ == 0; }
  int left_term() const;   // Rel/Eq only
  int right_term() const;  // Rel/Eq only
  const std::vector<Formula>& children() const;

  std::string to_string() const;  // free levels print as v0, v1, ...
  bool operator==(const Formula& other) const;

private:
  struct Node;
  Formula(std::shared_ptr<const Node> node, int arity);
  std::shared_ptr<const Node> node_;
  int arity_;
};

// Disjunction of literals with at most one non-negated atomic disjunct
// (equality counts as atomic); a single literal qualifies.
bool is_basic_horn(const Formula& f);

// Closure of basic Horn formulas under conjunction and quantification,
// recognized after pushing negations down to atoms.
bool is_horn(const Formula& f);

// Negation-free.
bool is_positive(const Formula& f);

// Negation normal form: negation only directly above atoms.
Formula nnf(const Formula& f);

// Tarskian satisfaction over the raw relation; the assignment must have
// exactly arity-many elements of the universe.
bool evaluate(const BinaryStructure& x, const Formula& f, const std::vector<int>& assignment);

// The bounded-distance formula in free variables v0, v1: an existential block
// over n chain points and a disjunction over all 2^(n+1) orientation
// patterns of the oriented atomic chains.  n is capped at 8.
Formula build_dist_formula(int n);
// Universal closure in both variables of the bounded-distance formula.
Formula build_conn_sentence(int n);

struct PreservationVerdict {
  bool hypothesis_in_filter = false;  // factor-side set is a member
  bool product_satisfies = false;
  bool violated = false;
};

// Horn preservation check over the raw (non-reflexivized) reduced product:
// violated iff the factor set where the formula holds is a member while the
// quotient fails it.  Refuses non-Horn input.
PreservationVerdict check_horn_preservation(const std::vector<BinaryStructure>& factors,
                                            const Filter& f, const Formula& phi,
                                            const std::vector<ProductPoint>& points,
                                            ProductOptions opts = {});

// Dual direction for positive sentences: violated iff the quotient satisfies
// the sentence while the factor set where it holds is not a member.
PreservationVerdict check_positive_factor_preservation(
    const std::vector<BinaryStructure>& factors, const Filter& f, const Formula& phi,
    ProductOptions opts = {});

}  // namespace redprod
