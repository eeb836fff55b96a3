// Text DSL for instances and formulas.  Line-oriented, '#' starts a comment.
//
//   structure <name> <size>        followed by   edge <u> <v>   lines
//   index <n>
//   assign <i> <name>
//   filter generators { {0,1} {1,2} } | filter trivial | filter principal {1}
//   filter frechet | filter principal-cofinite {0,1}
//   point <name> = (0,0,2)
//   seq <name> constant <c> | seq <name> affine <a> <b>
//   seq <name> prefix <p0> ... <pk> affine <a> <b>
//   power <structure-name> | power G_omega
//
// Finite instances carry index/assign/point lines; symbolic instances carry
// seq/power lines and a symbolic filter.  Formula text uses R(x,y), =, ~, &,
// |, exists, forall, with parentheses; names not bound by a quantifier are
// free variables slotted in order of first appearance.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "redprod/formula.hpp"
#include "redprod/product.hpp"
#include "redprod/symbolic.hpp"

namespace redprod {

struct FilterSpec {
  enum class Kind { Generators, Trivial, Principal, Frechet, PrincipalCofinite };
  Kind kind = Kind::Trivial;
  std::vector<std::vector<int>> sets;  // generator sets / principal kernel / excluded
};

struct InstanceSpec {
  std::map<std::string, BinaryStructure> structures;
  std::optional<int> index_size;
  std::vector<std::string> assignment;  // factor name per index
  std::optional<FilterSpec> filter;
  std::map<std::string, ProductPoint> points;
  std::map<std::string, SymbolicSequence> sequences;
  std::optional<std::string> power;  // "G_omega" or a structure name

  bool symbolic() const;
  bool operator==(const InstanceSpec& other) const = default;

  // Available after parse/validation of a finite instance.
  std::vector<BinaryStructure> factors() const;
  Filter finite_filter() const;
  SymbolicFilter symbolic_filter() const;
};

InstanceSpec parse_instance(const std::string& text);
std::string render_instance(const InstanceSpec& spec);

Formula parse_formula(const std::string& text);

}  // namespace redprod
