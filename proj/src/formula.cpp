#include "redprod/formula.hpp"

#include <algorithm>

#include "redprod/errors.hpp"

namespace redprod {

struct Formula::Node {
  FormulaKind kind;
  int u = 0, v = 0;               // Rel/Eq terms (de Bruijn levels)
  std::vector<Formula> children;  // Not/Exists/Forall: 1; And/Or: >= 1
};

Formula::Formula(std::shared_ptr<const Node> node, int arity)
    : node_(std::move(node)), arity_(arity) {}

FormulaKind Formula::kind() const { return node_->kind; }

int Formula::left_term() const {
  if (node_->kind != FormulaKind::Rel && node_->kind != FormulaKind::Eq)
    throw InputError("terms exist only on atomic formulas");
  return node_->u;
}

int Formula::right_term() const {
  if (node_->kind != FormulaKind::Rel && node_->kind != FormulaKind::Eq)
    throw InputError("terms exist only on atomic formulas");
  return node_->v;
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

Formula Formula::rel(int u, int v) {
  if (u < 0 || v < 0) throw InputError("variable levels must be nonnegative");
  return Formula(std::make_shared<Node>(Node{FormulaKind::Rel, u, v, {}}),
                 std::max(u, v) + 1);
}

Formula Formula::eq(int u, int v) {
  if (u < 0 || v < 0) throw InputError("variable levels must be nonnegative");
  return Formula(std::make_shared<Node>(Node{FormulaKind::Eq, u, v, {}}), std::max(u, v) + 1);
}

Formula Formula::negate(Formula f) {
  int arity = f.arity_;
  return Formula(std::make_shared<Node>(Node{FormulaKind::Not, 0, 0, {std::move(f)}}), arity);
}

namespace {
int junct_arity(const std::vector<Formula>& parts) {
  if (parts.empty()) throw InputError("junctions must have at least one part");
  int arity = 0;
  for (const auto& p : parts) arity = std::max(arity, p.arity());
  return arity;
}
}  // namespace

Formula Formula::conj(std::vector<Formula> parts) {
  int arity = junct_arity(parts);
  return Formula(std::make_shared<Node>(Node{FormulaKind::And, 0, 0, std::move(parts)}), arity);
}

Formula Formula::disj(std::vector<Formula> parts) {
  int arity = junct_arity(parts);
  return Formula(std::make_shared<Node>(Node{FormulaKind::Or, 0, 0, std::move(parts)}), arity);
}

Formula Formula::exists(Formula body) {
  if (body.arity_ < 1) throw InputError("quantifier body has no free variable to bind");
  int arity = body.arity_ - 1;
  return Formula(std::make_shared<Node>(Node{FormulaKind::Exists, 0, 0, {std::move(body)}}),
                 arity);
}

Formula Formula::forall(Formula body) {
  if (body.arity_ < 1) throw InputError("quantifier body has no free variable to bind");
  int arity = body.arity_ - 1;
  return Formula(std::make_shared<Node>(Node{FormulaKind::Forall, 0, 0, {std::move(body)}}),
                 arity);
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->u != other.node_->u || node_->v != other.node_->v) return false;
  return node_->children == other.node_->children;
}

namespace {

std::string level_name(int level, int arity) {
  // Free slots print as v<k>; bound levels as z<depth>.
  if (level < arity) return "v" + std::to_string(level);
  return "z" + std::to_string(level - arity);
}

void print(const Formula& f, int arity, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Rel:
      out += "R(" + level_name(f.left_term(), arity) + "," +
             level_name(f.right_term(), arity) + ")";
      return;
    case FormulaKind::Eq:
      out += level_name(f.left_term(), arity) + "=" + level_name(f.right_term(), arity);
      return;
    case FormulaKind::Not:
      out += "~";
      print(f.children()[0], arity, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* op = f.kind() == FormulaKind::And ? " & " : " | ";
      out += "(";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += op;
        print(f.children()[i], arity, out);
      }
      out += ")";
      return;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      // This quantifier binds level arity(f), i.e. the body's top slot.
      out += f.kind() == FormulaKind::Exists ? "exists " : "forall ";
      out += level_name(f.arity(), arity) + " ";
      print(f.children()[0], arity, out);
      return;
    }
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, arity_, out);
  return out;
}

namespace {

bool is_atomic(const Formula& f) {
  return f.kind() == FormulaKind::Rel || f.kind() == FormulaKind::Eq;
}

bool is_literal(const Formula& f) {
  if (is_atomic(f)) return true;
  return f.kind() == FormulaKind::Not && is_atomic(f.children()[0]);
}

void collect_disjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == FormulaKind::Or) {
    for (const auto& c : f.children()) collect_disjuncts(c, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

bool is_basic_horn(const Formula& f) {
  std::vector<Formula> disjuncts;
  collect_disjuncts(f, disjuncts);
  int atomic_count = 0;
  for (const auto& d : disjuncts) {
    if (!is_literal(d)) return false;
    if (is_atomic(d)) ++atomic_count;
  }
  return atomic_count <= 1;
}

Formula nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Rel:
    case FormulaKind::Eq:
      return f;
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> parts;
      parts.reserve(f.children().size());
      for (const auto& c : f.children()) parts.push_back(nnf(c));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(parts))
                                          : Formula::disj(std::move(parts));
    }
    case FormulaKind::Exists:
      return Formula::exists(nnf(f.children()[0]));
    case FormulaKind::Forall:
      return Formula::forall(nnf(f.children()[0]));
    case FormulaKind::Not: {
      const Formula& g = f.children()[0];
      switch (g.kind()) {
        case FormulaKind::Rel:
        case FormulaKind::Eq:
          return f;
        case FormulaKind::Not:
          return nnf(g.children()[0]);
        case FormulaKind::And: {
          std::vector<Formula> parts;
          for (const auto& c : g.children()) parts.push_back(nnf(Formula::negate(c)));
          return Formula::disj(std::move(parts));
        }
        case FormulaKind::Or: {
          std::vector<Formula> parts;
          for (const auto& c : g.children()) parts.push_back(nnf(Formula::negate(c)));
          return Formula::conj(std::move(parts));
        }
        case FormulaKind::Exists:
          return Formula::forall(nnf(Formula::negate(g.children()[0])));
        case FormulaKind::Forall:
          return Formula::exists(nnf(Formula::negate(g.children()[0])));
      }
    }
  }
  throw Error("internal", "unreachable formula kind");
}

namespace {

bool horn_after_nnf(const Formula& f) {
  if (is_basic_horn(f)) return true;
  switch (f.kind()) {
    case FormulaKind::And: {
      for (const auto& c : f.children())
        if (!horn_after_nnf(c)) return false;
      return true;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return horn_after_nnf(f.children()[0]);
    default:
      return false;
  }
}

}  // namespace

bool is_horn(const Formula& f) { return horn_after_nnf(nnf(f)); }

bool is_positive(const Formula& f) {
  if (f.kind() == FormulaKind::Not) return false;
  for (const auto& c : f.children())
    if (!is_positive(c)) return false;
  return true;
}

namespace {

bool eval_node(const BinaryStructure& x, const Formula& f, std::vector<int>& env) {
  switch (f.kind()) {
    case FormulaKind::Rel: {
      int u = f.left_term(), v = f.right_term();
      if (u >= static_cast<int>(env.size()) || v >= static_cast<int>(env.size()))
        throw InputError("unbound variable in evaluation");
      return x.relates(env[u], env[v]);
    }
    case FormulaKind::Eq: {
      int u = f.left_term(), v = f.right_term();
      if (u >= static_cast<int>(env.size()) || v >= static_cast<int>(env.size()))
        throw InputError("unbound variable in evaluation");
      return env[u] == env[v];
    }
    case FormulaKind::Not:
      return !eval_node(x, f.children()[0], env);
    case FormulaKind::And:
      for (const auto& c : f.children())
        if (!eval_node(x, c, env)) return false;
      return true;
    case FormulaKind::Or:
      for (const auto& c : f.children())
        if (eval_node(x, c, env)) return true;
      return false;
    case FormulaKind::Exists: {
      env.push_back(0);
      for (int e = 0; e < x.size(); ++e) {
        env.back() = e;
        if (eval_node(x, f.children()[0], env)) {
          env.pop_back();
          return true;
        }
      }
      env.pop_back();
      return false;
    }
    case FormulaKind::Forall: {
      env.push_back(0);
      for (int e = 0; e < x.size(); ++e) {
        env.back() = e;
        if (!eval_node(x, f.children()[0], env)) {
          env.pop_back();
          return false;
        }
      }
      env.pop_back();
      return true;
    }
  }
  throw Error("internal", "unreachable formula kind");
}

}  // namespace

bool evaluate(const BinaryStructure& x, const Formula& f, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != f.arity())
    throw InputError("assignment does not cover the formula's free variables");
  for (int e : assignment)
    if (e < 0 || e >= x.size()) throw InputError("assignment element out of universe");
  std::vector<int> env = assignment;
  return eval_node(x, f, env);
}

Formula build_dist_formula(int n) {
  if (n < 0) throw InputError("n must be a natural number");
  if (n > 8) throw InputError("bounded-distance builder is capped at n = 8");

  // Free slots: 0 = x, 1 = y; chain points occupy levels 2..n+1.
  auto atom = [](int from, int to, int bit) {
    return bit == 0 ? Formula::rel(from, to) : Formula::rel(to, from);
  };
  std::vector<Formula> disjuncts;
  for (std::uint32_t code = 0; code < (1u << (n + 1)); ++code) {
    std::vector<Formula> chain;
    for (int k = 0; k <= n; ++k) {
      int from = k == 0 ? 0 : 1 + k;  // x or z_{k-1}
      int to = k == n ? 1 : 2 + k;    // y or z_k
      chain.push_back(atom(from, to, (code >> k) & 1u));
    }
    disjuncts.push_back(chain.size() == 1 ? std::move(chain[0])
                                          : Formula::conj(std::move(chain)));
  }
  Formula body = disjuncts.size() == 1 ? std::move(disjuncts[0])
                                       : Formula::disj(std::move(disjuncts));
  for (int k = 0; k < n; ++k) body = Formula::exists(std::move(body));
  return body;
}

Formula build_conn_sentence(int n) {
  return Formula::forall(Formula::forall(build_dist_formula(n)));
}

PreservationVerdict check_horn_preservation(const std::vector<BinaryStructure>& factors,
                                            const Filter& f, const Formula& phi,
                                            const std::vector<ProductPoint>& points,
                                            ProductOptions opts) {
  if (!is_horn(phi)) throw InputError("preservation harness requires a Horn formula");
  if (static_cast<int>(points.size()) != phi.arity())
    throw InputError("point tuple does not match the formula's free variables");
  for (const auto& p : points) check_point(factors, p);

  opts.reflexivize_factors = false;
  ReducedProduct rp = build_reduced_product(factors, f, opts);

  IndexSet holds(f.index_size());
  for (int i = 0; i < f.index_size(); ++i) {
    std::vector<int> assignment;
    assignment.reserve(points.size());
    for (const auto& p : points) assignment.push_back(p[i]);
    if (evaluate(factors[i], phi, assignment)) holds.insert(i);
  }

  std::vector<int> classes;
  classes.reserve(points.size());
  for (const auto& p : points) classes.push_back(rp.class_of(p));

  PreservationVerdict verdict;
  verdict.hypothesis_in_filter = f.member(holds);
  verdict.product_satisfies = evaluate(rp.quotient(), phi, classes);
  verdict.violated = verdict.hypothesis_in_filter && !verdict.product_satisfies;
  return verdict;
}

PreservationVerdict check_positive_factor_preservation(
    const std::vector<BinaryStructure>& factors, const Filter& f, const Formula& phi,
    ProductOptions opts) {
  if (!is_positive(phi)) throw InputError("factor-preservation harness requires a positive formula");
  if (!phi.is_sentence()) throw InputError("factor-preservation harness requires a sentence");

  opts.reflexivize_factors = false;
  ReducedProduct rp = build_reduced_product(factors, f, opts);

  IndexSet holds(f.index_size());
  for (int i = 0; i < f.index_size(); ++i)
    if (evaluate(factors[i], phi, {})) holds.insert(i);

  PreservationVerdict verdict;
  verdict.hypothesis_in_filter = f.member(holds);
  verdict.product_satisfies = evaluate(rp.quotient(), phi, {});
  verdict.violated = verdict.product_satisfies && !verdict.hypothesis_in_filter;
  return verdict;
}

}  // namespace redprod
