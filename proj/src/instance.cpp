#include "redprod/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

#include "redprod/errors.hpp"

namespace redprod {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
  bool is_number() const {
    return !text.empty() && std::all_of(text.begin(), text.end(),
                                        [](unsigned char c) { return std::isdigit(c); });
  }
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = line[i];
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::strchr("{}(),=|&~", c)) {
      out.push_back({std::string(1, static_cast<char>(c)), lineno, col});
      ++i;
      continue;
    }
    if (std::isalnum(c) || c == '_' || c == '-') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' ||
              line[j] == '-'))
        ++j;
      out.push_back({line.substr(i, j - i), lineno, col});
      i = j;
      continue;
    }
    throw ParseError("syntax",
                     std::string("unexpected character '") + static_cast<char>(c) + "'",
                     lineno, col);
  }
  return out;
}

[[noreturn]] void fail(const std::string& code, const std::string& msg, const Token& at) {
  throw ParseError(code, msg, at.line, at.col);
}

long to_number(const Token& t) {
  if (!t.is_number()) fail("syntax", "expected a number, got '" + t.text + "'", t);
  return std::stol(t.text);
}

// Cursor over one line's tokens; toks[0] is the directive keyword.
struct Line {
  std::vector<Token> toks;
  std::size_t pos = 1;
  const Token& keyword() const { return toks[0]; }
  bool done() const { return pos >= toks.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("syntax", "unexpected end of line", keyword().line, 1000);
    return toks[pos];
  }
  Token take() {
    Token t = peek();
    ++pos;
    return t;
  }
  Token expect(const std::string& text) {
    Token t = take();
    if (t.text != text) fail("syntax", "expected '" + text + "', got '" + t.text + "'", t);
    return t;
  }
  void finish() {
    if (!done()) fail("syntax", "trailing tokens after '" + keyword().text + "' line", peek());
  }
};

std::vector<int> parse_brace_set(Line& ln) {
  std::vector<int> out;
  ln.expect("{");
  if (!ln.done() && ln.peek().text == "}") {
    ln.take();
    return out;
  }
  while (true) {
    out.push_back(static_cast<int>(to_number(ln.take())));
    Token t = ln.take();
    if (t.text == "}") break;
    if (t.text != ",") fail("syntax", "expected ',' or '}' in set", t);
  }
  return out;
}

}  // namespace

bool InstanceSpec::symbolic() const {
  if (filter && (filter->kind == FilterSpec::Kind::Frechet ||
                 filter->kind == FilterSpec::Kind::PrincipalCofinite))
    return true;
  return !sequences.empty() || power.has_value();
}

std::vector<BinaryStructure> InstanceSpec::factors() const {
  if (!index_size) throw InputError("finite instance has no index declaration");
  std::vector<BinaryStructure> out;
  out.reserve(assignment.size());
  for (const auto& name : assignment) out.push_back(structures.at(name));
  return out;
}

Filter InstanceSpec::finite_filter() const {
  if (!filter || !index_size) throw InputError("finite instance is missing its filter or index");
  int n = *index_size;
  switch (filter->kind) {
    case FilterSpec::Kind::Trivial:
      return Filter::trivial(n);
    case FilterSpec::Kind::Principal:
      return Filter::principal(n, IndexSet::of(n, filter->sets.at(0)));
    case FilterSpec::Kind::Generators: {
      std::vector<IndexSet> gens;
      gens.reserve(filter->sets.size());
      for (const auto& s : filter->sets) gens.push_back(IndexSet::of(n, s));
      return Filter(n, std::move(gens));
    }
    default:
      throw InputError("symbolic filter on a finite instance");
  }
}

SymbolicFilter InstanceSpec::symbolic_filter() const {
  if (!filter) throw InputError("instance is missing its filter");
  auto as_set = [&](const std::vector<int>& v) {
    std::set<std::uint64_t> s;
    for (int i : v) s.insert(static_cast<std::uint64_t>(i));
    return s;
  };
  switch (filter->kind) {
    case FilterSpec::Kind::Frechet:
      return SymbolicFilter::frechet();
    case FilterSpec::Kind::Principal:
      return SymbolicFilter::principal_finite(as_set(filter->sets.at(0)));
    case FilterSpec::Kind::PrincipalCofinite:
      return SymbolicFilter::principal_cofinite(
          filter->sets.empty() ? std::set<std::uint64_t>{} : as_set(filter->sets.at(0)));
    default:
      throw InputError("finite filter on a symbolic instance");
  }
}

InstanceSpec parse_instance(const std::string& text) {
  InstanceSpec spec;
  std::string current_structure;
  int filter_line = 0;
  std::map<std::string, Token> point_locs;
  std::vector<bool> assigned;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks = lex_line(raw, lineno);
    if (toks.empty()) continue;
    Line ln{std::move(toks)};
    const std::string& kw = ln.keyword().text;

    if (kw == "structure") {
      Token name = ln.take();
      if (name.is_number()) fail("syntax", "structure name expected", name);
      long size = to_number(ln.take());
      ln.finish();
      if (spec.structures.count(name.text))
        fail("duplicate", "structure '" + name.text + "' already declared", name);
      if (size < 1) fail("range", "structure universe must be nonempty", ln.keyword());
      spec.structures.emplace(name.text, BinaryStructure(static_cast<int>(size)));
      current_structure = name.text;
    } else if (kw == "edge") {
      if (current_structure.empty())
        fail("syntax", "edge line outside a structure block", ln.keyword());
      Token ut = ln.take(), vt = ln.take();
      long u = to_number(ut), v = to_number(vt);
      ln.finish();
      BinaryStructure& s = spec.structures.at(current_structure);
      if (u < 0 || u >= s.size()) fail("range", "edge endpoint out of universe", ut);
      if (v < 0 || v >= s.size()) fail("range", "edge endpoint out of universe", vt);
      s.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else if (kw == "index") {
      Token nt = ln.take();
      long n = to_number(nt);
      ln.finish();
      if (spec.index_size) fail("duplicate", "index already declared", nt);
      if (n < 1) fail("range", "index set must be nonempty", nt);
      spec.index_size = static_cast<int>(n);
      spec.assignment.assign(n, "");
      assigned.assign(n, false);
    } else if (kw == "assign") {
      Token it = ln.take();
      long i = to_number(it);
      Token name = ln.take();
      ln.finish();
      if (!spec.index_size) fail("syntax", "index must be declared before assign", it);
      if (i < 0 || i >= *spec.index_size) fail("dimension", "assigned index out of range", it);
      if (!spec.structures.count(name.text))
        fail("unresolved-name", "unknown structure '" + name.text + "'", name);
      if (assigned[i]) fail("duplicate", "index already assigned", it);
      assigned[i] = true;
      spec.assignment[i] = name.text;
    } else if (kw == "filter") {
      Token kind = ln.take();
      if (spec.filter) fail("duplicate", "filter already declared", kind);
      filter_line = kind.line;
      FilterSpec fs;
      if (kind.text == "trivial") {
        fs.kind = FilterSpec::Kind::Trivial;
      } else if (kind.text == "frechet") {
        fs.kind = FilterSpec::Kind::Frechet;
      } else if (kind.text == "principal") {
        fs.kind = FilterSpec::Kind::Principal;
        fs.sets.push_back(parse_brace_set(ln));
      } else if (kind.text == "principal-cofinite") {
        fs.kind = FilterSpec::Kind::PrincipalCofinite;
        fs.sets.push_back(parse_brace_set(ln));
      } else if (kind.text == "generators") {
        fs.kind = FilterSpec::Kind::Generators;
        ln.expect("{");
        while (!ln.done() && ln.peek().text == "{") fs.sets.push_back(parse_brace_set(ln));
        ln.expect("}");
        if (fs.sets.empty()) fail("syntax", "generator family must be nonempty", kind);
      } else {
        fail("syntax", "unknown filter kind '" + kind.text + "'", kind);
      }
      ln.finish();

      // Range and properness checks for the finite kinds, surfaced here with
      // the filter line's location.
      if (fs.kind == FilterSpec::Kind::Generators || fs.kind == FilterSpec::Kind::Principal) {
        if (spec.index_size) {
          int n = *spec.index_size;
          std::vector<bool> meet(n, true);
          for (const auto& s : fs.sets) {
            std::vector<bool> in(n, false);
            for (int e : s) {
              if (e < 0 || e >= n)
                fail("dimension", "filter set element out of the index range", kind);
              in[e] = true;
            }
            for (int i = 0; i < n; ++i) meet[i] = meet[i] && in[i];
          }
          if (std::find(meet.begin(), meet.end(), true) == meet.end())
            fail("improper-filter", "generator family has empty intersection", kind);
        } else if (fs.kind == FilterSpec::Kind::Principal && fs.sets.at(0).empty()) {
          fail("improper-filter", "principal kernel must be nonempty", kind);
        }
      }
      spec.filter = std::move(fs);
    } else if (kw == "point") {
      Token name = ln.take();
      ln.expect("=");
      ln.expect("(");
      ProductPoint coords;
      while (true) {
        coords.push_back(static_cast<int>(to_number(ln.take())));
        Token t = ln.take();
        if (t.text == ")") break;
        if (t.text != ",") fail("syntax", "expected ',' or ')' in point", t);
      }
      ln.finish();
      if (!spec.index_size) fail("syntax", "index must be declared before point", name);
      if (static_cast<int>(coords.size()) != *spec.index_size)
        fail("dimension", "point dimension does not match the index", name);
      if (spec.points.count(name.text))
        fail("duplicate", "point '" + name.text + "' already declared", name);
      point_locs.emplace(name.text, name);
      spec.points.emplace(name.text, std::move(coords));
    } else if (kw == "seq") {
      Token name = ln.take();
      Token kind = ln.take();
      std::vector<std::uint64_t> prefix;
      if (kind.text == "prefix") {
        while (!ln.done() && ln.peek().is_number())
          prefix.push_back(static_cast<std::uint64_t>(to_number(ln.take())));
        kind = ln.take();
        if (kind.text != "affine" && kind.text != "constant")
          fail("syntax", "prefix must be followed by affine or constant", kind);
      }
      SymbolicSequence s = SymbolicSequence::constant(0);
      if (kind.text == "constant") {
        s = SymbolicSequence::eventually_affine(
            std::move(prefix), 0, static_cast<std::uint64_t>(to_number(ln.take())));
      } else if (kind.text == "affine") {
        std::uint64_t a = static_cast<std::uint64_t>(to_number(ln.take()));
        std::uint64_t b = static_cast<std::uint64_t>(to_number(ln.take()));
        s = SymbolicSequence::eventually_affine(std::move(prefix), a, b);
      } else {
        fail("syntax", "unknown sequence kind '" + kind.text + "'", kind);
      }
      ln.finish();
      if (spec.sequences.count(name.text))
        fail("duplicate", "sequence '" + name.text + "' already declared", name);
      spec.sequences.emplace(name.text, std::move(s));
    } else if (kw == "power") {
      Token name = ln.take();
      ln.finish();
      if (spec.power) fail("duplicate", "power already declared", name);
      if (name.text != "G_omega" && !spec.structures.count(name.text))
        fail("unresolved-name", "unknown structure '" + name.text + "'", name);
      spec.power = name.text;
    } else {
      fail("syntax", "unknown directive '" + kw + "'", ln.keyword());
    }
  }

  // Cross-cutting validation.
  if (!spec.filter) throw ParseError("syntax", "instance is missing a filter", lineno, 1);
  if (spec.symbolic()) {
    if (spec.index_size || !spec.points.empty())
      throw ParseError("dimension", "symbolic instances take seq/power lines, not index/point",
                       filter_line, 1);
    if (spec.filter->kind == FilterSpec::Kind::Trivial ||
        spec.filter->kind == FilterSpec::Kind::Generators)
      throw ParseError("dimension", "symbolic instances need a frechet or principal filter",
                       filter_line, 1);
    if (spec.power && spec.power != "G_omega" && !spec.sequences.empty())
      throw ParseError("dimension",
                       "sequence pairs are only supported over the linear-graph power",
                       filter_line, 1);
  } else {
    if (!spec.index_size)
      throw ParseError("syntax", "finite instance is missing an index", lineno, 1);
    for (int i = 0; i < *spec.index_size; ++i)
      if (!assigned[i])
        throw ParseError("dimension", "index " + std::to_string(i) + " is unassigned", lineno, 1);
    for (const auto& [name, p] : spec.points) {
      for (int i = 0; i < *spec.index_size; ++i) {
        const BinaryStructure& s = spec.structures.at(spec.assignment[i]);
        if (p[i] < 0 || p[i] >= s.size())
          fail("range", "point coordinate out of the factor universe", point_locs.at(name));
      }
    }
  }
  return spec;
}

std::string render_instance(const InstanceSpec& spec) {
  std::ostringstream out;
  for (const auto& [name, s] : spec.structures) {
    out << "structure " << name << " " << s.size() << "\n";
    for (auto [u, v] : s.edges()) out << "edge " << u << " " << v << "\n";
  }
  if (spec.index_size) {
    out << "index " << *spec.index_size << "\n";
    for (std::size_t i = 0; i < spec.assignment.size(); ++i)
      out << "assign " << i << " " << spec.assignment[i] << "\n";
  }
  if (spec.filter) {
    auto render_set = [&](const std::vector<int>& s) {
      std::string body = "{";
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) body += ",";
        body += std::to_string(s[k]);
      }
      return body + "}";
    };
    switch (spec.filter->kind) {
      case FilterSpec::Kind::Trivial:
        out << "filter trivial\n";
        break;
      case FilterSpec::Kind::Frechet:
        out << "filter frechet\n";
        break;
      case FilterSpec::Kind::Principal:
        out << "filter principal " << render_set(spec.filter->sets.at(0)) << "\n";
        break;
      case FilterSpec::Kind::PrincipalCofinite:
        out << "filter principal-cofinite " << render_set(spec.filter->sets.at(0)) << "\n";
        break;
      case FilterSpec::Kind::Generators: {
        out << "filter generators {";
        for (const auto& s : spec.filter->sets) out << " " << render_set(s);
        out << " }\n";
        break;
      }
    }
  }
  for (const auto& [name, p] : spec.points) {
    out << "point " << name << " = (";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ",";
      out << p[i];
    }
    out << ")\n";
  }
  for (const auto& [name, s] : spec.sequences) {
    out << "seq " << name;
    if (!s.prefix().empty()) {
      out << " prefix";
      for (std::uint64_t v : s.prefix()) out << " " << v;
    }
    if (s.slope() == 0)
      out << " constant " << s.intercept();
    else
      out << " affine " << s.slope() << " " << s.intercept();
    out << "\n";
  }
  if (spec.power) out << "power " << *spec.power << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Formula text.

namespace {

struct NamedNode {
  FormulaKind kind;
  std::string u, v;  // atomic terms
  std::vector<NamedNode> children;
  std::string binder;  // Exists/Forall
};

struct FormulaParser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("syntax", "unexpected end of formula", 1, 1000);
    return toks[pos];
  }
  Token take() {
    Token t = peek();
    ++pos;
    return t;
  }
  void expect(const std::string& text) {
    Token t = take();
    if (t.text != text) fail("syntax", "expected '" + text + "', got '" + t.text + "'", t);
  }

  NamedNode formula() {
    if (!done() && (peek().text == "exists" || peek().text == "forall")) {
      Token q = take();
      Token var = take();
      if (var.is_number()) fail("syntax", "variable name expected", var);
      NamedNode body = formula();
      return NamedNode{q.text == "exists" ? FormulaKind::Exists : FormulaKind::Forall,
                       "", "", {std::move(body)}, var.text};
    }
    return disjunction();
  }

  NamedNode disjunction() {
    NamedNode first = conjunction();
    if (done() || peek().text != "|") return first;
    std::vector<NamedNode> parts;
    parts.push_back(std::move(first));
    while (!done() && peek().text == "|") {
      take();
      parts.push_back(conjunction());
    }
    return NamedNode{FormulaKind::Or, "", "", std::move(parts), ""};
  }

  NamedNode conjunction() {
    NamedNode first = unary();
    if (done() || peek().text != "&") return first;
    std::vector<NamedNode> parts;
    parts.push_back(std::move(first));
    while (!done() && peek().text == "&") {
      take();
      parts.push_back(unary());
    }
    return NamedNode{FormulaKind::And, "", "", std::move(parts), ""};
  }

  NamedNode unary() {
    if (peek().text == "~") {
      take();
      return NamedNode{FormulaKind::Not, "", "", {unary()}, ""};
    }
    return atom();
  }

  NamedNode atom() {
    Token t = take();
    if (t.text == "(") {
      NamedNode inner = formula();
      expect(")");
      return inner;
    }
    if (t.text == "R") {
      expect("(");
      Token a = take();
      expect(",");
      Token b = take();
      expect(")");
      return NamedNode{FormulaKind::Rel, a.text, b.text, {}, ""};
    }
    if (t.is_number()) fail("syntax", "variable name expected", t);
    expect("=");
    Token b = take();
    return NamedNode{FormulaKind::Eq, t.text, b.text, {}, ""};
  }
};

void collect_free(const NamedNode& n, std::vector<std::string>& bound,
                  std::vector<std::string>& free_order) {
  auto note = [&](const std::string& name) {
    if (std::find(bound.rbegin(), bound.rend(), name) != bound.rend()) return;
    if (std::find(free_order.begin(), free_order.end(), name) == free_order.end())
      free_order.push_back(name);
  };
  switch (n.kind) {
    case FormulaKind::Rel:
    case FormulaKind::Eq:
      note(n.u);
      note(n.v);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      bound.push_back(n.binder);
      collect_free(n.children[0], bound, free_order);
      bound.pop_back();
      return;
    default:
      for (const auto& c : n.children) collect_free(c, bound, free_order);
  }
}

Formula to_formula(const NamedNode& n, const std::vector<std::string>& free_order,
                   std::vector<std::string>& bound) {
  auto level = [&](const std::string& name) -> int {
    for (int k = static_cast<int>(bound.size()) - 1; k >= 0; --k)
      if (bound[k] == name) return static_cast<int>(free_order.size()) + k;
    for (std::size_t k = 0; k < free_order.size(); ++k)
      if (free_order[k] == name) return static_cast<int>(k);
    throw ParseError("unresolved-name", "variable '" + name + "' not in scope", 1, 1);
  };
  switch (n.kind) {
    case FormulaKind::Rel:
      return Formula::rel(level(n.u), level(n.v));
    case FormulaKind::Eq:
      return Formula::eq(level(n.u), level(n.v));
    case FormulaKind::Not:
      return Formula::negate(to_formula(n.children[0], free_order, bound));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> parts;
      parts.reserve(n.children.size());
      for (const auto& c : n.children) parts.push_back(to_formula(c, free_order, bound));
      return n.kind == FormulaKind::And ? Formula::conj(std::move(parts))
                                        : Formula::disj(std::move(parts));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bound.push_back(n.binder);
      Formula body = to_formula(n.children[0], free_order, bound);
      bound.pop_back();
      // The body may not mention the bound variable; pad with a vacuous
      // equality so the quantifier still has a slot to bind.
      int want = static_cast<int>(free_order.size() + bound.size());
      if (body.arity() < want + 1)
        body = Formula::conj({std::move(body), Formula::eq(want, want)});
      return n.kind == FormulaKind::Exists ? Formula::exists(std::move(body))
                                           : Formula::forall(std::move(body));
    }
  }
  throw Error("internal", "unreachable formula kind");
}

}  // namespace

Formula parse_formula(const std::string& text) {
  FormulaParser p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = lex_line(raw, lineno);
    p.toks.insert(p.toks.end(), toks.begin(), toks.end());
  }
  if (p.toks.empty()) throw ParseError("syntax", "empty formula", 1, 1);
  NamedNode root = p.formula();
  if (!p.done()) fail("syntax", "trailing tokens after formula", p.peek());

  std::vector<std::string> bound, free_order;
  collect_free(root, bound, free_order);
  return to_formula(root, free_order, bound);
}

}  // namespace redprod
