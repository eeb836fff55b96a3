#include "redprod/report.hpp"

#include <chrono>

#include "redprod/errors.hpp"

namespace redprod {

using nlohmann::json;

namespace {

json point_json(const ProductPoint& p) { return json(p); }

json partition_json(const Partition& parts) {
  json out = json::array();
  for (const auto& cls : parts) out.push_back(cls);
  return out;
}

json witness_json(const ConditionBWitness& w) {
  return json{{"k", w.k.elements()}, {"n", w.n}};
}

json segment_json(const PathSegment& seg) {
  json mids = json::array();
  for (const auto& m : seg.mids) mids.push_back(point_json(m));
  return json{{"from", point_json(seg.from)},
              {"mids", std::move(mids)},
              {"to", point_json(seg.to)},
              {"pattern", json(seg.pattern)}};
}

json path_witness_json(const ProductPathWitness& w) {
  json segs = json::array();
  for (const auto& s : w.segments) segs.push_back(segment_json(s));
  return json{{"segments", std::move(segs)}};
}

json index_set_json(const DefinableIndexSet& s) {
  std::vector<std::uint64_t> elems(s.exceptions().begin(), s.exceptions().end());
  if (s.is_cofinite()) return json{{"kind", "cofinite"}, {"excluded", elems}};
  return json{{"kind", "finite"}, {"elements", elems}};
}

json certificate_json(const SymbolicCertificate& c) {
  json samples = json::array();
  for (const auto& [n, set] : c.samples)
    samples.push_back(json{{"n", n}, {"distance_set", index_set_json(set)}});
  json out{{"connected", c.connected}, {"reason", c.reason}, {"samples", std::move(samples)}};
  out["n"] = c.witness_n ? json(*c.witness_n) : json();
  return out;
}

json power_json(const PowerConnectivity& p) {
  json out{{"connected", p.connected}, {"reasoning", p.reasoning}};
  if (p.witness) {
    out["witness"] = json{{"x", p.witness->x.to_string()},
                          {"y", p.witness->y.to_string()},
                          {"certificate", certificate_json(p.witness->certificate)},
                          {"conclusion", p.witness->conclusion}};
  }
  out["remark_b_prime"] = p.remark_b_prime ? json(*p.remark_b_prime) : json();
  return out;
}

json verify_json(const VerifyStats& s) {
  return json{{"trials", s.trials},
              {"equivalence_agree", s.equivalence_agree},
              {"components_agree", s.components_agree},
              {"witness_pairs", s.witness_pairs},
              {"witness_agree", s.witness_agree},
              {"witness_valid", s.witness_valid},
              {"restriction_checks", s.restriction_checks},
              {"restriction_ok", s.restriction_ok},
              {"direct_checks", s.direct_checks},
              {"direct_agree", s.direct_agree}};
}

const BinaryStructure& power_base(const InstanceSpec& spec) {
  if (!spec.power || *spec.power == "G_omega")
    throw InputError("instance has no finite power base");
  return spec.structures.at(*spec.power);
}

ProductPoint named_point(const InstanceSpec& spec, const std::string& name) {
  auto it = spec.points.find(name);
  if (it == spec.points.end()) throw InputError("unknown point '" + name + "'");
  return it->second;
}

SymbolicSequence named_sequence(const InstanceSpec& spec, const std::string& name) {
  auto it = spec.sequences.find(name);
  if (it == spec.sequences.end()) throw InputError("unknown sequence '" + name + "'");
  return it->second;
}

}  // namespace

std::string instance_digest(const InstanceSpec& spec) {
  std::string text = render_instance(spec);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string export_dot(const ReducedProduct& rp) {
  static const char* palette[] = {"#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
                                  "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3"};
  Partition parts = components_bfs(rp);
  std::vector<int> color(rp.class_count(), 0);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int cls : parts[c]) color[cls] = static_cast<int>(c % 8);

  std::string out = "digraph quotient {\n  node [style=filled];\n";
  for (int c = 0; c < rp.class_count(); ++c) {
    const ProductPoint& rep = rp.representative(c);
    std::string label = "(";
    for (std::size_t i = 0; i < rep.size(); ++i) {
      if (i) label += ",";
      label += std::to_string(rep[i]);
    }
    label += ")";
    out += "  c" + std::to_string(c) + " [label=\"" + label + "\", fillcolor=\"" +
           palette[color[c]] + "\"];\n";
  }
  for (int a = 0; a < rp.class_count(); ++a)
    for (int b = 0; b < rp.class_count(); ++b)
      if (rp.quotient().relates(a, b))
        out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string render_report(const Report& r) { return r.body.dump(2) + "\n"; }

Report run_command(const InstanceSpec* spec, const CommandOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  json& body = report.body;
  body["schema_version"] = 1;
  body["command"] = opts.command;

  ProductOptions popts;
  popts.tuple_cap = opts.tuple_cap;

  if (opts.command == "verify") {
    FuzzConfig cfg;
    cfg.max_index = opts.max_index;
    cfg.max_size = opts.max_size;
    cfg.tuple_cap = opts.tuple_cap;
    VerifyStats s = run_verify(opts.seed, opts.seeds, cfg);
    body["seed"] = opts.seed;
    body["results"] = verify_json(s);
    bool all_agree = s.equivalence_agree == s.trials && s.components_agree == s.trials &&
                     s.witness_agree == s.witness_pairs && s.witness_valid == s.witness_pairs &&
                     s.restriction_ok == s.restriction_checks &&
                     s.direct_agree == s.direct_checks;
    body["agreement"] = all_agree;
    report.exit_code = all_agree ? 0 : 4;
  } else if (opts.command == "preserve") {
    Formula phi = parse_formula(opts.formula_text);
    FormulaHarnessStats s = run_formula_harness(phi, opts.seed, opts.trials);
    body["seed"] = opts.seed;
    body["results"] = json{{"formula", phi.to_string()},
                           {"classification",
                            json{{"basic_horn", is_basic_horn(phi)},
                                 {"horn", is_horn(phi)},
                                 {"positive", is_positive(phi)},
                                 {"sentence", phi.is_sentence()}}},
                           {"horn_checks", s.horn_checks},
                           {"horn_violations", s.horn_violations},
                           {"horn_hypothesis_hits", s.horn_hypothesis_hits},
                           {"positive_checks", s.positive_checks},
                           {"positive_violations", s.positive_violations},
                           {"positive_hypothesis_hits", s.positive_hypothesis_hits}};
    bool clean = s.horn_violations == 0 && s.positive_violations == 0;
    body["agreement"] = clean;
    report.exit_code = clean ? 0 : 4;
  } else {
    if (!spec) throw InputError("command '" + opts.command + "' requires an instance");
    body["instance"] = json{{"digest", instance_digest(*spec)},
                            {"kind", spec->symbolic() ? "symbolic" : "finite"}};

    if (opts.command == "check") {
      if (spec->symbolic()) {
        SymbolicFilter sf = spec->symbolic_filter();
        PowerConnectivity p = (!spec->power || *spec->power == "G_omega")
                                  ? linear_graph_power_connected(sf)
                                  : finite_power_connected(power_base(*spec), sf);
        body["results"] = json{{"power", spec->power.value_or("G_omega")},
                               {"filter", sf.to_string()},
                               {"connectivity", power_json(p)}};
        bool agree = !p.remark_b_prime || *p.remark_b_prime == p.connected;
        body["agreement"] = agree;
        report.exit_code = agree ? 0 : 4;
      } else {
        auto factors = spec->factors();
        Filter f = spec->finite_filter();
        EquivalenceReport eq = verify_equivalence(factors, f, popts);
        json cb;
        cb["present"] = eq.condition_b_witness.has_value();
        if (eq.condition_b_witness) cb["witness"] = witness_json(*eq.condition_b_witness);
        body["results"] = json{{"bfs_connected", eq.bfs_connected},
                               {"condition_b", std::move(cb)}};
        body["agreement"] = eq.agree;
        report.exit_code = eq.agree ? 0 : 4;
      }
    } else if (opts.command == "components") {
      if (spec->symbolic())
        throw InputError("components requires a finite instance");
      ReducedProduct rp = build_reduced_product(spec->factors(), spec->finite_filter(), popts);
      Partition bfs = components_bfs(rp);
      Partition crit = components_criterion(rp);
      json reps = json::array();
      for (int c = 0; c < rp.class_count(); ++c) reps.push_back(point_json(rp.representative(c)));
      bool agree = bfs == crit;
      body["results"] = json{{"class_count", rp.class_count()},
                             {"representatives", std::move(reps)},
                             {"bfs", partition_json(bfs)},
                             {"criterion", partition_json(crit)}};
      body["agreement"] = agree;
      report.exit_code = agree ? 0 : 4;
    } else if (opts.command == "witness") {
      if (spec->symbolic()) {
        SymbolicSequence x = named_sequence(*spec, opts.x_name);
        SymbolicSequence y = named_sequence(*spec, opts.y_name);
        SymbolicCertificate cert = symbolic_connected(x, y, spec->symbolic_filter());
        body["results"] = json{{"x", x.to_string()},
                               {"y", y.to_string()},
                               {"certificate", certificate_json(cert)}};
        body["agreement"] = true;
      } else {
        auto factors = spec->factors();
        Filter f = spec->finite_filter();
        ProductPoint x = named_point(*spec, opts.x_name);
        ProductPoint y = named_point(*spec, opts.y_name);
        auto n = criterion_witness(factors, f, x, y);
        auto w = build_path_witness(factors, f, x, y);
        bool agree = n.has_value() == w.has_value();
        json results{{"x", point_json(x)}, {"y", point_json(y)},
                     {"connected", n.has_value()}};
        results["criterion_n"] = n ? json(*n) : json();
        if (w) {
          results["witness"] = path_witness_json(*w);
          bool valid = validate_witness(factors, f, x, y, *w);
          results["witness_valid"] = valid;
          agree = agree && valid;
        }
        body["results"] = std::move(results);
        body["agreement"] = agree;
        report.exit_code = agree ? 0 : 4;
      }
    } else if (opts.command == "condition-b") {
      if (spec->symbolic())
        throw InputError("condition-b requires a finite instance; use check for powers");
      auto factors = spec->factors();
      Filter f = spec->finite_filter();
      DiameterStratification strat = stratify(factors, f);
      auto w = condition_b(factors, f);
      json layers = json::array();
      for (const auto& l : strat.layers) layers.push_back(l.elements());
      json a = json::array();
      for (const auto& an : strat.a) a.push_back(an.elements());
      json results{{"stratification",
                    json{{"a", std::move(a)},
                         {"layers", std::move(layers)},
                         {"i_inf", strat.i_inf.elements()},
                         {"bound", strat.bound}}},
                   {"present", w.has_value()}};
      if (w) results["witness"] = witness_json(*w);
      body["results"] = std::move(results);
      body["agreement"] = true;
    } else if (opts.command == "export") {
      if (spec->symbolic()) throw InputError("export requires a finite instance");
      ReducedProduct rp = build_reduced_product(spec->factors(), spec->finite_filter(), popts);
      json reps = json::array();
      for (int c = 0; c < rp.class_count(); ++c) reps.push_back(point_json(rp.representative(c)));
      json edges = json::array();
      for (int u = 0; u < rp.class_count(); ++u)
        for (int v = 0; v < rp.class_count(); ++v)
          if (rp.quotient().relates(u, v)) edges.push_back(json::array({u, v}));
      body["results"] = json{{"class_count", rp.class_count()},
                             {"representatives", std::move(reps)},
                             {"edges", std::move(edges)},
                             {"components", partition_json(components_bfs(rp))}};
      body["agreement"] = true;
      if (opts.want_dot) report.dot = export_dot(rp);
    } else {
      throw InputError("unknown command '" + opts.command + "'");
    }
  }

  if (opts.timing) {
    body["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return report;
}

}  // namespace redprod
