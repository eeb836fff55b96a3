// Command execution over parsed instances and deterministic JSON reports.
#pragma once

#include <json.hpp>

#include "redprod/fuzz.hpp"
#include "redprod/instance.hpp"

namespace redprod {

struct CommandOptions {
  std::string command;  // check | components | witness | condition-b | verify | preserve | export
  std::string x_name;
  std::string y_name;
  std::string formula_text;
  int trials = 500;
  int seeds = 1000;
  int max_index = 4;
  int max_size = 4;
  std::uint64_t seed = 0;
  std::uint64_t tuple_cap = 1'000'000;
  bool want_dot = false;
  bool timing = false;
};

struct Report {
  nlohmann::json body;
  int exit_code = 0;  // 0 success/agreement, 4 oracle disagreement
  std::string dot;    // filled by export when requested
};

// spec may be null for the instance-free commands (verify, preserve).
Report run_command(const InstanceSpec* spec, const CommandOptions& opts);

// FNV-1a over the canonical rendering.
std::string instance_digest(const InstanceSpec& spec);

// Deterministic serialization: two-space indent, sorted keys, trailing newline.
std::string render_report(const Report& r);

// Quotient structure in DOT form, nodes colored by component.
std::string export_dot(const ReducedProduct& rp);

}  // namespace redprod
