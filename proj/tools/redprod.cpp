// Command-line shell: parses an instance file, runs one command, prints a
// deterministic JSON report on stdout.
//
// Exit codes: 0 success/agreement, 1 usage error, 2 parse error,
// 3 size cap exceeded, 4 oracle disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "redprod/errors.hpp"
#include "redprod/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw redprod::InputError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced products of finite binary structures: connectivity, components, "
               "witnesses, and symbolic powers of the linear graph"};
  app.require_subcommand(1);

  redprod::CommandOptions opts;
  if (const char* cap = std::getenv("REDPROD_CAP"))
    opts.tuple_cap = std::strtoull(cap, nullptr, 10);

  std::string instance_path;
  std::string dot_path;
  bool want_json = false;

  auto add_common = [&](CLI::App* cmd, bool takes_instance) {
    if (takes_instance)
      cmd->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
    cmd->add_option("--seed", opts.seed, "seed for randomized runs");
    cmd->add_option("--cap", opts.tuple_cap, "tuple enumeration cap");
    cmd->add_flag("--json", want_json, "emit the JSON report (default)");
    cmd->add_flag("--timing", opts.timing, "include timing_ms in the report (non-deterministic)");
    return cmd;
  };

  auto* check = add_common(app.add_subcommand("check", "connectivity by both oracles"), true);
  auto* components =
      add_common(app.add_subcommand("components", "components by both oracles"), true);
  auto* witness = add_common(
      app.add_subcommand("witness", "pairwise criterion and explicit path witness"), true);
  witness->add_option("--x", opts.x_name, "name of the first point/sequence")->required();
  witness->add_option("--y", opts.y_name, "name of the second point/sequence")->required();
  auto* condition =
      add_common(app.add_subcommand("condition-b", "finite-exception criterion and "
                                                   "diameter stratification"),
                 true);
  auto* verify = add_common(
      app.add_subcommand("verify", "dual-oracle fuzz harness over random instances"), false);
  verify->add_option("--seeds", opts.seeds, "number of random instances");
  verify->add_option("--max-index", opts.max_index, "largest index set size");
  verify->add_option("--max-size", opts.max_size, "largest factor universe");
  auto* preserve = add_common(
      app.add_subcommand("preserve", "preservation harness for a Horn formula or "
                                     "positive sentence"),
      false);
  preserve->add_option("--formula", opts.formula_text, "formula text")->required();
  preserve->add_option("--trials", opts.trials, "number of random instances");
  auto* exp = add_common(app.add_subcommand("export", "quotient structure as JSON or DOT"), true);
  exp->add_option("--dot", dot_path, "write DOT to this file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    for (auto* cmd : {check, components, witness, condition, verify, preserve, exp})
      if (cmd->parsed()) opts.command = cmd->get_name();
    opts.want_dot = !dot_path.empty();

    std::optional<redprod::InstanceSpec> spec;
    if (opts.command != "verify" && opts.command != "preserve")
      spec = redprod::parse_instance(read_input(instance_path));

    redprod::Report report = redprod::run_command(spec ? &*spec : nullptr, opts);

    if (!report.dot.empty()) {
      if (dot_path == "-") {
        std::cout << report.dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) throw redprod::InputError("cannot write DOT file '" + dot_path + "'");
        out << report.dot;
      }
    }
    std::cout << redprod::render_report(report);
    return report.exit_code;
  } catch (const redprod::ParseError& e) {
    std::cerr << "error[" << e.code() << "] line " << e.line() << " col " << e.col() << ": "
              << e.what() << "\n";
    return 2;
  } catch (const redprod::SizeCapError& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 3;
  } catch (const redprod::Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}
