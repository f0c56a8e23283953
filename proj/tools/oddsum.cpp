// oddsum: construct graph families, solve odd-domination / χ / χos, validate
// colorings, evaluate surface bounds and re-run the theorem regression suite.
//
// Exit codes: 0 success or valid, 1 failed claim or invalid input, 2 resource cap.

#include "oddsum/coloring.hpp"
#include "oddsum/errors.hpp"
#include "oddsum/families.hpp"
#include "oddsum/graph_io.hpp"
#include "oddsum/odd_domination.hpp"
#include "oddsum/odd_sum.hpp"
#include "oddsum/surfaces.hpp"
#include "oddsum/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace oddsum;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_resource = 2;

auto read_text(const std::string & path) -> std::string {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

auto write_text(const std::string & path, const std::string & text) -> void {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

auto load_graph(const std::string & path) -> Graph { return read_graph(read_text(path)); }

struct ConstructOptions {
  std::string family;
  FamilyParams params;
  std::string format = "graph6";
  std::string output;
};

struct SolveOptions {
  std::string what;
  std::string input = "-";
  bool count = false;
  bool list = false;
  bool certificate = false;
  bool json = false;
  std::uint64_t cap = 0;
  std::uint64_t budget = default_node_budget;
};

struct VerifyOptions {
  std::string id;
  VerifyParams params;
  bool json = false;
};

struct ValidateOptions {
  std::string input;
  std::string coloring;
};

struct SurfacesOptions {
  std::string what;
  std::uint64_t genus = 30;
  std::uint64_t g_max = 240;
  std::string format = "csv";
};

struct OracleOptions {
  std::string what;
  std::string input = "-";
};

auto run_construct(const ConstructOptions & o) -> int {
  auto g = build_family(o.family, o.params);
  write_text(o.output, write_graph(g, parse_graph_format(o.format)));
  return exit_ok;
}

auto run_solve(const SolveOptions & o) -> int {
  const auto g = load_graph(o.input);
  const auto cap = o.cap ? o.cap : default_enumeration_cap();
  if (o.what == "ods") {
    auto system = solve_odd_domination(g);
    PowerOfTwo count(system.nullity());
    if (o.json) {
      nlohmann::json j{{"nullity", system.nullity()}, {"count", count.to_string()},
                       {"particular", to_json(system.particular)}};
      if (o.list) {
        auto sets = nlohmann::json::array();
        for (const auto & d : enumerate_odd_dominating_sets(system, cap))
          sets.push_back(to_json(d));
        j["sets"] = sets;
      }
      std::cout << j.dump() << "\n";
    } else if (o.list) {
      for (const auto & d : enumerate_odd_dominating_sets(system, cap))
        std::cout << d.to_string() << "\n";
    } else if (o.count) {
      std::cout << count.to_string() << "\n";
    } else {
      std::cout << "nullity " << system.nullity() << "\ncount " << count.to_string() << "\nparticular "
                << system.particular.to_string() << "\n";
    }
    return exit_ok;
  }
  if (o.what == "chi") {
    auto coloring = chromatic_number(g, o.budget);
    if (o.json || o.certificate) {
      nlohmann::json j{{"k", coloring.k}};
      if (o.certificate)
        j["colors"] = coloring_to_json(coloring.colors);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << coloring.k << "\n";
    }
    return exit_ok;
  }
  if (o.what == "chios") {
    auto cert = odd_sum_chromatic(g, cap, o.budget);
    if (o.json || o.certificate)
      std::cout << (o.certificate ? to_json(cert) : nlohmann::json{{"chios", cert.chios}}).dump() << "\n";
    else
      std::cout << cert.chios << "\n";
    return exit_ok;
  }
  throw InvalidArgument("solve: unknown quantity '" + o.what + "' (expected ods, chi or chios)");
}

auto run_verify(const VerifyOptions & o) -> int {
  std::vector<std::string> ids;
  if (o.id == "all")
    ids = verify_ids();
  else
    ids.push_back(o.id);

  bool all_pass = true;
  auto reports = nlohmann::json::array();
  for (const auto & id : ids) {
    auto report = verify_theorem(id, o.params);
    all_pass = all_pass && report.passed();
    if (o.json)
      reports.push_back(report.to_json());
    else
      std::cout << report.to_text();
  }
  if (o.json)
    std::cout << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_pass ? exit_ok : exit_failed;
}

auto run_validate(const ValidateOptions & o) -> int {
  const auto g = load_graph(o.input);
  auto body = nlohmann::json::parse(read_text(o.coloring), nullptr, false);
  if (body.is_discarded())
    throw InvalidArgument("coloring file is not valid JSON");
  const auto colors = coloring_from_json(body, g.size());
  auto violations = validate_odd_sum_coloring(g, colors);
  if (violations) {
    std::cout << "valid odd-sum coloring, " << range_size(colors) << " colors\n";
    return exit_ok;
  }
  std::cout << "invalid: " << violations.improper_edges.size() << " properness violations, "
            << violations.even_sums.size() << " parity violations\n";
  for (auto [u, v] : violations.improper_edges)
    std::cout << "  edge " << u << "-" << v << " has both ends colored " << colors[u] << "\n";
  for (auto v : violations.even_sums)
    std::cout << "  vertex " << v << " has an even closed-neighborhood sum\n";
  return exit_failed;
}

auto run_surfaces(const SurfacesOptions & o) -> int {
  if (o.what == "heawood") {
    std::cout << surfaces::heawood_number(o.genus) << "\n";
  } else if (o.what == "bound") {
    auto b = surfaces::chios_surface_lower_bound(o.genus);
    if (o.format == "json")
      std::cout << surfaces::to_json(b).dump() << "\n";
    else
      std::cout << std::setprecision(12) << "g " << b.genus << "\nbound " << b.bound << "\nheawood " << b.heawood
                << "\nwitness_n " << b.witness_n << "\nformula_n " << b.formula_n << "\n";
  } else if (o.what == "table") {
    auto rows = surfaces::gap_divergence_table(o.g_max);
    if (o.format == "json")
      std::cout << surfaces::to_json(rows).dump() << "\n";
    else
      std::cout << surfaces::to_csv(rows);
  } else {
    throw InvalidArgument("surfaces: unknown evaluator '" + o.what + "' (expected heawood, bound or table)");
  }
  return exit_ok;
}

auto run_oracle(const OracleOptions & o) -> int {
  const auto g = load_graph(o.input);
  if (o.what == "ods") {
    for (const auto & d : brute_force_odd_dominating_sets(g))
      std::cout << d.to_string() << "\n";
  } else if (o.what == "chi") {
    std::cout << brute_force_chromatic(g) << "\n";
  } else if (o.what == "chios") {
    std::cout << oracle_odd_sum_chromatic(g).chios << "\n";
  } else {
    throw InvalidArgument("oracle: unknown quantity '" + o.what + "' (expected ods, chi or chios)");
  }
  return exit_ok;
}

auto add_family_flags(CLI::App & cmd, FamilyParams & p) -> void {
  cmd.add_option("--a", p.a, "number of paths of length 3k+1");
  cmd.add_option("--b", p.b, "number of paths of length 3k+2");
  cmd.add_option("--k", p.k, "gadget scale");
  cmd.add_option("--delta", p.delta, "maximum degree");
  cmd.add_option("--g", p.g, "girth target");
  cmd.add_option("--t", p.t, "number of attached bowties");
  cmd.add_option("--n", p.n, "clique size");
  cmd.add_option("--max-degree", p.max_degree, "degree budget for bowtie attachment sites");
}

} // namespace

int main(int argc, char ** argv) {
  CLI::App app{"Odd-sum chromatic numbers, odd-dominating sets and the graph families behind them"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto * construct_cmd = app.add_subcommand("construct", "build a named graph family");
  construct_cmd->add_option("family", construct.family, "family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  add_family_flags(*construct_cmd, construct.params);
  construct_cmd->add_option("--format", construct.format, "graph6, json or dot")
      ->check(CLI::IsMember({"graph6", "json", "dot"}));
  construct_cmd->add_option("-o,--output", construct.output, "output file (default stdout)");

  SolveOptions solve;
  auto * solve_cmd = app.add_subcommand("solve", "compute ods, chi or chios of a graph");
  solve_cmd->add_option("what", solve.what, "ods, chi or chios")->required()->check(CLI::IsMember({"ods", "chi", "chios"}));
  solve_cmd->add_option("-i,--input", solve.input, "graph6 or JSON file, '-' for stdin");
  solve_cmd->add_flag("--count", solve.count, "print only the number of odd-dominating sets");
  solve_cmd->add_flag("--list", solve.list, "list every odd-dominating set");
  solve_cmd->add_flag("--certificate", solve.certificate, "emit the coloring witness as JSON");
  solve_cmd->add_flag("--json", solve.json, "machine-readable output");
  solve_cmd->add_option("--cap", solve.cap, "enumeration cap (default 2^20 or $ODDSUM_CAP)");
  solve_cmd->add_option("--budget", solve.budget, "branch-and-bound node budget");

  VerifyOptions verify;
  auto * verify_cmd = app.add_subcommand("verify", "re-derive a published claim");
  auto ids = verify_ids();
  ids.push_back("all");
  verify_cmd->add_option("id", verify.id, "theorem id")->required()->check(CLI::IsMember(ids));
  verify_cmd->add_option("--delta", verify.params.delta);
  verify_cmd->add_option("--k", verify.params.k);
  verify_cmd->add_option("--g", verify.params.g);
  verify_cmd->add_option("--t", verify.params.t);
  verify_cmd->add_option("--max-n", verify.params.max_n);
  verify_cmd->add_option("--samples", verify.params.samples);
  verify_cmd->add_option("--seed", verify.params.seed);
  verify_cmd->add_flag("--long", verify.params.long_test, "include the slow instances");
  verify_cmd->add_flag("--json", verify.json);

  ValidateOptions validate;
  auto * validate_cmd = app.add_subcommand("validate", "check an odd-sum coloring");
  validate_cmd->add_option("-i,--input", validate.input, "graph file")->required();
  validate_cmd->add_option("-c,--coloring", validate.coloring, "coloring JSON file")->required();

  SurfacesOptions surf;
  auto * surfaces_cmd = app.add_subcommand("surfaces", "Heawood number, lower bound, gap table");
  surfaces_cmd->add_option("what", surf.what, "heawood, bound or table")
      ->required()
      ->check(CLI::IsMember({"heawood", "bound", "table"}));
  surfaces_cmd->add_option("--g", surf.genus, "genus");
  surfaces_cmd->add_option("--g-max", surf.g_max, "largest genus in the table");
  surfaces_cmd->add_option("--format", surf.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  OracleOptions oracle;
  auto * oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
  oracle_cmd->add_option("what", oracle.what, "ods, chi or chios")->required()->check(CLI::IsMember({"ods", "chi", "chios"}));
  oracle_cmd->add_option("-i,--input", oracle.input, "graph file, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    return app.exit(e) == 0 ? exit_ok : exit_failed;
  }

  try {
    if (construct_cmd->parsed())
      return run_construct(construct);
    if (solve_cmd->parsed())
      return run_solve(solve);
    if (verify_cmd->parsed())
      return run_verify(verify);
    if (validate_cmd->parsed())
      return run_validate(validate);
    if (surfaces_cmd->parsed())
      return run_surfaces(surf);
    if (oracle_cmd->parsed())
      return run_oracle(oracle);
  } catch (const ResourceLimit & e) {
    std::cerr << "oddsum: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception & e) {
    std::cerr << "oddsum: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_failed;
}
