// Command-line front end: load or generate exact set functions, certify
// function classes, emit inequality graphs and decompositions, solve for
// canonical sets, and run the oracle-lower-bound demo.
//
// Exit codes: 0 = computed, verdict positive; 2 = computed, verdict
// "no"/"infeasible"/verification failed; 1 = usage or domain error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sdt/sdt.hpp"

namespace {

using nlohmann::json;

void print_report(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<sdt::Rational> parse_rational_list(const std::string& csv) {
  std::vector<sdt::Rational> out;
  if (csv.empty()) return out;
  for (const std::string& item : split(csv, ',')) out.push_back(sdt::parse_rational(item));
  return out;
}

json witness_json(const sdt::GroundSet& ground, const sdt::FaceWitness& w) {
  json j = sdt::face_to_json(ground, w.face);
  j["phi"] = sdt::format_rational(w.slack);
  return j;
}

int run_check(const std::string& path, const std::string& kind, bool allow_large) {
  sdt::SetFunction f = sdt::load_set_function(path, allow_large);
  sdt::ClassCertificate cert;
  if (kind == "submodular") {
    cert = sdt::is_submodular(f);
  } else if (kind == "strict") {
    cert = sdt::is_strictly_submodular(f);
  } else {
    cert = sdt::is_modular(f);
  }
  json report;
  report["kind"] = kind;
  report["verdict"] = cert.yes ? "yes" : "no";
  if (cert.witness) report["witness"] = witness_json(f.ground(), *cert.witness);
  print_report(report);
  return cert.yes ? 0 : 2;
}

int run_transform(const std::string& path, const std::string& subset, const std::string& out_path,
                  bool allow_large) {
  sdt::SetFunction f = sdt::load_set_function(path, allow_large);
  sdt::Mask s = f.ground().parse_subset(subset);
  sdt::save_set_function(sdt::sd_transform(f, s), out_path);
  json report;
  report["input"] = path;
  report["output"] = out_path;
  report["set"] = sdt::subset_to_json(f.ground(), s);
  print_report(report);
  return 0;
}

int run_graph(const std::string& path, bool allow_large) {
  sdt::SetFunction f = sdt::load_set_function(path, allow_large);
  print_report(sdt::graph_to_json(sdt::inequality_graph(f)));
  return 0;
}

int run_decompose(const std::string& path, bool allow_large) {
  sdt::SetFunction f = sdt::load_set_function(path, allow_large);
  sdt::Decomposition d = sdt::inseparable_decomposition(f);
  print_report(sdt::decomposition_to_json(f.ground(), d));
  return 0;
}

int run_canonical(const std::string& path, bool allow_large) {
  sdt::SetFunction g = sdt::load_set_function(path, allow_large);
  sdt::ParitySystem system = sdt::build_parity_system(g);
  std::optional<sdt::SolutionFamily> family = sdt::solve_canonical(system);
  print_report(sdt::solver_report_to_json(g.ground(), system, family));
  return family ? 0 : 2;
}

int run_strict_canonical(const std::string& path, bool verify, bool trace, bool allow_large) {
  sdt::CountedOracle oracle = sdt::counted(sdt::load_set_function(path, allow_large));
  sdt::Mask t = sdt::strict_canonical(oracle);
  json report;
  report["canonical_set"] = sdt::subset_to_json(oracle.ground(), t);
  if (trace) {
    report["distinct_queries"] = oracle.distinct_queries();
    report["total_calls"] = oracle.total_calls();
  }
  bool ok = true;
  if (verify) {
    ok = sdt::is_submodular(sdt::sd_transform(oracle.inner(), t)).yes;
    report["verified"] = ok;
  }
  print_report(report);
  return ok ? 0 : 2;
}

int run_lovasz(const std::string& path, const std::string& point_csv, bool allow_large) {
  sdt::SetFunction f = sdt::load_set_function(path, allow_large);
  std::vector<sdt::Rational> point = parse_rational_list(point_csv);
  json report;
  report["value"] = sdt::format_rational(sdt::lovasz_extension(f, point));
  print_report(report);
  return 0;
}

struct GenParams {
  std::string kind;
  unsigned n = 0;
  std::string subset;
  std::string weights;
  std::string offset = "0";
  std::string parts;
  std::string edges;
  std::string out_path;
};

sdt::SetFunction build_generator(const GenParams& p) {
  const auto need_n = [&]() -> sdt::GroundSet {
    if (p.n == 0) throw std::invalid_argument("generator '" + p.kind + "' needs --n");
    return sdt::GroundSet::numbered(p.n);
  };
  if (p.kind == "not-clique") return sdt::gen_not_clique();
  if (p.kind == "figure1") return sdt::gen_figure1_like();
  if (p.kind == "quadratic") {
    if (p.n == 0) throw std::invalid_argument("generator 'quadratic' needs --n");
    return sdt::gen_quadratic_strict(p.n);
  }
  if (p.kind == "modular") {
    sdt::GroundSet ground = need_n();
    return sdt::gen_modular(ground, parse_rational_list(p.weights), sdt::parse_rational(p.offset));
  }
  if (p.kind == "min-dip") {
    sdt::GroundSet ground = need_n();
    return sdt::gen_min_dip(ground, ground.parse_subset(p.subset));
  }
  if (p.kind == "part-min") {
    sdt::GroundSet ground = need_n();
    return sdt::gen_part_min(ground, ground.parse_subset(p.subset));
  }
  if (p.kind == "partition-distance") {
    sdt::GroundSet ground = need_n();
    std::vector<sdt::Mask> parts;
    for (const std::string& part : split(p.parts, '|')) parts.push_back(ground.parse_subset(part));
    return sdt::gen_partition_distance(ground, parts);
  }
  if (p.kind == "cut") {
    sdt::GroundSet ground = need_n();
    std::vector<sdt::WeightedEdge> edges;
    if (!p.edges.empty()) {
      for (const std::string& item : split(p.edges, ',')) {
        std::size_t dash = item.find('-');
        std::size_t colon = item.find(':', dash == std::string::npos ? 0 : dash + 1);
        if (dash == std::string::npos || colon == std::string::npos) {
          throw std::invalid_argument("cut edge must look like u-v:weight, got '" + item + "'");
        }
        edges.push_back({ground.index_of(item.substr(0, dash)),
                         ground.index_of(item.substr(dash + 1, colon - dash - 1)),
                         sdt::parse_rational(item.substr(colon + 1))});
      }
    }
    return sdt::gen_cut(ground, edges);
  }
  throw std::invalid_argument(
      "unknown generator kind '" + p.kind +
      "' (expected not-clique, figure1, quadratic, modular, min-dip, part-min, "
      "partition-distance, cut)");
}

int run_gen(const GenParams& p) {
  sdt::SetFunction f = build_generator(p);
  sdt::save_set_function(f, p.out_path);
  json report;
  report["written"] = p.out_path;
  report["provenance"] = f.provenance();
  print_report(report);
  return 0;
}

int run_adversary_demo(unsigned n, std::uint64_t budget) {
  json report;
  report["n"] = n;
  report["budget"] = budget;
  report["strategies"] = json::array();
  sdt::GroundSet ground = sdt::GroundSet::numbered(n);
  for (const sdt::StrategyOutcome& o : sdt::adversary_demo_suite(n, budget)) {
    json item;
    item["strategy"] = o.strategy;
    item["query_count"] = o.queries.size();
    item["queries"] = json::array();
    for (sdt::Mask q : o.queries) item["queries"].push_back(sdt::subset_to_json(ground, q));
    if (o.output) item["output"] = sdt::subset_to_json(ground, *o.output);
    item["budget_exhausted"] = o.budget_exhausted;
    item["refuted"] = o.refuted;
    if (o.refuting_dip) item["refuting_dip"] = sdt::subset_to_json(ground, *o.refuting_dip);
    item["note"] = o.note;
    report["strategies"].push_back(std::move(item));
  }
  print_report(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for symmetric-difference transformations of submodular functions"};
  app.require_subcommand(1);
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "lift the default n <= 20 ground-set guard");

  int exit_code = 0;

  auto* check = app.add_subcommand("check", "certify a function class on a set-function file");
  std::string check_kind;
  std::string check_file;
  check->add_option("--kind", check_kind, "submodular|strict|modular")
      ->required()
      ->check(CLI::IsMember({"submodular", "strict", "modular"}));
  check->add_option("file", check_file, "set-function JSON file")->required();
  check->callback([&] { exit_code = run_check(check_file, check_kind, allow_large); });

  auto* transform = app.add_subcommand("transform", "apply an SD-transformation and write the result");
  std::string transform_set;
  std::string transform_file;
  std::string transform_out;
  transform->add_option("--set", transform_set, "comma-joined element names; \"\" is the empty set")
      ->required();
  transform->add_option("file", transform_file)->required();
  transform->add_option("-o,--output", transform_out, "output file")->required();
  transform->callback(
      [&] { exit_code = run_transform(transform_file, transform_set, transform_out, allow_large); });

  auto* graph = app.add_subcommand("graph", "emit the inequality graph and its components");
  std::string graph_file;
  graph->add_option("file", graph_file)->required();
  graph->callback([&] { exit_code = run_graph(graph_file, allow_large); });

  auto* decompose = app.add_subcommand("decompose", "inseparable decomposition of a submodular function");
  std::string decompose_file;
  decompose->add_option("file", decompose_file)->required();
  decompose->callback([&] { exit_code = run_decompose(decompose_file, allow_large); });

  auto* canonical = app.add_subcommand("canonical", "solve the parity system for all canonical sets");
  std::string canonical_file;
  canonical->add_option("file", canonical_file)->required();
  canonical->callback([&] { exit_code = run_canonical(canonical_file, allow_large); });

  auto* strict = app.add_subcommand("strict-canonical",
                                    "canonical set via the 2n-query algorithm for strict inputs");
  std::string strict_file;
  bool strict_verify = false;
  bool strict_trace = false;
  strict->add_option("file", strict_file)->required();
  strict->add_flag("--verify", strict_verify, "replay the full submodularity check on the result");
  strict->add_flag("--trace", strict_trace, "report oracle-call counts");
  strict->callback(
      [&] { exit_code = run_strict_canonical(strict_file, strict_verify, strict_trace, allow_large); });

  auto* lovasz = app.add_subcommand("lovasz", "evaluate the Lovasz extension at a rational point");
  std::string lovasz_file;
  std::string lovasz_point;
  lovasz->add_option("file", lovasz_file)->required();
  lovasz->add_option("--point", lovasz_point, "comma-joined rationals, one per element")->required();
  lovasz->callback([&] { exit_code = run_lovasz(lovasz_file, lovasz_point, allow_large); });

  auto* gen = app.add_subcommand("gen", "write a generated set function to a file");
  GenParams gen_params;
  gen->add_option("kind", gen_params.kind,
                  "not-clique|figure1|quadratic|modular|min-dip|part-min|partition-distance|cut")
      ->required();
  gen->add_option("--n", gen_params.n, "ground-set size (elements are named 1..n)");
  gen->add_option("--set", gen_params.subset, "subset parameter (min-dip, part-min)");
  gen->add_option("--weights", gen_params.weights, "comma-joined rationals (modular)");
  gen->add_option("--offset", gen_params.offset, "rational offset (modular)");
  gen->add_option("--parts", gen_params.parts, "partition, parts joined by '|' (partition-distance)");
  gen->add_option("--edges", gen_params.edges, "u-v:weight list, comma-joined (cut)");
  gen->add_option("-o,--output", gen_params.out_path, "output file")->required();
  gen->callback([&] { exit_code = run_gen(gen_params); });

  auto* demo = app.add_subcommand("adversary-demo",
                                  "run the query-budget strategy suite against the cardinality adversary");
  unsigned demo_n = 3;
  std::uint64_t demo_budget = 0;
  demo->add_option("--n", demo_n, "ground-set size (2..4)")->required();
  demo->add_option("--budget", demo_budget, "distinct-query budget")->required();
  demo->callback([&] { exit_code = run_adversary_demo(demo_n, demo_budget); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
