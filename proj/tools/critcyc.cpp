#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <critcyc/bounds.hpp>
#include <critcyc/report_json.hpp>

namespace {

critcyc::Graph load_graph(const std::string& path) {
  if (path == "-") return critcyc::read_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) critcyc::fail(critcyc::ErrorKind::BadArgument, "cannot open " + path);
  return critcyc::read_dimacs(in);
}

void emit(const std::string& text, const std::string& out_dir, const std::string& filename) {
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(out_dir);
  std::filesystem::path target = std::filesystem::path(out_dir) / filename;
  std::ofstream out(target);
  if (!out) critcyc::fail(critcyc::ErrorKind::BadArgument, "cannot write " + target.string());
  out << text;
}

int exit_code_for(critcyc::ErrorKind kind) {
  switch (kind) {
    case critcyc::ErrorKind::NotCritical: return 2;
    case critcyc::ErrorKind::BudgetExceeded: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"builds color-critical graphs, decomposes them along 2-cuts, and certifies cycle length bounds"};
  app.require_subcommand(1);
  const char* seed = std::getenv("CRITCYC_SEED");
  static_cast<void>(seed);

  std::string family;
  std::string input = "-";
  std::string out_dir;
  std::string format = "json";
  int k = 0;
  long long budget = critcyc::kDefaultOracleBudget;

  CLI::App* gen = app.add_subcommand("gen", "generate a graph family as DIMACS text");
  gen->add_option("--family", family, "family spec, e.g. \"gallai k=4 h=0..1\"")->required();
  gen->add_option("--out", out_dir, "directory for one .col file per instance");

  CLI::App* check = app.add_subcommand("check-critical", "test a graph for k-criticality");
  check->add_option("--k", k, "palette size k")->required();
  check->add_option("input", input, "DIMACS file, or - for stdin");
  check->add_option("--budget", budget, "search node budget");
  check->add_option("--out", out_dir, "directory for the report file");

  CLI::App* decompose = app.add_subcommand("decompose", "standard tree-decomposition with validation");
  decompose->add_option("--k", k, "palette size k")->required();
  decompose->add_option("input", input, "DIMACS file, or - for stdin");
  decompose->add_option("--budget", budget, "search node budget");
  decompose->add_option("--out", out_dir, "directory for the report file");

  CLI::App* find_cycle = app.add_subcommand("find-cycle", "extract a certified long cycle from a critical graph");
  find_cycle->add_option("--k", k, "palette size k")->required();
  find_cycle->add_option("input", input, "DIMACS file, or - for stdin");
  find_cycle->add_option("--budget", budget, "search node budget");
  find_cycle->add_option("--out", out_dir, "directory for the witness file");

  CLI::App* verify_bounds = app.add_subcommand("verify-bounds", "evaluate every checkable bound over a family");
  verify_bounds->add_option("--family", family, "family spec, e.g. \"gallai k=4 h=0..1\"")->required();
  verify_bounds->add_option("--budget", budget, "search node budget");
  verify_bounds->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify_bounds->add_option("--out", out_dir, "directory for the report file");

  CLI::App* coro2 = app.add_subcommand("verify-coro2", "long cycle plus long odd cycle on a critical non-bipartite graph");
  coro2->add_option("--k", k, "palette size k")->required();
  coro2->add_option("input", input, "DIMACS file, or - for stdin");
  coro2->add_option("--budget", budget, "search node budget");
  coro2->add_option("--out", out_dir, "directory for the report file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::vector<critcyc::FamilyInstance> instances = critcyc::resolve_family(family);
      for (const critcyc::FamilyInstance& inst : instances) {
        std::string text = "c " + inst.id + "\n" + critcyc::graph_dimacs(inst.graph);
        if (out_dir.empty() && instances.size() > 1) text += "\n";
        emit(text, out_dir, inst.id + ".col");
      }
      return 0;
    }
    if (check->parsed()) {
      critcyc::Graph g = load_graph(input);
      critcyc::CriticalityReport report = critcyc::is_k_critical(g, k, budget);
      std::string reason;
      if (!report.is_critical) {
        bool colorable = critcyc::find_coloring(g, k - 1, {}, budget).has_value();
        reason = colorable ? "the graph itself admits a proper coloring with k-1 colors"
                           : "some single-edge deletion still needs k colors";
      }
      emit(critcyc::criticality_json(g, k, report, reason), out_dir, "criticality.json");
      return report.is_critical ? 0 : 2;
    }
    if (decompose->parsed()) {
      critcyc::Graph g = load_graph(input);
      critcyc::StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
      dec = critcyc::classify_virtual_edges(g, dec, k, budget);
      critcyc::ValidationReport validation = critcyc::validate_decomposition(g, dec, k, budget);
      emit(critcyc::decomposition_json(g, k, dec, validation), out_dir, "decomposition.json");
      return 0;
    }
    if (find_cycle->parsed()) {
      critcyc::Graph g = load_graph(input);
      critcyc::CycleWitness w = critcyc::long_cycle_critical(g, k, budget);
      emit(critcyc::cycle_json(g, k, w), out_dir, "cycle.json");
      return 0;
    }
    if (verify_bounds->parsed()) {
      std::vector<critcyc::BoundReport> reports = critcyc::run_bounds_suite(family, budget);
      if (format == "csv")
        emit(critcyc::bounds_csv(reports), out_dir, "bounds.csv");
      else
        emit(critcyc::bounds_json(reports), out_dir, "bounds.json");
      return 0;
    }
    if (coro2->parsed()) {
      critcyc::Graph g = load_graph(input);
      critcyc::Coro2Report report = critcyc::verify_coro2(g, k, budget);
      emit(critcyc::coro2_json(report), out_dir, "coro2.json");
      return report.precondition_ok ? 0 : 2;
    }
  } catch (const critcyc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return 0;
}
