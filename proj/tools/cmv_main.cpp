#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmv/checker.hpp"
#include "cmv/dsl.hpp"
#include "cmv/modelgen.hpp"
#include "cmv/oracle.hpp"
#include "cmv/owl.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitLoadError = 2;

struct Loaded {
  cmv::ModelGraph graph;
};

// Reads and parses a model file; prints diagnostics and returns nullopt on
// failure.
std::optional<cmv::ModelGraph> load_model(const std::string& path,
                                          const cmv::TaxonomyCatalog& cat) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto result = cmv::parse(buf.str(), cat);
  if (!result.graph) {
    for (const auto& e : result.errors)
      std::cerr << path << ":" << e.line << ":" << e.col << ": error: " << e.message
                << "\n";
    return std::nullopt;
  }
  return std::move(*result.graph);
}

std::string render_text(const cmv::Violation& v) {
  std::string line = v.axiom_id;
  line += " [";
  line += cmv::to_string(v.tier);
  line += "]";
  if (!v.witness.empty()) {
    line += " (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) line += ", ";
      line += v.witness[i].first + "=" + v.witness[i].second;
    }
    line += ")";
  }
  line += ": " + v.message;
  return line;
}

std::string render_jsonl(const cmv::Violation& v) {
  nlohmann::json j;
  j["axiom_id"] = v.axiom_id;
  j["tier"] = cmv::to_string(v.tier);
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [var, value] : v.witness) w[var] = value;
  j["witness"] = w;
  j["message"] = v.message;
  return j.dump();
}

bool write_out(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  return true;
}

int cmd_validate(const std::string& path, const std::string& fragment,
                 const std::string& format, const std::string& out_path,
                 size_t max_arity) {
  const auto& cat = cmv::published_catalog();
  auto graph = load_model(path, cat);
  if (!graph) return kExitLoadError;
  cmv::CheckOptions opt;
  opt.fragment = fragment == "c2" ? cmv::FragmentMode::C2 : cmv::FragmentMode::Full;
  opt.max_arity = max_arity;
  auto violations = cmv::check_model(*graph, cat, opt);
  std::string report;
  for (const auto& v : violations)
    report += (format == "jsonl" ? render_jsonl(v) : render_text(v)) + "\n";
  if (!write_out(out_path, report)) return kExitLoadError;
  return violations.empty() ? kExitClean : kExitFindings;
}

int cmd_export_owl(const std::string& path, bool schema, const std::string& out_path) {
  const auto& cat = cmv::published_catalog();
  if (schema) {
    return write_out(out_path, cmv::export_schema(cat)) ? kExitClean : kExitLoadError;
  }
  auto graph = load_model(path, cat);
  if (!graph) return kExitLoadError;
  auto result = cmv::export_model(*graph, cat);
  for (const auto& v : result.star_warnings)
    std::cerr << "warning: outside the expressible fragment: " << render_text(v) << "\n";
  if (!result.ok()) {
    std::cerr << "error: model violates the metamodel; not exporting\n";
    for (const auto& v : result.c2_errors) std::cerr << render_text(v) << "\n";
    return kExitFindings;
  }
  return write_out(out_path, result.document) ? kExitClean : kExitLoadError;
}

int cmd_taxonomy(const std::vector<std::string>& mutations) {
  auto cat = cmv::published_catalog();
  for (const auto& m : mutations) {
    bool known = false;
    for (auto k : cmv::known_mutations()) known = known || k == m;
    if (!known) {
      std::cerr << "error: unknown mutation " << m << "\n";
      return kExitLoadError;
    }
    cat = cmv::with_mutation(cat, m);
  }
  auto sat = cmv::taxonomy_satisfiability(cat);
  int unsat = 0;
  for (const auto& [kind, verdict] : sat) {
    bool ok = verdict == cmv::LabelSat::Satisfiable;
    unsat += ok ? 0 : 1;
    std::cout << cmv::to_string(kind) << " " << (ok ? "satisfiable" : "UNSATISFIABLE")
              << "\n";
  }
  std::cout << sat.size() << " labels, " << unsat << " unsatisfiable\n";
  return unsat == 0 ? kExitClean : kExitFindings;
}

int cmd_oracle_compare(uint64_t seed, size_t graphs, size_t max_arity) {
  const auto& cat = cmv::published_catalog();
  cmv::CheckOptions opt;
  opt.max_arity = max_arity;
  auto t0 = std::chrono::steady_clock::now();
  auto summary = cmv::oracle_compare(seed, graphs, cat, opt);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << summary.graphs << " graphs, " << summary.axioms_checked
            << " axiom evaluations, " << summary.violations_seen << " violations, "
            << summary.mismatches.size() << " mismatches, " << ms << " ms\n";
  for (const auto& m : summary.mismatches) {
    std::cout << "mismatch: seed " << m.seed << " axiom " << m.axiom_id << "\n";
    for (const auto& w : m.checker_only) std::cout << "  checker only: " << w << "\n";
    for (const auto& w : m.naive_only) std::cout << "  naive only: " << w << "\n";
  }
  return summary.agreed() ? kExitClean : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conceptual-model validator"};
  app.require_subcommand(1);

  std::string path, fragment = "full", format = "text", out_path;
  size_t max_arity = 10;
  bool schema = false;
  std::vector<std::string> mutations;
  uint64_t seed = 42;
  size_t graphs = 1000;

  auto* validate = app.add_subcommand("validate", "check a model against every axiom");
  validate->add_option("file", path, "model file")->required();
  validate->add_option("--fragment", fragment, "c2 or full")
      ->check(CLI::IsMember({"c2", "full"}));
  validate->add_option("--format", format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  validate->add_option("--out", out_path, "write the report here instead of stdout");
  validate->add_option("--max-arity", max_arity, "arity bound for the per-arity families")
      ->check(CLI::Range(size_t(2), size_t(64)));

  auto* export_owl = app.add_subcommand("export-owl", "emit OWL 2 functional syntax");
  export_owl->add_option("file", path, "model file (omit with --schema)");
  export_owl->add_flag("--schema", schema, "emit the metamodel schema instead");
  export_owl->add_option("--out", out_path, "write the document here instead of stdout");

  auto* taxonomy = app.add_subcommand("taxonomy", "audit per-label satisfiability");
  taxonomy->add_option("--mutate", mutations, "apply a named catalog mutation");

  auto* oracle = app.add_subcommand("oracle-compare",
                                    "compare the checker against the naive evaluator");
  oracle->add_option("--seed", seed, "first graph seed");
  oracle->add_option("--graphs", graphs, "number of graphs");
  oracle->add_option("--max-arity", max_arity, "arity bound for the per-arity families")
      ->check(CLI::Range(size_t(2), size_t(64)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitLoadError;
  }

  if (validate->parsed()) return cmd_validate(path, fragment, format, out_path, max_arity);
  if (export_owl->parsed()) {
    if (!schema && path.empty()) {
      std::cerr << "error: need a model file or --schema\n";
      return kExitLoadError;
    }
    return cmd_export_owl(path, schema, out_path);
  }
  if (taxonomy->parsed()) return cmd_taxonomy(mutations);
  if (oracle->parsed()) return cmd_oracle_compare(seed, graphs, max_arity);
  return kExitLoadError;
}
