#include "cmv/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmv/evaluator.hpp"
#include "cmv/modelgen.hpp"

namespace cmv {

namespace {

std::string render(const std::vector<std::string>& values) {
  std::string r = "(";
  for (size_t i = 0; i < values.size(); ++i) r += (i ? ", " : "") + values[i];
  return r + ")";
}

}  // namespace

OracleRunSummary oracle_compare(uint64_t seed0, size_t graphs,
                                const TaxonomyCatalog& cat, const CheckOptions& opt) {
  OracleRunSummary summary;
  summary.graphs = graphs;
  for (size_t i = 0; i < graphs; ++i) {
    uint64_t seed = seed0 + i;
    ModelGraph g = gen_random(seed, cat);
    GraphFacts facts(g);
    auto axioms = axiom_catalog(cat, effective_max_arity(g, opt.max_arity));

    std::map<std::string, std::set<std::string>> from_checker;
    for (const auto& v : check_model(g, cat, opt)) {
      std::vector<std::string> values;
      for (const auto& [var, value] : v.witness) values.push_back(value);
      from_checker[v.axiom_id].insert(render(values));
      ++summary.violations_seen;
    }

    for (const auto& ax : axioms) {
      if (opt.fragment == FragmentMode::C2 && ax.tier == Tier::Star) continue;
      ++summary.axioms_checked;
      std::set<std::string> from_naive;
      for (const auto& binding : violations_naive(facts, ax.formula)) {
        std::vector<std::string> values;
        for (const auto& [var, el] : binding) values.push_back(repr(g, el));
        from_naive.insert(render(values));
      }
      const auto it = from_checker.find(ax.id);
      const std::set<std::string> empty;
      const std::set<std::string>& checked = it == from_checker.end() ? empty : it->second;
      if (checked == from_naive) continue;
      if (summary.mismatches.size() >= 5) return summary;
      OracleMismatch m;
      m.seed = seed;
      m.axiom_id = ax.id;
      std::set_difference(checked.begin(), checked.end(), from_naive.begin(),
                          from_naive.end(), std::back_inserter(m.checker_only));
      std::set_difference(from_naive.begin(), from_naive.end(), checked.begin(),
                          checked.end(), std::back_inserter(m.naive_only));
      summary.mismatches.push_back(std::move(m));
    }
  }
  return summary;
}

}  // namespace cmv
