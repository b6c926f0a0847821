#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmv/checker.hpp"

namespace cmv {

// One axiom whose witness sets differ between the direct checker and the
// naive evaluator, on the graph generated from seed.
struct OracleMismatch {
  uint64_t seed = 0;
  std::string axiom_id;
  std::vector<std::string> checker_only;  // rendered witnesses
  std::vector<std::string> naive_only;
};

struct OracleRunSummary {
  size_t graphs = 0;
  size_t axioms_checked = 0;    // axiom evaluations summed over graphs
  size_t violations_seen = 0;   // checker violations summed over graphs
  std::vector<OracleMismatch> mismatches;  // capped at 5

  bool agreed() const { return mismatches.empty(); }
};

// Runs both engines over `graphs` random graphs seeded seed0, seed0+1, ...
// and compares witness sets per axiom.
OracleRunSummary oracle_compare(uint64_t seed0, size_t graphs,
                                const TaxonomyCatalog& cat,
                                const CheckOptions& opt = {});

}  // namespace cmv
