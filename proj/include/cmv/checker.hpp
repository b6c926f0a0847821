#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmv/catalog.hpp"
#include "cmv/model.hpp"

namespace cmv {

// Full checks every axiom; C2 skips the ones outside the two-variable
// counting fragment.
enum class FragmentMode : uint8_t { Full, C2 };

struct CheckOptions {
  FragmentMode fragment = FragmentMode::Full;
  // Lower bound for instantiating the per-arity axiom families; raised
  // automatically to the widest relationship in the model.
  size_t max_arity = 10;
  // Deliberately skews the minimum-bound case of one rule. Exists to prove
  // the evaluator comparison harness catches a real defect.
  bool inject_fault = false;
};

struct Violation {
  std::string axiom_id;
  Tier tier = Tier::C2;
  // Assignment of the axiom's universally quantified variables, in the
  // formula's variable order, rendered to element names.
  std::vector<std::pair<std::string, std::string>> witness;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Natural order on axiom id, then witness values.
bool violation_less(const Violation& a, const Violation& b);

std::vector<Violation> check_model(const ModelGraph& g, const TaxonomyCatalog& cat,
                                   const CheckOptions& opt = {});

}  // namespace cmv
