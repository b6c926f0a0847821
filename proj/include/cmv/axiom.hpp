#pragma once

#include <string>

#include "cmv/formula.hpp"

namespace cmv {

// C2 axioms fall in the two-variable counting fragment once ternary atoms
// are reified; Star axioms genuinely need more and are skipped under the
// restricted fragment mode.
enum class Tier : uint8_t { C2, Star };

inline std::string_view to_string(Tier t) { return t == Tier::C2 ? "C2" : "STAR"; }

struct Axiom {
  std::string id;     // group.index, e.g. "REL-CONTAINS.2"
  std::string group;  // "REL-CONTAINS"
  Tier tier = Tier::C2;
  Formula formula;
  std::string bullet;  // slug into docs/constraint-bullets.txt
  std::string source;  // short anchor text for the originating bullet
  std::string note;    // encoding remarks carried into the manifest
};

// "GROUP.10" sorts after "GROUP.2"; digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace cmv
