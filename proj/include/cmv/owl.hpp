#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmv/checker.hpp"
#include "cmv/model.hpp"

namespace cmv {

// How each ternary predicate reaches OWL. A fresh class named after the
// predicate with suffix R carries the three numbered properties, except
// where one participant already has cardinality exactly one; that
// participant's class then carries them itself, and the numbered property of
// its own position is asserted reflexively.
struct ReifiedPredInfo {
  LinkPred pred;
  bool simplified;
  int carrier_pos;        // 0-based participant position when simplified, else -1
  std::string_view carrier;    // class carrying the numbered properties
  std::string_view prop_base;  // lowerCamel stem of the numbered properties
};
const std::vector<ReifiedPredInfo>& reified_preds();

// Functional-syntax document for the bundled metamodel: one class per kind
// label (plus the reification, comparison, abstract and flattened-attribute
// classes), subclass and disjointness axioms per the hierarchy, domains,
// ranges and cardinality restrictions per the binary axioms, and a comment
// annotation per axiom that has no OWL counterpart. Deterministic bytes.
std::string export_schema(const TaxonomyCatalog& cat);

struct ModelExportResult {
  std::string document;  // empty when refused
  std::vector<Violation> star_warnings;
  std::vector<Violation> c2_errors;  // nonempty means the export was refused
  bool ok() const { return c2_errors.empty(); }
};

// ABox companion: individuals per entity, class assertions per most
// specific kind, property assertions per link with ternaries reified.
// Refuses models with violations inside the two-variable fragment.
ModelExportResult export_model(const ModelGraph& g, const TaxonomyCatalog& cat);

struct OwlCounts {
  size_t classes = 0;
  size_t object_properties = 0;
  size_t data_properties = 0;
  size_t named_individuals = 0;
  size_t axioms = 0;  // every axiom line, declarations included

  bool operator==(const OwlCounts&) const = default;
};
OwlCounts count_declarations(std::string_view document);

// Numbered properties must keep their carrier class as their one domain;
// returns complaint lines, empty when clean.
std::vector<std::string> lint_numbered_properties(std::string_view document);

// Reads the numbered-property assertions of a model document back into
// ternary link tuples, resolving names through g. The result equals the
// ternary records of the exported graph when reification lost nothing.
std::vector<LinkRecord> refold_naries(std::string_view document, const ModelGraph& g);

}  // namespace cmv
