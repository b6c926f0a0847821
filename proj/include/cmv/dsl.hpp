#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmv/model.hpp"

namespace cmv {

struct ParseError {
  size_t line = 0;  // 1-based
  size_t col = 0;   // 1-based, points inside the offending token
  std::string message;
};

struct ParseResult {
  std::optional<ModelGraph> graph;  // set iff errors is empty
  std::vector<ParseError> errors;
};

// Parses the .kfm model notation: statements terminated by ".", line
// comments with "#". Forms:
//   entity NAME : KIND (, KIND)* .
//   link PRED(NAME, NAME[, NAME]) .
//   attr PRED(NAME, VALUE) .
// KIND is a kind label or a dialect-qualified alias (uml:class,
// orm:"fact type"). VALUE is an unsigned integer, the word many, or a quoted
// string, as the attribute predicate demands. Names must be declared before
// use; the six comparison nominals are reserved and admitted only as the
// second argument of ComparisonOperatorOf.
ParseResult parse(std::string_view text, const TaxonomyCatalog& cat);

// Canonical text: entities sorted by name carrying their most specific
// kinds, then links, then attributes, each ordered by predicate and argument
// names. parse(serialize(g)) is structurally equal to g, and structurally
// equal graphs serialize to identical bytes.
std::string serialize(const ModelGraph& g);

enum class Dialect : uint8_t { Uml, Eer, Orm };
std::optional<Dialect> dialect_from_string(std::string_view name);
std::string_view to_string(Dialect d);

struct ClassifyResult {
  std::optional<Kind> kind;
  std::vector<std::string> suggestions;  // nearest aliases when unknown
};

// Maps a surface term of one modeling language onto a kind label.
ClassifyResult classify(std::string_view term, Dialect dialect);

struct AliasEntry {
  Dialect dialect;
  std::string_view term;
  Kind kind;
};
const std::vector<AliasEntry>& alias_table();

// Kinds of the set that are not ancestors of other members.
std::vector<Kind> minimal_kinds(const TaxonomyCatalog& cat, const KindSet& kinds);

// Equality up to entity numbering: same names, kinds per name, links and
// attributes per name. parse assigns ids in declaration order, so a
// serialize/parse round trip permutes ids without changing the graph.
bool structurally_equal(const ModelGraph& a, const ModelGraph& b);

}  // namespace cmv
