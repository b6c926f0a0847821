#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmv/formula.hpp"
#include "cmv/model.hpp"

namespace cmv {

// A universe element: a declared entity, a comparison nominal, or one of the
// attribute values occurring in the graph.
struct Element {
  enum class Tag : uint8_t { Entity, Nominal, Int, Lit } tag = Tag::Entity;
  EntityId entity = 0;
  Nominal nominal = Nominal::Less;
  IntegerBound ivalue{};
  std::string lit;

  static Element of_entity(EntityId e) {
    Element x;
    x.tag = Tag::Entity;
    x.entity = e;
    return x;
  }
  static Element of_nominal(Nominal n) {
    Element x;
    x.tag = Tag::Nominal;
    x.nominal = n;
    return x;
  }
  static Element of_int(IntegerBound v) {
    Element x;
    x.tag = Tag::Int;
    x.ivalue = v;
    return x;
  }
  static Element of_lit(std::string s) {
    Element x;
    x.tag = Tag::Lit;
    x.lit = std::move(s);
    return x;
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string repr(const ModelGraph& g, const Element& el);

// Facts shared by every axiom evaluated over one graph.
struct GraphFacts {
  explicit GraphFacts(const ModelGraph& graph);

  const ModelGraph* g;
  std::vector<std::pair<EntityId, EntityId>> participants;  // sorted
  CompatMatrix compat;
  std::vector<Element> value_tokens;  // distinct attribute values, sorted

  bool participant(EntityId a, EntityId b) const;
  bool compatible(EntityId a, EntityId b) const { return compat.at(a, b); }
};

// The universe a formula ranges over: all entities, plus the six comparison
// nominals when the formula mentions operators or nominal constants, plus the
// graph's attribute values when it mentions attributes or value sorts.
std::vector<Element> universe_for(const GraphFacts& facts, const FormulaFeatures& ft);

// Variable assignments, innermost last; lookups scan from the back so inner
// quantifiers shadow outer ones.
using Binding = std::vector<std::pair<std::string, Element>>;

bool eval(const GraphFacts& facts, const std::vector<Element>& universe,
          const Formula& fm, Binding& binding);

// One entry per assignment of the outermost universal block that falsifies
// the rest of the formula, in universe enumeration order.
std::vector<Binding> violations_naive(const GraphFacts& facts, const Formula& fm);

}  // namespace cmv
