#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cmv/kinds.hpp"

namespace cmv {

// One isa bullet of the class hierarchy: a parent, its listed children, and
// the disjoint/complete flags attached to the bullet. Bullets without flags
// are plain isa edges.
struct TaxonomyGroup {
  Kind parent;
  std::vector<Kind> children;
  bool disjoint = false;
  bool complete = false;
  std::string_view bullet;
};

// A pairwise disjointness stated outside any isa group.
struct DisjointPair {
  Kind a;
  Kind b;
  std::string_view bullet;
};

struct TaxonomyCatalog {
  std::vector<TaxonomyGroup> groups;
  std::vector<DisjointPair> extra_disjoint;

  // Strict ancestors per label, transitively closed over all groups.
  std::array<KindSet, kKindCount> ancestors{};
  std::array<KindSet, kKindCount> parents{};

  void build_closure();
  bool is_root(Kind k) const { return parents[size_t(k)].none(); }

  // The set plus every ancestor of its members.
  KindSet close_up(KindSet s) const;
};

// The hierarchy as published: five roots (Entity, Dimension, ValueRange,
// ValueEnumeration, Operator), with DisjointEntities and ObjectTypeEquality
// admitted under DisjointnessConstraint and EqualityConstraint.
const TaxonomyCatalog& published_catalog();

// Known mutation names: "disjoint-relprops" marks the relationship-property
// group (Transitivity..Symmetry) disjoint in addition to complete.
std::vector<std::string_view> known_mutations();
TaxonomyCatalog with_mutation(const TaxonomyCatalog& base, std::string_view name);

enum class LabelSat { Satisfiable, Unsatisfiable };

// For each label, whether one entity can carry it together with some kind set
// consistent with every isa, disjointness, and completeness constraint.
// Exhaustive backtracking over completeness choices.
std::map<Kind, LabelSat> taxonomy_satisfiability(const TaxonomyCatalog& cat);

// The axioms the taxonomy induces, in bullet order, with stable ids.
enum class TaxAxiomType { Isa, Disjoint, Complete };

struct TaxAxiomSpec {
  std::string id;  // "TAX-ENT.7" / "TAX-CON.13"
  TaxAxiomType type;
  Kind a = Kind::Entity;  // Isa: child; Disjoint: first
  Kind b = Kind::Entity;  // Isa: parent; Disjoint: second
  const TaxonomyGroup* group = nullptr;  // Complete only
  std::string_view bullet;
};

// Skips groups whose bullet is not a taxonomy bullet (the Part isa edge is
// owned by the aggregation axiom group but still drives kind closure).
std::vector<TaxAxiomSpec> tax_axiom_specs(const TaxonomyCatalog& cat);

}  // namespace cmv
