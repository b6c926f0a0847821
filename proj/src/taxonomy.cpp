#include "cmv/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cmv {

std::optional<Kind> kind_from_string(std::string_view s) {
  static const std::unordered_map<std::string_view, Kind> table = [] {
    std::unordered_map<std::string_view, Kind> t;
    for (size_t i = 0; i < kKindCount; ++i) t.emplace(kKindNames[i], Kind(i));
    return t;
  }();
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<Nominal> nominal_from_string(std::string_view s) {
  for (size_t i = 0; i < kNominalCount; ++i)
    if (s == kNominalNames[i]) return Nominal(i);
  return std::nullopt;
}

std::optional<LinkPred> pred_from_string(std::string_view s) {
  static const std::unordered_map<std::string_view, LinkPred> table = [] {
    std::unordered_map<std::string_view, LinkPred> t;
    for (size_t i = 0; i < kPredCount; ++i) t.emplace(kPredNames[i], LinkPred(i));
    return t;
  }();
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<AttrPred> attr_pred_from_string(std::string_view s) {
  for (size_t i = 0; i < kAttrPredCount; ++i)
    if (s == kAttrPredNames[i]) return AttrPred(i);
  return std::nullopt;
}

std::string to_string(const IntegerBound& b) {
  return b.many ? std::string("many") : std::to_string(b.value);
}

void TaxonomyCatalog::build_closure() {
  parents.fill(KindSet{});
  for (const auto& g : groups)
    for (Kind c : g.children) parents[size_t(c)].set(size_t(g.parent));
  ancestors.fill(KindSet{});
  // Repeated relaxation; the hierarchy is shallow, so this settles fast.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < kKindCount; ++k) {
      KindSet want = parents[k];
      for (size_t p = 0; p < kKindCount; ++p)
        if (parents[k].test(p)) want |= ancestors[p];
      if (want != ancestors[k]) {
        ancestors[k] = want;
        changed = true;
      }
    }
  }
}

const TaxonomyCatalog& published_catalog() {
  static const TaxonomyCatalog cat = [] {
    TaxonomyCatalog c;
    using K = Kind;
    auto add = [&](K parent, std::vector<K> children, bool disjoint, bool complete,
                   std::string_view bullet) {
      c.groups.push_back({parent, std::move(children), disjoint, complete, bullet});
    };

    add(K::Entity, {K::Relationship, K::Role, K::EntityType, K::Constraint}, true, true,
        "entity-taxonomy.1");
    add(K::Relationship, {K::QualifiedRelationship}, false, false, "entity-taxonomy.2");
    add(K::Relationship, {K::PartWhole, K::AttributiveProperty, K::Subsumption}, true, false,
        "entity-taxonomy.3");
    add(K::PartWhole, {K::SharedAggregate}, false, false, "entity-taxonomy.4");
    add(K::SharedAggregate, {K::CompositeAggregate}, false, false, "entity-taxonomy.5");
    add(K::AttributiveProperty,
        {K::Attribute, K::CompositeAttribute, K::DimensionalAttribute}, true, true,
        "entity-taxonomy.6");
    add(K::Attribute, {K::MultivaluedAttribute, K::MappedTo}, true, false,
        "entity-taxonomy.7");
    add(K::EntityType, {K::ValueProperty, K::DataType, K::ObjectType, K::Qualifier}, true,
        true, "entity-taxonomy.8");
    add(K::ValueProperty, {K::ValueType, K::DimensionalValueType}, true, true,
        "entity-taxonomy.9");
    add(K::ObjectType,
        {K::WeakObjectType, K::NestedObjectType, K::AssociativeObjectType}, false, false,
        "entity-taxonomy.10");
    c.extra_disjoint.push_back(
        {K::QualifiedRelationship, K::AttributiveProperty, "entity-taxonomy.11"});
    c.extra_disjoint.push_back(
        {K::QualifiedRelationship, K::Subsumption, "entity-taxonomy.11"});
    c.extra_disjoint.push_back(
        {K::AttributiveProperty, K::Subsumption, "entity-taxonomy.11"});

    add(K::Constraint,
        {K::CardinalityConstraint, K::SubsetConstraint, K::JoinConstraint,
         K::UniquenessConstraint, K::RelationshipConstraint, K::DisjointnessConstraint,
         K::EqualityConstraint, K::ValueConstraint, K::CompletenessConstraint,
         K::ValueComparisonConstraint, K::IdentificationConstraint, K::MandatoryConstraint},
        false, false, "constraint-taxonomy.1");
    add(K::CardinalityConstraint,
        {K::CompoundCardinalityConstraint, K::AttributivePropertyCardinality,
         K::ObjectTypeCardinality},
        true, true, "constraint-taxonomy.2");
    add(K::JoinConstraint,
        {K::JoinSubsetConstraint, K::JoinEqualityConstraint, K::JoinDisjointnessConstraint},
        true, false, "constraint-taxonomy.3");
    add(K::UniquenessConstraint,
        {K::InternalUniquenessConstraint, K::ExternalUniquenessConstraint}, true, true,
        "constraint-taxonomy.4");
    add(K::RelationshipConstraint,
        {K::Transitivity, K::Antisymmetry, K::Irreflexivity, K::LocalReflexivity,
         K::Symmetry},
        false, true, "constraint-taxonomy.5");
    add(K::Antisymmetry, {K::Asymmetry}, false, false, "constraint-taxonomy.6");
    add(K::Irreflexivity, {K::Asymmetry}, false, false, "constraint-taxonomy.7");
    add(K::Asymmetry, {K::Acyclicity}, false, false, "constraint-taxonomy.8");
    add(K::Irreflexivity, {K::Intransitivity}, false, false, "constraint-taxonomy.9");
    add(K::Intransitivity, {K::StronglyIntransitivity}, false, false,
        "constraint-taxonomy.10");
    add(K::LocalReflexivity, {K::GlobalReflexivity}, false, false, "constraint-taxonomy.11");
    add(K::LocalReflexivity, {K::PurelyReflexivity}, false, false, "constraint-taxonomy.12");
    add(K::DisjointnessConstraint,
        {K::DisjointRoles, K::DisjointRelationships, K::DisjointObjectTypes}, true, true,
        "constraint-taxonomy.13");
    add(K::DisjointRoles, {K::JoinDisjointnessConstraint}, false, false,
        "constraint-taxonomy.14");
    add(K::EqualityConstraint, {K::RoleEquality, K::RelationshipEquality}, true, true,
        "constraint-taxonomy.15");
    add(K::RoleEquality, {K::JoinEqualityConstraint}, false, false, "constraint-taxonomy.16");
    add(K::ValueConstraint,
        {K::ValueTypeConstraint, K::RoleValueConstraint, K::AttributeValueConstraint}, true,
        true, "constraint-taxonomy.17");
    add(K::IdentificationConstraint,
        {K::ExternalIdentification, K::InternalIdentification}, true, true,
        "constraint-taxonomy.18");
    add(K::ExternalIdentification, {K::QualifiedIdentification, K::WeakIdentification}, true,
        false, "constraint-taxonomy.19");
    add(K::InternalIdentification, {K::SingleIdentification}, false, false,
        "constraint-taxonomy.20");
    add(K::MandatoryConstraint, {K::Mandatory, K::DisjunctiveMandatory}, true, false,
        "constraint-taxonomy.21");
    add(K::DisjunctiveMandatory, {K::InclusiveMandatory}, false, false,
        "constraint-taxonomy.22");
    add(K::DisjointnessConstraint, {K::DisjointEntities}, false, false,
        "constraint-taxonomy.23");
    add(K::EqualityConstraint, {K::ObjectTypeEquality}, false, false,
        "constraint-taxonomy.23");

    // Owned by the aggregation axiom group; listed here so kind closure and
    // satisfiability see the edge.
    add(K::PartWhole, {K::Part}, false, false, "subsumption-aggregation.5");

    c.build_closure();
    return c;
  }();
  return cat;
}

std::vector<std::string_view> known_mutations() { return {"disjoint-relprops"}; }

TaxonomyCatalog with_mutation(const TaxonomyCatalog& base, std::string_view name) {
  if (name != "disjoint-relprops")
    throw std::invalid_argument("unknown taxonomy mutation: " + std::string(name));
  TaxonomyCatalog cat = base;
  for (auto& g : cat.groups)
    if (g.parent == Kind::RelationshipConstraint && g.children.size() > 1) g.disjoint = true;
  cat.build_closure();
  return cat;
}

KindSet TaxonomyCatalog::close_up(KindSet s) const {
  for (size_t k = 0; k < kKindCount; ++k)
    if (s.test(k)) s |= ancestors[k];
  return s;
}

namespace {

bool disjointness_ok(const TaxonomyCatalog& cat, const KindSet& s) {
  for (const auto& g : cat.groups) {
    if (!g.disjoint) continue;
    int hits = 0;
    for (Kind c : g.children) hits += s.test(size_t(c)) ? 1 : 0;
    if (hits > 1) return false;
  }
  for (const auto& p : cat.extra_disjoint)
    if (s.test(size_t(p.a)) && s.test(size_t(p.b))) return false;
  return true;
}

bool complete_search(const TaxonomyCatalog& cat, KindSet s) {
  s = cat.close_up(s);
  if (!disjointness_ok(cat, s)) return false;
  for (const auto& g : cat.groups) {
    if (!g.complete || !s.test(size_t(g.parent))) continue;
    bool covered = false;
    for (Kind c : g.children) covered = covered || s.test(size_t(c));
    if (covered) continue;
    for (Kind c : g.children) {
      KindSet next = s;
      next.set(size_t(c));
      if (complete_search(cat, next)) return true;
    }
    return false;
  }
  return true;
}

}  // namespace

std::map<Kind, LabelSat> taxonomy_satisfiability(const TaxonomyCatalog& cat) {
  std::map<Kind, LabelSat> out;
  for (size_t k = 0; k < kKindCount; ++k) {
    KindSet s;
    s.set(k);
    out[Kind(k)] =
        complete_search(cat, s) ? LabelSat::Satisfiable : LabelSat::Unsatisfiable;
  }
  return out;
}

std::vector<TaxAxiomSpec> tax_axiom_specs(const TaxonomyCatalog& cat) {
  std::vector<TaxAxiomSpec> out;
  int ent_idx = 0;
  int con_idx = 0;
  auto emit_group = [&](const TaxonomyGroup& g, int& idx, std::string_view prefix) {
    for (Kind c : g.children) {
      TaxAxiomSpec s;
      s.id = std::string(prefix) + "." + std::to_string(++idx);
      s.type = TaxAxiomType::Isa;
      s.a = c;
      s.b = g.parent;
      s.bullet = g.bullet;
      out.push_back(std::move(s));
    }
    if (g.disjoint) {
      for (size_t i = 0; i < g.children.size(); ++i)
        for (size_t j = i + 1; j < g.children.size(); ++j) {
          TaxAxiomSpec s;
          s.id = std::string(prefix) + "." + std::to_string(++idx);
          s.type = TaxAxiomType::Disjoint;
          s.a = g.children[i];
          s.b = g.children[j];
          s.bullet = g.bullet;
          out.push_back(std::move(s));
        }
    }
    if (g.complete) {
      TaxAxiomSpec s;
      s.id = std::string(prefix) + "." + std::to_string(++idx);
      s.type = TaxAxiomType::Complete;
      s.group = &g;
      s.a = g.parent;
      s.bullet = g.bullet;
      out.push_back(std::move(s));
    }
  };
  for (const auto& g : cat.groups)
    if (g.bullet.starts_with("entity-taxonomy")) emit_group(g, ent_idx, "TAX-ENT");
  for (const auto& p : cat.extra_disjoint) {
    TaxAxiomSpec s;
    s.id = "TAX-ENT." + std::to_string(++ent_idx);
    s.type = TaxAxiomType::Disjoint;
    s.a = p.a;
    s.b = p.b;
    s.bullet = p.bullet;
    out.push_back(std::move(s));
  }
  for (const auto& g : cat.groups)
    if (g.bullet.starts_with("constraint-taxonomy")) emit_group(g, con_idx, "TAX-CON");
  return out;
}

}  // namespace cmv
