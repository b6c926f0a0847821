#include "cmv/owl.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "cmv/dsl.hpp"

namespace cmv {

namespace {

std::string lower_first(std::string_view s) {
  std::string r(s);
  if (!r.empty()) r[0] = char(std::tolower(uint8_t(r[0])));
  return r;
}

std::string class_name(Kind k) {
  // Operator collides with the comparison nominals, whose classes carry the
  // short spellings; the kind surfaces under the family name instead.
  if (k == Kind::Operator) return "Comparison";
  return std::string(to_string(k));
}

std::string prop_name(LinkPred p) {
  switch (p) {
    case LinkPred::PartLink: return "part";
    case LinkPred::WholeLink: return "whole";
    case LinkPred::DomainLink: return "domain";
    case LinkPred::RangeLink: return "range";
    default: return lower_first(to_string(p));
  }
}

std::string cls(std::string_view n) { return ":" + std::string(n); }

std::string union_of(std::vector<std::string> names) {
  if (names.size() == 1) return cls(names[0]);
  std::sort(names.begin(), names.end());
  std::string r = "ObjectUnionOf(";
  for (size_t i = 0; i < names.size(); ++i) r += (i ? " " : "") + cls(names[i]);
  return r + ")";
}

// Participant class expressions per ternary position.
struct TernarySignature {
  LinkPred pred;
  std::vector<std::string> pos[3];
};

const std::vector<TernarySignature>& ternary_signatures() {
  static const std::vector<TernarySignature> sigs = {
      {LinkPred::RolePlaying,
       {{"Role"}, {"CardinalityConstraint"}, {"EntityType"}}},
      {LinkPred::DimensionalAttribution,
       {{"Dimension"}, {"DataType"}, {"ObjectType", "Relationship"}}},
      {LinkPred::DimensionalValueTyping,
       {{"Dimension"}, {"DataType"}, {"DimensionalValueType"}}},
      {LinkPred::ExtUnique,
       {{"ExternalUniquenessConstraint"}, {"Role"}, {"Relationship"}}},
      {LinkPred::CardR,
       {{"AttributiveProperty"}, {"Relationship"}, {"CardinalityConstraint"}}},
      {LinkPred::CardO,
       {{"AttributiveProperty"}, {"ObjectType"}, {"CardinalityConstraint"}}},
      {LinkPred::Frequency,
       {{"Relationship"}, {"Role"}, {"CompoundCardinalityConstraint"}}},
      {LinkPred::ConstrainingValues,
       {{"ValueConstraint"},
        {"Attribute", "Role", "ValueProperty"},
        {"ValueEnumeration", "ValueRange"}}},
      {LinkPred::Joining, {{"Relationship"}, {"JoinConstraint"}, {"Role"}}},
  };
  return sigs;
}

const TernarySignature& signature_of(LinkPred p) {
  for (const auto& s : ternary_signatures())
    if (s.pred == p) return s;
  assert(false && "not a ternary predicate");
  return ternary_signatures().front();
}

// Binary property domains and ranges, collected over every typing axiom
// that mentions the predicate.
struct BinarySignature {
  LinkPred pred;
  std::string domain;
  std::string range;
};

std::string entity_minus_structural() {
  return "ObjectIntersectionOf(:Entity ObjectComplementOf(ObjectUnionOf("
         ":AttributiveProperty :Constraint :QualifiedRelationship :Qualifier "
         ":Subsumption)))";
}

std::vector<BinarySignature> binary_signatures() {
  std::vector<BinarySignature> out;
  auto add = [&](LinkPred p, std::string d, std::string r) {
    out.push_back({p, std::move(d), std::move(r)});
  };
  add(LinkPred::Contains, cls("Relationship"), cls("Role"));
  add(LinkPred::ReifiedAs, cls("Relationship"), cls("NestedObjectType"));
  add(LinkPred::Sub, cls("Subsumption"), entity_minus_structural());
  add(LinkPred::Super, cls("Subsumption"), entity_minus_structural());
  add(LinkPred::PartLink, cls("PartWhole"),
      union_of({"AttributiveProperty", "DataType", "ObjectType"}));
  add(LinkPred::WholeLink, cls("PartWhole"),
      union_of({"AttributiveProperty", "DataType", "ObjectType"}));
  add(LinkPred::DeclaredOn,
      union_of({"CompletenessConstraint", "DisjointEntities", "DisjointRelationships",
                "DisjointRoles", "ExternalIdentification", "IdentificationConstraint",
                "InternalUniquenessConstraint", "MandatoryConstraint",
                "ObjectTypeEquality", "Qualifier", "RelationshipEquality",
                "RoleEquality"}),
      union_of({"AttributiveProperty", "ObjectType", "QualifiedRelationship",
                "Relationship", "Role", "Subsumption", "ValueProperty"}));
  add(LinkPred::HasComponent, cls("Qualifier"),
      union_of({"Attribute", "DimensionalAttribute"}));
  add(LinkPred::DomainLink,
      union_of({"AttributiveProperty", "MappedTo", "ValueProperty"}),
      union_of({"ObjectType", "Relationship", "ValueType"}));
  add(LinkPred::RangeLink, union_of({"AttributiveProperty", "MappedTo"}),
      cls("DataType"));
  add(LinkPred::Identifies, cls("IdentificationConstraint"), cls("ObjectType"));
  add(LinkPred::PartiallyIdentifies, cls("QualifiedIdentification"),
      cls("QualifiedRelationship"));
  add(LinkPred::HasStrong, cls("WeakObjectType"), cls("ObjectType"));
  add(LinkPred::First,
      union_of({"RelationshipConstraint", "ValueComparisonConstraint"}), cls("Role"));
  add(LinkPred::Second,
      union_of({"RelationshipConstraint", "ValueComparisonConstraint"}), cls("Role"));
  add(LinkPred::ComparisonOperatorOf, cls("ValueComparisonConstraint"),
      cls("Comparison"));
  add(LinkPred::OnValueOfType, cls("ValueComparisonConstraint"), cls("DataType"));
  add(LinkPred::HasType, cls("ValueRange"), cls("DataType"));
  add(LinkPred::HasParticipant,
      union_of({"CompletenessConstraint", "DisjointEntities"}),
      entity_minus_structural());
  add(LinkPred::ParticipatesIn, union_of({"Relationship", "Role"}),
      cls("JoinConstraint"));
  return out;
}

const char* const kMereologyProps[] = {"partOf", "properPartOf", "hasPart"};

const char* const kFlattenedClasses[] = {"MaximumCardinality", "MaximumValue",
                                         "MinimumCardinality", "MinimumValue"};

const char* const kAbstractMembers[] = {
    "Dimension",      "MaximumCardinality", "MaximumValue", "MinimumCardinality",
    "MinimumValue",   "ValueEnumeration",   "ValueRange"};

// Cardinality restrictions carried over from the counting axioms on binary
// predicates. Kept as literal lines; order is part of the output contract.
const char* const kBinaryRestrictions[] = {
    "SubClassOf(:Relationship ObjectMinCardinality(2 :contains))",
    "SubClassOf(:Role ObjectExactCardinality(1 ObjectInverseOf(:contains)))",
    "SubClassOf(:NestedObjectType ObjectExactCardinality(1 ObjectInverseOf(:reifiedAs)))",
    "SubClassOf(:Relationship ObjectMaxCardinality(1 :reifiedAs))",
    "SubClassOf(:Subsumption ObjectExactCardinality(1 :sub))",
    "SubClassOf(:Subsumption ObjectExactCardinality(1 :super))",
    "SubClassOf(:Part ObjectExactCardinality(1 :part :AttributiveProperty))",
    "SubClassOf(:Part ObjectExactCardinality(1 :whole :CompositeAttribute))",
    "SubClassOf(:CompositeAttribute ObjectMinCardinality(2 ObjectInverseOf(:whole) :Part))",
    "SubClassOf(:SharedAggregate ObjectMaxCardinality(1 :part ObjectUnionOf(:DataType :ObjectType)))",
    "SubClassOf(:SharedAggregate ObjectMinCardinality(1 :part))",
    "SubClassOf(:SharedAggregate ObjectMinCardinality(1 :whole))",
    "SubClassOf(:SharedAggregate ObjectMaxCardinality(1 :whole ObjectUnionOf(:DataType :ObjectType)))",
    "SubClassOf(:CompositeAggregate ObjectExactCardinality(1 :part))",
    "SubClassOf(:ObjectType ObjectMaxCardinality(1 ObjectInverseOf(:part) :CompositeAggregate))",
    "SubClassOf(:CompositeAggregate ObjectExactCardinality(1 :whole))",
    "SubClassOf(:Qualifier ObjectExactCardinality(1 :declaredOn ObjectUnionOf(:QualifiedRelationship :Role)))",
    "SubClassOf(:Role ObjectMaxCardinality(1 ObjectInverseOf(:declaredOn) :Qualifier))",
    "SubClassOf(:QualifiedRelationship ObjectMinCardinality(1 ObjectInverseOf(:declaredOn) :Qualifier))",
    "SubClassOf(:QualifiedRelationship ObjectMaxCardinality(2 ObjectInverseOf(:declaredOn) :Qualifier))",
    "SubClassOf(:Qualifier ObjectMinCardinality(1 :hasComponent))",
    "SubClassOf(:AttributiveProperty ObjectExactCardinality(1 :range :DataType))",
    "SubClassOf(:ValueProperty ObjectMinCardinality(1 :domain :ObjectType))",
    "SubClassOf(:MappedTo ObjectExactCardinality(1 :range :DataType))",
    "SubClassOf(:MandatoryConstraint ObjectMinCardinality(1 :declaredOn :Role))",
    "SubClassOf(:DisjunctiveMandatory ObjectMinCardinality(2 :declaredOn :Role))",
    "SubClassOf(:Mandatory ObjectExactCardinality(1 :declaredOn :Role))",
    "SubClassOf(:Role ObjectMaxCardinality(1 ObjectInverseOf(:declaredOn) :Mandatory))",
    "SubClassOf(:InternalUniquenessConstraint ObjectMinCardinality(1 :declaredOn :Role))",
    "SubClassOf(:QualifiedIdentification ObjectExactCardinality(1 :partiallyIdentifies))",
    "SubClassOf(:ExternalIdentification ObjectMinCardinality(1 :declaredOn))",
    "SubClassOf(:IdentificationConstraint ObjectExactCardinality(1 :identifies))",
    "SubClassOf(:ObjectType ObjectMinCardinality(1 ObjectInverseOf(:identifies)))",
    "SubClassOf(:IdentificationConstraint ObjectSomeValuesFrom(:declaredOn ObjectUnionOf(:AttributiveProperty :ValueProperty)))",
    "SubClassOf(:SingleIdentification ObjectExactCardinality(1 :declaredOn))",
    "SubClassOf(ObjectUnionOf(:Attribute :ValueType) ObjectMaxCardinality(1 ObjectInverseOf(:declaredOn) :SingleIdentification))",
    "SubClassOf(:WeakIdentification ObjectExactCardinality(1 :identifies))",
    "SubClassOf(:WeakObjectType ObjectMinCardinality(1 ObjectInverseOf(:identifies) :WeakIdentification))",
    "SubClassOf(:WeakObjectType ObjectExactCardinality(1 :hasStrong))",
    "SubClassOf(:ValueComparisonConstraint ObjectExactCardinality(1 :first))",
    "SubClassOf(:ValueComparisonConstraint ObjectExactCardinality(1 :second))",
    "SubClassOf(:ValueComparisonConstraint ObjectExactCardinality(1 :comparisonOperatorOf))",
    "SubClassOf(:ValueComparisonConstraint ObjectExactCardinality(1 :onValueOfType))",
    "SubClassOf(:ValueRange ObjectExactCardinality(1 :hasType))",
    "SubClassOf(:JoinConstraint ObjectMinCardinality(3 ObjectInverseOf(:participatesIn) :Relationship))",
    "SubClassOf(:JoinConstraint ObjectMaxCardinality(4 ObjectInverseOf(:participatesIn) :Relationship))",
    "SubClassOf(:JoinConstraint ObjectExactCardinality(4 ObjectInverseOf(:participatesIn) :Role))",
    "SubClassOf(:RelationshipConstraint ObjectExactCardinality(1 :first))",
    "SubClassOf(:RelationshipConstraint ObjectExactCardinality(1 :second))",
    "SubClassOf(:RelationshipEquality ObjectMinCardinality(2 :declaredOn))",
    "SubClassOf(:DisjointRelationships ObjectMinCardinality(2 :declaredOn))",
    "SubClassOf(:RoleEquality ObjectMinCardinality(2 :declaredOn))",
    "SubClassOf(:DisjointRoles ObjectMinCardinality(2 :declaredOn))",
    "SubClassOf(:CompletenessConstraint ObjectExactCardinality(1 :declaredOn))",
    "SubClassOf(:DisjointEntities ObjectExactCardinality(1 :declaredOn))",
    "SubClassOf(:CompletenessConstraint ObjectMinCardinality(2 :hasParticipant))",
    "SubClassOf(:DisjointEntities ObjectMinCardinality(2 :hasParticipant))",
};

// Class on which the comment annotation of an inexpressible axiom group
// hangs.
std::string star_anchor(const std::string& group) {
  static const std::map<std::string, std::string> anchors = {
      {"REL-REIFIED-COH", "NestedObjectType"},
      {"SUB-PHI", "Subsumption"},
      {"AGG-SHARED-AND", "SharedAggregate"},
      {"PW-IRR-ASYM", "PartWhole"},
      {"COMPAT-ROLE", "Role"},
      {"COMPAT-REL", "Relationship"},
      {"COMPAT-SUBS", "Subsumption"},
      {"ATT-DECLHOMOG", "Qualifier"},
      {"MAND-DIFFREL", "MandatoryConstraint"},
      {"UNIQ-EXT", "ExternalUniquenessConstraint"},
      {"UNIQ-SPAN", "InternalUniquenessConstraint"},
      {"UNIQ-EXTMATCH", "ExternalUniquenessConstraint"},
      {"ID-HOMOG", "IdentificationConstraint"},
      {"ID-TC1", "WeakIdentification"},
      {"ID-TC2", "SingleIdentification"},
      {"ID-TC4", "QualifiedIdentification"},
      {"CARDC-FREQROLES", "CompoundCardinalityConstraint"},
      {"VCMP-SAMETYPE", "ValueComparisonConstraint"},
      {"EQD-TC", "Constraint"},
      {"RELP-TC", "RelationshipConstraint"},
      {"JOIN-TC1", "JoinConstraint"},
  };
  auto it = anchors.find(group);
  return it != anchors.end() ? it->second : "Entity";
}

std::string escape_literal(std::string_view s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

std::string header() {
  return
      "Prefix(:=<https://example.org/cmv#>)\n"
      "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
      "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
      "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
      "Ontology(<https://example.org/cmv>\n";
}

}  // namespace

const std::vector<ReifiedPredInfo>& reified_preds() {
  static const std::vector<ReifiedPredInfo> info = {
      {LinkPred::RolePlaying, false, -1, "RolePlayingR", "rolePlaying"},
      {LinkPred::DimensionalAttribution, false, -1, "DimensionalAttributionR",
       "dimensionalAttribution"},
      {LinkPred::DimensionalValueTyping, true, 2, "DimensionalValueType",
       "dimensionalValueTyping"},
      {LinkPred::ExtUnique, true, 0, "ExternalUniquenessConstraint", "extUnique"},
      {LinkPred::CardR, false, -1, "CardRR", "cardR"},
      {LinkPred::CardO, false, -1, "CardOR", "cardO"},
      {LinkPred::Frequency, true, 2, "CompoundCardinalityConstraint", "frequency"},
      {LinkPred::ConstrainingValues, true, 0, "ValueConstraint", "constrainingValues"},
      {LinkPred::Joining, true, 1, "JoinConstraint", "joining"},
  };
  return info;
}

std::string export_schema(const TaxonomyCatalog& cat) {
  std::ostringstream out;
  out << header();

  std::vector<std::string> classes;
  for (int i = 0; i < kKindCount; ++i) classes.push_back(class_name(Kind(i)));
  classes.push_back("ReifiedNAry");
  classes.push_back("Abstract");
  for (const auto& r : reified_preds())
    if (!r.simplified) classes.push_back(std::string(r.carrier));
  for (int i = 0; i < kNominalCount; ++i)
    classes.push_back(std::string(to_string(Nominal(i))));
  for (const char* c : kFlattenedClasses) classes.push_back(c);
  std::sort(classes.begin(), classes.end());
  for (const auto& c : classes) out << "Declaration(Class(" << cls(c) << "))\n";

  std::vector<std::string> props;
  for (const auto& sig : binary_signatures()) props.push_back(prop_name(sig.pred));
  for (const auto& r : reified_preds())
    for (int i = 1; i <= 3; ++i)
      props.push_back(std::string(r.prop_base) + std::to_string(i));
  for (const char* p : kMereologyProps) props.push_back(p);
  std::sort(props.begin(), props.end());
  for (const auto& p : props) out << "Declaration(ObjectProperty(" << cls(p) << "))\n";

  out << "Declaration(DataProperty(:hasCValue))\n";
  out << "Declaration(DataProperty(:hasValue))\n";

  // Subclass axioms: the hierarchy, then the reification layer, then the
  // abstract layer, then the counting restrictions.
  for (const auto& g : cat.groups) {
    if (g.disjoint && g.complete) continue;  // folded into DisjointUnion below
    for (Kind c : g.children)
      out << "SubClassOf(" << cls(class_name(c)) << " " << cls(class_name(g.parent))
          << ")\n";
    if (g.complete) {
      std::vector<std::string> names;
      for (Kind c : g.children) names.push_back(class_name(c));
      out << "SubClassOf(" << cls(class_name(g.parent)) << " " << union_of(names)
          << ")\n";
    }
  }
  for (const auto& r : reified_preds())
    out << "SubClassOf(" << cls(r.carrier) << " :ReifiedNAry)\n";
  for (const char* c : kAbstractMembers)
    out << "SubClassOf(" << cls(c) << " :Abstract)\n";
  for (const char* line : kBinaryRestrictions) out << line << "\n";
  for (const auto& r : reified_preds())
    for (int i = 1; i <= 3; ++i)
      out << "SubClassOf(" << cls(r.carrier) << " ObjectExactCardinality(1 :"
          << r.prop_base << i << "))\n";

  for (const auto& g : cat.groups) {
    if (g.disjoint && g.complete) {
      out << "DisjointUnion(" << cls(class_name(g.parent));
      for (Kind c : g.children) out << " " << cls(class_name(c));
      out << ")\n";
    } else if (g.disjoint) {
      out << "DisjointClasses(";
      for (size_t i = 0; i < g.children.size(); ++i)
        out << (i ? " " : "") << cls(class_name(g.children[i]));
      out << ")\n";
    }
  }
  for (const auto& p : cat.extra_disjoint)
    out << "DisjointClasses(" << cls(class_name(p.a)) << " " << cls(class_name(p.b))
        << ")\n";
  out << "DisjointClasses(:ValueEnumeration :ValueRange)\n";
  out << "DisjointUnion(:Comparison";
  for (int i = 0; i < kNominalCount; ++i) out << " " << cls(to_string(Nominal(i)));
  out << ")\n";

  for (const auto& sig : binary_signatures()) {
    out << "ObjectPropertyDomain(" << cls(prop_name(sig.pred)) << " " << sig.domain
        << ")\n";
    out << "ObjectPropertyRange(" << cls(prop_name(sig.pred)) << " " << sig.range
        << ")\n";
  }
  for (const auto& r : reified_preds()) {
    const auto& sig = signature_of(r.pred);
    for (int i = 0; i < 3; ++i) {
      std::string p = cls(std::string(r.prop_base) + std::to_string(i + 1));
      out << "ObjectPropertyDomain(" << p << " " << cls(r.carrier) << ")\n";
      out << "ObjectPropertyRange(" << p << " " << union_of(sig.pos[i]) << ")\n";
    }
  }
  out << "DataPropertyDomain(:hasCValue ObjectUnionOf(:MaximumCardinality "
         ":MinimumCardinality))\n";
  out << "DataPropertyRange(:hasCValue xsd:string)\n";
  out << "DataPropertyDomain(:hasValue ObjectUnionOf(:MaximumValue :MinimumValue))\n";
  out << "DataPropertyRange(:hasValue xsd:string)\n";

  for (const char* p : kMereologyProps)
    out << "AnnotationAssertion(rdfs:comment " << cls(p)
        << " \"mereology vocabulary; carries no further axioms\")\n";
  for (const auto& ax : axiom_catalog(cat)) {
    if (ax.tier != Tier::Star) continue;
    out << "AnnotationAssertion(rdfs:comment " << cls(star_anchor(ax.group)) << " \""
        << ax.id << " has no OWL counterpart: " << escape_literal(to_string(ax.formula))
        << "\")\n";
  }
  out << ")\n";
  return out.str();
}

namespace {

std::string individual_name(const ModelGraph& g, const LinkArg& a) {
  return a.is_entity() ? g.name(a.entity) : lower_first(to_string(a.nominal));
}

}  // namespace

ModelExportResult export_model(const ModelGraph& g, const TaxonomyCatalog& cat) {
  ModelExportResult res;
  for (auto& v : check_model(g, cat)) {
    if (v.tier == Tier::C2)
      res.c2_errors.push_back(std::move(v));
    else
      res.star_warnings.push_back(std::move(v));
  }
  if (!res.ok()) return res;

  std::set<std::string> classes_used, props_used, individuals;
  std::vector<std::string> class_assertions, prop_assertions, data_assertions;

  auto assert_class = [&](const std::string& c, const std::string& ind) {
    classes_used.insert(c);
    individuals.insert(ind);
    class_assertions.push_back("ClassAssertion(" + cls(c) + " " + cls(ind) + ")");
  };
  auto assert_prop = [&](const std::string& p, const std::string& s,
                         const std::string& o) {
    props_used.insert(p);
    prop_assertions.push_back("ObjectPropertyAssertion(" + cls(p) + " " + cls(s) +
                              " " + cls(o) + ")");
  };

  for (EntityId e = 0; e < g.entity_count(); ++e) {
    individuals.insert(g.name(e));
    for (Kind k : minimal_kinds(cat, g.kinds[e])) assert_class(class_name(k), g.name(e));
  }

  for (const auto& l : g.links) {
    if (l.arity() == 2) {
      std::string obj = individual_name(g, l.args[1]);
      if (!l.args[1].is_entity())
        assert_class(std::string(to_string(l.args[1].nominal)), obj);
      assert_prop(prop_name(l.pred), individual_name(g, l.args[0]), obj);
      continue;
    }
    const ReifiedPredInfo* info = nullptr;
    for (const auto& r : reified_preds())
      if (r.pred == l.pred) info = &r;
    std::string base(info->prop_base);
    std::string carrier_ind;
    if (info->simplified) {
      carrier_ind = individual_name(g, l.args[info->carrier_pos]);
    } else {
      carrier_ind = base;
      for (int i = 0; i < 3; ++i) carrier_ind += "." + individual_name(g, l.args[i]);
      assert_class(std::string(info->carrier), carrier_ind);
    }
    for (int i = 0; i < 3; ++i)
      assert_prop(base + std::to_string(i + 1), carrier_ind,
                  individual_name(g, l.args[i]));
  }

  for (const auto& a : g.attrs) {
    std::string bearer_class(to_string(a.pred));
    std::string bearer = g.name(a.subject) + "." + lower_first(bearer_class);
    assert_class(bearer_class, bearer);
    assert_prop("partOf", bearer, g.name(a.subject));
    std::string value = a.is_integer() ? to_string(a.ivalue) : a.svalue;
    data_assertions.push_back(
        std::string("DataPropertyAssertion(") + (a.is_integer() ? ":hasCValue" : ":hasValue") +
        " " + cls(bearer) + " \"" + escape_literal(value) + "\")");
  }

  std::sort(class_assertions.begin(), class_assertions.end());
  std::sort(prop_assertions.begin(), prop_assertions.end());
  std::sort(data_assertions.begin(), data_assertions.end());

  std::ostringstream out;
  out << header();
  for (const auto& c : classes_used) out << "Declaration(Class(" << cls(c) << "))\n";
  for (const auto& p : props_used)
    out << "Declaration(ObjectProperty(" << cls(p) << "))\n";
  if (!data_assertions.empty()) {
    out << "Declaration(DataProperty(:hasCValue))\n";
    out << "Declaration(DataProperty(:hasValue))\n";
  }
  for (const auto& i : individuals)
    out << "Declaration(NamedIndividual(" << cls(i) << "))\n";
  for (const auto& l : class_assertions) out << l << "\n";
  for (const auto& l : prop_assertions) out << l << "\n";
  for (const auto& l : data_assertions) out << l << "\n";
  out << ")\n";
  res.document = out.str();
  return res;
}

namespace {

std::vector<std::string> doc_lines(std::string_view document) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < document.size()) {
    size_t end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    lines.emplace_back(document.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Splits ":a :b :c" argument tails of simple one-line axioms.
std::vector<std::string> simple_args(const std::string& line) {
  std::vector<std::string> args;
  size_t open = line.find('(');
  size_t close = line.rfind(')');
  if (open == std::string::npos || close == std::string::npos) return args;
  std::istringstream in(line.substr(open + 1, close - open - 1));
  std::string tok;
  while (in >> tok)
    if (tok.front() == ':') args.push_back(tok.substr(1));
  return args;
}

const ReifiedPredInfo* numbered_prop(const std::string& name, int& pos) {
  if (name.empty() || name.back() < '1' || name.back() > '3') return nullptr;
  std::string base = name.substr(0, name.size() - 1);
  for (const auto& r : reified_preds())
    if (r.prop_base == base) {
      pos = name.back() - '1';
      return &r;
    }
  return nullptr;
}

}  // namespace

OwlCounts count_declarations(std::string_view document) {
  OwlCounts c;
  for (const auto& line : doc_lines(document)) {
    if (line.rfind("Declaration(Class(", 0) == 0) ++c.classes;
    if (line.rfind("Declaration(ObjectProperty(", 0) == 0) ++c.object_properties;
    if (line.rfind("Declaration(DataProperty(", 0) == 0) ++c.data_properties;
    if (line.rfind("Declaration(NamedIndividual(", 0) == 0) ++c.named_individuals;
    if (!line.empty() && line != ")" && line.rfind("Prefix(", 0) != 0 &&
        line.rfind("Ontology(", 0) != 0)
      ++c.axioms;
  }
  return c;
}

std::vector<std::string> lint_numbered_properties(std::string_view document) {
  std::vector<std::string> complaints;
  std::map<std::string, int> domain_count;
  for (const auto& line : doc_lines(document)) {
    if (line.rfind("ObjectPropertyDomain(:", 0) != 0) continue;
    auto args = simple_args(line);
    if (args.size() < 2) continue;
    int pos = 0;
    const ReifiedPredInfo* info = numbered_prop(args[0], pos);
    if (!info) continue;
    ++domain_count[args[0]];
    if (args[1] != info->carrier)
      complaints.push_back("numbered property " + args[0] + " has domain " + args[1] +
                           ", expected " + std::string(info->carrier));
  }
  for (const auto& [prop, n] : domain_count)
    if (n > 1)
      complaints.push_back("numbered property " + prop + " has " + std::to_string(n) +
                           " domain axioms");
  return complaints;
}

std::vector<LinkRecord> refold_naries(std::string_view document, const ModelGraph& g) {
  // (predicate, carrier individual) -> the three numbered-property objects.
  std::map<std::pair<LinkPred, std::string>, std::array<std::string, 3>> tuples;
  for (const auto& line : doc_lines(document)) {
    if (line.rfind("ObjectPropertyAssertion(:", 0) != 0) continue;
    auto args = simple_args(line);
    if (args.size() != 3) continue;
    int pos = 0;
    const ReifiedPredInfo* info = numbered_prop(args[0], pos);
    if (!info) continue;
    tuples[{info->pred, args[1]}][pos] = args[2];
  }
  std::vector<LinkRecord> out;
  for (const auto& [key, vals] : tuples) {
    LinkRecord rec;
    rec.pred = key.first;
    for (int i = 0; i < 3; ++i) {
      auto it = g.by_name.find(vals[i]);
      if (it == g.by_name.end()) return {};  // unresolvable name: fold fails
      rec.args[i] = LinkArg::of(it->second);
    }
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmv
