#include "cmv/modelgen.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace cmv {

namespace {

using K = Kind;
using P = LinkPred;

// Kind an argument position wants. Drawing most arguments from entities that
// fit keeps the graphs dense in live axiom triggers; the rest stay random so
// the typing axioms get exercised too.
Kind expected_kind(LinkPred p, int pos) {
  switch (p) {
    case P::Contains: return pos == 0 ? K::Relationship : K::Role;
    case P::RolePlaying:
      return pos == 0 ? K::Role : pos == 1 ? K::CardinalityConstraint : K::EntityType;
    case P::ReifiedAs: return pos == 0 ? K::Relationship : K::NestedObjectType;
    case P::Sub:
    case P::Super: return pos == 0 ? K::Subsumption : K::ObjectType;
    case P::PartLink:
    case P::WholeLink: return pos == 0 ? K::PartWhole : K::ObjectType;
    case P::DeclaredOn: return pos == 0 ? K::MandatoryConstraint : K::Role;
    case P::HasComponent: return pos == 0 ? K::Qualifier : K::Attribute;
    case P::DomainLink: return pos == 0 ? K::AttributiveProperty : K::ObjectType;
    case P::RangeLink: return pos == 0 ? K::AttributiveProperty : K::DataType;
    case P::DimensionalAttribution:
      return pos == 0 ? K::Dimension : pos == 1 ? K::DataType : K::ObjectType;
    case P::DimensionalValueTyping:
      return pos == 0 ? K::Dimension : pos == 1 ? K::DataType : K::DimensionalValueType;
    case P::ExtUnique:
      return pos == 0 ? K::ExternalUniquenessConstraint
                      : pos == 1 ? K::Role : K::Relationship;
    case P::Identifies: return pos == 0 ? K::IdentificationConstraint : K::ObjectType;
    case P::PartiallyIdentifies:
      return pos == 0 ? K::QualifiedIdentification : K::QualifiedRelationship;
    case P::HasStrong: return pos == 0 ? K::WeakObjectType : K::ObjectType;
    case P::CardR:
      return pos == 0 ? K::AttributiveProperty
                      : pos == 1 ? K::Relationship : K::CardinalityConstraint;
    case P::CardO:
      return pos == 0 ? K::AttributiveProperty
                      : pos == 1 ? K::ObjectType : K::CardinalityConstraint;
    case P::Frequency:
      return pos == 0 ? K::Relationship
                      : pos == 1 ? K::Role : K::CompoundCardinalityConstraint;
    case P::ConstrainingValues:
      return pos == 0 ? K::ValueConstraint : pos == 1 ? K::Role : K::ValueRange;
    case P::HasType: return pos == 0 ? K::ValueRange : K::DataType;
    case P::First:
    case P::Second: return pos == 0 ? K::ValueComparisonConstraint : K::Role;
    case P::ComparisonOperatorOf:
      return pos == 0 ? K::ValueComparisonConstraint : K::Operator;
    case P::OnValueOfType: return pos == 0 ? K::ValueComparisonConstraint : K::DataType;
    case P::HasParticipant:
      return pos == 0 ? K::CompletenessConstraint : K::ObjectType;
    case P::Joining:
      return pos == 0 ? K::Relationship : pos == 1 ? K::JoinConstraint : K::Role;
    case P::ParticipatesIn: return pos == 0 ? K::Role : K::JoinConstraint;
  }
  return K::Entity;
}

// Labels entities draw their kinds from. Weighted toward the predicate
// signatures above, with enough satellites to light up every axiom group.
constexpr Kind kPool[] = {
    K::Relationship, K::Role, K::ObjectType, K::DataType, K::EntityType,
    K::CardinalityConstraint, K::Subsumption, K::PartWhole, K::SharedAggregate,
    K::CompositeAggregate, K::Part, K::Attribute, K::CompositeAttribute,
    K::MultivaluedAttribute, K::DimensionalAttribute, K::AttributiveProperty,
    K::ValueProperty, K::MappedTo, K::Qualifier, K::QualifiedRelationship,
    K::ValueType, K::DimensionalValueType, K::WeakObjectType, K::NestedObjectType,
    K::AssociativeObjectType, K::Dimension, K::ValueRange, K::ValueEnumeration,
    K::ValueConstraint, K::ValueComparisonConstraint, K::IdentificationConstraint,
    K::SingleIdentification, K::WeakIdentification, K::QualifiedIdentification,
    K::ExternalIdentification, K::InternalIdentification, K::MandatoryConstraint,
    K::Mandatory, K::DisjunctiveMandatory, K::InternalUniquenessConstraint,
    K::ExternalUniquenessConstraint, K::CompoundCardinalityConstraint,
    K::ObjectTypeCardinality, K::AttributivePropertyCardinality, K::JoinConstraint,
    K::RelationshipConstraint, K::CompletenessConstraint, K::DisjointEntities,
    K::DisjointObjectTypes, K::RoleEquality, K::RelationshipEquality,
    K::ObjectTypeEquality, K::DisjointRoles, K::DisjointRelationships,
    K::Transitivity, K::Asymmetry, K::Irreflexivity, K::Symmetry, K::Operator,
};
constexpr size_t kPoolSize = sizeof(kPool) / sizeof(kPool[0]);

class Generator {
 public:
  Generator(uint64_t seed, const TaxonomyCatalog& cat) : rng_(seed), cat_(cat) {}

  uint64_t pick(uint64_t n) { return rng_() % n; }
  bool chance(uint64_t percent) { return pick(100) < percent; }

  void add_entities(size_t n, GraphBuilder& b) {
    for (size_t i = 0; i < n; ++i) {
      KindSet ks;
      ks.set(size_t(kPool[pick(kPoolSize)]));
      if (chance(20)) ks.set(size_t(kPool[pick(kPoolSize)]));
      b.add_entity("e" + std::to_string(i + 1), ks);
      closed_.push_back(cat_.close_up(ks));
    }
  }

  LinkArg argument(LinkPred p, int pos) {
    if (p == P::ComparisonOperatorOf && pos == 1 && chance(70))
      return LinkArg::of(Nominal(pick(kNominalCount)));
    if (chance(80)) {
      Kind want = expected_kind(p, pos);
      std::vector<EntityId> fits;
      for (EntityId e = 0; e < closed_.size(); ++e)
        if (closed_[e].test(size_t(want))) fits.push_back(e);
      if (!fits.empty()) return LinkArg::of(fits[pick(fits.size())]);
    }
    return LinkArg::of(EntityId(pick(closed_.size())));
  }

  LinkRecord random_link() {
    LinkRecord rec;
    rec.pred = LinkPred(pick(kPredCount));
    for (int i = 0; i < arity(rec.pred); ++i) rec.args[i] = argument(rec.pred, i);
    return rec;
  }

  void add_attrs(size_t draws, GraphBuilder& b) {
    static const char* const strings[] = {"A", "B", "C"};
    for (size_t i = 0; i < draws; ++i) {
      auto p = AttrPred(pick(kAttrPredCount));
      auto subject = EntityId(pick(closed_.size()));
      if (attr_takes_integer(p))
        b.add_attr(p, subject,
                   chance(20) ? IntegerBound::unbounded() : IntegerBound::of(pick(4)));
      else
        b.add_attr(p, subject, std::string(strings[pick(3)]));
    }
  }

 private:
  std::mt19937_64 rng_;
  const TaxonomyCatalog& cat_;
  std::vector<KindSet> closed_;
};

void append_link(GraphBuilder& b, const LinkRecord& rec) {
  std::vector<LinkArg> args(rec.args.begin(), rec.args.begin() + arity(rec.pred));
  b.add_link(rec.pred, std::move(args));
}

}  // namespace

ModelGraph gen_random(uint64_t seed, const TaxonomyCatalog& cat) {
  Generator gen(seed, cat);
  GraphBuilder b;
  gen.add_entities(1 + gen.pick(8), b);
  size_t n_links = gen.pick(21);
  for (size_t i = 0; i < n_links; ++i) append_link(b, gen.random_link());
  gen.add_attrs(gen.pick(6), b);
  return std::move(b).finish(cat);
}

ModelGraph gen_sized(uint64_t seed, size_t entities, size_t links,
                     const TaxonomyCatalog& cat) {
  Generator gen(seed, cat);
  GraphBuilder b;
  gen.add_entities(entities, b);
  std::set<LinkRecord> seen;
  for (size_t attempts = 0; seen.size() < links && attempts < 3000; ++attempts) {
    LinkRecord rec = gen.random_link();
    if (seen.insert(rec).second) append_link(b, rec);
  }
  gen.add_attrs(entities / 4, b);
  return std::move(b).finish(cat);
}

}  // namespace cmv
