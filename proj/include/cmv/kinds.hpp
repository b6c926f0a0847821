#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cmv {

// Every metamodel class label an entity can carry. The order groups the
// static-entity labels first, then the constraint labels, then the auxiliary
// labels that only appear on the edges of the vocabulary.
#define CMV_KIND_LIST(X)                                                       \
  X(Entity)                                                                    \
  X(Relationship)                                                              \
  X(Role)                                                                      \
  X(EntityType)                                                                \
  X(Constraint)                                                                \
  X(QualifiedRelationship)                                                     \
  X(PartWhole)                                                                 \
  X(AttributiveProperty)                                                       \
  X(Subsumption)                                                               \
  X(SharedAggregate)                                                           \
  X(CompositeAggregate)                                                        \
  X(Attribute)                                                                 \
  X(CompositeAttribute)                                                        \
  X(DimensionalAttribute)                                                      \
  X(MultivaluedAttribute)                                                      \
  X(MappedTo)                                                                  \
  X(ValueProperty)                                                             \
  X(DataType)                                                                  \
  X(ObjectType)                                                                \
  X(Qualifier)                                                                 \
  X(ValueType)                                                                 \
  X(DimensionalValueType)                                                      \
  X(WeakObjectType)                                                            \
  X(NestedObjectType)                                                          \
  X(AssociativeObjectType)                                                     \
  X(CardinalityConstraint)                                                     \
  X(CompoundCardinalityConstraint)                                             \
  X(AttributivePropertyCardinality)                                            \
  X(ObjectTypeCardinality)                                                     \
  X(SubsetConstraint)                                                          \
  X(JoinConstraint)                                                            \
  X(JoinSubsetConstraint)                                                      \
  X(JoinEqualityConstraint)                                                    \
  X(JoinDisjointnessConstraint)                                                \
  X(UniquenessConstraint)                                                      \
  X(InternalUniquenessConstraint)                                              \
  X(ExternalUniquenessConstraint)                                              \
  X(RelationshipConstraint)                                                    \
  X(Transitivity)                                                              \
  X(Antisymmetry)                                                              \
  X(Asymmetry)                                                                 \
  X(Acyclicity)                                                                \
  X(Irreflexivity)                                                             \
  X(Intransitivity)                                                            \
  X(StronglyIntransitivity)                                                    \
  X(LocalReflexivity)                                                          \
  X(GlobalReflexivity)                                                         \
  X(PurelyReflexivity)                                                         \
  X(Symmetry)                                                                  \
  X(DisjointnessConstraint)                                                    \
  X(DisjointRoles)                                                             \
  X(DisjointRelationships)                                                     \
  X(DisjointObjectTypes)                                                       \
  X(EqualityConstraint)                                                        \
  X(RoleEquality)                                                              \
  X(RelationshipEquality)                                                      \
  X(ValueConstraint)                                                           \
  X(ValueTypeConstraint)                                                       \
  X(RoleValueConstraint)                                                       \
  X(AttributeValueConstraint)                                                  \
  X(CompletenessConstraint)                                                    \
  X(ValueComparisonConstraint)                                                 \
  X(IdentificationConstraint)                                                  \
  X(ExternalIdentification)                                                    \
  X(QualifiedIdentification)                                                   \
  X(WeakIdentification)                                                        \
  X(InternalIdentification)                                                    \
  X(SingleIdentification)                                                      \
  X(MandatoryConstraint)                                                       \
  X(Mandatory)                                                                 \
  X(DisjunctiveMandatory)                                                      \
  X(InclusiveMandatory)                                                        \
  X(Part)                                                                      \
  X(Dimension)                                                                 \
  X(ValueRange)                                                                \
  X(ValueEnumeration)                                                          \
  X(Operator)                                                                  \
  X(DisjointEntities)                                                          \
  X(ObjectTypeEquality)

enum class Kind : uint8_t {
#define CMV_X(name) name,
  CMV_KIND_LIST(CMV_X)
#undef CMV_X
};

inline constexpr int kKindCount = 0
#define CMV_X(name) +1
    CMV_KIND_LIST(CMV_X)
#undef CMV_X
    ;

using KindSet = std::bitset<kKindCount>;

inline constexpr std::array<std::string_view, kKindCount> kKindNames = {
#define CMV_X(name) #name,
    CMV_KIND_LIST(CMV_X)
#undef CMV_X
};

inline std::string_view to_string(Kind k) {
  return kKindNames[static_cast<size_t>(k)];
}

std::optional<Kind> kind_from_string(std::string_view name);

// The six comparison operator nominals. They are constants of the vocabulary,
// not declarable entities.
enum class Nominal : uint8_t { Less, Leq, Eq, Neq, Geq, Greater };

inline constexpr int kNominalCount = 6;

inline constexpr std::array<std::string_view, kNominalCount> kNominalNames = {
    "Less", "Leq", "Eq", "Neq", "Geq", "Greater"};

inline std::string_view to_string(Nominal n) {
  return kNominalNames[static_cast<size_t>(n)];
}

std::optional<Nominal> nominal_from_string(std::string_view name);

// Link predicates. PartLink/WholeLink/DomainLink/RangeLink carry a Link
// suffix so they cannot be confused with the kind labels of the same name.
#define CMV_PRED_LIST(X)                                                       \
  X(Contains, 2)                                                               \
  X(RolePlaying, 3)                                                            \
  X(ReifiedAs, 2)                                                              \
  X(Sub, 2)                                                                    \
  X(Super, 2)                                                                  \
  X(PartLink, 2)                                                               \
  X(WholeLink, 2)                                                              \
  X(DeclaredOn, 2)                                                             \
  X(HasComponent, 2)                                                           \
  X(DomainLink, 2)                                                             \
  X(RangeLink, 2)                                                              \
  X(DimensionalAttribution, 3)                                                 \
  X(DimensionalValueTyping, 3)                                                 \
  X(ExtUnique, 3)                                                              \
  X(Identifies, 2)                                                             \
  X(PartiallyIdentifies, 2)                                                    \
  X(HasStrong, 2)                                                              \
  X(CardR, 3)                                                                  \
  X(CardO, 3)                                                                  \
  X(Frequency, 3)                                                              \
  X(ConstrainingValues, 3)                                                     \
  X(HasType, 2)                                                                \
  X(First, 2)                                                                  \
  X(Second, 2)                                                                 \
  X(ComparisonOperatorOf, 2)                                                   \
  X(OnValueOfType, 2)                                                          \
  X(HasParticipant, 2)                                                         \
  X(Joining, 3)                                                                \
  X(ParticipatesIn, 2)

enum class LinkPred : uint8_t {
#define CMV_X(name, arity) name,
  CMV_PRED_LIST(CMV_X)
#undef CMV_X
};

inline constexpr int kPredCount = 0
#define CMV_X(name, arity) +1
    CMV_PRED_LIST(CMV_X)
#undef CMV_X
    ;

inline constexpr std::array<std::string_view, kPredCount> kPredNames = {
#define CMV_X(name, arity) #name,
    CMV_PRED_LIST(CMV_X)
#undef CMV_X
};

inline constexpr std::array<int, kPredCount> kPredArity = {
#define CMV_X(name, arity) arity,
    CMV_PRED_LIST(CMV_X)
#undef CMV_X
};

inline std::string_view to_string(LinkPred p) {
  return kPredNames[static_cast<size_t>(p)];
}

inline int arity(LinkPred p) { return kPredArity[static_cast<size_t>(p)]; }

std::optional<LinkPred> pred_from_string(std::string_view name);

// Attribute predicates. The first two take integer bounds, the last two take
// literal strings.
enum class AttrPred : uint8_t {
  MinimumCardinality,
  MaximumCardinality,
  MinimumValue,
  MaximumValue,
};

inline constexpr int kAttrPredCount = 4;

inline constexpr std::array<std::string_view, kAttrPredCount> kAttrPredNames =
    {"MinimumCardinality", "MaximumCardinality", "MinimumValue",
     "MaximumValue"};

inline std::string_view to_string(AttrPred p) {
  return kAttrPredNames[static_cast<size_t>(p)];
}

std::optional<AttrPred> attr_pred_from_string(std::string_view name);

inline bool attr_takes_integer(AttrPred p) {
  return p == AttrPred::MinimumCardinality || p == AttrPred::MaximumCardinality;
}

// A non-negative integer bound, or the unbounded sentinel "many".
struct IntegerBound {
  bool many = false;
  uint64_t value = 0;

  static IntegerBound of(uint64_t v) { return {false, v}; }
  static IntegerBound unbounded() { return {true, 0}; }

  friend bool operator==(const IntegerBound&, const IntegerBound&) = default;
  friend auto operator<=>(const IntegerBound&, const IntegerBound&) = default;
};

std::string to_string(const IntegerBound& b);

}  // namespace cmv
