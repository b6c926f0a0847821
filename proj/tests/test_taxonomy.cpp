#include <doctest.h>

#include <set>

#include "cmv/taxonomy.hpp"

using namespace cmv;

namespace {

bool is_ancestor(const TaxonomyCatalog& cat, Kind descendant, Kind ancestor) {
  return cat.ancestors[size_t(descendant)].test(size_t(ancestor));
}

}  // namespace

TEST_CASE("closure reaches every transitive ancestor") {
  const auto& cat = published_catalog();

  CHECK(is_ancestor(cat, Kind::SingleIdentification, Kind::InternalIdentification));
  CHECK(is_ancestor(cat, Kind::SingleIdentification, Kind::IdentificationConstraint));
  CHECK(is_ancestor(cat, Kind::SingleIdentification, Kind::Constraint));
  CHECK(is_ancestor(cat, Kind::SingleIdentification, Kind::Entity));

  CHECK(is_ancestor(cat, Kind::CompositeAggregate, Kind::SharedAggregate));
  CHECK(is_ancestor(cat, Kind::CompositeAggregate, Kind::PartWhole));
  CHECK(is_ancestor(cat, Kind::CompositeAggregate, Kind::Relationship));

  CHECK(is_ancestor(cat, Kind::Attribute, Kind::AttributiveProperty));
  CHECK(is_ancestor(cat, Kind::Attribute, Kind::Relationship));
  CHECK(is_ancestor(cat, Kind::MappedTo, Kind::Attribute));

  CHECK(is_ancestor(cat, Kind::WeakObjectType, Kind::ObjectType));
  CHECK(is_ancestor(cat, Kind::NestedObjectType, Kind::ObjectType));
  CHECK(is_ancestor(cat, Kind::DimensionalValueType, Kind::ValueProperty));

  CHECK_FALSE(is_ancestor(cat, Kind::Role, Kind::EntityType));
  CHECK_FALSE(is_ancestor(cat, Kind::Entity, Kind::Entity));
}

TEST_CASE("five roots and no parent cycles") {
  const auto& cat = published_catalog();

  std::set<Kind> roots;
  for (int i = 0; i < kKindCount; ++i)
    if (cat.is_root(Kind(i))) roots.insert(Kind(i));

  CHECK(roots == std::set<Kind>{Kind::Entity, Kind::Dimension, Kind::ValueRange,
                                Kind::ValueEnumeration, Kind::Operator});

  for (int i = 0; i < kKindCount; ++i)
    CHECK_FALSE(cat.ancestors[size_t(i)].test(size_t(i)));
}

TEST_CASE("close_up adds exactly the ancestors") {
  const auto& cat = published_catalog();

  KindSet s;
  s.set(size_t(Kind::CompositeAggregate));
  KindSet closed = cat.close_up(s);

  CHECK(closed.test(size_t(Kind::CompositeAggregate)));
  CHECK(closed.test(size_t(Kind::SharedAggregate)));
  CHECK(closed.test(size_t(Kind::PartWhole)));
  CHECK(closed.test(size_t(Kind::Relationship)));
  CHECK(closed.test(size_t(Kind::Entity)));
  CHECK(closed.count() == 5);
}

TEST_CASE("published hierarchy satisfies every label") {
  auto sat = taxonomy_satisfiability(published_catalog());

  REQUIRE(sat.size() == size_t(kKindCount));
  for (const auto& [kind, verdict] : sat) {
    CAPTURE(to_string(kind));
    CHECK(verdict == LabelSat::Satisfiable);
  }
}

TEST_CASE("marking the ring constraints disjoint contradicts their isa edges") {
  const auto& base = published_catalog();
  auto mutated = with_mutation(base, "disjoint-relprops");
  auto sat = taxonomy_satisfiability(mutated);

  std::set<Kind> unsat;
  for (const auto& [kind, verdict] : sat)
    if (verdict == LabelSat::Unsatisfiable) unsat.insert(kind);

  // Asymmetry sits under both Antisymmetry and Irreflexivity, so making the
  // group disjoint kills it, and Acyclicity dies with its parent.
  CHECK(unsat == std::set<Kind>{Kind::Asymmetry, Kind::Acyclicity});
}

TEST_CASE("unknown mutation names are rejected") {
  auto names = known_mutations();
  REQUIRE(names.size() == 1);
  CHECK(names[0] == "disjoint-relprops");
  CHECK_THROWS(with_mutation(published_catalog(), "no-such-mutation"));
}

TEST_CASE("taxonomy axiom specs cover isa, disjointness and completeness") {
  const auto& cat = published_catalog();
  auto specs = tax_axiom_specs(cat);

  size_t isa = 0, disjoint = 0, complete = 0;
  std::set<std::string> ids;
  for (const auto& s : specs) {
    switch (s.type) {
      case TaxAxiomType::Isa: ++isa; break;
      case TaxAxiomType::Disjoint: ++disjoint; break;
      case TaxAxiomType::Complete: ++complete; break;
    }
    CHECK(ids.insert(s.id).second);
  }

  CHECK(isa + disjoint + complete == specs.size());
  CHECK(isa > 0);
  CHECK(disjoint > 0);
  CHECK(complete > 0);
  // One formula per spec feeds the axiom catalog's two taxonomy groups.
  CHECK(specs.size() == 127);
}
