#include <doctest.h>

#include <algorithm>

#include "cmv/model.hpp"
#include "cmv/taxonomy.hpp"

using namespace cmv;

namespace {

KindSet ks(std::initializer_list<Kind> kinds) {
  KindSet s;
  for (Kind k : kinds) s.set(size_t(k));
  return s;
}

LinkArg ent(EntityId e) { return LinkArg::of(e); }

}  // namespace

TEST_CASE("builder rejects duplicate names and merges kinds") {
  GraphBuilder b;
  auto a = b.add_entity("a", ks({Kind::ObjectType}));
  REQUIRE(a.has_value());
  CHECK_FALSE(b.add_entity("a", ks({Kind::Role})).has_value());
  CHECK(b.find("a") == a);
  CHECK_FALSE(b.find("missing").has_value());

  b.add_kinds(*a, ks({Kind::WeakObjectType}));
  auto g = std::move(b).finish(published_catalog());

  CHECK(g.entity_count() == 1);
  CHECK(g.has_kind(*a, Kind::ObjectType));
  CHECK(g.has_kind(*a, Kind::WeakObjectType));
  CHECK(g.has_kind(*a, Kind::EntityType));
  CHECK(g.has_kind(*a, Kind::Entity));
  CHECK_FALSE(g.has_kind(*a, Kind::Role));
}

TEST_CASE("finish closes kinds upward and deduplicates links and attributes") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Subsumption}));
  auto role = *b.add_entity("role", ks({Kind::Role}));
  b.add_link(LinkPred::Contains, {ent(rel), ent(role)});
  b.add_link(LinkPred::Contains, {ent(rel), ent(role)});
  b.add_attr(AttrPred::MinimumCardinality, rel, IntegerBound::of(1));
  b.add_attr(AttrPred::MinimumCardinality, rel, IntegerBound::of(1));
  auto g = std::move(b).finish(published_catalog());

  CHECK(g.has_kind(rel, Kind::Relationship));
  CHECK(g.has_kind(rel, Kind::Entity));
  CHECK(g.links.size() == 1);
  CHECK(g.attrs.size() == 1);
  CHECK(g.has_link(LinkPred::Contains, ent(rel), ent(role)));
  CHECK_FALSE(g.has_link(LinkPred::Contains, ent(role), ent(rel)));
  CHECK(std::is_sorted(g.links.begin(), g.links.end()));
  CHECK(std::is_sorted(g.attrs.begin(), g.attrs.end()));
}

TEST_CASE("participation follows subsumption, aggregation and ring endpoints") {
  GraphBuilder b;
  auto isa = *b.add_entity("isa", ks({Kind::Subsumption}));
  auto part = *b.add_entity("part", ks({Kind::Part}));
  auto sym = *b.add_entity("sym", ks({Kind::Symmetry}));
  auto vc = *b.add_entity("vc", ks({Kind::ValueComparisonConstraint}));
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto d = *b.add_entity("d", ks({Kind::DataType}));
  auto r1 = *b.add_entity("r1", ks({Kind::Role}));
  auto r2 = *b.add_entity("r2", ks({Kind::Role}));
  b.add_link(LinkPred::Sub, {ent(isa), ent(a)});
  b.add_link(LinkPred::Super, {ent(isa), ent(d)});
  b.add_link(LinkPred::PartLink, {ent(part), ent(a)});
  b.add_link(LinkPred::WholeLink, {ent(part), ent(d)});
  b.add_link(LinkPred::First, {ent(sym), ent(r1)});
  b.add_link(LinkPred::Second, {ent(sym), ent(r2)});
  b.add_link(LinkPred::First, {ent(vc), ent(r2)});
  // DeclaredOn is not a participation edge.
  b.add_link(LinkPred::DeclaredOn, {ent(sym), ent(r1)});
  // First from an entity without a ring or comparison kind does not count.
  b.add_link(LinkPred::First, {ent(a), ent(r1)});
  auto g = std::move(b).finish(published_catalog());

  auto ps = derive_participants(g);
  std::vector<std::pair<EntityId, EntityId>> expected = {
      {isa, a}, {isa, d}, {part, a}, {part, d}, {sym, r1}, {sym, r2}, {vc, r2}};
  std::sort(expected.begin(), expected.end());
  CHECK(ps == expected);
}

TEST_CASE("compatibility keeps typing-clause pairs without roles") {
  GraphBuilder b;
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto c = *b.add_entity("c", ks({Kind::ObjectType}));
  auto d = *b.add_entity("d", ks({Kind::DataType}));
  auto v = *b.add_entity("v", ks({Kind::ValueProperty}));
  auto g = std::move(b).finish(published_catalog());

  auto m = derive_compatible(g);
  CHECK(m.at(a, c));
  CHECK(m.at(c, a));
  CHECK(m.at(a, a));
  CHECK(m.at(d, d));
  CHECK(m.at(v, v));
  CHECK_FALSE(m.at(a, d));
  CHECK_FALSE(m.at(d, v));
}

TEST_CASE("compatibility prunes roles with incompatible players") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  auto r1 = *b.add_entity("r1", ks({Kind::Role}));
  auto r2 = *b.add_entity("r2", ks({Kind::Role}));
  auto r3 = *b.add_entity("r3", ks({Kind::Role}));
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto d = *b.add_entity("d", ks({Kind::DataType}));
  auto cc = *b.add_entity("cc", ks({Kind::ObjectTypeCardinality}));
  b.add_link(LinkPred::RolePlaying, {ent(r1), ent(cc), ent(a)});
  b.add_link(LinkPred::RolePlaying, {ent(r2), ent(cc), ent(a)});
  b.add_link(LinkPred::RolePlaying, {ent(r3), ent(cc), ent(d)});
  (void)rel;
  auto g = std::move(b).finish(published_catalog());

  auto m = derive_compatible(g);
  CHECK(m.at(r1, r2));
  CHECK_FALSE(m.at(r1, r3));
  // A role with no playing at all cannot stay compatible with anything,
  // itself included.
  GraphBuilder b2;
  auto bare = *b2.add_entity("bare", ks({Kind::Role}));
  auto g2 = std::move(b2).finish(published_catalog());
  CHECK_FALSE(derive_compatible(g2).at(bare, bare));
}

TEST_CASE("compatibility prunes relationships of different width") {
  GraphBuilder b;
  auto bin = *b.add_entity("bin", ks({Kind::Relationship}));
  auto tri = *b.add_entity("tri", ks({Kind::Relationship}));
  auto b1 = *b.add_entity("b1", ks({Kind::Role}));
  auto b2e = *b.add_entity("b2", ks({Kind::Role}));
  auto t1 = *b.add_entity("t1", ks({Kind::Role}));
  auto t2 = *b.add_entity("t2", ks({Kind::Role}));
  auto t3 = *b.add_entity("t3", ks({Kind::Role}));
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto cc = *b.add_entity("cc", ks({Kind::ObjectTypeCardinality}));
  b.add_link(LinkPred::Contains, {ent(bin), ent(b1)});
  b.add_link(LinkPred::Contains, {ent(bin), ent(b2e)});
  b.add_link(LinkPred::Contains, {ent(tri), ent(t1)});
  b.add_link(LinkPred::Contains, {ent(tri), ent(t2)});
  b.add_link(LinkPred::Contains, {ent(tri), ent(t3)});
  for (EntityId r : {b1, b2e, t1, t2, t3})
    b.add_link(LinkPred::RolePlaying, {ent(r), ent(cc), ent(a)});
  auto g = std::move(b).finish(published_catalog());

  auto m = derive_compatible(g);
  // Every role pair shares the player, but the relationships differ in the
  // number of contained roles, so only the role layer survives.
  CHECK(m.at(b1, t1));
  CHECK(m.at(bin, bin));
  CHECK(m.at(tri, tri));
  CHECK_FALSE(m.at(bin, tri));
  CHECK_FALSE(m.at(tri, bin));
}

TEST_CASE("effective arity tracks the widest contains fan-out") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  std::vector<EntityId> roles;
  for (int i = 0; i < 12; ++i)
    roles.push_back(*b.add_entity("r" + std::to_string(i), ks({Kind::Role})));
  for (EntityId r : roles) b.add_link(LinkPred::Contains, {ent(rel), ent(r)});
  auto g = std::move(b).finish(published_catalog());

  CHECK(max_contains_degree(g) == 12);
  CHECK(effective_max_arity(g, 10) == 12);
  CHECK(effective_max_arity(g, 20) == 20);

  GraphBuilder b2;
  auto g2 = std::move(b2).finish(published_catalog());
  CHECK(max_contains_degree(g2) == 0);
  CHECK(effective_max_arity(g2, 10) == 10);
}
