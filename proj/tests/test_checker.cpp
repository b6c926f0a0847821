#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cmv/catalog.hpp"
#include "cmv/checker.hpp"
#include "test_util.hpp"

using namespace cmv;

namespace {

KindSet ks(std::initializer_list<Kind> kinds) {
  KindSet s;
  for (Kind k : kinds) s.set(size_t(k));
  return s;
}

LinkArg ent(EntityId e) { return LinkArg::of(e); }

std::set<std::string> violated_ids(const std::vector<Violation>& vs) {
  std::set<std::string> ids;
  for (const auto& v : vs) ids.insert(v.axiom_id);
  return ids;
}

}  // namespace

TEST_CASE("a relationship needs two contained roles") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  auto g = std::move(b).finish(published_catalog());
  auto vs = check_model(g, published_catalog());

  auto ids = violated_ids(vs);
  CHECK(ids.count("REL-CONTAINS.2"));

  bool found = false;
  for (const auto& v : vs)
    if (v.axiom_id == "REL-CONTAINS.2") {
      found = true;
      REQUIRE(v.witness.size() == 1);
      CHECK(v.witness[0].second == "rel");
    }
  CHECK(found);
  (void)rel;
}

TEST_CASE("a contained role needs a player and the pair fires one witness each") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  auto r1 = *b.add_entity("r1", ks({Kind::Role}));
  auto r2 = *b.add_entity("r2", ks({Kind::Role}));
  b.add_link(LinkPred::Contains, {ent(rel), ent(r1)});
  b.add_link(LinkPred::Contains, {ent(rel), ent(r2)});
  auto g = std::move(b).finish(published_catalog());
  auto vs = check_model(g, published_catalog());

  size_t hits = 0;
  for (const auto& v : vs)
    if (v.axiom_id == "REL-ROLEPLAYING.2") ++hits;
  CHECK(hits == 2);
  CHECK_FALSE(violated_ids(vs).count("REL-CONTAINS.2"));
}

TEST_CASE("clean fixture has no violations in any mode") {
  auto g = cmvtest::load_fixture("clean_binary_rel.kfm");
  CHECK(check_model(g, published_catalog()).empty());
  CheckOptions c2;
  c2.fragment = FragmentMode::C2;
  CHECK(check_model(g, published_catalog(), c2).empty());
}

TEST_CASE("fragment mode c2 reports no starred axioms") {
  auto g = cmvtest::load_fixture("star_only.kfm");

  auto full = check_model(g, published_catalog());
  CHECK(std::any_of(full.begin(), full.end(),
                    [](const Violation& v) { return v.tier == Tier::Star; }));

  CheckOptions opt;
  opt.fragment = FragmentMode::C2;
  auto restricted = check_model(g, published_catalog(), opt);
  CHECK(restricted.empty());
  for (const auto& v : restricted) CHECK(v.tier == Tier::C2);
}

TEST_CASE("violations come sorted with catalog-sourced tiers and messages") {
  auto g = cmvtest::load_fixture("bad_sub_mixed.kfm");
  auto vs = check_model(g, published_catalog());
  REQUIRE(!vs.empty());

  CHECK(std::is_sorted(vs.begin(), vs.end(), violation_less));

  std::map<std::string, const Axiom*> by_id;
  static const auto axioms = axiom_catalog(published_catalog());
  for (const auto& ax : axioms) by_id[ax.id] = &ax;
  for (const auto& v : vs) {
    REQUIRE_MESSAGE(by_id.count(v.axiom_id), v.axiom_id << " not in catalog");
    CHECK(v.tier == by_id[v.axiom_id]->tier);
    CHECK(v.message == by_id[v.axiom_id]->source);
  }
}

TEST_CASE("the deliberate fault flags minimum-only cardinality constraints") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  auto r1 = *b.add_entity("r1", ks({Kind::Role}));
  auto r2 = *b.add_entity("r2", ks({Kind::Role}));
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto cc = *b.add_entity("cc", ks({Kind::ObjectTypeCardinality}));
  b.add_link(LinkPred::Contains, {ent(rel), ent(r1)});
  b.add_link(LinkPred::Contains, {ent(rel), ent(r2)});
  b.add_link(LinkPred::RolePlaying, {ent(r1), ent(cc), ent(a)});
  b.add_link(LinkPred::RolePlaying, {ent(r2), ent(cc), ent(a)});
  b.add_attr(AttrPred::MinimumCardinality, cc, IntegerBound::of(1));
  auto g = std::move(b).finish(published_catalog());

  auto honest = violated_ids(check_model(g, published_catalog()));
  CHECK_FALSE(honest.count("CARDC-MINMAX.1"));

  CheckOptions opt;
  opt.inject_fault = true;
  auto skewed = violated_ids(check_model(g, published_catalog(), opt));
  CHECK(skewed.count("CARDC-MINMAX.1"));
}

TEST_CASE("per-arity families follow the widest relationship in the model") {
  GraphBuilder b;
  auto rel = *b.add_entity("rel", ks({Kind::Relationship}));
  auto uc = *b.add_entity("uc", ks({Kind::InternalUniquenessConstraint}));
  for (int i = 0; i < 12; ++i) {
    auto r = *b.add_entity("r" + std::to_string(i), ks({Kind::Role}));
    b.add_link(LinkPred::Contains, {ent(rel), ent(r)});
    b.add_link(LinkPred::DeclaredOn, {ent(uc), ent(r)});
  }
  // A 13th declared role overshoots the 12 contained ones.
  auto extra = *b.add_entity("extra", ks({Kind::Role}));
  b.add_link(LinkPred::DeclaredOn, {ent(uc), ent(extra)});
  auto g = std::move(b).finish(published_catalog());

  // The span axiom for n = 12 exists only because the model forces the
  // family past the configured bound of 10.
  auto ids = violated_ids(check_model(g, published_catalog()));
  CHECK(ids.count("UNIQ-SPAN.n12"));

  GraphBuilder b2;
  auto rel2 = *b2.add_entity("rel2", ks({Kind::Relationship}));
  auto uc2 = *b2.add_entity("uc2", ks({Kind::InternalUniquenessConstraint}));
  auto r0 = *b2.add_entity("r0", ks({Kind::Role}));
  b2.add_link(LinkPred::Contains, {ent(rel2), ent(r0)});
  b2.add_link(LinkPred::DeclaredOn, {ent(uc2), ent(r0)});
  auto r1 = *b2.add_entity("r1", ks({Kind::Role}));
  b2.add_link(LinkPred::DeclaredOn, {ent(uc2), ent(r1)});
  auto g2 = std::move(b2).finish(published_catalog());

  auto ids2 = violated_ids(check_model(g2, published_catalog()));
  CHECK(ids2.count("UNIQ-SPAN.n1"));
}
