#include <doctest.h>

#include <algorithm>

#include "cmv/evaluator.hpp"
#include "cmv/taxonomy.hpp"

using namespace cmv;

namespace {

KindSet ks(std::initializer_list<Kind> kinds) {
  KindSet s;
  for (Kind k : kinds) s.set(size_t(k));
  return s;
}

LinkArg ent(EntityId e) { return LinkArg::of(e); }

// One relationship containing two roles, plus a bare role.
struct TinyGraph {
  ModelGraph g;
  EntityId rel, r1, r2, loose;

  TinyGraph() {
    GraphBuilder b;
    rel = *b.add_entity("rel", ks({Kind::Relationship}));
    r1 = *b.add_entity("r1", ks({Kind::Role}));
    r2 = *b.add_entity("r2", ks({Kind::Role}));
    loose = *b.add_entity("loose", ks({Kind::Role}));
    b.add_link(LinkPred::Contains, {ent(rel), ent(r1)});
    b.add_link(LinkPred::Contains, {ent(rel), ent(r2)});
    b.add_attr(AttrPred::MinimumCardinality, rel, IntegerBound::of(3));
    b.add_attr(AttrPred::MinimumValue, r1, "abc");
    g = std::move(b).finish(published_catalog());
  }
};

bool closed_eval(const GraphFacts& facts, const Formula& fm) {
  auto universe = universe_for(facts, scan_features(fm));
  Binding binding;
  return eval(facts, universe, fm, binding);
}

}  // namespace

TEST_CASE("connectives and equality behave classically") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  CHECK(closed_eval(facts, exists({"x"}, kind(Kind::Relationship, "x"))));
  CHECK_FALSE(closed_eval(facts, exists({"x"}, kind(Kind::ObjectType, "x"))));
  CHECK(closed_eval(facts, neg(exists({"x"}, kind(Kind::ObjectType, "x")))));

  // rel contains r1 but nothing contains rel.
  CHECK(closed_eval(facts, exists({"x", "y"}, link(LinkPred::Contains, {v("x"), v("y")}))));
  CHECK(closed_eval(facts, forall({"x", "y"},
                                  implies(link(LinkPred::Contains, {v("x"), v("y")}),
                                          kind(Kind::Role, "y")))));
  CHECK_FALSE(closed_eval(facts, forall({"x"}, exists({"y"},
                                        link(LinkPred::Contains, {v("y"), v("x")})))));

  CHECK(closed_eval(facts, forall({"x"}, eq(v("x"), v("x")))));
  CHECK(closed_eval(facts,
                    iff(exists({"x"}, kind(Kind::Relationship, "x")),
                        exists({"x", "y"}, link(LinkPred::Contains, {v("x"), v("y")})))));
  CHECK(closed_eval(facts, disj({exists({"x"}, kind(Kind::ObjectType, "x")),
                                 exists({"x"}, kind(Kind::Role, "x"))})));
  CHECK_FALSE(closed_eval(facts, conj({exists({"x"}, kind(Kind::ObjectType, "x")),
                                       exists({"x"}, kind(Kind::Role, "x"))})));
}

TEST_CASE("counting quantifiers count assignments of the whole block") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  // rel contains exactly two roles.
  auto contains_from_rel = [&](const char* var) {
    return conj({kind(Kind::Relationship, "x"),
                 link(LinkPred::Contains, {v("x"), v(var)})});
  };
  CHECK(closed_eval(facts, exists({"x"}, count_eq(2, {"y"}, contains_from_rel("y")))));
  CHECK(closed_eval(facts, exists({"x"}, count_ge(2, {"y"}, contains_from_rel("y")))));
  CHECK_FALSE(closed_eval(facts, exists({"x"}, count_ge(3, {"y"}, contains_from_rel("y")))));
  CHECK(closed_eval(facts, forall({"x"}, count_le(2, {"y"},
                                  link(LinkPred::Contains, {v("x"), v("y")})))));
  CHECK_FALSE(closed_eval(facts, forall({"x"}, count_le(1, {"y"},
                                        link(LinkPred::Contains, {v("x"), v("y")})))));

  // Two-variable block: (x, y) pairs satisfying Contains.
  CHECK(closed_eval(facts, count_eq(2, {"x", "y"},
                                    link(LinkPred::Contains, {v("x"), v("y")}))));
  // Zero-count degenerate forms.
  CHECK(closed_eval(facts, count_le(0, {"x"}, kind(Kind::ObjectType, "x"))));
  CHECK(closed_eval(facts, count_ge(0, {"x"}, kind(Kind::ObjectType, "x"))));
}

TEST_CASE("inner quantifiers shadow outer bindings of the same name") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  // The inner exists rebinds x; the formula holds even though the outer x
  // ranges over roles as well.
  auto fm = forall({"x"}, exists({"x"}, kind(Kind::Relationship, "x")));
  CHECK(closed_eval(facts, fm));

  // Lookups scan the binding from the back.
  auto universe = universe_for(facts, scan_features(fm));
  Binding b;
  b.emplace_back("x", Element::of_entity(t.r1));
  CHECK_FALSE(eval(facts, universe, kind(Kind::Relationship, "x"), b));
  b.emplace_back("x", Element::of_entity(t.rel));
  CHECK(eval(facts, universe, kind(Kind::Relationship, "x"), b));
  b.pop_back();
  CHECK(eval(facts, universe, kind(Kind::Role, "x"), b));
}

TEST_CASE("universe grows only when the formula needs constants or values") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  auto plain = forall({"x"}, kind(Kind::Entity, "x"));
  auto u1 = universe_for(facts, scan_features(plain));
  CHECK(u1.size() == t.g.entity_count());
  for (const auto& el : u1) CHECK(el.tag == Element::Tag::Entity);

  auto with_nominal = exists({"x"}, link(LinkPred::ComparisonOperatorOf,
                                         {v("x"), Term::nom(Nominal::Leq)}));
  auto u2 = universe_for(facts, scan_features(with_nominal));
  CHECK(u2.size() == t.g.entity_count() + kNominalCount);

  auto with_operator_kind = exists({"x"}, kind(Kind::Operator, "x"));
  auto u3 = universe_for(facts, scan_features(with_operator_kind));
  CHECK(u3.size() == t.g.entity_count() + kNominalCount);

  // The graph holds two distinct attribute values: the integer 3 and the
  // literal "abc".
  auto with_values = exists({"x", "w"},
                            attr(AttrPred::MinimumCardinality, v("x"), v("w")));
  auto u4 = universe_for(facts, scan_features(with_values));
  CHECK(u4.size() == t.g.entity_count() + 2);
  CHECK(facts.value_tokens.size() == 2);
}

TEST_CASE("attribute and sort atoms see the stored values") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  CHECK(closed_eval(facts, exists({"x", "w"},
                                  conj({attr(AttrPred::MinimumCardinality, v("x"), v("w")),
                                        sort_atom(Sort::Integer, "w")}))));
  CHECK(closed_eval(facts, exists({"x", "w"},
                                  conj({attr(AttrPred::MinimumValue, v("x"), v("w")),
                                        sort_atom(Sort::Literal, "w")}))));
  CHECK_FALSE(closed_eval(facts, exists({"x", "w"},
                                        conj({attr(AttrPred::MinimumCardinality, v("x"), v("w")),
                                              sort_atom(Sort::Literal, "w")}))));
  CHECK(closed_eval(facts, exists({"x"},
                                  attr(AttrPred::MinimumCardinality, v("x"), Term::num(3)))));
  CHECK_FALSE(closed_eval(facts, exists({"x"},
                                        attr(AttrPred::MinimumCardinality, v("x"), Term::num(4)))));
}

TEST_CASE("derived atoms follow participation and compatibility") {
  GraphBuilder b;
  auto isa = *b.add_entity("isa", ks({Kind::Subsumption}));
  auto a = *b.add_entity("a", ks({Kind::ObjectType}));
  auto c = *b.add_entity("c", ks({Kind::ObjectType}));
  b.add_link(LinkPred::Sub, {ent(isa), ent(a)});
  auto g = std::move(b).finish(published_catalog());
  GraphFacts facts(g);
  using namespace f;

  CHECK(facts.participant(isa, a));
  CHECK_FALSE(facts.participant(isa, c));
  CHECK(closed_eval(facts, exists({"x", "y"},
                                  derived(DerivedPred::Participant, "x", "y"))));
  CHECK(closed_eval(facts, exists({"x", "y"},
                                  conj({neg(eq(v("x"), v("y"))),
                                        derived(DerivedPred::Compatible, "x", "y")}))));
}

TEST_CASE("naive violations peel the outer universal block") {
  TinyGraph t;
  GraphFacts facts(t.g);
  using namespace f;

  // Every role must be contained somewhere; `loose` is not.
  auto fm = forall({"x"}, implies(kind(Kind::Role, "x"),
                                  exists({"y"}, link(LinkPred::Contains, {v("y"), v("x")}))));
  auto vs = violations_naive(facts, fm);
  REQUIRE(vs.size() == 1);
  REQUIRE(vs[0].size() == 1);
  CHECK(vs[0][0].first == "x");
  CHECK(vs[0][0].second == Element::of_entity(t.loose));
  CHECK(repr(t.g, vs[0][0].second) == "loose");

  // A satisfied axiom yields no witnesses.
  auto ok = forall({"x"}, implies(kind(Kind::Relationship, "x"),
                                  exists({"y"}, link(LinkPred::Contains, {v("x"), v("y")}))));
  CHECK(violations_naive(facts, ok).empty());

  // Two universal variables produce one witness pair per falsifying pair, in
  // universe enumeration order.
  auto pairwise = forall({"x", "y"}, neg(link(LinkPred::Contains, {v("x"), v("y")})));
  auto pv = violations_naive(facts, pairwise);
  REQUIRE(pv.size() == 2);
  CHECK(pv[0][0].second == Element::of_entity(t.rel));
  CHECK(pv[0][1].second == Element::of_entity(t.r1));
  CHECK(pv[1][1].second == Element::of_entity(t.r2));

  // A non-universal root is checked as a closed sentence.
  auto closed = exists({"x"}, kind(Kind::ObjectType, "x"));
  auto cv = violations_naive(facts, closed);
  REQUIRE(cv.size() == 1);
  CHECK(cv[0].empty());
}
