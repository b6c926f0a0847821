#include <doctest.h>

#include <filesystem>

#include "cmv/dsl.hpp"
#include "test_util.hpp"

using namespace cmv;

namespace {

ModelGraph must_parse(std::string_view text) {
  auto r = parse(text, published_catalog());
  for (const auto& e : r.errors) MESSAGE(e.line << ":" << e.col << ": " << e.message);
  REQUIRE(r.graph.has_value());
  return std::move(*r.graph);
}

std::vector<ParseError> must_fail(std::string_view text) {
  auto r = parse(text, published_catalog());
  REQUIRE_FALSE(r.graph.has_value());
  REQUIRE(!r.errors.empty());
  return r.errors;
}

}  // namespace

TEST_CASE("statements cover entities, links, attributes and comments") {
  auto g = must_parse("# a one-role relationship, knowingly ill-formed\n"
                      "entity rel : Relationship.\n"
                      "entity r : Role.\n"
                      "link Contains(rel, r).\n"
                      "entity cc : ObjectTypeCardinality.\n"
                      "attr MinimumCardinality(cc, 0).\n"
                      "attr MaximumCardinality(cc, many).\n"
                      "attr MinimumValue(cc, \"a b\").\n");
  CHECK(g.entity_count() == 3);
  CHECK(g.links.size() == 1);
  REQUIRE(g.attrs.size() == 3);
  CHECK(g.attrs[0].ivalue == IntegerBound::of(0));
  CHECK(g.attrs[1].ivalue == IntegerBound::unbounded());
  CHECK(g.attrs[2].svalue == "a b");
}

TEST_CASE("errors carry one-based line and column positions") {
  auto errs = must_fail("entity a : ObjectType.\nlink Contains(a, b).\n");
  CHECK(errs[0].line == 2);
  CHECK(errs[0].col == 18);
  CHECK(errs[0].message.find("b") != std::string::npos);

  errs = must_fail("entity a : NoSuchKind.\n");
  CHECK(errs[0].line == 1);
  CHECK(errs[0].col == 12);

  errs = must_fail("entity a : ObjectType\nentity b : Role.\n");
  CHECK(errs[0].line == 2);

  // Duplicate declarations and arity mistakes are reported where they occur.
  errs = must_fail("entity a : ObjectType.\nentity a : Role.\n");
  CHECK(errs[0].line == 2);
  errs = must_fail("entity a : ObjectType.\nlink Sub(a).\n");
  CHECK(errs[0].line == 2);
}

TEST_CASE("comparison nominals are reserved names with one admissible spot") {
  must_fail("entity Leq : ObjectType.\n");
  must_fail("entity a : ObjectType.\nlink Sub(a, Leq).\n");

  auto g = must_parse("entity vc : ValueComparisonConstraint.\n"
                      "link ComparisonOperatorOf(vc, Geq).\n");
  REQUIRE(g.links.size() == 1);
  CHECK(g.links[0].args[1].tag == LinkArg::Tag::Nominal);
  CHECK(g.links[0].args[1].nominal == Nominal::Geq);
}

TEST_CASE("dialect-qualified kind terms resolve through the alias table") {
  auto g = must_parse("entity Person : uml:class.\n"
                      "entity owns : orm:\"fact type\".\n"
                      "entity Dep : eer:\"weak entity type\".\n");
  CHECK(g.has_kind(g.by_name.at("Person"), Kind::ObjectType));
  CHECK(g.has_kind(g.by_name.at("owns"), Kind::Relationship));
  CHECK(g.has_kind(g.by_name.at("Dep"), Kind::WeakObjectType));

  must_fail("entity x : uml:nosuch.\n");
}

TEST_CASE("classification suggests near misses") {
  auto hit = classify("association class", Dialect::Uml);
  REQUIRE(hit.kind.has_value());
  CHECK(*hit.kind == Kind::AssociativeObjectType);

  auto miss = classify("asociation", Dialect::Uml);
  CHECK_FALSE(miss.kind.has_value());
  REQUIRE(!miss.suggestions.empty());
  CHECK(miss.suggestions[0] == "association");

  for (const auto& e : alias_table()) {
    auto r = classify(e.term, e.dialect);
    REQUIRE_MESSAGE(r.kind.has_value(), e.term << " must classify");
    CHECK(*r.kind == e.kind);
  }
}

TEST_CASE("serialization prints minimal kinds and stable bytes") {
  const auto& cat = published_catalog();
  KindSet s;
  s.set(size_t(Kind::Subsumption));
  s.set(size_t(Kind::Relationship));
  s.set(size_t(Kind::Entity));
  auto mins = minimal_kinds(cat, s);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == Kind::Subsumption);

  auto g = must_parse("entity b : Role.\nentity a : Subsumption.\n");
  auto text = serialize(g);
  CHECK(text == "entity a : Subsumption.\nentity b : Role.\n");
}

TEST_CASE("every fixture round-trips bit for bit") {
  namespace fs = std::filesystem;
  size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(CMV_FIXTURE_DIR)) {
    if (entry.path().extension() != ".kfm") continue;
    ++seen;
    CAPTURE(entry.path().filename().string());
    auto original = must_parse(cmvtest::read_file(entry.path().string()));
    auto canonical = serialize(original);
    auto reparsed = must_parse(canonical);
    CHECK(structurally_equal(original, reparsed));
    CHECK(serialize(reparsed) == canonical);
  }
  CHECK(seen >= 70);
}

TEST_CASE("structural equality ignores declaration order only") {
  auto a = must_parse("entity x : ObjectType.\nentity y : Role.\n");
  auto b = must_parse("entity y : Role.\nentity x : ObjectType.\n");
  CHECK(structurally_equal(a, b));
  CHECK_FALSE(a == b);
  CHECK(a == must_parse("entity x : ObjectType.\nentity y : Role.\n"));

  auto c = must_parse("entity x : ObjectType.\nentity y : ObjectType.\n");
  CHECK_FALSE(structurally_equal(a, c));
}
