#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "cmv/owl.hpp"
#include "cmv/taxonomy.hpp"
#include "test_util.hpp"

using namespace cmv;

TEST_CASE("each ternary predicate reaches OWL through numbered properties") {
  const auto& infos = reified_preds();
  REQUIRE(infos.size() == 9);

  std::set<LinkPred> seen;
  size_t simplified = 0;
  for (const auto& info : infos) {
    CHECK(seen.insert(info.pred).second);
    CHECK(arity(info.pred) == 3);
    CHECK_FALSE(info.carrier.empty());
    CHECK_FALSE(info.prop_base.empty());
    if (info.simplified) {
      ++simplified;
      CHECK(info.carrier_pos >= 0);
      CHECK(info.carrier_pos < 3);
    } else {
      CHECK(info.carrier_pos == -1);
      CHECK(std::string(info.carrier).find('R') != std::string::npos);
    }
  }
  CHECK(simplified == 5);
}

TEST_CASE("schema export is deterministic and passes its own lint") {
  const auto& cat = published_catalog();
  auto doc = export_schema(cat);
  CHECK(doc == export_schema(cat));
  CHECK(doc.rfind("Prefix(", 0) == 0);
  CHECK(doc.find("Ontology(") != std::string::npos);
  CHECK(lint_numbered_properties(doc).empty());

  // Every numbered property of every reified predicate is declared.
  for (const auto& info : reified_preds())
    for (int i = 1; i <= 3; ++i) {
      std::string decl = "Declaration(ObjectProperty(:" + std::string(info.prop_base) +
                         std::to_string(i) + "))";
      CHECK_MESSAGE(doc.find(decl) != std::string::npos, decl << " missing");
    }
}

TEST_CASE("schema declaration counts match the golden tallies") {
  auto doc = export_schema(published_catalog());
  auto counts = count_declarations(doc);

  std::ostringstream out;
  out << "classes " << counts.classes << "\n"
      << "object_properties " << counts.object_properties << "\n"
      << "data_properties " << counts.data_properties << "\n"
      << "named_individuals " << counts.named_individuals << "\n"
      << "axioms " << counts.axioms << "\n";
  cmvtest::check_golden(std::string(CMV_GOLDEN_DIR) + "/schema_counts.txt", out.str());

  CHECK(counts.named_individuals == 0);
  CHECK(counts.classes > size_t(kKindCount));
  CHECK(counts.data_properties == 2);
}

TEST_CASE("model export refuses violating models and flags starred findings") {
  const auto& cat = published_catalog();

  auto dirty = cmvtest::load_fixture("bad_rel_contains.kfm");
  auto refused = export_model(dirty, cat);
  CHECK_FALSE(refused.ok());
  CHECK(refused.document.empty());
  CHECK(!refused.c2_errors.empty());

  auto starred = cmvtest::load_fixture("star_only.kfm");
  auto exported = export_model(starred, cat);
  CHECK(exported.ok());
  CHECK_FALSE(exported.document.empty());
  REQUIRE(!exported.star_warnings.empty());
  for (const auto& v : exported.star_warnings) CHECK(v.tier == Tier::Star);
}

TEST_CASE("model export mints individuals for entities, tuples and attributes") {
  const auto& cat = published_catalog();
  auto g = cmvtest::load_fixture("clean_binary_rel.kfm");
  auto result = export_model(g, cat);
  REQUIRE(result.ok());
  CHECK(result.document == export_model(g, cat).document);

  // Fully reified tuples and flattened attribute values each get a fresh
  // individual; simplified reification reuses the carrier entity.
  size_t fresh_tuples = 0;
  for (const auto& l : g.links)
    if (l.arity() == 3)
      for (const auto& info : reified_preds())
        if (info.pred == l.pred && !info.simplified) ++fresh_tuples;
  auto counts = count_declarations(result.document);
  CHECK(counts.named_individuals == g.entity_count() + fresh_tuples + g.attrs.size());
  CHECK(lint_numbered_properties(result.document).empty());

  for (EntityId e = 0; e < g.entity_count(); ++e) {
    std::string decl = "Declaration(NamedIndividual(:" + g.name(e) + "))";
    CHECK_MESSAGE(result.document.find(decl) != std::string::npos, decl << " missing");
  }
}

TEST_CASE("numbered property assertions fold back into the original tuples") {
  const auto& cat = published_catalog();
  auto g = cmvtest::load_fixture("reify_all.kfm");
  auto result = export_model(g, cat);
  REQUIRE(result.ok());

  auto folded = refold_naries(result.document, g);
  std::vector<LinkRecord> expected;
  for (const auto& l : g.links)
    if (l.arity() == 3) expected.push_back(l);
  std::sort(folded.begin(), folded.end());
  std::sort(expected.begin(), expected.end());
  REQUIRE(!expected.empty());
  CHECK(folded == expected);

  // The fixture exercises every reifiable predicate at least once.
  std::set<LinkPred> used;
  for (const auto& l : expected) used.insert(l.pred);
  CHECK(used.size() == reified_preds().size());
}

TEST_CASE("clean thematic fixtures export and fold back losslessly") {
  const auto& cat = published_catalog();
  for (const char* name : {"clean_reified.kfm", "clean_qualifier.kfm", "clean_weak.kfm",
                           "clean_aggregate.kfm", "clean_mandatory.kfm"}) {
    CAPTURE(name);
    auto g = cmvtest::load_fixture(name);
    auto result = export_model(g, cat);
    REQUIRE(result.ok());

    auto folded = refold_naries(result.document, g);
    std::vector<LinkRecord> expected;
    for (const auto& l : g.links)
      if (l.arity() == 3) expected.push_back(l);
    std::sort(folded.begin(), folded.end());
    std::sort(expected.begin(), expected.end());
    CHECK(folded == expected);
  }
}
