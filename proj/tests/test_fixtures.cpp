#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "cmv/catalog.hpp"
#include "cmv/checker.hpp"
#include "test_util.hpp"

using namespace cmv;

namespace {

struct GroupRow {
  std::string group, ok_file, bad_file;
};

const std::vector<GroupRow>& group_rows() {
  static const std::vector<GroupRow> rows = [] {
    std::vector<GroupRow> out;
    std::istringstream in(cmvtest::read_file(cmvtest::fixture_path("groups.tsv")));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream cols(line);
      GroupRow row;
      REQUIRE(std::getline(cols, row.group, '\t'));
      REQUIRE(std::getline(cols, row.ok_file, '\t'));
      REQUIRE(std::getline(cols, row.bad_file));
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

const std::map<std::string, std::string>& group_of_axiom() {
  static const std::map<std::string, std::string> m = [] {
    std::map<std::string, std::string> out;
    for (const auto& ax : axiom_catalog(published_catalog())) out[ax.id] = ax.group;
    return out;
  }();
  return m;
}

std::set<std::string> groups_hit(const ModelGraph& g) {
  std::set<std::string> out;
  for (const auto& v : check_model(g, published_catalog()))
    out.insert(group_of_axiom().at(v.axiom_id));
  return out;
}

}  // namespace

TEST_CASE("the group table covers the whole catalog") {
  std::set<std::string> tabled;
  for (const auto& row : group_rows()) CHECK(tabled.insert(row.group).second);

  auto groups = catalog_groups();
  std::set<std::string> catalog(groups.begin(), groups.end());
  CHECK(tabled == catalog);
}

TEST_CASE("per group, the ok fixture is silent and the bad fixture speaks") {
  for (const auto& row : group_rows()) {
    CAPTURE(row.group);
    auto ok_hits = groups_hit(cmvtest::load_fixture(row.ok_file));
    CHECK_MESSAGE(!ok_hits.count(row.group),
                  row.ok_file << " violates its own group " << row.group);

    if (row.bad_file == "-") continue;
    auto bad_hits = groups_hit(cmvtest::load_fixture(row.bad_file));
    CHECK_MESSAGE(bad_hits.count(row.group),
                  row.bad_file << " never violates " << row.group);
  }
}

TEST_CASE("groups without a violating fixture hold in every model") {
  // Compatibility of roles, relationships and their participants is computed
  // as a greatest fixed point, so no stored instance can disagree with its
  // own definition; these groups have no bad fixture by construction. The
  // adversarial fixture pairs a binary with a ternary relationship over
  // shared players to force the pruning paths, and still stays silent.
  std::set<std::string> definitional;
  for (const auto& row : group_rows())
    if (row.bad_file == "-") definitional.insert(row.group);
  CHECK(definitional ==
        std::set<std::string>{"COMPAT-DEF", "COMPAT-ROLE", "COMPAT-REL"});

  auto g = cmvtest::load_fixture("compat_adversarial.kfm");
  auto hits = groups_hit(g);
  for (const auto& group : definitional) CHECK_FALSE(hits.count(group));

  // Non-vacuity: the clean fixture really has compatible pairs to test.
  auto clean = cmvtest::load_fixture("clean_binary_rel.kfm");
  auto m = derive_compatible(clean);
  size_t pairs = 0;
  for (EntityId a = 0; a < clean.entity_count(); ++a)
    for (EntityId b = 0; b < clean.entity_count(); ++b) pairs += m.at(a, b) ? 1 : 0;
  CHECK(pairs > 0);

  // And the adversarial graph exercises both pruning rules: the role pair
  // with incompatible players and the width-mismatched relationship pair
  // are dropped while their typing clauses alone would admit them.
  auto am = derive_compatible(g);
  auto binRel = g.by_name.at("binRel");
  auto triRel = g.by_name.at("triRel");
  auto bro1 = g.by_name.at("bro1");
  auto tro1 = g.by_name.at("tro1");
  auto tro2 = g.by_name.at("tro2");
  CHECK_FALSE(am.at(binRel, triRel));
  CHECK_FALSE(am.at(bro1, tro1));
  CHECK(am.at(bro1, tro2));
}

TEST_CASE("every clean fixture passes the full check outright") {
  for (const auto& row : group_rows()) {
    if (row.ok_file.rfind("clean_", 0) != 0) continue;
    CAPTURE(row.ok_file);
    CHECK(check_model(cmvtest::load_fixture(row.ok_file), published_catalog()).empty());
  }
}

TEST_CASE("the starred fixture separates the fragment modes") {
  auto g = cmvtest::load_fixture("star_only.kfm");

  auto full = check_model(g, published_catalog());
  REQUIRE(!full.empty());
  for (const auto& v : full) {
    CHECK(v.axiom_id == "REL-REIFIED-COH.1");
    CHECK(v.tier == Tier::Star);
  }

  CheckOptions opt;
  opt.fragment = FragmentMode::C2;
  CHECK(check_model(g, published_catalog(), opt).empty());
}

TEST_CASE("the paired equality-disjointness fixtures cover each other") {
  // A disjointness constraint over entity types must both name its
  // participants twice over and keep them inside declared subsumptions; the
  // two fixtures each satisfy the half the other violates.
  auto matched = groups_hit(cmvtest::load_fixture("eqd_matched.kfm"));
  CHECK_FALSE(matched.count("EQD-DECL2"));
  CHECK_FALSE(matched.count("EQD-DECL1"));
  CHECK_FALSE(matched.count("EQD-TC"));
  CHECK(matched.count("EQD-HASPART"));

  auto pair = groups_hit(cmvtest::load_fixture("eqd_pair.kfm"));
  CHECK_FALSE(pair.count("EQD-HASPART"));
  CHECK(pair.count("EQD-TC"));
}
