#include <doctest.h>

#include <map>
#include <set>

#include "cmv/catalog.hpp"
#include "cmv/taxonomy.hpp"
#include "test_util.hpp"

using namespace cmv;

namespace {

const std::vector<Axiom>& axioms() {
  static const std::vector<Axiom> a = axiom_catalog(published_catalog());
  return a;
}

}  // namespace

TEST_CASE("catalog size and split are stable") {
  size_t tax_ent = 0, tax_con = 0, star = 0;
  for (const auto& ax : axioms()) {
    if (ax.group == "TAX-ENT") ++tax_ent;
    if (ax.group == "TAX-CON") ++tax_con;
    if (ax.tier == Tier::Star) ++star;
  }
  CHECK(axioms().size() == 330);
  CHECK(tax_ent == 51);
  CHECK(tax_con == 76);
  CHECK(star == 72);
}

TEST_CASE("ids are unique and follow their group") {
  std::set<std::string> ids;
  for (const auto& ax : axioms()) {
    CHECK_MESSAGE(ids.insert(ax.id).second, "duplicate id " << ax.id);
    CHECK_MESSAGE(ax.id.rfind(ax.group + ".", 0) == 0,
                  ax.id << " does not start with " << ax.group << ".");
    CHECK_FALSE(ax.source.empty());
    CHECK(ax.formula != nullptr);
  }
}

TEST_CASE("natural order compares digit runs numerically") {
  CHECK(natural_less("GROUP.2", "GROUP.10"));
  CHECK_FALSE(natural_less("GROUP.10", "GROUP.2"));
  CHECK(natural_less("GROUP.9", "GROUP.10"));
  CHECK(natural_less("A.1", "B.1"));
  CHECK_FALSE(natural_less("A.1", "A.1"));
  CHECK(natural_less("UNIQ-SPAN.n2", "UNIQ-SPAN.n10"));
}

TEST_CASE("every axiom group is listed and every listed group is populated") {
  auto groups = catalog_groups();
  CHECK(groups.size() == 72);

  std::set<std::string> listed(groups.begin(), groups.end());
  CHECK(listed.size() == groups.size());

  std::set<std::string> used;
  for (const auto& ax : axioms()) {
    used.insert(ax.group);
    CHECK_MESSAGE(listed.count(ax.group) == 1, ax.id << " has unlisted group");
  }
  CHECK(used == listed);

  // Catalog order follows the group listing.
  std::map<std::string, size_t> rank;
  for (size_t i = 0; i < groups.size(); ++i) rank[groups[i]] = i;
  for (size_t i = 1; i < axioms().size(); ++i)
    CHECK(rank[axioms()[i - 1].group] <= rank[axioms()[i].group]);
}

TEST_CASE("every axiom cites a listed bullet and every bullet is cited") {
  auto slugs = bullet_slugs();
  CHECK(slugs.size() == 102);

  std::set<std::string> listed(slugs.begin(), slugs.end());
  CHECK(listed.size() == slugs.size());

  std::set<std::string> cited;
  for (const auto& ax : axioms()) {
    CHECK_FALSE(ax.bullet.empty());
    cited.insert(ax.bullet);
    CHECK_MESSAGE(listed.count(ax.bullet) == 1, ax.id << " cites unlisted " << ax.bullet);
  }
  CHECK(cited == listed);
}

TEST_CASE("tier matches the syntactic fragment audit") {
  for (const auto& ax : axioms()) {
    CAPTURE(ax.id);
    CHECK((ax.tier == Tier::C2) == audit_c2(ax.formula));
  }
}

TEST_CASE("raising the arity bound only appends wider family members") {
  auto wide = axiom_catalog(published_catalog(), 12);
  CHECK(wide.size() > axioms().size());

  std::set<std::string> base_ids;
  for (const auto& ax : axioms()) base_ids.insert(ax.id);
  size_t extra = 0;
  for (const auto& ax : wide)
    if (!base_ids.count(ax.id)) {
      ++extra;
      CHECK_MESSAGE(ax.id.find(".n1") != std::string::npos,
                    ax.id << " should be a per-arity instance for n in {11, 12}");
    }
  CHECK(wide.size() == axioms().size() + extra);
}

TEST_CASE("manifest matches the checked-in table") {
  auto tsv = manifest_tsv(axioms());

  // Header plus one row per axiom.
  size_t lines = 0;
  for (char c : tsv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == axioms().size() + 1);

  for (const auto& ax : axioms())
    CHECK_MESSAGE(tsv.find(ax.id + "\t") != std::string::npos, ax.id << " missing");

  cmvtest::check_golden(std::string(CMV_DOCS_DIR) + "/axiom-manifest.tsv", tsv);
}
