#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmv/kinds.hpp"
#include "cmv/taxonomy.hpp"

namespace cmv {

using EntityId = uint32_t;

// A link argument is a declared entity or one of the six comparison nominals.
struct LinkArg {
  enum class Tag : uint8_t { Entity, Nominal } tag = Tag::Entity;
  EntityId entity = 0;
  Nominal nominal = Nominal::Less;

  static LinkArg of(EntityId e) { return {Tag::Entity, e, Nominal::Less}; }
  static LinkArg of(Nominal n) { return {Tag::Nominal, 0, n}; }
  bool is_entity() const { return tag == Tag::Entity; }

  friend auto operator<=>(const LinkArg&, const LinkArg&) = default;
};

struct LinkRecord {
  LinkPred pred;
  std::array<LinkArg, 3> args{};  // only the first arity(pred) are meaningful

  uint8_t arity() const { return cmv::arity(pred); }
  friend auto operator<=>(const LinkRecord&, const LinkRecord&) = default;
};

// Attribute values are typed by predicate: integer-with-many for the
// cardinality pair, literal strings for the value pair.
struct AttributeRecord {
  AttrPred pred;
  EntityId subject = 0;
  IntegerBound ivalue{};
  std::string svalue;

  bool is_integer() const { return attr_takes_integer(pred); }
  friend auto operator<=>(const AttributeRecord&, const AttributeRecord&) = default;
};

struct ModelGraph {
  std::vector<std::string> names;  // index = EntityId
  std::vector<KindSet> kinds;     // closed upward at build time
  std::vector<LinkRecord> links;  // sorted, duplicates collapsed
  std::vector<AttributeRecord> attrs;  // sorted, duplicates collapsed
  std::unordered_map<std::string, EntityId> by_name;

  size_t entity_count() const { return names.size(); }
  bool has_kind(EntityId e, Kind k) const { return kinds[e].test(size_t(k)); }
  const std::string& name(EntityId e) const { return names[e]; }

  bool has_link(LinkPred p, LinkArg a, LinkArg b) const;
  bool has_link(LinkPred p, LinkArg a, LinkArg b, LinkArg c) const;

  bool operator==(const ModelGraph& o) const {
    return names == o.names && kinds == o.kinds && links == o.links && attrs == o.attrs;
  }
};

class GraphBuilder {
 public:
  // Returns the id, or nullopt if the name is already declared.
  std::optional<EntityId> add_entity(const std::string& name, KindSet kinds);
  std::optional<EntityId> find(const std::string& name) const;
  // Extends the kind set of an existing entity.
  void add_kinds(EntityId e, KindSet kinds);
  void add_link(LinkPred p, std::vector<LinkArg> args);
  void add_attr(AttrPred p, EntityId subject, IntegerBound value);
  void add_attr(AttrPred p, EntityId subject, std::string value);

  // Closes kind sets upward, sorts and deduplicates links and attributes.
  ModelGraph finish(const TaxonomyCatalog& cat) &&;

 private:
  ModelGraph g_;
};

// Participation and compatibility are derived, never stored.
//
// Participant(x, y) holds when x is Relationship-kinded and links to y via
// Sub, Super, PartLink or WholeLink, or when x is kinded as a value
// comparison or relationship constraint and links to y via First or Second.
std::vector<std::pair<EntityId, EntityId>> derive_participants(const ModelGraph& g);

// Compatible is the greatest relation S such that:
//  - (a, b) in S only if a and b share a typing clause: both value
//    properties, both data types, both object types, both roles, or both
//    relationships;
//  - if a is a role, there are RolePlaying(a, _, w) and RolePlaying(b, _, t)
//    with (w, t) in S;
//  - if a is a relationship, a and b contain equally many roles and some
//    contained pair (r, s) is in S.
struct CompatMatrix {
  size_t n = 0;
  std::vector<bool> m;
  bool at(EntityId a, EntityId b) const { return m[size_t(a) * n + b]; }
};
CompatMatrix derive_compatible(const ModelGraph& g);

// Largest Contains fan-out in the graph; the per-arity axiom families are
// instantiated up to max(this, the configured bound).
size_t max_contains_degree(const ModelGraph& g);
size_t effective_max_arity(const ModelGraph& g, size_t configured);

}  // namespace cmv
