#include "cmv/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cmv {

bool ModelGraph::has_link(LinkPred p, LinkArg a, LinkArg b) const {
  LinkRecord r{p, {a, b, LinkArg{}}};
  return std::binary_search(links.begin(), links.end(), r);
}

bool ModelGraph::has_link(LinkPred p, LinkArg a, LinkArg b, LinkArg c) const {
  LinkRecord r{p, {a, b, c}};
  return std::binary_search(links.begin(), links.end(), r);
}

std::optional<EntityId> GraphBuilder::add_entity(const std::string& name, KindSet kinds) {
  if (g_.by_name.contains(name)) return std::nullopt;
  EntityId id = EntityId(g_.names.size());
  g_.names.push_back(name);
  g_.kinds.push_back(kinds);
  g_.by_name.emplace(name, id);
  return id;
}

std::optional<EntityId> GraphBuilder::find(const std::string& name) const {
  auto it = g_.by_name.find(name);
  if (it == g_.by_name.end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::add_kinds(EntityId e, KindSet kinds) { g_.kinds[e] |= kinds; }

void GraphBuilder::add_link(LinkPred p, std::vector<LinkArg> args) {
  LinkRecord r{p, {}};
  for (size_t i = 0; i < args.size() && i < 3; ++i) r.args[i] = args[i];
  g_.links.push_back(r);
}

void GraphBuilder::add_attr(AttrPred p, EntityId subject, IntegerBound value) {
  AttributeRecord r;
  r.pred = p;
  r.subject = subject;
  r.ivalue = value;
  g_.attrs.push_back(std::move(r));
}

void GraphBuilder::add_attr(AttrPred p, EntityId subject, std::string value) {
  AttributeRecord r;
  r.pred = p;
  r.subject = subject;
  r.svalue = std::move(value);
  g_.attrs.push_back(std::move(r));
}

ModelGraph GraphBuilder::finish(const TaxonomyCatalog& cat) && {
  for (auto& ks : g_.kinds) ks = cat.close_up(ks);
  std::sort(g_.links.begin(), g_.links.end());
  g_.links.erase(std::unique(g_.links.begin(), g_.links.end()), g_.links.end());
  std::sort(g_.attrs.begin(), g_.attrs.end());
  g_.attrs.erase(std::unique(g_.attrs.begin(), g_.attrs.end()), g_.attrs.end());
  return std::move(g_);
}

std::vector<std::pair<EntityId, EntityId>> derive_participants(const ModelGraph& g) {
  std::set<std::pair<EntityId, EntityId>> out;
  for (const auto& l : g.links) {
    if (!l.args[0].is_entity() || !l.args[1].is_entity()) continue;
    EntityId x = l.args[0].entity;
    EntityId y = l.args[1].entity;
    bool structural = l.pred == LinkPred::Sub || l.pred == LinkPred::Super ||
                      l.pred == LinkPred::PartLink || l.pred == LinkPred::WholeLink;
    bool positional = l.pred == LinkPred::First || l.pred == LinkPred::Second;
    if (structural && g.has_kind(x, Kind::Relationship)) out.emplace(x, y);
    if (positional && (g.has_kind(x, Kind::ValueComparisonConstraint) ||
                       g.has_kind(x, Kind::RelationshipConstraint)))
      out.emplace(x, y);
  }
  return {out.begin(), out.end()};
}

CompatMatrix derive_compatible(const ModelGraph& g) {
  size_t n = g.entity_count();
  CompatMatrix cm;
  cm.n = n;
  cm.m.assign(n * n, false);

  auto same_category = [&](EntityId a, EntityId b) {
    auto both = [&](Kind k) { return g.has_kind(a, k) && g.has_kind(b, k); };
    return both(Kind::ValueProperty) || both(Kind::DataType) || both(Kind::ObjectType) ||
           both(Kind::Role) || both(Kind::Relationship);
  };

  std::vector<std::vector<EntityId>> played_types(n);  // role -> entity types played
  std::vector<std::vector<EntityId>> contained(n);     // relationship -> roles
  for (const auto& l : g.links) {
    if (l.pred == LinkPred::RolePlaying && l.args[0].is_entity() && l.args[2].is_entity())
      played_types[l.args[0].entity].push_back(l.args[2].entity);
    if (l.pred == LinkPred::Contains && l.args[0].is_entity() && l.args[1].is_entity())
      contained[l.args[0].entity].push_back(l.args[1].entity);
  }

  for (EntityId a = 0; a < n; ++a)
    for (EntityId b = 0; b < n; ++b) cm.m[size_t(a) * n + b] = same_category(a, b);

  // The conditions on roles and relationships key on the first component, so
  // pairs are removed until none is forced out.
  bool changed = true;
  while (changed) {
    changed = false;
    for (EntityId a = 0; a < n; ++a) {
      for (EntityId b = 0; b < n; ++b) {
        if (!cm.m[size_t(a) * n + b]) continue;
        bool ok = true;
        if (g.has_kind(a, Kind::Role)) {
          bool witness = false;
          for (EntityId w : played_types[a]) {
            for (EntityId t : played_types[b])
              if (cm.at(w, t)) {
                witness = true;
                break;
              }
            if (witness) break;
          }
          ok = ok && witness;
        }
        if (ok && g.has_kind(a, Kind::Relationship)) {
          bool witness = false;
          if (contained[a].size() == contained[b].size()) {
            for (EntityId r : contained[a]) {
              for (EntityId s : contained[b])
                if (cm.at(r, s)) {
                  witness = true;
                  break;
                }
              if (witness) break;
            }
          }
          ok = ok && witness;
        }
        if (!ok) {
          cm.m[size_t(a) * n + b] = false;
          changed = true;
        }
      }
    }
  }
  return cm;
}

size_t max_contains_degree(const ModelGraph& g) {
  std::map<EntityId, size_t> deg;
  std::set<std::pair<EntityId, EntityId>> seen;
  for (const auto& l : g.links) {
    if (l.pred != LinkPred::Contains || !l.args[0].is_entity() || !l.args[1].is_entity())
      continue;
    if (seen.emplace(l.args[0].entity, l.args[1].entity).second)
      ++deg[l.args[0].entity];
  }
  size_t best = 0;
  for (const auto& [e, d] : deg) best = std::max(best, d);
  return best;
}

size_t effective_max_arity(const ModelGraph& g, size_t configured) {
  size_t n = std::max(configured, max_contains_degree(g));
  // The external-uniqueness span matching needs the families to reach the
  // per-constraint role and relationship counts as well.
  std::map<EntityId, std::set<EntityId>> roles, rels;
  for (const auto& l : g.links) {
    if (l.pred != LinkPred::ExtUnique) continue;
    if (!l.args[0].is_entity()) continue;
    if (l.args[1].is_entity()) roles[l.args[0].entity].insert(l.args[1].entity);
    if (l.args[2].is_entity()) rels[l.args[0].entity].insert(l.args[2].entity);
  }
  for (const auto& [e, s] : roles) n = std::max(n, s.size());
  for (const auto& [e, s] : rels) n = std::max(n, s.size());
  return n;
}

}  // namespace cmv
