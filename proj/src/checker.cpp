#include "cmv/checker.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <span>
#include <unordered_map>

namespace cmv {

bool violation_less(const Violation& a, const Violation& b) {
  if (a.axiom_id != b.axiom_id) return natural_less(a.axiom_id, b.axiom_id);
  return a.witness < b.witness;
}

namespace {

using W = std::vector<std::pair<std::string, std::string>>;
using K = Kind;
using P = LinkPred;

struct Ck {
  const ModelGraph& g;
  const TaxonomyCatalog& cat;
  const CheckOptions& opt;
  std::vector<std::pair<EntityId, EntityId>> parts;
  CompatMatrix compat;
  std::unordered_map<std::string, const Axiom*> byid;
  size_t n_eff = 0;
  std::vector<Violation> out;

  // ---- plumbing ----

  void emit(const std::string& id, W w) {
    auto it = byid.find(id);
    assert(it != byid.end() && "checker emitted an id the catalog does not know");
    const Axiom* ax = it->second;
    if (opt.fragment == FragmentMode::C2 && ax->tier == Tier::Star) return;
    out.push_back({id, ax->tier, std::move(w), ax->source});
  }

  std::string nm(EntityId e) const { return g.name(e); }
  std::string nm(const LinkArg& a) const {
    return a.is_entity() ? g.name(a.entity) : std::string(to_string(a.nominal));
  }

  bool kind(EntityId e, K k) const { return g.has_kind(e, k); }
  bool akind(const LinkArg& a, K k) const {
    return a.is_entity() && g.has_kind(a.entity, k);
  }

  std::vector<EntityId> of_kind(K k) const {
    std::vector<EntityId> v;
    for (EntityId e = 0; e < g.entity_count(); ++e)
      if (kind(e, k)) v.push_back(e);
    return v;
  }

  std::span<const LinkRecord> links(P p) const {
    auto lo = std::lower_bound(g.links.begin(), g.links.end(), p,
                               [](const LinkRecord& r, P q) { return r.pred < q; });
    auto hi = std::upper_bound(lo, g.links.end(), p,
                               [](P q, const LinkRecord& r) { return q < r.pred; });
    return {lo, hi};
  }

  bool part(const LinkArg& a, const LinkArg& b) const {
    if (!a.is_entity() || !b.is_entity()) return false;
    return std::binary_search(parts.begin(), parts.end(),
                              std::pair{a.entity, b.entity});
  }
  bool comp2(const LinkArg& a, const LinkArg& b) const {
    if (!a.is_entity() || !b.is_entity()) return false;
    return compat.at(a.entity, b.entity);
  }

  std::vector<IntegerBound> int_values(AttrPred p, EntityId e) const {
    std::vector<IntegerBound> v;
    for (const auto& a : g.attrs)
      if (a.pred == p && a.subject == e && a.is_integer()) v.push_back(a.ivalue);
    return v;
  }
  std::vector<std::string> str_values(AttrPred p, EntityId e) const {
    std::vector<std::string> v;
    for (const auto& a : g.attrs)
      if (a.pred == p && a.subject == e && !a.is_integer()) v.push_back(a.svalue);
    return v;
  }
  bool any_attr(AttrPred p, EntityId e) const {
    for (const auto& a : g.attrs)
      if (a.pred == p && a.subject == e) return true;
    return false;
  }
  bool has_int(AttrPred p, const LinkArg& a, uint64_t v) const {
    if (!a.is_entity()) return false;
    for (const auto& r : g.attrs)
      if (r.pred == p && r.subject == a.entity && r.ivalue == IntegerBound::of(v))
        return true;
    return false;
  }

  // Count links with one argument fixed, optionally filtering another
  // argument by kind.
  size_t count_with(P p, int fixpos, const LinkArg& e) const {
    size_t c = 0;
    for (const auto& l : links(p))
      if (l.args[fixpos] == e) ++c;
    return c;
  }

  void typing2(const std::string& id, P p, auto ok) {
    for (const auto& l : links(p))
      if (!ok(l.args[0], l.args[1]))
        emit(id, {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
  }
  void typing3(const std::string& id, P p, auto ok) {
    for (const auto& l : links(p))
      if (!ok(l.args[0], l.args[1], l.args[2]))
        emit(id, {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}, {"z", nm(l.args[2])}});
  }

  // ---- the axiom groups, in catalog order ----

  void taxonomy() {
    for (const auto& s : tax_axiom_specs(cat)) {
      switch (s.type) {
        case TaxAxiomType::Isa:
          // Kind sets are closed upward at build time, so these only fire if
          // the closure ever regresses.
          for (EntityId e = 0; e < g.entity_count(); ++e)
            if (kind(e, s.a) && !kind(e, s.b)) emit(s.id, {{"x", nm(e)}});
          break;
        case TaxAxiomType::Disjoint:
          for (EntityId e = 0; e < g.entity_count(); ++e)
            if (kind(e, s.a) && kind(e, s.b)) emit(s.id, {{"x", nm(e)}});
          break;
        case TaxAxiomType::Complete:
          for (EntityId e = 0; e < g.entity_count(); ++e) {
            if (!kind(e, s.group->parent)) continue;
            bool any = false;
            for (K c : s.group->children) any = any || kind(e, c);
            if (!any) emit(s.id, {{"x", nm(e)}});
          }
          break;
      }
    }
  }

  void rel_contains() {
    typing2("REL-CONTAINS.1", P::Contains, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::Relationship) && akind(b, K::Role);
    });
    for (EntityId e : of_kind(K::Relationship))
      if (count_with(P::Contains, 0, LinkArg::of(e)) < 2)
        emit("REL-CONTAINS.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Role))
      if (count_with(P::Contains, 1, LinkArg::of(e)) != 1)
        emit("REL-CONTAINS.3", {{"x", nm(e)}});
  }

  void rel_roleplaying() {
    typing3("REL-ROLEPLAYING.1", P::RolePlaying,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::Role) && akind(b, K::CardinalityConstraint) &&
                     akind(c, K::EntityType);
            });
    for (EntityId e : of_kind(K::Role))
      if (count_with(P::RolePlaying, 0, LinkArg::of(e)) < 1)
        emit("REL-ROLEPLAYING.2", {{"x", nm(e)}});
  }

  void card_attr() {
    // .1 and .2 hold by construction: cardinality attributes are stored as
    // integers, so the sort atoms cannot fail.
    for (EntityId e : of_kind(K::CardinalityConstraint)) {
      if (int_values(AttrPred::MinimumCardinality, e).size() > 1)
        emit("CARD-ATTR.3", {{"x", nm(e)}});
      if (int_values(AttrPred::MaximumCardinality, e).size() > 1)
        emit("CARD-ATTR.4", {{"x", nm(e)}});
    }
  }

  void rel_reified() {
    typing2("REL-REIFIED.1", P::ReifiedAs, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::Relationship) && akind(b, K::NestedObjectType);
    });
    for (EntityId e : of_kind(K::NestedObjectType))
      if (count_with(P::ReifiedAs, 1, LinkArg::of(e)) != 1)
        emit("REL-REIFIED.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Relationship))
      if (count_with(P::ReifiedAs, 0, LinkArg::of(e)) > 1)
        emit("REL-REIFIED.3", {{"x", nm(e)}});
  }

  void rel_reified_coh() {
    for (const auto& r : links(P::ReifiedAs)) {
      std::set<LinkArg> roles_of_rel, roles_of_nested;
      for (const auto& l : links(P::Contains))
        if (l.args[0] == r.args[0]) roles_of_rel.insert(l.args[1]);
      for (const auto& l : links(P::RolePlaying))
        if (l.args[2] == r.args[1]) roles_of_nested.insert(l.args[0]);
      if (roles_of_rel != roles_of_nested)
        emit("REL-REIFIED-COH.1", {{"x", nm(r.args[0])}, {"y", nm(r.args[1])}});
    }
  }

  void sub_participant() {
    for (auto [a, b] : parts) {
      bool ok = (kind(a, K::Relationship) && kind(b, K::Entity)) ||
                (kind(a, K::ValueComparisonConstraint) && kind(b, K::Role)) ||
                (kind(a, K::RelationshipConstraint) && kind(b, K::Role));
      if (!ok) emit("SUB-PARTICIPANT.1", {{"x", nm(a)}, {"y", nm(b)}});
    }
    for (EntityId e = 0; e < g.entity_count(); ++e) {
      if (!kind(e, K::Subsumption) && !kind(e, K::PartWhole)) continue;
      size_t c = 0;
      for (auto [a, b] : parts)
        if (a == e) ++c;
      if (c != 2) emit("SUB-PARTICIPANT.2", {{"x", nm(e)}});
    }
    std::set<std::pair<LinkArg, LinkArg>> bad;
    for (auto [a, b] : parts) {
      if (!kind(a, K::Relationship)) continue;
      bool linked = g.has_link(P::Sub, LinkArg::of(a), LinkArg::of(b)) ||
                    g.has_link(P::Super, LinkArg::of(a), LinkArg::of(b)) ||
                    g.has_link(P::PartLink, LinkArg::of(a), LinkArg::of(b)) ||
                    g.has_link(P::WholeLink, LinkArg::of(a), LinkArg::of(b));
      if (!linked) bad.insert({LinkArg::of(a), LinkArg::of(b)});
    }
    for (P p : {P::Sub, P::Super, P::PartLink, P::WholeLink})
      for (const auto& l : links(p))
        if (!(part(l.args[0], l.args[1]) && akind(l.args[0], K::Relationship)))
          bad.insert({l.args[0], l.args[1]});
    for (const auto& [a, b] : bad)
      emit("SUB-PARTICIPANT.3", {{"x", nm(a)}, {"y", nm(b)}});
  }

  bool sub_target_ok(const LinkArg& y) const {
    return akind(y, K::Entity) && !akind(y, K::QualifiedRelationship) &&
           !akind(y, K::AttributiveProperty) && !akind(y, K::Subsumption) &&
           !akind(y, K::Qualifier) && !akind(y, K::Constraint);
  }

  void sub_sub_super() {
    typing2("SUB-SUB.1", P::Sub, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::Subsumption) && sub_target_ok(b);
    });
    for (EntityId e : of_kind(K::Subsumption))
      if (count_with(P::Sub, 0, LinkArg::of(e)) != 1) emit("SUB-SUB.2", {{"x", nm(e)}});
    typing2("SUB-SUPER.1", P::Super, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::Subsumption) && sub_target_ok(b);
    });
    for (EntityId e : of_kind(K::Subsumption))
      if (count_with(P::Super, 0, LinkArg::of(e)) != 1)
        emit("SUB-SUPER.2", {{"x", nm(e)}});
  }

  void sub_phi() {
    auto phi_at = [&](size_t fam, const LinkArg& v) {
      switch (fam) {
        case 0: return akind(v, K::SharedAggregate);
        case 1: return akind(v, K::CompositeAggregate);
        case 2: return akind(v, K::Role);
        case 3: return akind(v, K::DataType);
        case 4: return akind(v, K::Relationship) && !akind(v, K::PartWhole);
        default: return akind(v, K::ObjectType);
      }
    };
    for (size_t fam = 0; fam < 6; ++fam) {
      for (int dir = 0; dir < 2; ++dir) {
        P here = dir == 0 ? P::Sub : P::Super;
        P there = dir == 0 ? P::Super : P::Sub;
        std::string id = "SUB-PHI." + std::to_string(fam * 2 + dir + 1);
        for (const auto& l : links(here)) {
          if (!akind(l.args[0], K::Subsumption) || !phi_at(fam, l.args[1])) continue;
          bool found = false;
          for (const auto& m : links(there))
            if (m.args[0] == l.args[0] && phi_at(fam, m.args[1])) found = true;
          if (!found) emit(id, {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
        }
      }
    }
  }

  void agg_part() {
    // AGG-PART.1 (parts are part-whole relationships) cannot fire on closed
    // kind sets; scan anyway in case the closure regresses.
    for (EntityId e : of_kind(K::Part))
      if (!kind(e, K::PartWhole)) emit("AGG-PART.1", {{"x", nm(e)}});
    typing2("AGG-PART.2", P::PartLink, [&](const LinkArg& a, const LinkArg& b) {
      return (akind(a, K::Part) && akind(b, K::AttributiveProperty)) ||
             (akind(a, K::SharedAggregate) && akind(b, K::DataType)) ||
             (akind(a, K::SharedAggregate) && akind(b, K::ObjectType));
    });
    for (EntityId e : of_kind(K::Part)) {
      size_t c = 0;
      for (const auto& l : links(P::PartLink))
        if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::AttributiveProperty)) ++c;
      if (c != 1) emit("AGG-PART.3", {{"x", nm(e)}});
    }
  }

  void agg_whole() {
    typing2("AGG-WHOLE.1", P::WholeLink, [&](const LinkArg& a, const LinkArg& b) {
      return (akind(a, K::Part) && akind(b, K::CompositeAttribute)) ||
             (akind(a, K::SharedAggregate) && akind(b, K::DataType)) ||
             (akind(a, K::SharedAggregate) && akind(b, K::ObjectType));
    });
    for (EntityId e : of_kind(K::Part)) {
      size_t c = 0;
      for (const auto& l : links(P::WholeLink))
        if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::CompositeAttribute)) ++c;
      if (c != 1) emit("AGG-WHOLE.2", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::CompositeAttribute)) {
      size_t c = 0;
      for (const auto& l : links(P::WholeLink))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::Part)) ++c;
      if (c < 2) emit("AGG-WHOLE.3", {{"x", nm(e)}});
    }
  }

  void agg_shared() {
    auto dt_or_ot = [&](const LinkArg& v) {
      return akind(v, K::DataType) || akind(v, K::ObjectType);
    };
    for (EntityId e : of_kind(K::SharedAggregate)) {
      LinkArg ea = LinkArg::of(e);
      size_t typed_parts = 0, typed_wholes = 0;
      for (const auto& l : links(P::PartLink))
        if (l.args[0] == ea && dt_or_ot(l.args[1])) ++typed_parts;
      for (const auto& l : links(P::WholeLink))
        if (l.args[0] == ea && dt_or_ot(l.args[1])) ++typed_wholes;
      if (typed_parts > 1) emit("AGG-SHARED-XOR.1", {{"x", nm(e)}});
      if (count_with(P::PartLink, 0, ea) < 1 || count_with(P::WholeLink, 0, ea) < 1)
        emit("AGG-SHARED-XOR.2", {{"x", nm(e)}});
      if (typed_wholes > 1) emit("AGG-SHARED-XOR.3", {{"x", nm(e)}});
    }
    int id = 0;
    for (K fam : {K::DataType, K::ObjectType}) {
      for (int dir = 0; dir < 2; ++dir) {
        ++id;
        P here = dir == 0 ? P::PartLink : P::WholeLink;
        P there = dir == 0 ? P::WholeLink : P::PartLink;
        for (const auto& l : links(here)) {
          if (!akind(l.args[0], K::SharedAggregate) || !akind(l.args[1], fam)) continue;
          bool found = false;
          for (const auto& m : links(there))
            if (m.args[0] == l.args[0] && akind(m.args[1], fam)) found = true;
          if (!found)
            emit("AGG-SHARED-AND." + std::to_string(id),
                 {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
        }
      }
    }
  }

  void pw_irr_asym() {
    for (const auto& lp : links(P::PartLink)) {
      if (!akind(lp.args[0], K::PartWhole)) continue;
      for (const auto& lw : links(P::WholeLink)) {
        if (lw.args[0] != lp.args[0]) continue;
        const LinkArg &x = lp.args[0], &y = lp.args[1], &z = lw.args[1];
        if (y == z) emit("PW-IRR-ASYM.1", {{"x", nm(x)}, {"y", nm(y)}, {"z", nm(z)}});
        bool reversed = false;
        for (EntityId v : of_kind(K::PartWhole))
          if (g.has_link(P::PartLink, LinkArg::of(v), z) &&
              g.has_link(P::WholeLink, LinkArg::of(v), y))
            reversed = true;
        if (reversed)
          emit("PW-IRR-ASYM.2", {{"x", nm(x)}, {"y", nm(y)}, {"z", nm(z)}});
      }
    }
  }

  void agg_composite() {
    typing2("AGG-COMPOSITE-PART.1", P::PartLink,
            [&](const LinkArg& a, const LinkArg& b) {
              return !akind(a, K::CompositeAggregate) || akind(b, K::ObjectType);
            });
    for (EntityId e : of_kind(K::CompositeAggregate))
      if (count_with(P::PartLink, 0, LinkArg::of(e)) != 1)
        emit("AGG-COMPOSITE-PART.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::ObjectType)) {
      size_t c = 0;
      for (const auto& l : links(P::PartLink))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::CompositeAggregate)) ++c;
      if (c > 1) emit("AGG-COMPOSITE-PART.3", {{"x", nm(e)}});
    }
    typing2("AGG-COMPOSITE-WHOLE.1", P::WholeLink,
            [&](const LinkArg& a, const LinkArg& b) {
              return !akind(a, K::CompositeAggregate) || akind(b, K::ObjectType);
            });
    for (EntityId e : of_kind(K::CompositeAggregate))
      if (count_with(P::WholeLink, 0, LinkArg::of(e)) != 1)
        emit("AGG-COMPOSITE-WHOLE.2", {{"x", nm(e)}});
  }

  void compatibility() {
    // The derived relation satisfies its own defining axioms by
    // construction; these loops exist to catch a derivation regression.
    size_t n = g.entity_count();
    for (EntityId a = 0; a < n; ++a) {
      for (EntityId b = 0; b < n; ++b) {
        if (!compat.at(a, b)) continue;
        auto both = [&](K k) { return kind(a, k) && kind(b, k); };
        if (!(both(K::ValueProperty) || both(K::DataType) || both(K::ObjectType) ||
              both(K::Role) || both(K::Relationship)))
          emit("COMPAT-DEF.1", {{"x", nm(a)}, {"y", nm(b)}});
        if (kind(a, K::Role)) {
          bool found = false;
          for (const auto& l : links(P::RolePlaying)) {
            if (l.args[0] != LinkArg::of(a)) continue;
            for (const auto& m : links(P::RolePlaying))
              if (m.args[0] == LinkArg::of(b) && comp2(l.args[2], m.args[2])) found = true;
          }
          if (!found) emit("COMPAT-ROLE.1", {{"x", nm(a)}, {"y", nm(b)}});
        }
        if (kind(a, K::Relationship)) {
          size_t ca = count_with(P::Contains, 0, LinkArg::of(a));
          size_t cb = count_with(P::Contains, 0, LinkArg::of(b));
          bool pair_found = false;
          for (const auto& l : links(P::Contains)) {
            if (l.args[0] != LinkArg::of(a)) continue;
            for (const auto& m : links(P::Contains))
              if (m.args[0] == LinkArg::of(b) && comp2(l.args[1], m.args[1]))
                pair_found = true;
          }
          for (size_t arity = 2; arity <= n_eff; ++arity)
            if ((ca == arity) != (cb == arity) || !pair_found)
              emit("COMPAT-REL.n" + std::to_string(arity),
                   {{"x", nm(a)}, {"y", nm(b)}});
        }
      }
    }
    for (const auto& ls : links(P::Sub)) {
      if (!akind(ls.args[0], K::Subsumption)) continue;
      for (const auto& lp : links(P::Super)) {
        if (lp.args[0] != ls.args[0]) continue;
        if (!comp2(ls.args[1], lp.args[1]))
          emit("COMPAT-SUBS.1",
               {{"x", nm(ls.args[0])}, {"y", nm(ls.args[1])}, {"z", nm(lp.args[1])}});
      }
    }
  }

  void att_declaredon() {
    typing2("ATT-DECLAREDON.1", P::DeclaredOn, [&](const LinkArg& a, const LinkArg& b) {
      return (akind(a, K::Qualifier) && akind(b, K::Role)) ||
             (akind(a, K::Qualifier) && akind(b, K::QualifiedRelationship)) ||
             (akind(a, K::MandatoryConstraint) && akind(b, K::Role)) ||
             (akind(a, K::InternalUniquenessConstraint) && akind(b, K::Role)) ||
             (akind(a, K::ExternalIdentification) && akind(b, K::Relationship)) ||
             (akind(a, K::IdentificationConstraint) && akind(b, K::ValueProperty)) ||
             (akind(a, K::IdentificationConstraint) &&
              akind(b, K::AttributiveProperty)) ||
             (akind(a, K::RelationshipEquality) && akind(b, K::Relationship)) ||
             (akind(a, K::DisjointRelationships) && akind(b, K::Relationship)) ||
             (akind(a, K::RoleEquality) && akind(b, K::Role)) ||
             (akind(a, K::DisjointRoles) && akind(b, K::Role)) ||
             (akind(a, K::DisjointEntities) && akind(b, K::Subsumption)) ||
             (akind(a, K::ObjectTypeEquality) && akind(b, K::ObjectType)) ||
             (akind(a, K::CompletenessConstraint) && akind(b, K::Subsumption));
    });
    for (EntityId e : of_kind(K::Qualifier)) {
      size_t c = 0;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[0] == LinkArg::of(e) &&
            (akind(l.args[1], K::Role) || akind(l.args[1], K::QualifiedRelationship)))
          ++c;
      if (c != 1) emit("ATT-DECLAREDON.2", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::Role)) {
      size_t c = 0;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::Qualifier)) ++c;
      if (c > 1) emit("ATT-DECLAREDON.3", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::QualifiedRelationship)) {
      size_t c = 0;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::Qualifier)) ++c;
      if (c < 1 || c > 2) emit("ATT-DECLAREDON.4", {{"x", nm(e)}});
    }
    int id = 0;
    for (K fam : {K::Role, K::QualifiedRelationship}) {
      ++id;
      for (const auto& l : links(P::DeclaredOn)) {
        if (!akind(l.args[0], K::Qualifier) || !akind(l.args[1], fam)) continue;
        for (const auto& m : links(P::DeclaredOn))
          if (m.args[0] == l.args[0] && !akind(m.args[1], fam))
            emit("ATT-DECLHOMOG." + std::to_string(id),
                 {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}, {"z", nm(m.args[1])}});
      }
    }
  }

  void att_structure() {
    typing2("ATT-HASCOMPONENT.1", P::HasComponent,
            [&](const LinkArg& a, const LinkArg& b) {
              return akind(a, K::Qualifier) &&
                     (akind(b, K::DimensionalAttribute) || akind(b, K::Attribute));
            });
    for (EntityId e : of_kind(K::Qualifier))
      if (count_with(P::HasComponent, 0, LinkArg::of(e)) < 1)
        emit("ATT-HASCOMPONENT.2", {{"x", nm(e)}});
    typing2("ATT-DOMAIN.1", P::DomainLink, [&](const LinkArg& a, const LinkArg& b) {
      return (akind(a, K::AttributiveProperty) && akind(b, K::Relationship)) ||
             (akind(a, K::AttributiveProperty) && akind(b, K::ObjectType)) ||
             (akind(a, K::MappedTo) && akind(b, K::ValueType)) ||
             (akind(a, K::ValueProperty) && akind(b, K::ObjectType));
    });
    typing2("ATT-RANGE.1", P::RangeLink, [&](const LinkArg& a, const LinkArg& b) {
      return (akind(a, K::AttributiveProperty) && akind(b, K::DataType)) ||
             (akind(a, K::MappedTo) && akind(b, K::DataType));
    });
    for (EntityId e : of_kind(K::AttributiveProperty)) {
      size_t c = 0;
      for (const auto& l : links(P::RangeLink))
        if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::DataType)) ++c;
      if (c != 1) emit("ATT-RANGE.2", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::ValueProperty)) {
      size_t c = 0;
      for (const auto& l : links(P::DomainLink))
        if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::ObjectType)) ++c;
      if (c < 1) emit("ATT-VALUEPROP.1", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::MappedTo)) {
      size_t c = 0;
      for (const auto& l : links(P::RangeLink))
        if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::DataType)) ++c;
      if (c != 1) emit("ATT-MAPPEDTO.1", {{"x", nm(e)}});
    }
    typing3("ATT-DIMATTR.1", P::DimensionalAttribution,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::Dimension) && akind(b, K::DataType) &&
                     (akind(c, K::ObjectType) || akind(c, K::Relationship));
            });
    typing3("ATT-DIMVT.1", P::DimensionalValueTyping,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::Dimension) && akind(b, K::DataType) &&
                     akind(c, K::DimensionalValueType);
            });
    for (EntityId e : of_kind(K::DimensionalValueType))
      if (count_with(P::DimensionalValueTyping, 2, LinkArg::of(e)) != 1)
        emit("ATT-DIMVT.2", {{"x", nm(e)}});
  }

  size_t declared_roles(EntityId e) const {
    size_t c = 0;
    for (const auto& l : links(P::DeclaredOn))
      if (l.args[0] == LinkArg::of(e) && akind(l.args[1], K::Role)) ++c;
    return c;
  }

  void mandatory() {
    for (EntityId e : of_kind(K::MandatoryConstraint))
      if (declared_roles(e) < 1) emit("MAND-MIN.1", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::DisjunctiveMandatory))
      if (declared_roles(e) < 2) emit("MAND-DISJ.1", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Mandatory))
      if (declared_roles(e) != 1) emit("MAND-SINGLE.1", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Role)) {
      size_t c = 0;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::Mandatory)) ++c;
      if (c > 1) emit("MAND-SINGLE.2", {{"x", nm(e)}});
    }
    for (EntityId x : of_kind(K::MandatoryConstraint)) {
      std::vector<LinkArg> roles;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[0] == LinkArg::of(x) && akind(l.args[1], K::Role))
          roles.push_back(l.args[1]);
      for (const auto& y : roles) {
        for (const auto& z : roles) {
          if (y == z) continue;
          for (const auto& lw : links(P::Contains)) {
            if (lw.args[1] != y || !akind(lw.args[0], K::Relationship)) continue;
            for (const auto& lv : links(P::Contains)) {
              if (lv.args[1] != z || !akind(lv.args[0], K::Relationship)) continue;
              if (lw.args[0] == lv.args[0])
                emit("MAND-DIFFREL.1", {{"x", nm(x)},
                                        {"y", nm(y)},
                                        {"z", nm(z)},
                                        {"v", nm(lv.args[0])},
                                        {"w", nm(lw.args[0])}});
            }
          }
        }
      }
    }
  }

  void uniqueness() {
    for (EntityId e : of_kind(K::InternalUniquenessConstraint))
      if (declared_roles(e) < 1) emit("UNIQ-INT.1", {{"x", nm(e)}});
    typing3("UNIQ-EXT.1", P::ExtUnique,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::ExternalUniquenessConstraint) && akind(b, K::Role) &&
                     akind(c, K::Relationship) && g.has_link(P::Contains, c, b);
            });
    for (EntityId e : of_kind(K::ExternalUniquenessConstraint))
      if (count_with(P::ExtUnique, 0, LinkArg::of(e)) != 1)
        emit("UNIQ-EXT.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Role)) {
      size_t c = count_with(P::ExtUnique, 1, LinkArg::of(e));
      if (c == 1) emit("UNIQ-EXT.3", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::Relationship)) {
      size_t c = count_with(P::ExtUnique, 2, LinkArg::of(e));
      if (c == 1) emit("UNIQ-EXT.4", {{"x", nm(e)}});
    }
    for (EntityId x : of_kind(K::InternalUniquenessConstraint)) {
      size_t span = count_with(P::DeclaredOn, 0, LinkArg::of(x));
      for (const auto& l : links(P::DeclaredOn)) {
        if (l.args[0] != LinkArg::of(x) || !akind(l.args[1], K::Role)) continue;
        for (const auto& m : links(P::Contains)) {
          if (m.args[1] != l.args[1] || !akind(m.args[0], K::Relationship)) continue;
          size_t width = count_with(P::Contains, 0, m.args[0]);
          if (width >= 1 && width <= n_eff && span > width)
            emit("UNIQ-SPAN.n" + std::to_string(width),
                 {{"x", nm(x)}, {"y", nm(l.args[1])}, {"z", nm(m.args[0])}});
        }
      }
    }
    for (EntityId x : of_kind(K::ExternalUniquenessConstraint)) {
      std::set<LinkArg> roles, rels;
      for (const auto& l : links(P::ExtUnique)) {
        if (l.args[0] != LinkArg::of(x)) continue;
        roles.insert(l.args[1]);
        rels.insert(l.args[2]);
      }
      for (size_t n = 1; n <= n_eff; ++n)
        if ((roles.size() == n) != (rels.size() == n))
          emit("UNIQ-EXTMATCH.n" + std::to_string(n), {{"x", nm(x)}});
    }
  }

  void identification() {
    typing2("ID-PARTIAL.1", P::PartiallyIdentifies,
            [&](const LinkArg& a, const LinkArg& b) {
              return akind(a, K::QualifiedIdentification) &&
                     akind(b, K::QualifiedRelationship);
            });
    for (EntityId e : of_kind(K::QualifiedIdentification))
      if (count_with(P::PartiallyIdentifies, 0, LinkArg::of(e)) != 1)
        emit("ID-PARTIAL.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::ExternalIdentification))
      if (count_with(P::DeclaredOn, 0, LinkArg::of(e)) < 1)
        emit("ID-EXTDECL.1", {{"x", nm(e)}});
    typing2("ID-IDENTIFIES.1", P::Identifies, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::IdentificationConstraint) && akind(b, K::ObjectType);
    });
    for (EntityId e : of_kind(K::IdentificationConstraint))
      if (count_with(P::Identifies, 0, LinkArg::of(e)) != 1)
        emit("ID-IDENTIFIES.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::ObjectType))
      if (count_with(P::Identifies, 1, LinkArg::of(e)) < 1)
        emit("ID-IDENTIFIES.3", {{"x", nm(e)}});
    int id = 0;
    for (K fam : {K::ValueProperty, K::AttributiveProperty}) {
      ++id;
      for (const auto& l : links(P::DeclaredOn)) {
        if (!akind(l.args[0], K::IdentificationConstraint) || !akind(l.args[1], fam))
          continue;
        for (const auto& m : links(P::DeclaredOn))
          if (m.args[0] == l.args[0] && !akind(m.args[1], fam))
            emit("ID-HOMOG." + std::to_string(id),
                 {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}, {"z", nm(m.args[1])}});
      }
    }
    for (EntityId e : of_kind(K::IdentificationConstraint))
      if (count_with(P::DeclaredOn, 0, LinkArg::of(e)) < 1)
        emit("ID-HOMOG.3", {{"x", nm(e)}});
    for (const auto& l : links(P::DeclaredOn))
      if (akind(l.args[0], K::SingleIdentification) &&
          !(akind(l.args[1], K::Attribute) || akind(l.args[1], K::ValueType)))
        emit("ID-SINGLE.1", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    for (EntityId e : of_kind(K::SingleIdentification))
      if (count_with(P::DeclaredOn, 0, LinkArg::of(e)) != 1)
        emit("ID-SINGLE.2", {{"x", nm(e)}});
    for (EntityId e = 0; e < g.entity_count(); ++e) {
      if (!kind(e, K::Attribute) && !kind(e, K::ValueType)) continue;
      size_t c = 0;
      for (const auto& l : links(P::DeclaredOn))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::SingleIdentification)) ++c;
      if (c > 1) emit("ID-SINGLE.3", {{"x", nm(e)}});
    }
    for (const auto& l : links(P::Identifies))
      if (akind(l.args[0], K::WeakIdentification) && !akind(l.args[1], K::WeakObjectType))
        emit("ID-WEAK.1", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    for (EntityId e : of_kind(K::WeakIdentification))
      if (count_with(P::Identifies, 0, LinkArg::of(e)) != 1)
        emit("ID-WEAK.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::WeakObjectType)) {
      size_t c = 0;
      for (const auto& l : links(P::Identifies))
        if (l.args[1] == LinkArg::of(e) && akind(l.args[0], K::WeakIdentification)) ++c;
      if (c < 1) emit("ID-WEAK.3", {{"x", nm(e)}});
    }
    typing2("ID-HASSTRONG.1", P::HasStrong, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::WeakObjectType) && akind(b, K::ObjectType);
    });
    for (EntityId e : of_kind(K::WeakObjectType))
      if (count_with(P::HasStrong, 0, LinkArg::of(e)) != 1)
        emit("ID-HASSTRONG.2", {{"x", nm(e)}});
  }

  void identification_tcs() {
    for (const auto& li : links(P::Identifies)) {
      if (!akind(li.args[0], K::WeakIdentification)) continue;
      for (const auto& ld : links(P::DeclaredOn)) {
        if (ld.args[0] != li.args[0]) continue;
        const LinkArg &y = li.args[1], &z = ld.args[1];
        bool via_attr = akind(z, K::AttributiveProperty) &&
                        z.is_entity() && g.has_link(P::DomainLink, z, y);
        size_t shared = 0;
        for (const auto& lv : links(P::Identifies)) {
          if (!akind(lv.args[0], K::IdentificationConstraint)) continue;
          if (!g.has_link(P::DeclaredOn, lv.args[0], z)) continue;
          for (EntityId s : of_kind(K::Relationship))
            if (part(LinkArg::of(s), lv.args[1]) && part(LinkArg::of(s), y)) ++shared;
        }
        if (!via_attr && shared != 1)
          emit("ID-TC1.1", {{"x", nm(li.args[0])}, {"y", nm(y)}, {"z", nm(z)}});
      }
    }
    for (const auto& li : links(P::Identifies)) {
      if (!akind(li.args[0], K::WeakIdentification)) continue;
      for (const auto& ls : links(P::DeclaredOn)) {
        if (ls.args[0] != li.args[0]) continue;
        for (const auto& lv : links(P::Identifies)) {
          if (!akind(lv.args[0], K::IdentificationConstraint)) continue;
          if (lv.args[0] == li.args[0]) continue;
          if (!g.has_link(P::DeclaredOn, lv.args[0], ls.args[1])) continue;
          if (lv.args[1] == li.args[1])
            emit("ID-TC1.2", {{"x", nm(li.args[0])},
                              {"y", nm(li.args[1])},
                              {"v", nm(lv.args[0])},
                              {"s", nm(ls.args[1])},
                              {"t", nm(lv.args[1])}});
        }
      }
    }
    for (const auto& li : links(P::Identifies)) {
      if (!akind(li.args[0], K::SingleIdentification)) continue;
      for (const auto& ld : links(P::DeclaredOn)) {
        if (ld.args[0] != li.args[0]) continue;
        bool found = false;
        for (const auto& lc : links(P::CardO))
          if (lc.args[0] == ld.args[1] && lc.args[1] == li.args[1] &&
              has_int(AttrPred::MinimumCardinality, lc.args[2], 1) &&
              has_int(AttrPred::MaximumCardinality, lc.args[2], 1))
            found = true;
        if (!found)
          emit("ID-TC2.1",
               {{"x", nm(li.args[0])}, {"y", nm(li.args[1])}, {"z", nm(ld.args[1])}});
      }
    }
    for (const auto& l : links(P::DeclaredOn)) {
      if (akind(l.args[0], K::QualifiedIdentification) &&
          !akind(l.args[1], K::AttributiveProperty))
        emit("ID-TC3.1", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
      if (akind(l.args[0], K::ExternalIdentification) &&
          !akind(l.args[1], K::AttributiveProperty))
        emit("ID-TC3.2", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    }
    for (const auto& lp : links(P::PartiallyIdentifies)) {
      bool found = false;
      for (const auto& lr : links(P::RolePlaying))
        if (g.has_link(P::Contains, lp.args[1], lr.args[0]) &&
            has_int(AttrPred::MinimumCardinality, lr.args[1], 1) &&
            has_int(AttrPred::MaximumCardinality, lr.args[1], 1))
          found = true;
      if (!found) emit("ID-TC4.1", {{"x", nm(lp.args[0])}, {"y", nm(lp.args[1])}});
    }
  }

  void cardinality() {
    typing3("CARDC-R.1", P::CardR,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::AttributiveProperty) && akind(b, K::Relationship) &&
                     akind(c, K::CardinalityConstraint);
            });
    typing3("CARDC-O.1", P::CardO,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::AttributiveProperty) && akind(b, K::ObjectType) &&
                     akind(c, K::CardinalityConstraint);
            });
    typing3("CARDC-FREQ.1", P::Frequency,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::Relationship) && akind(b, K::Role) &&
                     akind(c, K::CompoundCardinalityConstraint);
            });
    for (EntityId e : of_kind(K::CompoundCardinalityConstraint))
      if (count_with(P::Frequency, 2, LinkArg::of(e)) != 1)
        emit("CARDC-FREQ.2", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::Role)) {
      size_t c = count_with(P::Frequency, 1, LinkArg::of(e));
      if (c == 1) emit("CARDC-FREQ.3", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::CardinalityConstraint)) {
      bool has = any_attr(AttrPred::MaximumCardinality, e) ||
                 (!opt.inject_fault && any_attr(AttrPred::MinimumCardinality, e));
      if (!has) emit("CARDC-MINMAX.1", {{"x", nm(e)}});
    }
    for (const auto& l1 : links(P::Frequency)) {
      for (const auto& l2 : links(P::Frequency)) {
        if (l1.args[2] != l2.args[2]) continue;
        bool ok = l1.args[0] == l2.args[0] &&
                  g.has_link(P::Contains, l1.args[0], l1.args[1]) &&
                  g.has_link(P::Contains, l2.args[0], l2.args[1]);
        if (!ok)
          emit("CARDC-FREQROLES.1", {{"x", nm(l1.args[0])},
                                     {"y", nm(l1.args[1])},
                                     {"z", nm(l1.args[2])},
                                     {"v", nm(l2.args[0])},
                                     {"w", nm(l2.args[1])}});
      }
    }
  }

  void values() {
    typing3("VAL-CONSTRAINING.1", P::ConstrainingValues,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              bool head = (akind(a, K::ValueTypeConstraint) && akind(b, K::ValueProperty)) ||
                          (akind(a, K::RoleValueConstraint) && akind(b, K::Role)) ||
                          (akind(a, K::AttributeValueConstraint) && akind(b, K::Attribute));
              bool tail = akind(c, K::ValueEnumeration) || akind(c, K::ValueRange);
              return head && tail;
            });
    int id = 1;
    for (K c : {K::ValueTypeConstraint, K::RoleValueConstraint,
                K::AttributeValueConstraint}) {
      ++id;
      for (EntityId e : of_kind(c))
        if (count_with(P::ConstrainingValues, 0, LinkArg::of(e)) != 1)
          emit("VAL-CONSTRAINING." + std::to_string(id), {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::ValueEnumeration))
      if (kind(e, K::ValueRange)) emit("VAL-CONSTRAINING.5", {{"x", nm(e)}});
    for (EntityId e : of_kind(K::ValueRange))
      if (kind(e, K::ValueEnumeration)) emit("VAL-CONSTRAINING.6", {{"x", nm(e)}});
    typing2("VAL-HASTYPE.1", P::HasType, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::ValueRange) && akind(b, K::DataType);
    });
    for (EntityId e : of_kind(K::ValueRange)) {
      if (count_with(P::HasType, 0, LinkArg::of(e)) != 1)
        emit("VAL-HASTYPE.2", {{"x", nm(e)}});
      // VAL-RANGEATTRS.1 and .2 hold by construction: value attributes are
      // stored as literals.
      if (str_values(AttrPred::MinimumValue, e).size() != 1)
        emit("VAL-RANGEATTRS.3", {{"x", nm(e)}});
      if (str_values(AttrPred::MaximumValue, e).size() != 1)
        emit("VAL-RANGEATTRS.4", {{"x", nm(e)}});
    }
  }

  void value_comparison() {
    for (EntityId e : of_kind(K::ValueComparisonConstraint)) {
      size_t c = 0;
      for (auto [a, b] : parts)
        if (a == e) ++c;
      if (c != 2) emit("VCMP-PART.1", {{"x", nm(e)}});
    }
    int id = 1;
    for (P p : {P::First, P::Second}) {
      ++id;
      typing2("VCMP-PART." + std::to_string(id), p,
              [&](const LinkArg& a, const LinkArg& b) {
                return (akind(a, K::ValueComparisonConstraint) ||
                        akind(a, K::RelationshipConstraint)) &&
                       akind(b, K::Role);
              });
    }
    for (P p : {P::First, P::Second}) {
      ++id;
      for (const auto& l : links(p))
        if (!part(l.args[0], l.args[1]))
          emit("VCMP-PART." + std::to_string(id),
               {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    }
    for (auto [a, b] : parts) {
      if (!kind(a, K::ValueComparisonConstraint)) continue;
      if (!g.has_link(P::First, LinkArg::of(a), LinkArg::of(b)) &&
          !g.has_link(P::Second, LinkArg::of(a), LinkArg::of(b)))
        emit("VCMP-PART.6", {{"x", nm(a)}, {"y", nm(b)}});
    }
    for (const auto& l : links(P::First))
      if (akind(l.args[0], K::ValueComparisonConstraint) &&
          g.has_link(P::Second, l.args[0], l.args[1]))
        emit("VCMP-PART.7", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    for (EntityId e : of_kind(K::ValueComparisonConstraint)) {
      if (count_with(P::First, 0, LinkArg::of(e)) != 1)
        emit("VCMP-PART.8", {{"x", nm(e)}});
      if (count_with(P::Second, 0, LinkArg::of(e)) != 1)
        emit("VCMP-PART.9", {{"x", nm(e)}});
    }
    typing2("VCMP-OPS.1", P::ComparisonOperatorOf,
            [&](const LinkArg& a, const LinkArg& b) {
              bool op = !b.is_entity() || akind(b, K::Operator);
              return akind(a, K::ValueComparisonConstraint) && op;
            });
    for (EntityId e : of_kind(K::ValueComparisonConstraint))
      if (count_with(P::ComparisonOperatorOf, 0, LinkArg::of(e)) != 1)
        emit("VCMP-OPS.2", {{"x", nm(e)}});
    // Entities asserted as operators are not one of the six nominals.
    for (EntityId e : of_kind(K::Operator)) emit("VCMP-OPS.3", {{"x", nm(e)}});
    // VCMP-OPS.4 through .9 assert the mutual distinctness of the nominals;
    // nominal identity is structural here, so they cannot fail.
    typing2("VCMP-ONTYPE.1", P::OnValueOfType, [&](const LinkArg& a, const LinkArg& b) {
      return akind(a, K::ValueComparisonConstraint) && akind(b, K::DataType);
    });
    for (EntityId e : of_kind(K::ValueComparisonConstraint))
      if (count_with(P::OnValueOfType, 0, LinkArg::of(e)) != 1)
        emit("VCMP-ONTYPE.2", {{"x", nm(e)}});
    for (const auto& lf : links(P::First)) {
      if (!akind(lf.args[0], K::ValueComparisonConstraint)) continue;
      for (const auto& ls : links(P::Second)) {
        if (ls.args[0] != lf.args[0]) continue;
        bool found = false;
        for (const auto& r1 : links(P::RolePlaying)) {
          if (r1.args[0] != lf.args[1] || !akind(r1.args[2], K::DataType)) continue;
          for (const auto& r2 : links(P::RolePlaying))
            if (r2.args[0] == ls.args[1] && r2.args[2] == r1.args[2]) found = true;
        }
        if (!found)
          emit("VCMP-SAMETYPE.1",
               {{"x", nm(lf.args[0])}, {"y", nm(lf.args[1])}, {"z", nm(ls.args[1])}});
      }
    }
  }

  void equality_disjointness() {
    int id = 0;
    for (K c : {K::RelationshipEquality, K::DisjointRelationships, K::RoleEquality,
                K::DisjointRoles}) {
      ++id;
      for (EntityId e : of_kind(c))
        if (count_with(P::DeclaredOn, 0, LinkArg::of(e)) < 2)
          emit("EQD-DECL2." + std::to_string(id), {{"x", nm(e)}});
    }
    id = 0;
    for (K c : {K::CompletenessConstraint, K::DisjointEntities}) {
      ++id;
      for (EntityId e : of_kind(c))
        if (count_with(P::DeclaredOn, 0, LinkArg::of(e)) != 1)
          emit("EQD-DECL1." + std::to_string(id), {{"x", nm(e)}});
    }
    typing2("EQD-HASPART.1", P::HasParticipant, [&](const LinkArg& a, const LinkArg& b) {
      bool head = akind(a, K::CompletenessConstraint) || akind(a, K::DisjointEntities);
      bool tail = akind(b, K::Entity) && !akind(b, K::QualifiedRelationship) &&
                  !akind(b, K::Subsumption) && !akind(b, K::AttributiveProperty) &&
                  !akind(b, K::Qualifier) && !akind(b, K::Constraint);
      return head && tail;
    });
    id = 1;
    for (K c : {K::CompletenessConstraint, K::DisjointEntities}) {
      ++id;
      for (EntityId e : of_kind(c))
        if (count_with(P::HasParticipant, 0, LinkArg::of(e)) < 2)
          emit("EQD-HASPART." + std::to_string(id), {{"x", nm(e)}});
    }
    id = 0;
    for (K c : {K::DisjointEntities, K::CompletenessConstraint}) {
      ++id;
      for (const auto& lh : links(P::HasParticipant)) {
        if (!akind(lh.args[0], c)) continue;
        bool found = false;
        for (const auto& ld : links(P::DeclaredOn))
          if (ld.args[0] == lh.args[0] && akind(ld.args[1], K::Subsumption) &&
              ld.args[1].is_entity() &&
              g.has_link(P::Sub, ld.args[1], lh.args[1]))
            found = true;
        if (!found)
          emit("EQD-TC." + std::to_string(id),
               {{"x", nm(lh.args[0])}, {"y", nm(lh.args[1])}});
      }
      ++id;
      for (const auto& ld : links(P::DeclaredOn)) {
        if (!akind(ld.args[0], c)) continue;
        for (const auto& ls : links(P::Sub)) {
          if (ls.args[0] != ld.args[1]) continue;
          if (!g.has_link(P::HasParticipant, ld.args[0], ls.args[1]))
            emit("EQD-TC." + std::to_string(id),
                 {{"x", nm(ld.args[0])}, {"y", nm(ld.args[1])}, {"z", nm(ls.args[1])}});
        }
      }
    }
    struct TcSpec {
      K c;
      bool need_distinct;
    };
    for (TcSpec spec : {TcSpec{K::DisjointRelationships, false},
                        TcSpec{K::DisjointRoles, true}, TcSpec{K::RoleEquality, true},
                        TcSpec{K::RelationshipEquality, false}}) {
      ++id;
      for (const auto& l1 : links(P::DeclaredOn)) {
        if (!akind(l1.args[0], spec.c)) continue;
        for (const auto& l2 : links(P::DeclaredOn)) {
          if (l2.args[0] != l1.args[0]) continue;
          if (spec.need_distinct && l1.args[1] == l2.args[1]) continue;
          if (!comp2(l1.args[1], l2.args[1]))
            emit("EQD-TC." + std::to_string(id),
                 {{"x", nm(l1.args[0])}, {"y", nm(l1.args[1])}, {"z", nm(l2.args[1])}});
        }
      }
    }
  }

  void relationship_constraints() {
    for (EntityId e : of_kind(K::RelationshipConstraint)) {
      size_t c = 0;
      for (auto [a, b] : parts)
        if (a == e) ++c;
      if (c != 2) emit("RELP-PART.1", {{"x", nm(e)}});
    }
    for (EntityId e : of_kind(K::Role)) {
      size_t c = 0;
      for (auto [a, b] : parts)
        if (b == e) ++c;
      if (c > 4) emit("RELP-PART.2", {{"x", nm(e)}});
    }
    for (auto [a, b] : parts) {
      if (!kind(a, K::RelationshipConstraint)) continue;
      if (!g.has_link(P::First, LinkArg::of(a), LinkArg::of(b)) &&
          !g.has_link(P::Second, LinkArg::of(a), LinkArg::of(b)))
        emit("RELP-FIRSTSECOND.1", {{"x", nm(a)}, {"y", nm(b)}});
    }
    for (const auto& l : links(P::First))
      if (akind(l.args[0], K::RelationshipConstraint) &&
          g.has_link(P::Second, l.args[0], l.args[1]))
        emit("RELP-FIRSTSECOND.2", {{"x", nm(l.args[0])}, {"y", nm(l.args[1])}});
    for (EntityId e : of_kind(K::RelationshipConstraint)) {
      if (count_with(P::First, 0, LinkArg::of(e)) != 1)
        emit("RELP-FIRSTSECOND.3", {{"x", nm(e)}});
      if (count_with(P::Second, 0, LinkArg::of(e)) != 1)
        emit("RELP-FIRSTSECOND.4", {{"x", nm(e)}});
    }
    for (const auto& lf : links(P::First)) {
      if (!akind(lf.args[0], K::RelationshipConstraint)) continue;
      for (const auto& ls : links(P::Second)) {
        if (ls.args[0] != lf.args[0]) continue;
        bool shares = false;
        for (const auto& lc : links(P::Contains))
          if (lc.args[1] == lf.args[1] &&
              g.has_link(P::Contains, lc.args[0], ls.args[1]))
            shares = true;
        if (!comp2(lf.args[1], ls.args[1]) || !shares)
          emit("RELP-TC.1",
               {{"x", nm(lf.args[0])}, {"y", nm(lf.args[1])}, {"z", nm(ls.args[1])}});
      }
    }
  }

  void joins() {
    typing3("JOIN-JOINING.1", P::Joining,
            [&](const LinkArg& a, const LinkArg& b, const LinkArg& c) {
              return akind(a, K::Relationship) && akind(c, K::Role) &&
                     akind(b, K::JoinConstraint);
            });
    for (EntityId e : of_kind(K::JoinConstraint))
      if (count_with(P::Joining, 1, LinkArg::of(e)) != 1)
        emit("JOIN-JOINING.2", {{"x", nm(e)}});
    typing2("JOIN-PARTICIPATES.1", P::ParticipatesIn,
            [&](const LinkArg& a, const LinkArg& b) {
              return akind(b, K::JoinConstraint) &&
                     (akind(a, K::Relationship) || akind(a, K::Role));
            });
    for (EntityId e : of_kind(K::JoinConstraint)) {
      size_t rels = 0, roles = 0;
      for (const auto& l : links(P::ParticipatesIn)) {
        if (l.args[1] != LinkArg::of(e)) continue;
        if (akind(l.args[0], K::Relationship)) ++rels;
        if (akind(l.args[0], K::Role)) ++roles;
      }
      if (rels != 3 && rels != 4) emit("JOIN-PARTICIPATES.2", {{"x", nm(e)}});
      if (roles != 4) emit("JOIN-PARTICIPATES.3", {{"x", nm(e)}});
    }
    for (const auto& l : links(P::ParticipatesIn)) {
      if (!akind(l.args[1], K::JoinConstraint) || !akind(l.args[0], K::Role)) continue;
      bool found = false;
      for (const auto& lc : links(P::Contains))
        if (lc.args[1] == l.args[0] && akind(lc.args[0], K::Relationship) &&
            g.has_link(P::ParticipatesIn, lc.args[0], l.args[1]))
          found = true;
      if (!found) emit("JOIN-TC1.1", {{"x", nm(l.args[1])}, {"y", nm(l.args[0])}});
    }
  }

  void run() {
    taxonomy();
    rel_contains();
    rel_roleplaying();
    card_attr();
    rel_reified();
    rel_reified_coh();
    sub_participant();
    sub_sub_super();
    sub_phi();
    agg_part();
    agg_whole();
    agg_shared();
    pw_irr_asym();
    agg_composite();
    compatibility();
    att_declaredon();
    att_structure();
    mandatory();
    uniqueness();
    identification();
    identification_tcs();
    cardinality();
    values();
    value_comparison();
    equality_disjointness();
    relationship_constraints();
    joins();
  }
};

}  // namespace

std::vector<Violation> check_model(const ModelGraph& g, const TaxonomyCatalog& cat,
                                   const CheckOptions& opt) {
  size_t n_eff = effective_max_arity(g, opt.max_arity);
  std::vector<Axiom> axioms = axiom_catalog(cat, n_eff);
  Ck ck{g, cat, opt, {}, {}, {}, n_eff, {}};
  ck.parts = derive_participants(g);
  std::sort(ck.parts.begin(), ck.parts.end());
  ck.compat = derive_compatible(g);
  for (const auto& a : axioms) ck.byid.emplace(a.id, &a);
  ck.run();
  std::sort(ck.out.begin(), ck.out.end(), violation_less);
  return ck.out;
}

}  // namespace cmv
