#include "cmv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace cmv {

bool natural_less(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(uint8_t(a[i])) && std::isdigit(uint8_t(b[j]))) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(uint8_t(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(uint8_t(b[j2]))) ++j2;
      std::string_view da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      std::string_view ta = da.substr(std::min(da.find_first_not_of('0'), da.size()));
      std::string_view tb = db.substr(std::min(db.find_first_not_of('0'), db.size()));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

namespace {

using K = Kind;
using P = LinkPred;
using f::conj;
using f::count_eq;
using f::count_ge;
using f::count_le;
using f::disj;
using f::exists;
using f::forall;
using f::iff;
using f::implies;
using f::neg;

Formula k(K kind, const char* var) { return f::kind(kind, var); }
Formula l(P p, const char* a, const char* b) {
  return f::link(p, {Term::v(a), Term::v(b)});
}
Formula l3(P p, const char* a, const char* b, const char* c) {
  return f::link(p, {Term::v(a), Term::v(b), Term::v(c)});
}
Formula av(AttrPred p, const char* s, const char* val) {
  return f::attr(p, Term::v(s), Term::v(val));
}
Formula ac(AttrPred p, const char* s, uint64_t c) {
  return f::attr(p, Term::v(s), Term::num(c));
}
Formula eq(const char* a, const char* b) { return f::eq(Term::v(a), Term::v(b)); }
Formula eqn(const char* a, Nominal n) { return f::eq(Term::v(a), Term::nom(n)); }
Formula part(const char* a, const char* b) {
  return f::derived(DerivedPred::Participant, a, b);
}
Formula comp(const char* a, const char* b) {
  return f::derived(DerivedPred::Compatible, a, b);
}

struct Adder {
  std::vector<Axiom>& out;
  std::string group;
  std::string bullet;
  std::string source;
  int idx = 0;

  void ax(Tier t, Formula fm, std::string note = "") {
    ax_id(t, std::to_string(++idx), std::move(fm), std::move(note));
  }
  void ax_id(Tier t, std::string suffix, Formula fm, std::string note = "") {
    Axiom a;
    a.id = group + "." + std::move(suffix);
    a.group = group;
    a.tier = t;
    a.formula = std::move(fm);
    a.bullet = bullet;
    a.source = source;
    a.note = std::move(note);
    out.push_back(std::move(a));
  }
};

void add_taxonomy(std::vector<Axiom>& out, const TaxonomyCatalog& cat) {
  for (const auto& s : tax_axiom_specs(cat)) {
    Axiom a;
    a.id = s.id;
    a.group = s.id.substr(0, s.id.find('.'));
    a.tier = Tier::C2;
    a.bullet = std::string(s.bullet);
    a.source = "class hierarchy";
    switch (s.type) {
      case TaxAxiomType::Isa:
        a.formula = forall({"x"}, implies(k(s.a, "x"), k(s.b, "x")));
        break;
      case TaxAxiomType::Disjoint:
        a.formula = forall({"x"}, neg(conj({k(s.a, "x"), k(s.b, "x")})));
        break;
      case TaxAxiomType::Complete: {
        std::vector<Formula> ds;
        for (K c : s.group->children) ds.push_back(k(c, "x"));
        a.formula = forall({"x"}, implies(k(s.group->parent, "x"), disj(std::move(ds))));
        break;
      }
    }
    out.push_back(std::move(a));
  }
}

void add_relationships(std::vector<Axiom>& out) {
  {
    Adder g{out, "REL-CONTAINS", "relationship-role.1",
            "composition (1,2..*) linking relationships to their roles"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::Contains, "x", "y"),
                        conj({k(K::Relationship, "x"), k(K::Role, "y")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::Relationship, "x"),
                               count_ge(2, {"y"}, l(P::Contains, "x", "y")))),
         "guarded on Relationship; printed without a guard");
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Role, "x"),
                                         count_eq(1, {"y"}, l(P::Contains, "y", "x")))));
  }
  {
    Adder g{out, "REL-ROLEPLAYING", "relationship-role.2",
            "ternary (1..*,0..*,0..*) role playing"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::RolePlaying, "x", "y", "z"),
                        conj({k(K::Role, "x"), k(K::CardinalityConstraint, "y"),
                              k(K::EntityType, "z")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::Role, "x"),
                               count_ge(1, {"y", "z"}, l3(P::RolePlaying, "x", "y", "z")))));
  }
  {
    Adder g{out, "CARD-ATTR", "relationship-role.3",
            "cardinality attributes on cardinality constraints"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::CardinalityConstraint, "x"),
                              av(AttrPred::MinimumCardinality, "x", "y")}),
                        f::sort_atom(Sort::Integer, "y"))),
         "holds by construction: attribute storage is typed");
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::CardinalityConstraint, "x"),
                              av(AttrPred::MaximumCardinality, "x", "y")}),
                        f::sort_atom(Sort::Integer, "y"))),
         "holds by construction: attribute storage is typed");
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::CardinalityConstraint, "x"),
                        count_le(1, {"y"}, av(AttrPred::MinimumCardinality, "x", "y")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::CardinalityConstraint, "x"),
                        count_le(1, {"y"}, av(AttrPred::MaximumCardinality, "x", "y")))));
  }
  {
    Adder g{out, "REL-REIFIED", "relationship-role.4",
            "relation (1,0..1) reifying a relationship as a nested object type"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::ReifiedAs, "x", "y"),
                        conj({k(K::Relationship, "x"), k(K::NestedObjectType, "y")}))),
         "argument order fixed to (relationship, nested object type)");
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::NestedObjectType, "x"),
                               count_eq(1, {"y"}, l(P::ReifiedAs, "y", "x")))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::Relationship, "x"),
                               count_le(1, {"y"}, l(P::ReifiedAs, "x", "y")))));
  }
  {
    Adder g{out, "REL-REIFIED-COH", "relationship-role.5",
            "a reified relationship and its nested object type share their roles"};
    g.ax(Tier::Star,
         forall({"x", "y"},
                implies(l(P::ReifiedAs, "x", "y"),
                        forall({"z"}, iff(l(P::Contains, "x", "z"),
                                          exists({"w"}, l3(P::RolePlaying, "z", "w", "y")))))),
         "read as role-set equality between relationship and reification");
  }
}

void add_subsumption(std::vector<Axiom>& out) {
  {
    Adder g{out, "SUB-PARTICIPANT", "subsumption-aggregation.1",
            "relation (0..*,2) participation"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(part("x", "y"),
                        disj({conj({k(K::Relationship, "x"), k(K::Entity, "y")}),
                              conj({k(K::ValueComparisonConstraint, "x"), k(K::Role, "y")}),
                              conj({k(K::RelationshipConstraint, "x"), k(K::Role, "y")})}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(disj({k(K::Subsumption, "x"), k(K::PartWhole, "x")}),
                               count_eq(2, {"y"}, part("x", "y")))),
         "guard narrowed from Relationship to Subsumption or PartWhole");
    g.ax(Tier::C2,
         forall({"x", "y"},
                iff(conj({part("x", "y"), k(K::Relationship, "x")}),
                    disj({l(P::Sub, "x", "y"), l(P::Super, "x", "y"),
                          l(P::PartLink, "x", "y"), l(P::WholeLink, "x", "y")}))));
  }
  auto target_ok = [](const char* y) {
    return conj({k(K::Entity, y), neg(k(K::QualifiedRelationship, y)),
                 neg(k(K::AttributiveProperty, y)), neg(k(K::Subsumption, y)),
                 neg(k(K::Qualifier, y)), neg(k(K::Constraint, y))});
  };
  {
    Adder g{out, "SUB-SUB", "subsumption-aggregation.2",
            "relation (1,0..*) subsumed entity"};
    g.ax(Tier::C2, forall({"x", "y"}, implies(l(P::Sub, "x", "y"),
                                              conj({k(K::Subsumption, "x"), target_ok("y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Subsumption, "x"),
                                         count_eq(1, {"y"}, l(P::Sub, "x", "y")))));
  }
  {
    Adder g{out, "SUB-SUPER", "subsumption-aggregation.3",
            "relation (1,0..*) subsuming entity"};
    g.ax(Tier::C2,
         forall({"x", "y"}, implies(l(P::Super, "x", "y"),
                                    conj({k(K::Subsumption, "x"), target_ok("y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Subsumption, "x"),
                                         count_eq(1, {"y"}, l(P::Super, "x", "y")))));
  }
  {
    Adder g{out, "SUB-PHI", "subsumption-aggregation.4",
            "subsumption preserves the family of the related entities"};
    struct Phi {
      const char* note;
      std::function<Formula(const char*)> at;
    };
    std::vector<Phi> fams = {
        {"shared aggregates", [](const char* v) { return k(K::SharedAggregate, v); }},
        {"composite aggregates", [](const char* v) { return k(K::CompositeAggregate, v); }},
        {"roles", [](const char* v) { return k(K::Role, v); }},
        {"data types", [](const char* v) { return k(K::DataType, v); }},
        {"plain relationships",
         [](const char* v) {
           return conj({k(K::Relationship, v), neg(k(K::PartWhole, v))});
         }},
        {"object types", [](const char* v) { return k(K::ObjectType, v); }},
    };
    for (const auto& phi : fams) {
      g.ax(Tier::Star,
           forall({"x", "y"},
                  implies(conj({k(K::Subsumption, "x"), l(P::Sub, "x", "y"), phi.at("y")}),
                          exists({"z"}, conj({l(P::Super, "x", "z"), phi.at("z")})))),
           std::string("sub side, ") + phi.note);
      g.ax(Tier::Star,
           forall({"x", "y"},
                  implies(conj({k(K::Subsumption, "x"), l(P::Super, "x", "y"), phi.at("y")}),
                          exists({"z"}, conj({l(P::Sub, "x", "z"), phi.at("z")})))),
           std::string("super side, ") + phi.note);
    }
  }
}

void add_aggregation(std::vector<Axiom>& out) {
  {
    Adder g{out, "AGG-PART", "subsumption-aggregation.5",
            "parts of aggregates and composite attributes"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Part, "x"), k(K::PartWhole, "x"))),
         "unary reading of the printed isa");
    g.bullet = "subsumption-aggregation.6";
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::PartLink, "x", "y"),
                        disj({conj({k(K::Part, "x"), k(K::AttributiveProperty, "y")}),
                              conj({k(K::SharedAggregate, "x"), k(K::DataType, "y")}),
                              conj({k(K::SharedAggregate, "x"), k(K::ObjectType, "y")})}))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Part, "x"),
                        count_eq(1, {"y"},
                                 conj({l(P::PartLink, "x", "y"),
                                       k(K::AttributiveProperty, "y")})))));
  }
  {
    Adder g{out, "AGG-WHOLE", "subsumption-aggregation.7",
            "wholes of aggregates and composite attributes"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::WholeLink, "x", "y"),
                        disj({conj({k(K::Part, "x"), k(K::CompositeAttribute, "y")}),
                              conj({k(K::SharedAggregate, "x"), k(K::DataType, "y")}),
                              conj({k(K::SharedAggregate, "x"), k(K::ObjectType, "y")})}))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Part, "x"),
                        count_eq(1, {"y"},
                                 conj({l(P::WholeLink, "x", "y"),
                                       k(K::CompositeAttribute, "y")})))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::CompositeAttribute, "x"),
                        count_ge(2, {"y"},
                                 conj({k(K::Part, "y"), l(P::WholeLink, "y", "x")})))));
  }
  {
    Adder g{out, "AGG-SHARED-XOR", "subsumption-aggregation.8",
            "shared aggregates relate one part and one whole"};
    auto dt_or_ot = [](const char* v) {
      return disj({k(K::DataType, v), k(K::ObjectType, v)});
    };
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::SharedAggregate, "x"),
                        count_le(1, {"y"}, conj({dt_or_ot("y"), l(P::PartLink, "x", "y")})))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::SharedAggregate, "x"),
                               conj({count_ge(1, {"y"}, l(P::PartLink, "x", "y")),
                                     count_ge(1, {"y"}, l(P::WholeLink, "x", "y"))}))));
    g.bullet = "subsumption-aggregation.9";
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::SharedAggregate, "x"),
                        count_le(1, {"y"},
                                 conj({dt_or_ot("y"), l(P::WholeLink, "x", "y")})))));
  }
  {
    Adder g{out, "AGG-SHARED-AND", "subsumption-aggregation.10",
            "shared aggregates stay within one family of part and whole"};
    struct Fam {
      K kind;
      const char* note;
    };
    for (Fam fam : {Fam{K::DataType, "data types"}, Fam{K::ObjectType, "object types"}}) {
      g.ax(Tier::Star,
           forall({"x", "y"},
                  implies(conj({k(K::SharedAggregate, "x"), l(P::PartLink, "x", "y"),
                                k(fam.kind, "y")}),
                          exists({"z"}, conj({l(P::WholeLink, "x", "z"), k(fam.kind, "z")})))),
           std::string("part to whole, ") + fam.note);
      g.ax(Tier::Star,
           forall({"x", "y"},
                  implies(conj({k(K::SharedAggregate, "x"), l(P::WholeLink, "x", "y"),
                                k(fam.kind, "y")}),
                          exists({"z"}, conj({l(P::PartLink, "x", "z"), k(fam.kind, "z")})))),
           std::string("whole to part, ") + fam.note);
    }
  }
  {
    Adder g{out, "PW-IRR-ASYM", "subsumption-aggregation.11",
            "part-whole relations are irreflexive and asymmetric"};
    auto ante = conj({k(K::PartWhole, "x"), l(P::PartLink, "x", "y"),
                      l(P::WholeLink, "x", "z")});
    g.ax(Tier::Star, forall({"x", "y", "z"}, implies(ante, neg(eq("y", "z")))));
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(ante, neg(exists({"v"}, conj({k(K::PartWhole, "v"),
                                                      l(P::PartLink, "v", "z"),
                                                      l(P::WholeLink, "v", "y")}))))));
  }
  {
    Adder g{out, "AGG-COMPOSITE-PART", "subsumption-aggregation.12",
            "relation (0..1,1) between composite aggregates and part object types"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::CompositeAggregate, "x"), l(P::PartLink, "x", "y")}),
                        k(K::ObjectType, "y"))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::CompositeAggregate, "x"),
                                         count_eq(1, {"y"}, l(P::PartLink, "x", "y")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::ObjectType, "x"),
                        count_le(1, {"y"}, conj({k(K::CompositeAggregate, "y"),
                                                 l(P::PartLink, "y", "x")})))),
         "0..1 end restated on the object type");
  }
  {
    Adder g{out, "AGG-COMPOSITE-WHOLE", "subsumption-aggregation.13",
            "relation (0..*,1) between composite aggregates and whole object types"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::CompositeAggregate, "x"), l(P::WholeLink, "x", "y")}),
                        k(K::ObjectType, "y"))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::CompositeAggregate, "x"),
                                         count_eq(1, {"y"}, l(P::WholeLink, "x", "y")))));
  }
}

void add_compatibility(std::vector<Axiom>& out, size_t max_arity) {
  {
    Adder g{out, "COMPAT-DEF", "subsumption-aggregation.14",
            "compatible entities share a typing family"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(comp("x", "y"),
                        disj({conj({k(K::ValueProperty, "x"), k(K::ValueProperty, "y")}),
                              conj({k(K::DataType, "x"), k(K::DataType, "y")}),
                              conj({k(K::ObjectType, "x"), k(K::ObjectType, "y")}),
                              conj({k(K::Role, "x"), k(K::Role, "y")}),
                              conj({k(K::Relationship, "x"), k(K::Relationship, "y")})}))),
         "definitional: the derived relation satisfies it by construction");
  }
  {
    Adder g{out, "COMPAT-ROLE", "subsumption-aggregation.14",
            "compatible roles play into compatible entity types"};
    g.ax(Tier::Star,
         forall({"x", "y"},
                implies(conj({comp("x", "y"), k(K::Role, "x")}),
                        exists({"v", "w", "s", "t"},
                               conj({l3(P::RolePlaying, "x", "v", "w"),
                                     l3(P::RolePlaying, "y", "s", "t"), comp("w", "t")})))),
         "definitional: the derived relation satisfies it by construction");
  }
  {
    Adder g{out, "COMPAT-REL", "subsumption-aggregation.14",
            "compatible relationships agree on arity and contain compatible roles"};
    for (size_t n = 2; n <= max_arity; ++n) {
      g.ax_id(Tier::Star, "n" + std::to_string(n),
              forall({"x", "y"},
                     implies(conj({comp("x", "y"), k(K::Relationship, "x")}),
                             conj({iff(count_eq(n, {"z"}, l(P::Contains, "x", "z")),
                                       count_eq(n, {"z"}, l(P::Contains, "y", "z"))),
                                   exists({"z", "w"},
                                          conj({l(P::Contains, "x", "z"),
                                                l(P::Contains, "y", "w"),
                                                comp("z", "w")}))}))),
              "definitional; existential quantifier corrected to (z,w)");
    }
  }
  {
    Adder g{out, "COMPAT-SUBS", "subsumption-aggregation.14",
            "subsumption relates compatible entities"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::Subsumption, "x"), l(P::Sub, "x", "y"),
                              l(P::Super, "x", "z")}),
                        comp("y", "z"))));
  }
}

void add_attributes(std::vector<Axiom>& out) {
  {
    Adder g{out, "ATT-DECLAREDON", "attributes-valuetypes.1",
            "what constraints and qualifiers are declared on"};
    struct Clause {
      K a, b;
    };
    std::vector<Clause> clauses = {
        {K::Qualifier, K::Role},
        {K::Qualifier, K::QualifiedRelationship},
        {K::MandatoryConstraint, K::Role},
        {K::InternalUniquenessConstraint, K::Role},
        {K::ExternalIdentification, K::Relationship},
        {K::IdentificationConstraint, K::ValueProperty},
        {K::IdentificationConstraint, K::AttributiveProperty},
        {K::RelationshipEquality, K::Relationship},
        {K::DisjointRelationships, K::Relationship},
        {K::RoleEquality, K::Role},
        {K::DisjointRoles, K::Role},
        {K::DisjointEntities, K::Subsumption},
        {K::ObjectTypeEquality, K::ObjectType},
        {K::CompletenessConstraint, K::Subsumption},
    };
    std::vector<Formula> ds;
    for (const auto& c : clauses) ds.push_back(conj({k(c.a, "x"), k(c.b, "y")}));
    g.ax(Tier::C2, forall({"x", "y"}, implies(l(P::DeclaredOn, "x", "y"), disj(ds))));
    auto role_or_qr = disj({k(K::Role, "y"), k(K::QualifiedRelationship, "y")});
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::Qualifier, "x"),
                               count_eq(1, {"y"},
                                        conj({l(P::DeclaredOn, "x", "y"), role_or_qr})))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Role, "x"),
                        count_le(1, {"y"},
                                 conj({k(K::Qualifier, "y"), l(P::DeclaredOn, "y", "x")})))));
    auto q_on = conj({k(K::Qualifier, "y"), l(P::DeclaredOn, "y", "x")});
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::QualifiedRelationship, "x"),
                               conj({count_ge(1, {"y"}, q_on), count_le(2, {"y"}, q_on)}))));
  }
  {
    Adder g{out, "ATT-DECLHOMOG", "attributes-valuetypes.1",
            "a qualifier is declared on one sort of carrier"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({l(P::DeclaredOn, "x", "y"), l(P::DeclaredOn, "x", "z"),
                              k(K::Qualifier, "x"), k(K::Role, "y")}),
                        k(K::Role, "z"))));
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({l(P::DeclaredOn, "x", "y"), l(P::DeclaredOn, "x", "z"),
                              k(K::Qualifier, "x"), k(K::QualifiedRelationship, "y")}),
                        k(K::QualifiedRelationship, "z"))));
  }
  {
    Adder g{out, "ATT-HASCOMPONENT", "attributes-valuetypes.2",
            "composition (0..*,1..*) of qualifiers from attributes"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::HasComponent, "x", "y"),
                        conj({k(K::Qualifier, "x"),
                              disj({k(K::DimensionalAttribute, "y"), k(K::Attribute, "y")})}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Qualifier, "x"),
                                         count_ge(1, {"y"}, l(P::HasComponent, "x", "y")))));
  }
  {
    Adder g{out, "ATT-DOMAIN", "attributes-valuetypes.3", "domains of properties"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::DomainLink, "x", "y"),
                        disj({conj({k(K::AttributiveProperty, "x"), k(K::Relationship, "y")}),
                              conj({k(K::AttributiveProperty, "x"), k(K::ObjectType, "y")}),
                              conj({k(K::MappedTo, "x"), k(K::ValueType, "y")}),
                              conj({k(K::ValueProperty, "x"), k(K::ObjectType, "y")})}))));
  }
  {
    Adder g{out, "ATT-RANGE", "attributes-valuetypes.4", "ranges of properties"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::RangeLink, "x", "y"),
                        disj({conj({k(K::AttributiveProperty, "x"), k(K::DataType, "y")}),
                              conj({k(K::MappedTo, "x"), k(K::DataType, "y")})}))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::AttributiveProperty, "x"),
                        count_eq(1, {"y"},
                                 conj({k(K::DataType, "y"), l(P::RangeLink, "x", "y")})))));
  }
  {
    Adder g{out, "ATT-VALUEPROP", "attributes-valuetypes.5",
            "value properties have object type domains"};
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::ValueProperty, "x"),
                        count_ge(1, {"y"},
                                 conj({l(P::DomainLink, "x", "y"), k(K::ObjectType, "y")})))));
  }
  {
    Adder g{out, "ATT-MAPPEDTO", "attributes-valuetypes.6",
            "mapped-to properties have one data type range"};
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::MappedTo, "x"),
                        count_eq(1, {"y"},
                                 conj({k(K::DataType, "y"), l(P::RangeLink, "x", "y")})))));
  }
  {
    Adder g{out, "ATT-DIMATTR", "attributes-valuetypes.7",
            "ternary (0..*,0..*,0..*) dimensional attribution"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::DimensionalAttribution, "x", "y", "z"),
                        conj({k(K::Dimension, "x"), k(K::DataType, "y"),
                              disj({k(K::ObjectType, "z"), k(K::Relationship, "z")})}))));
  }
  {
    Adder g{out, "ATT-DIMVT", "attributes-valuetypes.8",
            "ternary (0..*,0..*,1) dimensional value typing"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::DimensionalValueTyping, "x", "y", "z"),
                        conj({k(K::Dimension, "x"), k(K::DataType, "y"),
                              k(K::DimensionalValueType, "z")}))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::DimensionalValueType, "x"),
                        count_eq(1, {"y", "z"},
                                 l3(P::DimensionalValueTyping, "y", "z", "x")))));
  }
}

void add_mandatory(std::vector<Axiom>& out) {
  auto role_declared = [](const char* x) {
    return conj({k(K::Role, "y"), l(P::DeclaredOn, x, "y")});
  };
  {
    Adder g{out, "MAND-MIN", "mandatory.1",
            "mandatory constraints cover at least one role"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::MandatoryConstraint, "x"),
                                         count_ge(1, {"y"}, role_declared("x")))));
  }
  {
    Adder g{out, "MAND-DISJ", "mandatory.2",
            "disjunctive mandatory constraints cover at least two roles"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::DisjunctiveMandatory, "x"),
                                         count_ge(2, {"y"}, role_declared("x")))));
  }
  {
    Adder g{out, "MAND-SINGLE", "mandatory.3",
            "relation (0..1,1) between plain mandatory constraints and roles"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::Mandatory, "x"),
                                         count_eq(1, {"y"}, role_declared("x")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Role, "x"),
                        count_le(1, {"y"},
                                 conj({l(P::DeclaredOn, "y", "x"), k(K::Mandatory, "y")})))));
  }
  {
    Adder g{out, "MAND-DIFFREL", "mandatory.4",
            "roles sharing a mandatory constraint sit in different relationships"};
    g.ax(Tier::Star,
         forall({"x", "y", "z", "v", "w"},
                implies(conj({k(K::MandatoryConstraint, "x"), k(K::Role, "y"),
                              k(K::Role, "z"), neg(eq("y", "z")), l(P::DeclaredOn, "x", "y"),
                              l(P::DeclaredOn, "x", "z"), l(P::Contains, "w", "y"),
                              l(P::Contains, "v", "z"), k(K::Relationship, "v"),
                              k(K::Relationship, "w")}),
                        neg(eq("w", "v")))),
         "distinctness of the two roles added to the antecedent");
  }
}

void add_uniqueness(std::vector<Axiom>& out, size_t max_arity) {
  {
    Adder g{out, "UNIQ-INT", "uniqueness.1",
            "internal uniqueness constraints cover at least one role"};
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::InternalUniquenessConstraint, "x"),
                        count_ge(1, {"y"},
                                 conj({k(K::Role, "y"), l(P::DeclaredOn, "x", "y")})))));
  }
  {
    Adder g{out, "UNIQ-EXT", "uniqueness.2",
            "ternary (1,0;2..*,0;2..*) external uniqueness"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(l3(P::ExtUnique, "x", "y", "z"),
                        conj({k(K::ExternalUniquenessConstraint, "x"), k(K::Role, "y"),
                              k(K::Relationship, "z"), l(P::Contains, "z", "y")}))),
         "the containment conjunct joins two positions, hence outside the fragment");
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::ExternalUniquenessConstraint, "x"),
                               count_eq(1, {"y", "z"}, l3(P::ExtUnique, "x", "y", "z")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Role, "x"),
                        disj({count_eq(0, {"y", "z"}, l3(P::ExtUnique, "y", "x", "z")),
                              count_ge(2, {"y", "z"}, l3(P::ExtUnique, "y", "x", "z"))}))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Relationship, "x"),
                        disj({count_eq(0, {"y", "z"}, l3(P::ExtUnique, "y", "z", "x")),
                              count_ge(2, {"y", "z"}, l3(P::ExtUnique, "y", "z", "x"))}))));
  }
  {
    Adder g{out, "UNIQ-SPAN", "uniqueness.3",
            "an internal uniqueness constraint spans fewer roles than its relationship"};
    for (size_t n = 1; n <= max_arity; ++n) {
      g.ax_id(Tier::Star, "n" + std::to_string(n),
              forall({"x", "y", "z"},
                     implies(conj({k(K::InternalUniquenessConstraint, "x"), k(K::Role, "y"),
                                   l(P::DeclaredOn, "x", "y"), k(K::Relationship, "z"),
                                   l(P::Contains, "z", "y")}),
                             implies(count_eq(n, {"w"}, l(P::Contains, "z", "w")),
                                     count_le(n, {"v"}, l(P::DeclaredOn, "x", "v"))))),
              "biconditional weakened to an implication");
    }
  }
  {
    Adder g{out, "UNIQ-EXTMATCH", "uniqueness.4",
            "external uniqueness pairs one role per relationship"};
    for (size_t n = 1; n <= max_arity; ++n) {
      g.ax_id(
          Tier::Star, "n" + std::to_string(n),
          forall({"x"},
                 implies(k(K::ExternalUniquenessConstraint, "x"),
                         iff(count_eq(n, {"y"},
                                      exists({"z"}, l3(P::ExtUnique, "x", "y", "z"))),
                             count_eq(n, {"z"},
                                      exists({"y"}, l3(P::ExtUnique, "x", "y", "z")))))),
          "read as matching counts of distinct roles and distinct relationships");
    }
  }
}

void add_identification(std::vector<Axiom>& out) {
  {
    Adder g{out, "ID-PARTIAL", "identification.1",
            "relation (0..*,1) partial identification of qualified relationships"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::PartiallyIdentifies, "x", "y"),
                        conj({k(K::QualifiedIdentification, "x"),
                              k(K::QualifiedRelationship, "y")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::QualifiedIdentification, "x"),
                               count_eq(1, {"y"}, l(P::PartiallyIdentifies, "x", "y")))));
  }
  {
    Adder g{out, "ID-EXTDECL", "identification.2",
            "external identification is declared somewhere"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ExternalIdentification, "x"),
                                         count_ge(1, {"y"}, l(P::DeclaredOn, "x", "y")))));
  }
  {
    Adder g{out, "ID-IDENTIFIES", "identification.3",
            "relation (1..*,1) identification of object types"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::Identifies, "x", "y"),
                        conj({k(K::IdentificationConstraint, "x"), k(K::ObjectType, "y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::IdentificationConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::Identifies, "x", "y")))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ObjectType, "x"),
                                         count_ge(1, {"y"}, l(P::Identifies, "y", "x")))));
  }
  {
    Adder g{out, "ID-HOMOG", "identification.4",
            "an identification constraint is declared on one sort of property"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({l(P::DeclaredOn, "x", "y"), l(P::DeclaredOn, "x", "z"),
                              k(K::IdentificationConstraint, "x"), k(K::ValueProperty, "y")}),
                        k(K::ValueProperty, "z"))));
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({l(P::DeclaredOn, "x", "y"), l(P::DeclaredOn, "x", "z"),
                              k(K::IdentificationConstraint, "x"),
                              k(K::AttributiveProperty, "y")}),
                        k(K::AttributiveProperty, "z"))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::IdentificationConstraint, "x"),
                                         exists({"y"}, l(P::DeclaredOn, "x", "y")))));
  }
  {
    Adder g{out, "ID-SINGLE", "identification.5",
            "relation (0..1,1) single identification"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({l(P::DeclaredOn, "x", "y"), k(K::SingleIdentification, "x")}),
                        disj({k(K::Attribute, "y"), k(K::ValueType, "y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::SingleIdentification, "x"),
                                         count_eq(1, {"y"}, l(P::DeclaredOn, "x", "y")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(disj({k(K::Attribute, "x"), k(K::ValueType, "x")}),
                        count_le(1, {"y"},
                                 conj({l(P::DeclaredOn, "y", "x"),
                                       k(K::SingleIdentification, "y")})))));
  }
  {
    Adder g{out, "ID-WEAK", "identification.6",
            "relation (1..*,1) weak identification of weak object types"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({l(P::Identifies, "x", "y"), k(K::WeakIdentification, "x")}),
                        k(K::WeakObjectType, "y"))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::WeakIdentification, "x"),
                                         count_eq(1, {"y"}, l(P::Identifies, "x", "y")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::WeakObjectType, "x"),
                        count_ge(1, {"y"},
                                 conj({k(K::WeakIdentification, "y"),
                                       l(P::Identifies, "y", "x")})))));
  }
  {
    Adder g{out, "ID-HASSTRONG", "identification.7",
            "relation (0..*,1) from weak object types to their strong types"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::HasStrong, "x", "y"),
                        conj({k(K::WeakObjectType, "x"), k(K::ObjectType, "y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::WeakObjectType, "x"),
                                         count_eq(1, {"y"}, l(P::HasStrong, "x", "y")))));
  }
  {
    Adder g{out, "ID-TC1", "identification.8",
            "weak identification goes through an attribute or one shared relationship"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::WeakIdentification, "x"), l(P::Identifies, "x", "y"),
                              l(P::DeclaredOn, "x", "z")}),
                        disj({conj({k(K::AttributiveProperty, "z"),
                                    l(P::DomainLink, "z", "y")}),
                              count_eq(1, {"v", "w", "s"},
                                       conj({k(K::IdentificationConstraint, "v"),
                                             l(P::Identifies, "v", "w"),
                                             k(K::Relationship, "s"),
                                             l(P::DeclaredOn, "v", "z"), part("s", "w"),
                                             part("s", "y")}))}))));
    g.ax(Tier::Star,
         forall({"x", "y", "v", "s", "t"},
                implies(conj({k(K::WeakIdentification, "x"), l(P::Identifies, "x", "y"),
                              l(P::DeclaredOn, "x", "s"),
                              k(K::IdentificationConstraint, "v"), neg(eq("x", "v")),
                              l(P::Identifies, "v", "t"), l(P::DeclaredOn, "v", "s")}),
                        neg(eq("y", "t")))),
         "unary constraint atom, distinctness of the two constraints added");
  }
  {
    Adder g{out, "ID-TC2", "identification.9",
            "single identification pins the carrier to cardinality one"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::SingleIdentification, "x"), l(P::Identifies, "x", "y"),
                              l(P::DeclaredOn, "x", "z")}),
                        exists({"v"}, conj({l3(P::CardO, "z", "y", "v"),
                                            ac(AttrPred::MinimumCardinality, "v", 1),
                                            ac(AttrPred::MaximumCardinality, "v", 1)})))));
  }
  {
    Adder g{out, "ID-TC3", "identification.10",
            "qualified and external identification are declared on attributive properties"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::QualifiedIdentification, "x"), l(P::DeclaredOn, "x", "y")}),
                        k(K::AttributiveProperty, "y"))));
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::ExternalIdentification, "x"), l(P::DeclaredOn, "x", "y")}),
                        k(K::AttributiveProperty, "y"))));
  }
  {
    Adder g{out, "ID-TC4", "identification.11",
            "partial identification requires a mandatory functional role"};
    g.ax(Tier::Star,
         forall({"x", "y"},
                implies(l(P::PartiallyIdentifies, "x", "y"),
                        exists({"z", "v", "w"},
                               conj({l3(P::RolePlaying, "z", "v", "w"),
                                     l(P::Contains, "y", "z"),
                                     ac(AttrPred::MinimumCardinality, "v", 1),
                                     ac(AttrPred::MaximumCardinality, "v", 1)})))));
  }
}

void add_cardinality(std::vector<Axiom>& out) {
  {
    Adder g{out, "CARDC-R", "cardinality.1",
            "ternary cardinality of attributive properties over relationships"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::CardR, "x", "y", "z"),
                        conj({k(K::AttributiveProperty, "x"), k(K::Relationship, "y"),
                              k(K::CardinalityConstraint, "z")}))));
  }
  {
    Adder g{out, "CARDC-O", "cardinality.2",
            "ternary cardinality of attributive properties over object types"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::CardO, "x", "y", "z"),
                        conj({k(K::AttributiveProperty, "x"), k(K::ObjectType, "y"),
                              k(K::CardinalityConstraint, "z")}))));
  }
  {
    Adder g{out, "CARDC-FREQ", "cardinality.3",
            "ternary (0..*,0;2..*,1) frequency constraints"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::Frequency, "x", "y", "z"),
                        conj({k(K::Relationship, "x"), k(K::Role, "y"),
                              k(K::CompoundCardinalityConstraint, "z")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::CompoundCardinalityConstraint, "x"),
                               count_eq(1, {"y", "z"}, l3(P::Frequency, "y", "z", "x")))));
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::Role, "x"),
                        disj({count_eq(0, {"y", "z"}, l3(P::Frequency, "y", "x", "z")),
                              count_ge(2, {"y", "z"}, l3(P::Frequency, "y", "x", "z"))}))));
  }
  {
    Adder g{out, "CARDC-MINMAX", "cardinality.4",
            "every cardinality constraint carries a bound"};
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::CardinalityConstraint, "x"),
                        exists({"y"}, disj({av(AttrPred::MaximumCardinality, "x", "y"),
                                            av(AttrPred::MinimumCardinality, "x", "y")})))));
  }
  {
    Adder g{out, "CARDC-FREQROLES", "cardinality.5",
            "frequencies on one compound constraint stay inside one relationship"};
    g.ax(Tier::Star,
         forall({"x", "y", "z", "v", "w"},
                implies(conj({l3(P::Frequency, "x", "y", "z"),
                              l3(P::Frequency, "v", "w", "z")}),
                        conj({eq("x", "v"), l(P::Contains, "x", "y"),
                              l(P::Contains, "v", "w")}))),
         "role distinctness dropped from the consequent");
  }
}

void add_values(std::vector<Axiom>& out) {
  {
    Adder g{out, "VAL-CONSTRAINING", "value-constraints.1",
            "ternary (1,0..*,0..*) constraining values"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::ConstrainingValues, "x", "y", "z"),
                        conj({disj({conj({k(K::ValueTypeConstraint, "x"),
                                          k(K::ValueProperty, "y")}),
                                    conj({k(K::RoleValueConstraint, "x"), k(K::Role, "y")}),
                                    conj({k(K::AttributeValueConstraint, "x"),
                                          k(K::Attribute, "y")})}),
                              disj({k(K::ValueEnumeration, "z"), k(K::ValueRange, "z")})}))),
         "quantifier corrected to bind the second position");
    for (K c : {K::ValueTypeConstraint, K::RoleValueConstraint, K::AttributeValueConstraint})
      g.ax(Tier::C2,
           forall({"x"}, implies(k(c, "x"),
                                 count_eq(1, {"y", "z"},
                                          l3(P::ConstrainingValues, "x", "y", "z")))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::ValueEnumeration, "x"), neg(k(K::ValueRange, "x")))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::ValueRange, "x"), neg(k(K::ValueEnumeration, "x")))));
  }
  {
    Adder g{out, "VAL-HASTYPE", "value-constraints.2",
            "relation (0..*,1) typing of value ranges"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::HasType, "x", "y"),
                        conj({k(K::ValueRange, "x"), k(K::DataType, "y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueRange, "x"),
                                         count_eq(1, {"y"}, l(P::HasType, "x", "y")))));
  }
  {
    Adder g{out, "VAL-RANGEATTRS", "value-constraints.3",
            "value ranges carry literal endpoints"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::ValueRange, "x"), av(AttrPred::MinimumValue, "x", "y")}),
                        f::sort_atom(Sort::Literal, "y"))),
         "holds by construction: attribute storage is typed");
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({k(K::ValueRange, "x"), av(AttrPred::MaximumValue, "x", "y")}),
                        f::sort_atom(Sort::Literal, "y"))),
         "holds by construction: attribute storage is typed");
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueRange, "x"),
                                         count_eq(1, {"y"},
                                                  av(AttrPred::MinimumValue, "x", "y")))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueRange, "x"),
                                         count_eq(1, {"y"},
                                                  av(AttrPred::MaximumValue, "x", "y")))));
  }
}

void add_value_comparison(std::vector<Axiom>& out) {
  {
    Adder g{out, "VCMP-PART", "value-comparison.1",
            "value comparison constraints bind a first and a second role"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueComparisonConstraint, "x"),
                                         count_eq(2, {"y"}, part("x", "y")))));
    for (P p : {P::First, P::Second})
      g.ax(Tier::C2,
           forall({"x", "y"},
                  implies(l(p, "x", "y"),
                          disj({conj({k(K::ValueComparisonConstraint, "x"), k(K::Role, "y")}),
                                conj({k(K::RelationshipConstraint, "x"),
                                      k(K::Role, "y")})}))));
    for (P p : {P::First, P::Second})
      g.ax(Tier::C2, forall({"x", "y"}, implies(l(p, "x", "y"), part("x", "y"))));
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({part("x", "y"), k(K::ValueComparisonConstraint, "x")}),
                        disj({l(P::First, "x", "y"), l(P::Second, "x", "y")}))));
    g.ax(Tier::C2,
         forall({"x", "y"}, neg(conj({l(P::First, "x", "y"), l(P::Second, "x", "y"),
                                      k(K::ValueComparisonConstraint, "x")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueComparisonConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::First, "x", "y")))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueComparisonConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::Second, "x", "y")))));
  }
  {
    Adder g{out, "VCMP-OPS", "value-comparison.2",
            "the six comparison operators are nominals"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::ComparisonOperatorOf, "x", "y"),
                        conj({k(K::ValueComparisonConstraint, "x"), k(K::Operator, "y")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::ValueComparisonConstraint, "x"),
                               count_eq(1, {"y"}, l(P::ComparisonOperatorOf, "x", "y")))));
    {
      std::vector<Formula> ds;
      for (size_t i = 0; i < kNominalCount; ++i) ds.push_back(eqn("x", Nominal(i)));
      g.ax(Tier::C2, forall({"x"}, implies(k(K::Operator, "x"), disj(std::move(ds)))));
    }
    for (size_t i = 0; i < kNominalCount; ++i) {
      std::vector<Formula> cs = {k(K::Operator, "x")};
      for (size_t j = 0; j < kNominalCount; ++j)
        if (j != i) cs.push_back(neg(eqn("x", Nominal(j))));
      g.ax(Tier::C2, forall({"x"}, implies(eqn("x", Nominal(i)), conj(std::move(cs)))));
    }
  }
  {
    Adder g{out, "VCMP-ONTYPE", "value-comparison.3",
            "relation (1,0..*) typing the compared values"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::OnValueOfType, "x", "y"),
                        conj({k(K::ValueComparisonConstraint, "x"), k(K::DataType, "y")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::ValueComparisonConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::OnValueOfType, "x", "y")))));
  }
  {
    Adder g{out, "VCMP-SAMETYPE", "value-comparison.4",
            "compared roles play into one shared data type"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::ValueComparisonConstraint, "x"), l(P::First, "x", "y"),
                              l(P::Second, "x", "z")}),
                        exists({"u", "v", "w"},
                               conj({l3(P::RolePlaying, "y", "u", "v"),
                                     l3(P::RolePlaying, "z", "w", "v"),
                                     k(K::DataType, "v")})))));
  }
}

void add_equality_disjointness(std::vector<Axiom>& out) {
  {
    Adder g{out, "EQD-DECL2", "equality-disjointness.1",
            "equality and disjointness constraints cover at least two carriers"};
    for (K c : {K::RelationshipEquality, K::DisjointRelationships, K::RoleEquality,
                K::DisjointRoles})
      g.ax(Tier::C2, forall({"x"}, implies(k(c, "x"),
                                           count_ge(2, {"y"}, l(P::DeclaredOn, "x", "y")))));
  }
  {
    Adder g{out, "EQD-DECL1", "equality-disjointness.2",
            "completeness and entity disjointness sit on one subsumption"};
    for (K c : {K::CompletenessConstraint, K::DisjointEntities})
      g.ax(Tier::C2, forall({"x"}, implies(k(c, "x"),
                                           count_eq(1, {"y"}, l(P::DeclaredOn, "x", "y")))));
  }
  {
    Adder g{out, "EQD-HASPART", "equality-disjointness.3",
            "relation (0..*,2..*) participants of completeness and disjointness"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::HasParticipant, "x", "y"),
                        conj({disj({k(K::CompletenessConstraint, "x"),
                                    k(K::DisjointEntities, "x")}),
                              k(K::Entity, "y"), neg(k(K::QualifiedRelationship, "y")),
                              neg(k(K::Subsumption, "y")),
                              neg(k(K::AttributiveProperty, "y")), neg(k(K::Qualifier, "y")),
                              neg(k(K::Constraint, "y"))}))));
    for (K c : {K::CompletenessConstraint, K::DisjointEntities})
      g.ax(Tier::C2,
           forall({"x"}, implies(k(c, "x"),
                                 count_ge(2, {"y"}, l(P::HasParticipant, "x", "y")))));
  }
  {
    Adder g{out, "EQD-TC", "equality-disjointness.4",
            "participants line up with the declared subsumptions and carriers"};
    for (K c : {K::DisjointEntities, K::CompletenessConstraint}) {
      g.ax(Tier::Star,
           forall({"x", "y"},
                  implies(conj({k(c, "x"), l(P::HasParticipant, "x", "y")}),
                          exists({"z"}, conj({l(P::DeclaredOn, "x", "z"),
                                              k(K::Subsumption, "z"), l(P::Sub, "z", "y")})))));
      g.ax(Tier::Star,
           forall({"x", "y", "z"},
                  implies(conj({k(c, "x"), l(P::DeclaredOn, "x", "y"), l(P::Sub, "y", "z")}),
                          l(P::HasParticipant, "x", "z"))));
    }
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::DisjointRelationships, "x"), l(P::DeclaredOn, "x", "y"),
                              l(P::DeclaredOn, "x", "z")}),
                        comp("y", "z"))));
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::DisjointRoles, "x"), l(P::DeclaredOn, "x", "y"),
                              l(P::DeclaredOn, "x", "z"), neg(eq("y", "z"))}),
                        comp("y", "z"))),
         "distinctness moved into the antecedent; inner quantifier then dissolves");
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::RoleEquality, "x"), l(P::DeclaredOn, "x", "y"),
                              l(P::DeclaredOn, "x", "z"), neg(eq("y", "z"))}),
                        comp("y", "z"))),
         "distinctness moved into the antecedent; inner quantifier then dissolves");
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::RelationshipEquality, "x"), l(P::DeclaredOn, "x", "y"),
                              l(P::DeclaredOn, "x", "z")}),
                        comp("y", "z"))));
  }
}

void add_relationship_constraints(std::vector<Axiom>& out) {
  {
    Adder g{out, "RELP-PART", "relationship-properties.1",
            "relation (0..4,2) participation of relationship constraints"};
    g.ax(Tier::C2, forall({"x"}, implies(k(K::RelationshipConstraint, "x"),
                                         count_eq(2, {"y"}, part("x", "y")))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::Role, "x"), count_le(4, {"y"}, part("y", "x")))));
  }
  {
    Adder g{out, "RELP-FIRSTSECOND", "relationship-properties.2",
            "relationship constraints bind a first and second role"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(conj({part("x", "y"), k(K::RelationshipConstraint, "x")}),
                        disj({l(P::First, "x", "y"), l(P::Second, "x", "y")}))));
    g.ax(Tier::C2,
         forall({"x", "y"}, neg(conj({l(P::First, "x", "y"), l(P::Second, "x", "y"),
                                      k(K::RelationshipConstraint, "x")}))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::RelationshipConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::First, "x", "y")))));
    g.ax(Tier::C2, forall({"x"}, implies(k(K::RelationshipConstraint, "x"),
                                         count_eq(1, {"y"}, l(P::Second, "x", "y")))));
  }
  {
    Adder g{out, "RELP-TC", "relationship-properties.3",
            "the two constrained roles are compatible and share a relationship"};
    g.ax(Tier::Star,
         forall({"x", "y", "z"},
                implies(conj({k(K::RelationshipConstraint, "x"), l(P::First, "x", "y"),
                              l(P::Second, "x", "z")}),
                        conj({comp("y", "z"),
                              exists({"w"}, conj({l(P::Contains, "w", "y"),
                                                  l(P::Contains, "w", "z")}))}))),
         "unary constraint atom in the guard");
  }
}

void add_joins(std::vector<Axiom>& out) {
  {
    Adder g{out, "JOIN-JOINING", "join-constraints.1",
            "ternary (0..*,1,0..*) joining of relationships, constraints, roles"};
    g.ax(Tier::C2,
         forall({"x", "y", "z"},
                implies(l3(P::Joining, "x", "y", "z"),
                        conj({k(K::Relationship, "x"), k(K::Role, "z"),
                              k(K::JoinConstraint, "y")}))));
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::JoinConstraint, "x"),
                               count_eq(1, {"y", "z"}, l3(P::Joining, "y", "x", "z")))));
  }
  {
    Adder g{out, "JOIN-PARTICIPATES", "join-constraints.2",
            "relations (3..4,0..*) and (4,0..*) participation in joins"};
    g.ax(Tier::C2,
         forall({"x", "y"},
                implies(l(P::ParticipatesIn, "x", "y"),
                        conj({k(K::JoinConstraint, "y"),
                              disj({k(K::Relationship, "x"), k(K::Role, "x")})}))));
    auto rel_in = conj({k(K::Relationship, "y"), l(P::ParticipatesIn, "y", "x")});
    g.ax(Tier::C2,
         forall({"x"}, implies(k(K::JoinConstraint, "x"),
                               disj({count_eq(3, {"y"}, rel_in), count_eq(4, {"y"}, rel_in)}))),
         "argument order in the second disjunct fixed");
    g.ax(Tier::C2,
         forall({"x"},
                implies(k(K::JoinConstraint, "x"),
                        count_eq(4, {"y"},
                                 conj({k(K::Role, "y"), l(P::ParticipatesIn, "y", "x")})))));
  }
  {
    Adder g{out, "JOIN-TC1", "join-constraints.3",
            "joined roles come from participating relationships"};
    g.ax(Tier::Star,
         forall({"x", "y"},
                implies(conj({k(K::JoinConstraint, "x"), k(K::Role, "y"),
                              l(P::ParticipatesIn, "y", "x")}),
                        exists({"z"}, conj({k(K::Relationship, "z"), l(P::Contains, "z", "y"),
                                            l(P::ParticipatesIn, "z", "x")})))));
  }
}

}  // namespace

std::vector<Axiom> axiom_catalog(const TaxonomyCatalog& cat, size_t max_arity) {
  std::vector<Axiom> out;
  out.reserve(340);
  add_taxonomy(out, cat);
  add_relationships(out);
  add_subsumption(out);
  add_aggregation(out);
  add_compatibility(out, max_arity);
  add_attributes(out);
  add_mandatory(out);
  add_uniqueness(out, max_arity);
  add_identification(out);
  add_cardinality(out);
  add_values(out);
  add_value_comparison(out);
  add_equality_disjointness(out);
  add_relationship_constraints(out);
  add_joins(out);
  return out;
}

std::vector<std::string> catalog_groups() {
  return {
      "TAX-ENT",        "TAX-CON",        "REL-CONTAINS",       "REL-ROLEPLAYING",
      "CARD-ATTR",      "REL-REIFIED",    "REL-REIFIED-COH",    "SUB-PARTICIPANT",
      "SUB-SUB",        "SUB-SUPER",      "SUB-PHI",            "AGG-PART",
      "AGG-WHOLE",      "AGG-SHARED-XOR", "AGG-SHARED-AND",     "PW-IRR-ASYM",
      "AGG-COMPOSITE-PART", "AGG-COMPOSITE-WHOLE", "COMPAT-DEF", "COMPAT-ROLE",
      "COMPAT-REL",     "COMPAT-SUBS",    "ATT-DECLAREDON",     "ATT-DECLHOMOG",
      "ATT-HASCOMPONENT", "ATT-DOMAIN",   "ATT-RANGE",          "ATT-VALUEPROP",
      "ATT-MAPPEDTO",   "ATT-DIMATTR",    "ATT-DIMVT",          "MAND-MIN",
      "MAND-DISJ",      "MAND-SINGLE",    "MAND-DIFFREL",       "UNIQ-INT",
      "UNIQ-EXT",       "UNIQ-SPAN",      "UNIQ-EXTMATCH",      "ID-PARTIAL",
      "ID-EXTDECL",     "ID-IDENTIFIES",  "ID-HOMOG",           "ID-SINGLE",
      "ID-WEAK",        "ID-HASSTRONG",   "ID-TC1",             "ID-TC2",
      "ID-TC3",         "ID-TC4",         "CARDC-R",            "CARDC-O",
      "CARDC-FREQ",     "CARDC-MINMAX",   "CARDC-FREQROLES",    "VAL-CONSTRAINING",
      "VAL-HASTYPE",    "VAL-RANGEATTRS", "VCMP-PART",          "VCMP-OPS",
      "VCMP-ONTYPE",    "VCMP-SAMETYPE",  "EQD-DECL2",          "EQD-DECL1",
      "EQD-HASPART",    "EQD-TC",         "RELP-PART",          "RELP-FIRSTSECOND",
      "RELP-TC",        "JOIN-JOINING",   "JOIN-PARTICIPATES",  "JOIN-TC1",
  };
}

namespace {

bool unary_combo(const Formula& fm, const std::set<std::string>& bound) {
  switch (fm->tag) {
    case FTag::KindAtom:
    case FTag::SortAtom:
      return fm->terms[0].is_var() && bound.count(fm->terms[0].var) > 0;
    case FTag::Eq:
      // var = nominal counts as a unary test of the variable
      return fm->terms[0].is_var() && bound.count(fm->terms[0].var) > 0 &&
             !fm->terms[1].is_var();
    case FTag::Not:
    case FTag::And:
    case FTag::Or: {
      for (const auto& c : fm->children)
        if (!unary_combo(c, bound)) return false;
      return true;
    }
    default:
      return false;
  }
}

// forall(tuple) ternary(tuple) -> boolean combination of unary atoms.
bool pattern_ternary_typing(const Formula& fm) {
  if (fm->tag != FTag::Quant || fm->quant != QuantKind::Forall || fm->vars.size() != 3)
    return false;
  const Formula& body = fm->children[0];
  if (body->tag != FTag::Implies) return false;
  const Formula& ante = body->children[0];
  if (ante->tag != FTag::LinkAtom || ante->terms.size() != 3) return false;
  std::set<std::string> vs(fm->vars.begin(), fm->vars.end());
  std::set<std::string> seen;
  for (const auto& t : ante->terms) {
    if (!t.is_var() || !vs.count(t.var)) return false;
    seen.insert(t.var);
  }
  if (seen.size() != 3) return false;
  return unary_combo(body->children[1], vs);
}

// Counting terms over the remaining positions of one ternary atom, with the
// single universal variable in a fixed position.
bool counting_over_ternary(const Formula& fm, const std::string& outer) {
  if (fm->tag != FTag::Quant) return false;
  if (fm->quant == QuantKind::Forall) return false;
  if (fm->vars.size() != 2) return false;
  const Formula& body = fm->children[0];
  const FNode* atom = nullptr;
  if (body->tag == FTag::LinkAtom) {
    atom = body.get();
  } else if (body->tag == FTag::And) {
    for (const auto& c : body->children) {
      if (c->tag == FTag::LinkAtom && c->terms.size() == 3) {
        if (atom) return false;
        atom = c.get();
      } else {
        std::set<std::string> bound(fm->vars.begin(), fm->vars.end());
        bound.insert(outer);
        if (!unary_combo(c, bound)) return false;
      }
    }
  }
  if (!atom || atom->terms.size() != 3) return false;
  std::set<std::string> need(fm->vars.begin(), fm->vars.end());
  need.insert(outer);
  std::set<std::string> seen;
  for (const auto& t : atom->terms) {
    if (!t.is_var() || !need.count(t.var)) return false;
    seen.insert(t.var);
  }
  return seen.size() == 3;
}

bool counting_combo(const Formula& fm, const std::string& outer) {
  switch (fm->tag) {
    case FTag::And:
    case FTag::Or:
    case FTag::Not: {
      for (const auto& c : fm->children)
        if (!counting_combo(c, outer)) return false;
      return true;
    }
    case FTag::Quant:
      return counting_over_ternary(fm, outer);
    default:
      return false;
  }
}

// forall(x) guard(x) -> combination of counting quantifiers over the other
// two positions of a ternary atom.
bool pattern_ternary_counting(const Formula& fm) {
  if (fm->tag != FTag::Quant || fm->quant != QuantKind::Forall || fm->vars.size() != 1)
    return false;
  const Formula& body = fm->children[0];
  if (body->tag != FTag::Implies) return false;
  std::set<std::string> outer{fm->vars[0]};
  if (!unary_combo(body->children[0], outer)) return false;
  return counting_combo(body->children[1], fm->vars[0]);
}

}  // namespace

bool audit_c2(const Formula& fm) {
  FormulaFeatures ft = scan_features(fm);
  if (ft.var_names.size() <= 2 && ft.max_link_arity <= 2) return true;
  return pattern_ternary_typing(fm) || pattern_ternary_counting(fm);
}

std::string manifest_tsv(const std::vector<Axiom>& axioms) {
  std::ostringstream os;
  os << "axiom_id\ttier\tbullet\tnote\n";
  for (const auto& a : axioms)
    os << a.id << "\t" << to_string(a.tier) << "\t" << a.bullet << "\t" << a.note << "\n";
  return os.str();
}

std::vector<std::string> bullet_slugs() {
  std::vector<std::string> out;
  auto add = [&](const char* prefix, int n) {
    for (int i = 1; i <= n; ++i) out.push_back(std::string(prefix) + "." + std::to_string(i));
  };
  add("entity-taxonomy", 11);
  add("constraint-taxonomy", 23);
  add("relationship-role", 5);
  add("subsumption-aggregation", 14);
  add("attributes-valuetypes", 8);
  add("mandatory", 4);
  add("uniqueness", 4);
  add("identification", 11);
  add("cardinality", 5);
  add("value-constraints", 3);
  add("value-comparison", 4);
  add("equality-disjointness", 4);
  add("relationship-properties", 3);
  add("join-constraints", 3);
  return out;
}

}  // namespace cmv
