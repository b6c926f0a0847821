#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cmv/kinds.hpp"

namespace cmv {

// Value sorts that can appear as attribute values.
enum class Sort : uint8_t { Integer, Literal };

enum class DerivedPred : uint8_t { Participant, Compatible };

struct Term {
  enum class Tag : uint8_t { Var, NominalConst, IntConst } tag = Tag::Var;
  std::string var;
  Nominal nominal = Nominal::Less;
  IntegerBound value{};

  static Term v(std::string name) {
    Term t;
    t.tag = Tag::Var;
    t.var = std::move(name);
    return t;
  }
  static Term nom(Nominal n) {
    Term t;
    t.tag = Tag::NominalConst;
    t.nominal = n;
    return t;
  }
  static Term num(uint64_t x) {
    Term t;
    t.tag = Tag::IntConst;
    t.value = IntegerBound::of(x);
    return t;
  }
  bool is_var() const { return tag == Tag::Var; }
};

struct FNode;
using Formula = std::shared_ptr<const FNode>;

enum class FTag : uint8_t {
  KindAtom,     // kind_label(terms[0])
  LinkAtom,     // pred(terms...)
  AttrAtom,     // attr(terms[0], terms[1])
  SortAtom,     // sort(terms[0])
  DerivedAtom,  // derived(terms[0], terms[1])
  Eq,           // terms[0] = terms[1]
  Not,
  And,
  Or,
  Implies,
  Iff,
  Quant
};

enum class QuantKind : uint8_t { Forall, Exists, CountLE, CountGE, CountEQ };

struct FNode {
  FTag tag;

  Kind kind_label = Kind::Entity;
  LinkPred pred = LinkPred::Contains;
  AttrPred attr = AttrPred::MinimumCardinality;
  Sort sort = Sort::Integer;
  DerivedPred derived = DerivedPred::Participant;
  std::vector<Term> terms;

  std::vector<Formula> children;

  QuantKind quant = QuantKind::Forall;
  uint64_t count = 0;
  std::vector<std::string> vars;
};

namespace f {

Formula kind(Kind k, std::string v);
Formula link(LinkPred p, std::vector<Term> terms);
Formula attr(AttrPred p, Term subject, Term value);
Formula sort_atom(Sort s, std::string v);
Formula derived(DerivedPred p, std::string a, std::string b);
Formula eq(Term a, Term b);
Formula neg(Formula x);
Formula conj(std::vector<Formula> xs);
Formula disj(std::vector<Formula> xs);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(std::vector<std::string> vars, Formula body);
Formula exists(std::vector<std::string> vars, Formula body);
Formula count_le(uint64_t c, std::vector<std::string> vars, Formula body);
Formula count_ge(uint64_t c, std::vector<std::string> vars, Formula body);
Formula count_eq(uint64_t c, std::vector<std::string> vars, Formula body);

inline Term v(std::string name) { return Term::v(std::move(name)); }

}  // namespace f

// What a formula mentions; drives the evaluation universe.
struct FormulaFeatures {
  bool operator_kind = false;      // the Operator kind label
  bool nominal_constant = false;   // any of the six comparison nominals
  bool comparison_pred = false;    // the ComparisonOperatorOf predicate
  bool value_atoms = false;        // attribute atoms or Integer/Literal sorts
  std::set<std::string> var_names;
  uint8_t max_link_arity = 0;
};

FormulaFeatures scan_features(const Formula& fm);

std::string to_string(const Formula& fm);

}  // namespace cmv
