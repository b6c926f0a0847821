#include "cmv/formula.hpp"

#include <sstream>

namespace cmv {
namespace f {

namespace {
std::shared_ptr<FNode> node(FTag tag) {
  auto n = std::make_shared<FNode>();
  n->tag = tag;
  return n;
}
}  // namespace

Formula kind(Kind k, std::string v) {
  auto n = node(FTag::KindAtom);
  n->kind_label = k;
  n->terms.push_back(Term::v(std::move(v)));
  return n;
}

Formula link(LinkPred p, std::vector<Term> terms) {
  auto n = node(FTag::LinkAtom);
  n->pred = p;
  n->terms = std::move(terms);
  return n;
}

Formula attr(AttrPred p, Term subject, Term value) {
  auto n = node(FTag::AttrAtom);
  n->attr = p;
  n->terms = {std::move(subject), std::move(value)};
  return n;
}

Formula sort_atom(Sort s, std::string v) {
  auto n = node(FTag::SortAtom);
  n->sort = s;
  n->terms.push_back(Term::v(std::move(v)));
  return n;
}

Formula derived(DerivedPred p, std::string a, std::string b) {
  auto n = node(FTag::DerivedAtom);
  n->derived = p;
  n->terms = {Term::v(std::move(a)), Term::v(std::move(b))};
  return n;
}

Formula eq(Term a, Term b) {
  auto n = node(FTag::Eq);
  n->terms = {std::move(a), std::move(b)};
  return n;
}

Formula neg(Formula x) {
  auto n = node(FTag::Not);
  n->children = {std::move(x)};
  return n;
}

Formula conj(std::vector<Formula> xs) {
  auto n = node(FTag::And);
  n->children = std::move(xs);
  return n;
}

Formula disj(std::vector<Formula> xs) {
  auto n = node(FTag::Or);
  n->children = std::move(xs);
  return n;
}

Formula implies(Formula a, Formula b) {
  auto n = node(FTag::Implies);
  n->children = {std::move(a), std::move(b)};
  return n;
}

Formula iff(Formula a, Formula b) {
  auto n = node(FTag::Iff);
  n->children = {std::move(a), std::move(b)};
  return n;
}

namespace {
Formula quant(QuantKind q, uint64_t c, std::vector<std::string> vars, Formula body) {
  auto n = node(FTag::Quant);
  n->quant = q;
  n->count = c;
  n->vars = std::move(vars);
  n->children = {std::move(body)};
  return n;
}
}  // namespace

Formula forall(std::vector<std::string> vars, Formula body) {
  return quant(QuantKind::Forall, 0, std::move(vars), std::move(body));
}
Formula exists(std::vector<std::string> vars, Formula body) {
  return quant(QuantKind::Exists, 0, std::move(vars), std::move(body));
}
Formula count_le(uint64_t c, std::vector<std::string> vars, Formula body) {
  return quant(QuantKind::CountLE, c, std::move(vars), std::move(body));
}
Formula count_ge(uint64_t c, std::vector<std::string> vars, Formula body) {
  return quant(QuantKind::CountGE, c, std::move(vars), std::move(body));
}
Formula count_eq(uint64_t c, std::vector<std::string> vars, Formula body) {
  return quant(QuantKind::CountEQ, c, std::move(vars), std::move(body));
}

}  // namespace f

namespace {

void scan(const Formula& fm, FormulaFeatures& out) {
  switch (fm->tag) {
    case FTag::KindAtom:
      if (fm->kind_label == Kind::Operator) out.operator_kind = true;
      break;
    case FTag::LinkAtom:
      if (fm->pred == LinkPred::ComparisonOperatorOf) out.comparison_pred = true;
      out.max_link_arity = std::max<uint8_t>(out.max_link_arity, uint8_t(arity(fm->pred)));
      break;
    case FTag::AttrAtom:
      out.value_atoms = true;
      break;
    case FTag::SortAtom:
      out.value_atoms = true;
      break;
    default:
      break;
  }
  for (const auto& t : fm->terms) {
    if (t.tag == Term::Tag::NominalConst) out.nominal_constant = true;
    if (t.is_var()) out.var_names.insert(t.var);
  }
  for (const auto& v : fm->vars) out.var_names.insert(v);
  for (const auto& c : fm->children) scan(c, out);
}

std::string term_str(const Term& t) {
  switch (t.tag) {
    case Term::Tag::Var:
      return t.var;
    case Term::Tag::NominalConst:
      return std::string(to_string(t.nominal));
    case Term::Tag::IntConst:
      return to_string(t.value);
  }
  return "?";
}

void print(const Formula& fm, std::ostream& os) {
  auto list = [&](const std::vector<Term>& ts) {
    for (size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << term_str(ts[i]);
  };
  switch (fm->tag) {
    case FTag::KindAtom:
      os << to_string(fm->kind_label) << "(";
      list(fm->terms);
      os << ")";
      break;
    case FTag::LinkAtom:
      os << to_string(fm->pred) << "(";
      list(fm->terms);
      os << ")";
      break;
    case FTag::AttrAtom:
      os << to_string(fm->attr) << "(";
      list(fm->terms);
      os << ")";
      break;
    case FTag::SortAtom:
      os << (fm->sort == Sort::Integer ? "Integer" : "Literal") << "(";
      list(fm->terms);
      os << ")";
      break;
    case FTag::DerivedAtom:
      os << (fm->derived == DerivedPred::Participant ? "Participant" : "Compatible") << "(";
      list(fm->terms);
      os << ")";
      break;
    case FTag::Eq:
      os << "(" << term_str(fm->terms[0]) << "=" << term_str(fm->terms[1]) << ")";
      break;
    case FTag::Not:
      os << "~";
      print(fm->children[0], os);
      break;
    case FTag::And:
    case FTag::Or: {
      os << "(";
      const char* sep = fm->tag == FTag::And ? " & " : " | ";
      for (size_t i = 0; i < fm->children.size(); ++i) {
        if (i) os << sep;
        print(fm->children[i], os);
      }
      os << ")";
      break;
    }
    case FTag::Implies:
      os << "(";
      print(fm->children[0], os);
      os << " -> ";
      print(fm->children[1], os);
      os << ")";
      break;
    case FTag::Iff:
      os << "(";
      print(fm->children[0], os);
      os << " <-> ";
      print(fm->children[1], os);
      os << ")";
      break;
    case FTag::Quant: {
      switch (fm->quant) {
        case QuantKind::Forall:
          os << "forall";
          break;
        case QuantKind::Exists:
          os << "exists";
          break;
        case QuantKind::CountLE:
          os << "atmost " << fm->count;
          break;
        case QuantKind::CountGE:
          os << "atleast " << fm->count;
          break;
        case QuantKind::CountEQ:
          os << "exactly " << fm->count;
          break;
      }
      os << "(";
      for (size_t i = 0; i < fm->vars.size(); ++i) os << (i ? "," : "") << fm->vars[i];
      os << ") ";
      print(fm->children[0], os);
      break;
    }
  }
}

}  // namespace

FormulaFeatures scan_features(const Formula& fm) {
  FormulaFeatures out;
  scan(fm, out);
  return out;
}

std::string to_string(const Formula& fm) {
  std::ostringstream os;
  print(fm, os);
  return os.str();
}

}  // namespace cmv
