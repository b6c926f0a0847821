#include "cmv/evaluator.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

namespace cmv {

std::string repr(const ModelGraph& g, const Element& el) {
  switch (el.tag) {
    case Element::Tag::Entity:
      return g.name(el.entity);
    case Element::Tag::Nominal:
      return std::string(to_string(el.nominal));
    case Element::Tag::Int:
      return to_string(el.ivalue);
    case Element::Tag::Lit:
      return el.lit;
  }
  return {};
}

GraphFacts::GraphFacts(const ModelGraph& graph) : g(&graph) {
  participants = derive_participants(graph);
  std::sort(participants.begin(), participants.end());
  compat = derive_compatible(graph);
  std::set<Element> vals;
  for (const auto& a : graph.attrs)
    vals.insert(a.is_integer() ? Element::of_int(a.ivalue) : Element::of_lit(a.svalue));
  value_tokens.assign(vals.begin(), vals.end());
}

bool GraphFacts::participant(EntityId a, EntityId b) const {
  return std::binary_search(participants.begin(), participants.end(), std::pair{a, b});
}

std::vector<Element> universe_for(const GraphFacts& facts, const FormulaFeatures& ft) {
  std::vector<Element> u;
  for (EntityId e = 0; e < facts.g->entity_count(); ++e) u.push_back(Element::of_entity(e));
  if (ft.operator_kind || ft.nominal_constant || ft.comparison_pred)
    for (size_t i = 0; i < kNominalCount; ++i) u.push_back(Element::of_nominal(Nominal(i)));
  if (ft.value_atoms) u.insert(u.end(), facts.value_tokens.begin(), facts.value_tokens.end());
  return u;
}

namespace {

const Element* lookup(const Binding& b, const std::string& name) {
  for (auto it = b.rbegin(); it != b.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

Element resolve(const Term& t, const Binding& b) {
  switch (t.tag) {
    case Term::Tag::Var: {
      const Element* el = lookup(b, t.var);
      assert(el && "unbound variable");
      return *el;
    }
    case Term::Tag::NominalConst:
      return Element::of_nominal(t.nominal);
    case Term::Tag::IntConst:
      return Element::of_int(t.value);
  }
  return {};
}

bool to_link_arg(const Element& el, LinkArg& out) {
  if (el.tag == Element::Tag::Entity) {
    out = LinkArg::of(el.entity);
    return true;
  }
  if (el.tag == Element::Tag::Nominal) {
    out = LinkArg::of(el.nominal);
    return true;
  }
  return false;
}

}  // namespace

bool eval(const GraphFacts& facts, const std::vector<Element>& universe,
          const Formula& fm, Binding& binding) {
  const ModelGraph& g = *facts.g;
  switch (fm->tag) {
    case FTag::KindAtom: {
      Element el = resolve(fm->terms[0], binding);
      if (el.tag == Element::Tag::Nominal) return fm->kind_label == Kind::Operator;
      if (el.tag != Element::Tag::Entity) return false;
      return g.has_kind(el.entity, fm->kind_label);
    }
    case FTag::LinkAtom: {
      LinkArg args[3];
      for (size_t i = 0; i < fm->terms.size(); ++i)
        if (!to_link_arg(resolve(fm->terms[i], binding), args[i])) return false;
      if (fm->terms.size() == 2) return g.has_link(fm->pred, args[0], args[1]);
      return g.has_link(fm->pred, args[0], args[1], args[2]);
    }
    case FTag::AttrAtom: {
      Element subj = resolve(fm->terms[0], binding);
      Element val = resolve(fm->terms[1], binding);
      if (subj.tag != Element::Tag::Entity) return false;
      AttributeRecord rec;
      rec.pred = fm->attr;
      rec.subject = subj.entity;
      if (attr_takes_integer(fm->attr)) {
        if (val.tag != Element::Tag::Int) return false;
        rec.ivalue = val.ivalue;
      } else {
        if (val.tag != Element::Tag::Lit) return false;
        rec.svalue = val.lit;
      }
      return std::binary_search(g.attrs.begin(), g.attrs.end(), rec);
    }
    case FTag::SortAtom: {
      Element el = resolve(fm->terms[0], binding);
      return fm->sort == Sort::Integer ? el.tag == Element::Tag::Int
                                       : el.tag == Element::Tag::Lit;
    }
    case FTag::DerivedAtom: {
      Element a = resolve(fm->terms[0], binding);
      Element b = resolve(fm->terms[1], binding);
      if (a.tag != Element::Tag::Entity || b.tag != Element::Tag::Entity) return false;
      return fm->derived == DerivedPred::Participant
                 ? facts.participant(a.entity, b.entity)
                 : facts.compatible(a.entity, b.entity);
    }
    case FTag::Eq:
      return resolve(fm->terms[0], binding) == resolve(fm->terms[1], binding);
    case FTag::Not:
      return !eval(facts, universe, fm->children[0], binding);
    case FTag::And: {
      for (const auto& c : fm->children)
        if (!eval(facts, universe, c, binding)) return false;
      return true;
    }
    case FTag::Or: {
      for (const auto& c : fm->children)
        if (eval(facts, universe, c, binding)) return true;
      return false;
    }
    case FTag::Implies:
      return !eval(facts, universe, fm->children[0], binding) ||
             eval(facts, universe, fm->children[1], binding);
    case FTag::Iff:
      return eval(facts, universe, fm->children[0], binding) ==
             eval(facts, universe, fm->children[1], binding);
    case FTag::Quant: {
      const size_t k = fm->vars.size();
      const size_t base = binding.size();
      for (const auto& v : fm->vars) binding.emplace_back(v, Element{});
      uint64_t count = 0;
      std::optional<bool> early;
      // Odometer over universe^k; the first variable varies slowest.
      std::vector<size_t> idx(k, 0);
      bool exhausted = universe.empty() && k > 0;
      while (!exhausted && !early) {
        for (size_t i = 0; i < k; ++i) binding[base + i].second = universe[idx[i]];
        bool sat = eval(facts, universe, fm->children[0], binding);
        switch (fm->quant) {
          case QuantKind::Forall:
            if (!sat) early = false;
            break;
          case QuantKind::Exists:
            if (sat) early = true;
            break;
          case QuantKind::CountLE:
          case QuantKind::CountGE:
          case QuantKind::CountEQ:
            if (sat) {
              ++count;
              if (fm->quant == QuantKind::CountGE && count >= fm->count) early = true;
              if (fm->quant != QuantKind::CountGE && count > fm->count) early = false;
            }
            break;
        }
        if (early) break;
        if (k == 0) {
          exhausted = true;
          break;
        }
        size_t pos = k;
        bool wrapped = true;
        while (pos > 0) {
          --pos;
          if (++idx[pos] < universe.size()) {
            wrapped = false;
            break;
          }
          idx[pos] = 0;
        }
        exhausted = wrapped;
      }
      bool result;
      if (early) {
        result = *early;
      } else {
        switch (fm->quant) {
          case QuantKind::Forall:
            result = true;
            break;
          case QuantKind::Exists:
            result = false;
            break;
          case QuantKind::CountLE:
            result = count <= fm->count;
            break;
          case QuantKind::CountGE:
            result = count >= fm->count;
            break;
          default:
            result = count == fm->count;
            break;
        }
      }
      binding.resize(base);
      return result;
    }
  }
  return false;
}

std::vector<Binding> violations_naive(const GraphFacts& facts, const Formula& fm) {
  std::vector<std::string> vars;
  Formula body = fm;
  while (body->tag == FTag::Quant && body->quant == QuantKind::Forall) {
    vars.insert(vars.end(), body->vars.begin(), body->vars.end());
    body = body->children[0];
  }
  std::vector<Element> universe = universe_for(facts, scan_features(fm));
  std::vector<Binding> out;
  if (universe.empty()) return out;
  const size_t k = vars.size();
  Binding binding;
  for (const auto& v : vars) binding.emplace_back(v, Element{});
  std::vector<size_t> idx(k, 0);
  while (true) {
    for (size_t i = 0; i < k; ++i) binding[i].second = universe[idx[i]];
    if (!eval(facts, universe, body, binding)) out.push_back(binding);
    if (k == 0) break;
    size_t pos = k;
    bool wrapped = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < universe.size()) {
        wrapped = false;
        break;
      }
      idx[pos] = 0;
    }
    if (wrapped) break;
  }
  return out;
}

}  // namespace cmv
