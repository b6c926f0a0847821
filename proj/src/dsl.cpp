#include "cmv/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cmv {

std::optional<Dialect> dialect_from_string(std::string_view name) {
  if (name == "uml") return Dialect::Uml;
  if (name == "eer") return Dialect::Eer;
  if (name == "orm") return Dialect::Orm;
  return std::nullopt;
}

std::string_view to_string(Dialect d) {
  switch (d) {
    case Dialect::Uml: return "uml";
    case Dialect::Eer: return "eer";
    default: return "orm";
  }
}

const std::vector<AliasEntry>& alias_table() {
  static const std::vector<AliasEntry> table = {
#define CMV_ALIAS(d, t, k) {Dialect::d, t, Kind::k},
#include "dsl_aliases.inc"
#undef CMV_ALIAS
  };
  return table;
}

namespace {

size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

ClassifyResult classify(std::string_view term, Dialect dialect) {
  ClassifyResult r;
  std::vector<std::pair<size_t, std::string>> ranked;
  for (const auto& e : alias_table()) {
    if (e.dialect != dialect) continue;
    if (e.term == term) {
      r.kind = e.kind;
      return r;
    }
    ranked.emplace_back(edit_distance(term, e.term), std::string(e.term));
  }
  std::sort(ranked.begin(), ranked.end());
  for (size_t i = 0; i < ranked.size() && i < 3; ++i)
    r.suggestions.push_back(ranked[i].second);
  return r;
}

std::vector<Kind> minimal_kinds(const TaxonomyCatalog& cat, const KindSet& kinds) {
  std::vector<Kind> out;
  for (size_t i = 0; i < kKindCount; ++i) {
    if (!kinds.test(i)) continue;
    bool dominated = false;
    for (size_t j = 0; j < kKindCount; ++j)
      if (j != i && kinds.test(j) && cat.ancestors[j].test(i)) dominated = true;
    if (!dominated) out.push_back(Kind(i));
  }
  return out;
}

namespace {

struct Token {
  enum class T { Ident, Number, String, Punct, End } t = T::End;
  std::string text;
  size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= src_.size()) return tok;
    char c = src_[pos_];
    if (std::isalpha(uint8_t(c)) || c == '_') {
      tok.t = Token::T::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(uint8_t(src_[pos_])) || src_[pos_] == '_'))
        tok.text += take();
      return tok;
    }
    if (std::isdigit(uint8_t(c))) {
      tok.t = Token::T::Number;
      while (pos_ < src_.size() && std::isdigit(uint8_t(src_[pos_])))
        tok.text += take();
      return tok;
    }
    if (c == '"') {
      tok.t = Token::T::String;
      take();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n')
        tok.text += take();
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        tok.t = Token::T::Punct;
        tok.text = "\"";  // unterminated; reported by the parser
        return tok;
      }
      take();
      return tok;
    }
    tok.t = Token::T::Punct;
    tok.text = take();
    return tok;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(uint8_t(c))) {
        take();
      } else {
        break;
      }
    }
  }
  std::string take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return std::string(1, c);
  }

  std::string_view src_;
  size_t pos_ = 0;
  size_t line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const TaxonomyCatalog& cat) : lex_(text), cat_(cat) {
    advance();
  }

  ParseResult run() {
    while (cur_.t != Token::T::End) statement();
    ParseResult r;
    r.errors = std::move(errors_);
    if (r.errors.empty()) r.graph = std::move(builder_).finish(cat_);
    return r;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void error_at(const Token& tok, std::string msg) {
    errors_.push_back({tok.line, tok.col, std::move(msg)});
  }

  // Skips to just past the next "." so one bad statement does not cascade.
  void recover() {
    while (cur_.t != Token::T::End && !(cur_.t == Token::T::Punct && cur_.text == "."))
      advance();
    if (cur_.t != Token::T::End) advance();
  }

  bool expect_punct(const char* p) {
    if (cur_.t == Token::T::Punct && cur_.text == p) {
      advance();
      return true;
    }
    error_at(cur_, std::string("expected '") + p + "', found '" + cur_.text + "'");
    return false;
  }

  std::optional<std::string> expect_ident(const char* what) {
    if (cur_.t == Token::T::Ident) {
      std::string s = cur_.text;
      advance();
      return s;
    }
    error_at(cur_, std::string("expected ") + what + ", found '" + cur_.text + "'");
    return std::nullopt;
  }

  void statement() {
    if (cur_.t != Token::T::Ident) {
      error_at(cur_, "expected a statement keyword, found '" + cur_.text + "'");
      recover();
      return;
    }
    std::string kw = cur_.text;
    if (kw == "entity") {
      advance();
      entity_statement();
    } else if (kw == "link") {
      advance();
      link_statement();
    } else if (kw == "attr") {
      advance();
      attr_statement();
    } else {
      error_at(cur_, "unknown statement '" + kw + "' (expected entity, link or attr)");
      recover();
    }
  }

  std::optional<Kind> kind_term() {
    Token tok = cur_;
    auto name = expect_ident("a kind label");
    if (!name) return std::nullopt;
    if (cur_.t == Token::T::Punct && cur_.text == ":") {
      auto d = dialect_from_string(*name);
      if (!d) {
        error_at(tok, "unknown dialect '" + *name + "' (expected uml, eer or orm)");
        return std::nullopt;
      }
      advance();
      Token term_tok = cur_;
      std::string term;
      if (cur_.t == Token::T::String || cur_.t == Token::T::Ident) {
        term = cur_.text;
        advance();
      } else {
        error_at(cur_, "expected an alias term after '" + *name + ":'");
        return std::nullopt;
      }
      ClassifyResult r = classify(term, *d);
      if (!r.kind) {
        std::string msg = "unknown alias '" + term + "' for " + std::string(to_string(*d));
        if (!r.suggestions.empty()) {
          msg += " (nearest:";
          for (const auto& s : r.suggestions) msg += " '" + s + "'";
          msg += ")";
        }
        error_at(term_tok, std::move(msg));
        return std::nullopt;
      }
      return r.kind;
    }
    auto k = kind_from_string(*name);
    if (!k) {
      error_at(tok, "unknown kind " + *name);
      return std::nullopt;
    }
    return k;
  }

  void entity_statement() {
    Token name_tok = cur_;
    auto name = expect_ident("an entity name");
    if (!name) {
      recover();
      return;
    }
    if (nominal_from_string(*name)) {
      error_at(name_tok, "'" + *name + "' is a reserved comparison operator name");
      recover();
      return;
    }
    if (!expect_punct(":")) {
      recover();
      return;
    }
    KindSet kinds;
    bool bad = false;
    while (true) {
      auto k = kind_term();
      if (!k) {
        bad = true;
        break;
      }
      kinds.set(size_t(*k));
      if (cur_.t == Token::T::Punct && cur_.text == ",") {
        advance();
        continue;
      }
      break;
    }
    if (bad) {
      recover();
      return;
    }
    if (!expect_punct(".")) {
      recover();
      return;
    }
    if (kinds.none()) {
      error_at(name_tok, "entity '" + *name + "' declares no kind");
      return;
    }
    if (!builder_.add_entity(*name, kinds))
      error_at(name_tok, "redeclaration of '" + *name + "'");
  }

  std::optional<LinkArg> link_argument(LinkPred p, size_t pos) {
    Token tok = cur_;
    auto name = expect_ident("an entity name");
    if (!name) return std::nullopt;
    if (auto e = builder_.find(*name)) return LinkArg::of(*e);
    if (auto n = nominal_from_string(*name)) {
      if (p == LinkPred::ComparisonOperatorOf && pos == 1) return LinkArg::of(*n);
      error_at(tok, "'" + *name +
                        "' is a comparison operator and may only stand as the "
                        "second argument of ComparisonOperatorOf");
      return std::nullopt;
    }
    error_at(tok, "reference to undeclared entity '" + *name + "'");
    return std::nullopt;
  }

  void link_statement() {
    Token pred_tok = cur_;
    auto pname = expect_ident("a link predicate");
    if (!pname) {
      recover();
      return;
    }
    auto p = pred_from_string(*pname);
    if (!p && *pname == "ExternalUnique") p = LinkPred::ExtUnique;
    if (!p) {
      error_at(pred_tok, "unknown link predicate '" + *pname + "'");
      recover();
      return;
    }
    if (!expect_punct("(")) {
      recover();
      return;
    }
    size_t n = arity(*p);
    std::vector<LinkArg> args;
    for (size_t i = 0; i < n; ++i) {
      if (i > 0 && !expect_punct(",")) {
        recover();
        return;
      }
      auto a = link_argument(*p, i);
      if (!a) {
        recover();
        return;
      }
      args.push_back(*a);
    }
    if (!expect_punct(")") || !expect_punct(".")) {
      recover();
      return;
    }
    builder_.add_link(*p, std::move(args));
  }

  void attr_statement() {
    Token pred_tok = cur_;
    auto pname = expect_ident("an attribute predicate");
    if (!pname) {
      recover();
      return;
    }
    auto p = attr_pred_from_string(*pname);
    if (!p) {
      error_at(pred_tok, "unknown attribute predicate '" + *pname + "'");
      recover();
      return;
    }
    if (!expect_punct("(")) {
      recover();
      return;
    }
    Token subj_tok = cur_;
    auto sname = expect_ident("an entity name");
    if (!sname) {
      recover();
      return;
    }
    auto subject = builder_.find(*sname);
    if (!subject) {
      error_at(subj_tok, "reference to undeclared entity '" + *sname + "'");
      recover();
      return;
    }
    if (!expect_punct(",")) {
      recover();
      return;
    }
    Token val_tok = cur_;
    if (attr_takes_integer(*p)) {
      IntegerBound v;
      if (cur_.t == Token::T::Number) {
        v = IntegerBound::of(std::stoull(cur_.text));
        advance();
      } else if (cur_.t == Token::T::Ident && cur_.text == "many") {
        v = IntegerBound::unbounded();
        advance();
      } else {
        error_at(val_tok, std::string(to_string(*p)) +
                              " expects an unsigned integer or many, found '" +
                              cur_.text + "'");
        recover();
        return;
      }
      if (!expect_punct(")") || !expect_punct(".")) {
        recover();
        return;
      }
      builder_.add_attr(*p, *subject, v);
    } else {
      if (cur_.t != Token::T::String) {
        error_at(val_tok, std::string(to_string(*p)) +
                              " expects a quoted string, found '" + cur_.text + "'");
        recover();
        return;
      }
      std::string v = cur_.text;
      advance();
      if (!expect_punct(")") || !expect_punct(".")) {
        recover();
        return;
      }
      builder_.add_attr(*p, *subject, std::move(v));
    }
  }

  Lexer lex_;
  const TaxonomyCatalog& cat_;
  Token cur_;
  GraphBuilder builder_;
  std::vector<ParseError> errors_;
};

}  // namespace

ParseResult parse(std::string_view text, const TaxonomyCatalog& cat) {
  return Parser(text, cat).run();
}

bool structurally_equal(const ModelGraph& a, const ModelGraph& b) {
  if (a.entity_count() != b.entity_count()) return false;
  std::vector<EntityId> a_to_b(a.entity_count());
  for (EntityId e = 0; e < a.entity_count(); ++e) {
    auto it = b.by_name.find(a.names[e]);
    if (it == b.by_name.end() || a.kinds[e] != b.kinds[it->second]) return false;
    a_to_b[e] = it->second;
  }
  auto remap = [&](LinkArg x) {
    if (x.is_entity()) x.entity = a_to_b[x.entity];
    return x;
  };
  std::vector<LinkRecord> links = a.links;
  for (auto& l : links)
    for (size_t i = 0; i < l.arity(); ++i) l.args[i] = remap(l.args[i]);
  std::sort(links.begin(), links.end());
  if (links != b.links) return false;
  std::vector<AttributeRecord> attrs = a.attrs;
  for (auto& r : attrs) r.subject = a_to_b[r.subject];
  std::sort(attrs.begin(), attrs.end());
  return attrs == b.attrs;
}

std::string serialize(const ModelGraph& g) {
  const TaxonomyCatalog& cat = published_catalog();
  std::ostringstream out;
  std::vector<EntityId> order(g.entity_count());
  for (EntityId e = 0; e < g.entity_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](EntityId a, EntityId b) { return g.names[a] < g.names[b]; });
  for (EntityId e : order) {
    out << "entity " << g.names[e] << " : ";
    std::vector<Kind> ks = minimal_kinds(cat, g.kinds[e]);
    std::vector<std::string_view> labels;
    for (Kind k : ks) labels.push_back(to_string(k));
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i < labels.size(); ++i)
      out << (i ? ", " : "") << labels[i];
    out << ".\n";
  }
  // Links and attributes are ordered by predicate and argument names, not by
  // the internal ids their stored order uses, so graphs that differ only in
  // declaration order serialize identically.
  auto arg_name = [&](const LinkArg& a) -> std::string_view {
    return a.is_entity() ? std::string_view(g.names[a.entity]) : to_string(a.nominal);
  };
  std::vector<size_t> link_order(g.links.size());
  for (size_t i = 0; i < link_order.size(); ++i) link_order[i] = i;
  std::sort(link_order.begin(), link_order.end(), [&](size_t i, size_t j) {
    const LinkRecord& a = g.links[i];
    const LinkRecord& b = g.links[j];
    if (a.pred != b.pred) return a.pred < b.pred;
    for (size_t k = 0; k < a.arity(); ++k)
      if (auto c = arg_name(a.args[k]).compare(arg_name(b.args[k])); c != 0) return c < 0;
    return false;
  });
  for (size_t i : link_order) {
    const LinkRecord& l = g.links[i];
    out << "link " << to_string(l.pred) << "(";
    for (size_t k = 0; k < l.arity(); ++k)
      out << (k ? ", " : "") << arg_name(l.args[k]);
    out << ").\n";
  }
  std::vector<size_t> attr_order(g.attrs.size());
  for (size_t i = 0; i < attr_order.size(); ++i) attr_order[i] = i;
  std::sort(attr_order.begin(), attr_order.end(), [&](size_t i, size_t j) {
    const AttributeRecord& a = g.attrs[i];
    const AttributeRecord& b = g.attrs[j];
    if (a.pred != b.pred) return a.pred < b.pred;
    if (auto c = g.names[a.subject].compare(g.names[b.subject]); c != 0) return c < 0;
    if (a.ivalue != b.ivalue) return a.ivalue < b.ivalue;
    return a.svalue < b.svalue;
  });
  for (size_t i : attr_order) {
    const AttributeRecord& a = g.attrs[i];
    out << "attr " << to_string(a.pred) << "(" << g.names[a.subject] << ", ";
    if (a.is_integer())
      out << to_string(a.ivalue);
    else
      out << '"' << a.svalue << '"';
    out << ").\n";
  }
  return out.str();
}

}  // namespace cmv
