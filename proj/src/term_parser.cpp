// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "peircelex/error.hpp"
#include "peircelex/lambda.hpp"
#include "scanner.hpp"

namespace peircelex {

namespace {

// Precedence, loosest first: binders, →, ∨, ∧, =, ;, ∘, ⊗, prefix ¬,
// application, postfix ᵀ and call arguments.
class TermParser {
 public:
  TermParser(std::string_view text, const ConstantTable& consts) : s_(text), consts_(consts) {}

  Term parse() {
    Term t = expr();
    if (!s_.at_end()) s_.fail("unexpected trailing input in term");
    return t;
  }

 private:
  Term constant(const std::string& name, Instantiation explicit_inst = {}) {
    if (!consts_.find(name)) throw Error(ErrorKind::MissingSymbol, "unknown constant '" + name + "'");
    return Term::constant(name, std::move(explicit_inst));
  }

  Term binary(const std::string& name, Term a, Term b) { return Term::apply(constant(name), {std::move(a), std::move(b)}); }

  bool starts_binder() { return s_.peek_any({"λ", "\\"}); }

  bool starts_quantifier() {
    std::size_t save = s_.pos();
    bool q = s_.accept_any({"∀", "∃"}) || s_.accept_word("forall") || s_.accept_word("exists");
    s_.reset(save);
    return q;
  }

  Term expr() {
    if (s_.accept_any({"λ", "\\"})) return lambda();
    if (starts_quantifier()) return quantified();
    Term lhs = disjunction();
    if (s_.accept_any({"→", "->"})) return binary("implies", lhs, expr());
    return lhs;
  }

  // Everything after the text of a type: up to the matching ')'.
  SemType type_until_paren() {
    std::string_view rest = s_.rest();
    int depth = 0;
    std::size_t i = 0;
    for (; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') {
        if (depth == 0) break;
        --depth;
      }
    }
    if (i == rest.size()) s_.fail("unterminated type annotation");
    SemType t = parse_sem_type(rest.substr(0, i));
    s_.reset(s_.pos() + i + 1);
    return t;
  }

  Term lambda() {
    struct Binder {
      std::string name;
      std::optional<SemType> type;
    };
    std::vector<Binder> binders;
    while (!s_.accept(".")) {
      if (s_.accept("(")) {
        std::vector<std::string> names;
        while (s_.peek_ident()) names.push_back(s_.ident());
        if (names.empty()) s_.fail("expected binder name");
        s_.expect(":");
        SemType t = type_until_paren();
        for (auto& n : names) binders.push_back({n, t});
      } else {
        binders.push_back({s_.ident(), std::nullopt});
      }
    }
    if (binders.empty()) s_.fail("lambda without binders");
    for (const auto& b : binders) bound_.push_back(b.name);
    Term body = expr();
    bound_.resize(bound_.size() - binders.size());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(it->name, body, it->type);
    return body;
  }

  Term quantified() {
    bool universal = s_.accept("∀") || s_.accept_word("forall");
    if (!universal && !(s_.accept("∃") || s_.accept_word("exists"))) s_.fail("expected quantifier");
    std::vector<std::string> vars;
    do vars.push_back(s_.ident());
    while (s_.peek_ident());
    s_.expect(".");
    for (const auto& v : vars) bound_.push_back(v);
    Term body = expr();
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = Term::app(constant(universal ? "forall" : "exists"), Term::lam(*it, body));
    return body;
  }

  // Right operand of a binary operator: binders extend to the end.
  template <class Next>
  Term operand(Next next) {
    if (s_.accept_any({"λ", "\\"})) return lambda();
    if (starts_quantifier()) return quantified();
    return (this->*next)();
  }

  Term disjunction() {
    Term lhs = conjunction();
    while (s_.accept_any({"∨", "|"})) lhs = binary("or", lhs, operand(&TermParser::conjunction));
    return lhs;
  }

  Term conjunction() {
    Term lhs = equality();
    while (s_.accept_any({"∧", "&"})) lhs = binary("and", lhs, operand(&TermParser::equality));
    return lhs;
  }

  Term equality() {
    Term lhs = sequence();
    if (s_.accept("=")) return binary("eq", lhs, operand(&TermParser::sequence));
    return lhs;
  }

  Term sequence() {
    Term lhs = composition();
    while (s_.accept(";")) lhs = binary("compose", lhs, operand(&TermParser::composition));
    return lhs;
  }

  Term composition() {
    Term lhs = product();
    while (s_.accept("∘")) {
      Term rhs = operand(&TermParser::product);
      lhs = binary("compose", rhs, lhs);
    }
    return lhs;
  }

  Term product() {
    Term lhs = prefix();
    while (s_.accept_any({"⊗", "*"})) lhs = binary("tensor", lhs, operand(&TermParser::prefix));
    return lhs;
  }

  Term prefix() {
    if (s_.accept_any({"¬", "~"})) return Term::app(constant("not"), prefix());
    return application();
  }

  bool starts_primary() {
    if (s_.at_end()) return false;
    if (s_.peek_ident() || s_.peek_any({"(", "⊤", "⊥", "λ", "\\", "∀", "∃"})) return true;
    return false;
  }

  Term application() {
    Term head = postfix();
    while (starts_primary()) head = Term::app(head, postfix());
    return head;
  }

  Term postfix() {
    Term t = primary();
    while (true) {
      if (s_.accept_any({"ᵀ", "^T"})) {
        t = Term::app(constant("transpose"), t);
      } else if (s_.peek("(") && !s_.peek("()")) {
        std::size_t save = s_.pos();
        s_.expect("(");
        std::vector<Term> args{expr()};
        while (s_.accept(",")) args.push_back(expr());
        if (s_.accept(":")) {
          // `f (t : T)` is an application to an ascribed argument.
          s_.reset(save);
          break;
        }
        s_.expect(")");
        t = Term::apply(t, args);
      } else {
        break;
      }
    }
    return t;
  }

  ShapeSeq objects_until_paren() {
    ShapeSeq out;
    if (s_.peek_digit()) {
      if (s_.number() != 1) s_.fail("expected '1' or object names");
    } else {
      while (s_.peek_ident()) out.push_back(ShapeItem::object(s_.ident()));
    }
    return out;
  }

  Term primary() {
    if (s_.accept_any({"λ", "\\"})) return lambda();
    if (starts_quantifier()) return quantified();
    if (s_.accept("(")) {
      Term inner = expr();
      if (s_.accept(":")) return Term::ann(inner, type_until_paren());
      s_.expect(")");
      return inner;
    }
    if (s_.accept("⊤")) return constant("top");
    if (s_.accept("⊥")) return constant("bottom");
    std::size_t at = s_.pos();
    std::string name = s_.ident();
    if (std::find(bound_.rbegin(), bound_.rend(), name) != bound_.rend()) return Term::var(name);
    if (name == "id" && s_.accept("(")) {
      ShapeSeq x = objects_until_paren();
      s_.expect(")");
      return constant("id", {{"x", x}});
    }
    if (name == "spider") {
      s_.expect("(");
      std::size_t m = s_.number();
      s_.expect(",");
      std::size_t n = s_.number();
      Instantiation ex;
      if (s_.accept(",")) ex["a"] = {ShapeItem::object(s_.ident())};
      s_.expect(")");
      return constant(spider_name(m, n), std::move(ex));
    }
    if ((name == "cup" || name == "cap") && s_.accept("(")) {
      Instantiation ex{{"a", {ShapeItem::object(s_.ident())}}};
      s_.expect(")");
      return constant(name, std::move(ex));
    }
    if (name == "swap" && s_.accept("(")) {
      Instantiation ex{{"a", {ShapeItem::object(s_.ident())}}};
      s_.expect(",");
      ex["b"] = {ShapeItem::object(s_.ident())};
      s_.expect(")");
      return constant(name, std::move(ex));
    }
    if (!consts_.find(name)) {
      s_.reset(at);
      throw Error(ErrorKind::MissingSymbol, "unknown constant '" + name + "'");
    }
    return Term::constant(name);
  }

  detail::Scanner s_;
  const ConstantTable& consts_;
  std::vector<std::string> bound_;
};

}  // namespace

Term parse_term(std::string_view text, const ConstantTable& consts) { return TermParser(text, consts).parse(); }

}  // namespace peircelex
