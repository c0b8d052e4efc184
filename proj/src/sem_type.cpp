// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/sem_type.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "peircelex/error.hpp"
#include "scanner.hpp"

namespace peircelex {

ShapeSeq to_shape_seq(const ObjectList& objects) {
  ShapeSeq out;
  out.reserve(objects.size());
  for (const auto& o : objects) out.push_back(ShapeItem::object(o));
  return out;
}

std::optional<ObjectList> to_objects(const ShapeSeq& seq) {
  ObjectList out;
  for (const auto& item : seq) {
    if (item.kind != ShapeItem::Kind::Object) return std::nullopt;
    out.push_back(item.name);
  }
  return out;
}

std::string format_shape_seq(const ShapeSeq& seq) {
  if (seq.empty()) return "1";
  std::string out;
  for (const auto& item : seq) {
    if (!out.empty()) out += ' ';
    out += item.name;
  }
  return out;
}

struct SemType::Node {
  Kind kind;
  ShapeSeq dom, cod;
  std::optional<SemType> left, right;  // Arrow: arg, res. Prod: body in left.
  std::string binder;
  Sort sort = Sort::List;
};

SemType SemType::diag(ShapeSeq dom, ShapeSeq cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diag;
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  return SemType(std::move(n));
}

SemType SemType::diag(const DiagramShape& shape) {
  return diag(to_shape_seq(shape.dom), to_shape_seq(shape.cod));
}

SemType SemType::arrow(SemType arg, SemType res) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->left = std::move(arg);
  n->right = std::move(res);
  return SemType(std::move(n));
}

SemType SemType::prod(std::string binder, SemType body, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->binder = std::move(binder);
  n->left = std::move(body);
  n->sort = sort;
  return SemType(std::move(n));
}

SemType SemType::form() {
  static const SemType t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Form;
    return SemType(std::move(n));
  }();
  return t;
}

SemType SemType::term() {
  static const SemType t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Term;
    return SemType(std::move(n));
  }();
  return t;
}

SemType::Kind SemType::kind() const { return node_->kind; }
const ShapeSeq& SemType::dom() const { return node_->dom; }
const ShapeSeq& SemType::cod() const { return node_->cod; }
const SemType& SemType::arg() const { return *node_->left; }
const SemType& SemType::res() const { return *node_->right; }
const std::string& SemType::binder() const { return node_->binder; }
SemType::Sort SemType::sort() const { return node_->sort; }
const SemType& SemType::body() const { return *node_->left; }

std::string SemType::str() const {
  switch (kind()) {
    case Kind::Diag: return "(" + format_shape_seq(dom()) + ", " + format_shape_seq(cod()) + ")";
    case Kind::Form: return "φ";
    case Kind::Term: return "τ";
    case Kind::Prod:
      return "∏" + binder() + (sort() == Sort::Object ? ":ob" : "") + ". " + body().str();
    case Kind::Arrow: {
      std::string lhs = arg().str();
      if (arg().is(Kind::Arrow) || arg().is(Kind::Prod)) lhs = "(" + lhs + ")";
      return lhs + " → " + res().str();
    }
  }
  return {};
}

namespace {

ShapeSeq rename_in_seq(const ShapeSeq& seq, const std::string& from, const ShapeSeq& to) {
  ShapeSeq out;
  for (const auto& item : seq) {
    bool var = item.kind == ShapeItem::Kind::ListVar || item.kind == ShapeItem::Kind::ObjectVar;
    if (var && item.name == from) {
      out.insert(out.end(), to.begin(), to.end());
    } else {
      out.push_back(item);
    }
  }
  return out;
}

bool equal_with(const SemType& a, const SemType& b, int& fresh) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SemType::Kind::Form:
    case SemType::Kind::Term: return true;
    case SemType::Kind::Diag: return a.dom() == b.dom() && a.cod() == b.cod();
    case SemType::Kind::Arrow: return equal_with(a.arg(), b.arg(), fresh) && equal_with(a.res(), b.res(), fresh);
    case SemType::Kind::Prod: {
      if (a.sort() != b.sort()) return false;
      ShapeItem shared{a.sort() == SemType::Sort::List ? ShapeItem::Kind::ListVar : ShapeItem::Kind::ObjectVar,
                       "%" + std::to_string(fresh++)};
      return equal_with(substitute_shape_var(a.body(), a.binder(), {shared}),
                        substitute_shape_var(b.body(), b.binder(), {shared}), fresh);
    }
  }
  return false;
}

}  // namespace

bool SemType::operator==(const SemType& other) const {
  if (node_ == other.node_) return true;
  int fresh = 0;
  return equal_with(*this, other, fresh);
}

SemType substitute_shape_var(const SemType& t, const std::string& var, const ShapeSeq& value) {
  switch (t.kind()) {
    case SemType::Kind::Form:
    case SemType::Kind::Term: return t;
    case SemType::Kind::Diag:
      return SemType::diag(rename_in_seq(t.dom(), var, value), rename_in_seq(t.cod(), var, value));
    case SemType::Kind::Arrow:
      return SemType::arrow(substitute_shape_var(t.arg(), var, value), substitute_shape_var(t.res(), var, value));
    case SemType::Kind::Prod:
      if (t.binder() == var) return t;
      return SemType::prod(t.binder(), substitute_shape_var(t.body(), var, value), t.sort());
  }
  return t;
}

namespace {

class SemTypeParser {
 public:
  explicit SemTypeParser(std::string_view text) : s_(text) {}

  SemType parse() {
    SemType t = type();
    if (!s_.at_end()) s_.fail("unexpected trailing input in semantic type");
    return t;
  }

 private:
  SemType type() {
    if (s_.accept_any({"∏", "Π"}) || s_.accept_word("Pi")) {
      std::string binder = s_.ident();
      s_.expect(".");
      bound_.push_back(binder);
      SemType body = type();
      bound_.pop_back();
      return SemType::prod(binder, body);
    }
    SemType lhs = base();
    if (s_.accept_any({"→", "->"})) return SemType::arrow(lhs, type());
    return lhs;
  }

  SemType base() {
    if (s_.accept_any({"φ", "ϕ"}) || s_.accept_word("phi") || s_.accept_word("form")) return SemType::form();
    if (s_.accept("τ") || s_.accept_word("tau") || s_.accept_word("term")) return SemType::term();
    if (!s_.accept("(")) s_.fail("expected '(' , φ or τ");
    std::size_t save = s_.pos();
    if (auto shape = try_shape()) return *shape;
    s_.reset(save);
    SemType inner = type();
    s_.expect(")");
    return inner;
  }

  // After '(' : "objs , objs )". Returns nullopt without consuming on failure.
  std::optional<SemType> try_shape() {
    auto seq = [&]() -> std::optional<ShapeSeq> {
      ShapeSeq out;
      if (s_.peek_digit()) {
        if (s_.number() != 1) return std::nullopt;
        return out;
      }
      while (s_.peek_ident()) {
        std::string name = s_.ident();
        if (std::find(bound_.begin(), bound_.end(), name) != bound_.end())
          out.push_back(ShapeItem::list_var(name));
        else
          out.push_back(ShapeItem::object(name));
      }
      return out;
    };
    try {
      auto dom = seq();
      if (!dom || !s_.accept(",")) return std::nullopt;
      auto cod = seq();
      if (!cod || !s_.accept(")")) return std::nullopt;
      return SemType::diag(*dom, *cod);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  detail::Scanner s_;
  std::vector<std::string> bound_;
};

}  // namespace

SemType parse_sem_type(std::string_view text) { return SemTypeParser(text).parse(); }

SemType semantic_type_of(const GrammarType& type, const AtomAssignment& assignment) {
  switch (type.kind()) {
    case GrammarType::Kind::Atom: {
      auto it = assignment.find(type.name());
      if (it == assignment.end())
        throw Error(ErrorKind::MissingSymbol, "no semantic type assigned to atom '" + type.name() + "'");
      return it->second;
    }
    case GrammarType::Kind::Over:
    case GrammarType::Kind::Under:
      return SemType::arrow(semantic_type_of(type.argument(), assignment),
                            semantic_type_of(type.result(), assignment));
  }
  throw Error(ErrorKind::Type, "malformed grammar type");
}

bool is_logic_type(const SemType& t) {
  switch (t.kind()) {
    case SemType::Kind::Form:
    case SemType::Kind::Term: return true;
    case SemType::Kind::Diag: return false;
    case SemType::Kind::Arrow: return is_logic_type(t.arg()) || is_logic_type(t.res());
    case SemType::Kind::Prod: return is_logic_type(t.body());
  }
  return false;
}

}  // namespace peircelex
