// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/types.hpp"

#include <optional>
#include <sstream>

#include "peircelex/error.hpp"
#include "scanner.hpp"

namespace peircelex {

const char* error_tag(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax-error";
    case ErrorKind::Type: return "type-error";
    case ErrorKind::NoParse: return "no-parse";
    case ErrorKind::MissingSymbol: return "missing-symbol";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "error";
}

std::string format_objects(const ObjectList& objects) {
  if (objects.empty()) return "1";
  std::string out;
  for (const auto& o : objects) {
    if (!out.empty()) out += ' ';
    out += o;
  }
  return out;
}

ObjectList parse_objects(std::string_view text) {
  ObjectList out;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) out.push_back(word);
  if (out.size() == 1 && out[0] == "1") out.clear();
  return out;
}

ObjectList concat(const ObjectList& a, const ObjectList& b) {
  ObjectList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format_shape(const DiagramShape& shape) {
  return "(" + format_objects(shape.dom) + ", " + format_objects(shape.cod) + ")";
}

struct GrammarType::Node {
  Kind kind;
  std::string name;
  // Over: result ← argument. Under: argument → result.
  std::optional<GrammarType> result;
  std::optional<GrammarType> argument;
};

GrammarType GrammarType::atom(std::string name) {
  return GrammarType(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), std::nullopt, std::nullopt}));
}

GrammarType GrammarType::over(GrammarType result, GrammarType argument) {
  return GrammarType(std::make_shared<const Node>(Node{Kind::Over, {}, std::move(result), std::move(argument)}));
}

GrammarType GrammarType::under(GrammarType argument, GrammarType result) {
  return GrammarType(std::make_shared<const Node>(Node{Kind::Under, {}, std::move(result), std::move(argument)}));
}

GrammarType::Kind GrammarType::kind() const { return node_->kind; }
const std::string& GrammarType::name() const { return node_->name; }

const GrammarType& GrammarType::result() const { return *node_->result; }
const GrammarType& GrammarType::argument() const { return *node_->argument; }

bool GrammarType::operator==(const GrammarType& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (is_atom()) return name() == other.name();
  return result() == other.result() && argument() == other.argument();
}

std::string GrammarType::str() const {
  auto operand = [](const GrammarType& t) { return t.is_atom() ? t.str() : "(" + t.str() + ")"; };
  switch (kind()) {
    case Kind::Atom: return name();
    case Kind::Over: return operand(result()) + " ← " + operand(argument());
    case Kind::Under: return operand(argument()) + " → " + operand(result());
  }
  return {};
}

std::vector<std::string> GrammarType::atoms() const {
  if (is_atom()) return {name()};
  std::vector<std::string> out;
  const GrammarType& first = kind() == Kind::Over ? result() : argument();
  const GrammarType& second = kind() == Kind::Over ? argument() : result();
  for (auto& a : first.atoms()) out.push_back(a);
  for (auto& a : second.atoms()) out.push_back(a);
  return out;
}

namespace {

GrammarType parse_type_expr(detail::Scanner& s);

GrammarType parse_operand(detail::Scanner& s) {
  if (s.accept("(")) {
    GrammarType inner = parse_type_expr(s);
    s.expect(")");
    return inner;
  }
  if (!s.peek_ident()) s.fail("expected atom or '('");
  return GrammarType::atom(s.ident());
}

bool accept_left_arrow(detail::Scanner& s) { return s.accept_any({"←", "<-"}); }
bool accept_right_arrow(detail::Scanner& s) { return s.accept_any({"→", "->"}); }

GrammarType parse_type_expr(detail::Scanner& s) {
  GrammarType lhs = parse_operand(s);
  if (accept_left_arrow(s)) {
    GrammarType rhs = parse_operand(s);
    if (s.peek_any({"←", "<-", "→", "->"})) s.fail("ambiguous arrow chain, add parentheses");
    return GrammarType::over(lhs, rhs);
  }
  if (accept_right_arrow(s)) {
    GrammarType rhs = parse_operand(s);
    if (s.peek_any({"←", "<-", "→", "->"})) s.fail("ambiguous arrow chain, add parentheses");
    return GrammarType::under(lhs, rhs);
  }
  return lhs;
}

}  // namespace

GrammarType parse_grammar_type(std::string_view text) {
  detail::Scanner s(text);
  GrammarType t = parse_type_expr(s);
  if (!s.at_end()) s.fail("unexpected trailing input");
  return t;
}

}  // namespace peircelex
