// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace peircelex {

/// A list of generating objects. The empty list is the monoidal unit `1`.
using ObjectList = std::vector<std::string>;

/// "1" for the unit, otherwise the object names separated by spaces.
std::string format_objects(const ObjectList& objects);

/// Inverse of format_objects. Accepts "1" or whitespace separated names.
ObjectList parse_objects(std::string_view text);

ObjectList concat(const ObjectList& a, const ObjectList& b);

/// Domain and codomain of a diagram.
struct DiagramShape {
  ObjectList dom;
  ObjectList cod;

  bool operator==(const DiagramShape&) const = default;
};

std::string format_shape(const DiagramShape& shape);

/// Grammatical type of a closed monoidal (Lambek-style) grammar.
///
/// `over(x, y)` is written `x ← y` and takes its argument on the right;
/// `under(y, x)` is written `y → x` and takes its argument on the left.
class GrammarType {
 public:
  enum class Kind { Atom, Over, Under };

  static GrammarType atom(std::string name);
  static GrammarType over(GrammarType result, GrammarType argument);
  static GrammarType under(GrammarType argument, GrammarType result);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  const std::string& name() const;
  const GrammarType& result() const;
  const GrammarType& argument() const;

  /// Unicode arrows; compound operands are parenthesised.
  std::string str() const;

  bool operator==(const GrammarType& other) const;
  bool operator!=(const GrammarType& other) const { return !(*this == other); }

  /// Every atom occurring in the type, left to right, with repetitions.
  std::vector<std::string> atoms() const;

 private:
  struct Node;
  explicit GrammarType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses `←`/`→` (or `<-`/`->`) types. Both arrows are non-associative:
/// nested uses need explicit parentheses. Throws Error(Syntax) with the
/// byte offset of the problem.
GrammarType parse_grammar_type(std::string_view text);

inline const std::vector<std::string>& predefined_atoms() {
  static const std::vector<std::string> atoms{"s", "n", "p", "a"};
  return atoms;
}

}  // namespace peircelex
