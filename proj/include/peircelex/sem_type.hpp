// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peircelex/types.hpp"

namespace peircelex {

/// One component of a diagram-shape boundary inside a semantic type.
///
/// Variables come in two sorts: list variables stand for an arbitrary
/// ObjectList, object variables for exactly one object. `*Meta` items are
/// unification variables that only exist while type checking.
struct ShapeItem {
  enum class Kind { Object, ObjectVar, ListVar, ObjectMeta, ListMeta };

  Kind kind = Kind::Object;
  std::string name;

  static ShapeItem object(std::string n) { return {Kind::Object, std::move(n)}; }
  static ShapeItem list_var(std::string n) { return {Kind::ListVar, std::move(n)}; }
  static ShapeItem object_var(std::string n) { return {Kind::ObjectVar, std::move(n)}; }

  /// Stands for exactly one object.
  bool is_single() const {
    return kind == Kind::Object || kind == Kind::ObjectVar || kind == Kind::ObjectMeta;
  }
  bool is_meta() const { return kind == Kind::ObjectMeta || kind == Kind::ListMeta; }

  bool operator==(const ShapeItem&) const = default;
};

using ShapeSeq = std::vector<ShapeItem>;

ShapeSeq to_shape_seq(const ObjectList& objects);

/// The object list when the sequence is variable free.
std::optional<ObjectList> to_objects(const ShapeSeq& seq);

std::string format_shape_seq(const ShapeSeq& seq);

/// Semantic types: diagram shapes, functions, shape-polymorphic products and
/// the two ground types of first-order logic (formulae φ and terms τ).
class SemType {
 public:
  enum class Kind { Diag, Arrow, Prod, Form, Term };
  enum class Sort { List, Object };

  static SemType diag(ShapeSeq dom, ShapeSeq cod);
  static SemType diag(const DiagramShape& shape);
  static SemType arrow(SemType arg, SemType res);
  static SemType prod(std::string binder, SemType body, Sort sort = Sort::List);
  static SemType form();
  static SemType term();

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const ShapeSeq& dom() const;
  const ShapeSeq& cod() const;
  const SemType& arg() const;
  const SemType& res() const;
  const std::string& binder() const;
  Sort sort() const;
  const SemType& body() const;

  std::string str() const;

  /// Structural equality; product binders are compared up to renaming.
  bool operator==(const SemType& other) const;
  bool operator!=(const SemType& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit SemType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Replaces the variable `var` inside every shape of `t` (respecting
/// shadowing by inner products).
SemType substitute_shape_var(const SemType& t, const std::string& var, const ShapeSeq& value);

/// Parses `(dom, cod)`, `φ`/`form`, `τ`/`term`, `A → B` (right associative)
/// and `∏x. T` (`Pi x. T`). Names bound by an enclosing product become list
/// variables; every other name is an object.
SemType parse_sem_type(std::string_view text);

using AtomAssignment = std::map<std::string, SemType>;

/// Both `x ← y` and `y → x` map to image(y) → image(x).
/// Throws Error(MissingSymbol) when an atom has no image.
SemType semantic_type_of(const GrammarType& type, const AtomAssignment& assignment);

/// True when the type mentions φ or τ anywhere.
bool is_logic_type(const SemType& t);

}  // namespace peircelex
