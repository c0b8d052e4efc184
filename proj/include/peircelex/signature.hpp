// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "peircelex/types.hpp"

namespace peircelex {

/// A generating box. A box with an empty `holes` list is an ordinary box;
/// otherwise each hole accepts a diagram of the listed shape.
struct BoxDecl {
  std::string name;
  ObjectList dom;
  ObjectList cod;
  std::vector<DiagramShape> holes;

  /// Denotes exactly one individual (proper nouns encoded as states).
  bool singleton = false;

  /// Argument order of the first-order predicate: argument k is boundary
  /// wire fol_order[k], counting dom wires then cod wires. Empty means the
  /// identity order.
  std::vector<std::size_t> fol_order;

  std::size_t arity() const { return dom.size() + cod.size(); }
  DiagramShape shape() const { return {dom, cod}; }
};

class MonoidalSignature {
 public:
  MonoidalSignature() = default;
  MonoidalSignature(std::vector<std::string> objects, std::vector<BoxDecl> boxes)
      : objects_(std::move(objects)), boxes_(std::move(boxes)) {}

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<BoxDecl>& boxes() const { return boxes_; }

  bool has_object(const std::string& name) const;
  const BoxDecl* find_box(const std::string& name) const;

  /// Throws Error(MissingSymbol) for unknown boxes.
  const BoxDecl& box(const std::string& name) const;

  /// Throws Error(MissingSymbol) when some object is not declared.
  void require_objects(const ObjectList& objects) const;

 private:
  std::vector<std::string> objects_;
  std::vector<BoxDecl> boxes_;
};

struct Violation {
  std::string code;     // duplicate-object, duplicate-box, unknown-object, bad-fol-order
  std::string subject;  // offending box or object name
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Empty iff box names are unique, all objects used are declared and every
/// fol_order is a permutation of the box's boundary wires.
std::vector<Violation> validate_signature(const MonoidalSignature& sig);

}  // namespace peircelex
