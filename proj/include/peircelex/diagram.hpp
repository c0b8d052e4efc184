// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "peircelex/signature.hpp"
#include "peircelex/types.hpp"

namespace peircelex {

/// String diagram in the free monoidal category on a signature with holes,
/// extended with the structural generators of existential graphs
/// (spiders, cups, caps, swaps and cuts).
///
/// Composition is diagrammatic: in `compose(f, g)` the output of `f` feeds
/// the input of `g`. Values are immutable and cheap to copy.
class Diagram {
 public:
  enum class Kind { Identity, Box, Compose, Tensor, Spider, Cup, Cap, Swap, Cut };

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const DiagramShape& shape() const;
  const ObjectList& dom() const { return shape().dom; }
  const ObjectList& cod() const { return shape().cod; }

  /// Box name.
  const std::string& name() const;
  /// Box hole fillings, one per declared hole.
  const std::vector<Diagram>& fillings() const;

  const Diagram& first() const;   // Compose
  const Diagram& second() const;  // Compose
  const Diagram& top() const;     // Tensor
  const Diagram& bottom() const;  // Tensor
  const Diagram& inner() const;   // Cut

  std::size_t legs_in() const;   // Spider
  std::size_t legs_out() const;  // Spider
  /// Spider, Cup and Cap object; left object of a Swap.
  const std::string& object() const;
  const std::string& right_object() const;  // Swap

  /// Generators are everything except Identity, Compose and Tensor.
  bool is_generator() const;

  /// Compact single-line rendering, e.g. `(car ; big) ⊗ id(N)`.
  std::string str() const;

  // Unchecked node constructors; prefer the free functions below.
  static Diagram make_box(std::string name, ObjectList dom, ObjectList cod, std::vector<Diagram> fillings);

 private:
  struct Node;
  friend Diagram identity(const ObjectList&);
  friend Diagram compose(const Diagram&, const Diagram&);
  friend Diagram tensor(const Diagram&, const Diagram&);
  friend Diagram spider(std::size_t, std::size_t, const std::string&);
  friend Diagram cup(const std::string&);
  friend Diagram cap(const std::string&);
  friend Diagram swap(const std::string&, const std::string&);
  friend Diagram cut(const Diagram&);

  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Diagram identity(const ObjectList& type);
/// Identity over declared objects only; throws Error(MissingSymbol).
Diagram identity(const MonoidalSignature& sig, const ObjectList& type);

/// Throws Error(ShapeMismatch) unless cod(first) = dom(second).
Diagram compose(const Diagram& first, const Diagram& second);
Diagram tensor(const Diagram& top, const Diagram& bottom);

/// Instantiates a declared box. Throws Error(MissingSymbol) for unknown
/// boxes and Error(ShapeMismatch) for a wrong filling count or a filling
/// whose shape differs from its hole (the message names the hole index).
Diagram box(const MonoidalSignature& sig, const std::string& name, const std::vector<Diagram>& fillings = {});

Diagram spider(std::size_t legs_in, std::size_t legs_out, const std::string& object);
Diagram cup(const std::string& object);   // A A → 1
Diagram cap(const std::string& object);   // 1 → A A
Diagram swap(const std::string& left, const std::string& right);  // A B → B A
Diagram cut(const Diagram& inner);

/// Bends a state (1, x) into an effect (rev x, 1) with cups, or an effect
/// (x, 1) into a state (1, rev x) with caps. Boundary wire order reverses.
/// Throws Error(ShapeMismatch) when both boundaries are non-empty.
Diagram transpose(const Diagram& d);

/// One generator whiskered by identities.
struct Layer {
  ObjectList left;
  Diagram generator;
  ObjectList right;
};

struct LayeredForm {
  ObjectList dom;
  std::vector<Layer> layers;

  ObjectList cod() const;
  Diagram reconstruct() const;
};

/// Canonical layered decomposition modulo the monoidal-category axioms.
/// Generators are pushed to the earliest layer they can reach by interchange,
/// ties resolved by the smallest left offset. Cut bodies and hole fillings
/// are normalised recursively.
LayeredForm normalize(const Diagram& d);

/// Planar-isotopy equality: same shape and identical normal forms.
bool equal(const Diagram& a, const Diagram& b);

/// Canonical textual key of a diagram's normal form (equal iff keys match).
std::string canonical_key(const Diagram& d);

/// All box names, including those inside fillings and cut bodies.
std::multiset<std::string> boxes_of(const Diagram& d);

/// Number of generators of the given kind, searched recursively.
std::size_t count_generators(const Diagram& d, Diagram::Kind kind);

}  // namespace peircelex
