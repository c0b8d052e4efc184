// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "peircelex/diagram.hpp"
#include "peircelex/logic.hpp"
#include "peircelex/signature.hpp"

namespace peircelex {

/// Dense tensor, row-major. For a diagram (x, y) the axes are the wires of
/// x then the wires of y, left to right.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() : data(1, 0.0) {}
  explicit Tensor(std::vector<std::size_t> shape_, double fill = 0.0);

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  double& at(const std::vector<std::size_t>& index);
  double at(const std::vector<std::size_t>& index) const;
  bool operator==(const Tensor&) const = default;
};

/// Nested JSON arrays, or a number for rank 0.
std::string tensor_to_json(const Tensor& t);

/// Semantics of a box with holes: filling tensors to the box tensor.
/// `relational` is set when evaluating in Rel.
using HomsetOperator = std::function<Tensor(const std::vector<Tensor>& fillings, bool relational)>;

/// Named operators; the default registry has `twice`, which composes the
/// single (x, x) filling with itself.
class OperatorRegistry {
 public:
  static OperatorRegistry defaults();
  void add(const std::string& name, HomsetOperator op);
  const HomsetOperator* find(const std::string& name) const;

 private:
  std::map<std::string, HomsetOperator> ops_;
};

/// Dimensions per object and one tensor per box.
struct TensorInterp {
  std::map<std::string, std::size_t> dims;
  std::map<std::string, Tensor> boxes;
  OperatorRegistry operators = OperatorRegistry::defaults();
};
using RelInterp = TensorInterp;
using VectInterp = TensorInterp;

/// {"dims": {"N": 2}, "boxes": {"man": [...]}}. Tensor shapes are checked
/// when a box is evaluated.
TensorInterp interp_from_json(std::string_view text);

/// Boolean semantics: composition is relational composition, cuts are
/// complements, spiders, cups and caps are diagonals. Entries are 0 or 1.
/// Throws Error(MissingSymbol) for boxes without a tensor and
/// Error(ShapeMismatch) for tensors of the wrong shape.
Tensor eval_rel(const Diagram& d, const RelInterp& interp);

/// Real tensor contraction. Spiders are generalized Kronecker deltas.
/// Throws Error(Unsupported) for cuts.
Tensor eval_vect(const Diagram& d, const VectInterp& interp);

/// Predicates become boolean tensors with wires in boundary order
/// (following each box's fol_order); every object gets the universe size.
/// Throws Error(MissingSymbol) for boxes without a predicate and
/// Error(InvalidArgument) on arity mismatch.
RelInterp model_to_relinterp(const Model& m, const MonoidalSignature& sig);

/// Predicate symbols of a diagram signature: one per box without holes,
/// of arity dom + cod.
LogicSignature logic_signature_of(const MonoidalSignature& sig);

}  // namespace peircelex
