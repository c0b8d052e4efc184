// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/backends.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "peircelex/error.hpp"

namespace peircelex {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

std::size_t offset(const std::vector<std::size_t>& shape, const std::vector<std::size_t>& index) {
  if (index.size() != shape.size()) throw Error(ErrorKind::InvalidArgument, "tensor index of wrong rank");
  std::size_t off = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (index[k] >= shape[k]) throw Error(ErrorKind::InvalidArgument, "tensor index out of range");
    off = off * shape[k] + index[k];
  }
  return off;
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + "]";
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape_, double fill) : shape(std::move(shape_)), data(product(shape), fill) {}

double& Tensor::at(const std::vector<std::size_t>& index) { return data[offset(shape, index)]; }
double Tensor::at(const std::vector<std::size_t>& index) const { return data[offset(shape, index)]; }

std::string tensor_to_json(const Tensor& t) {
  std::ostringstream out;
  out.precision(17);
  std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t axis, std::size_t base) {
    if (axis == t.shape.size()) {
      out << t.data[base];
      return;
    }
    out << '[';
    const std::size_t stride = product({t.shape.begin() + static_cast<std::ptrdiff_t>(axis) + 1, t.shape.end()});
    for (std::size_t i = 0; i < t.shape[axis]; ++i) {
      if (i) out << ", ";
      emit(axis + 1, base + i * stride);
    }
    out << ']';
  };
  emit(0, 0);
  return out.str();
}

// ---------------------------------------------------------------------------
// Operators

namespace {

// (a, b) then (b, c) for tensors whose first `split` axes are the domain.
Tensor compose_tensors(const Tensor& f, std::size_t f_dom, const Tensor& g, std::size_t g_dom, bool relational) {
  std::vector<std::size_t> a(f.shape.begin(), f.shape.begin() + static_cast<std::ptrdiff_t>(f_dom));
  std::vector<std::size_t> b(f.shape.begin() + static_cast<std::ptrdiff_t>(f_dom), f.shape.end());
  std::vector<std::size_t> b2(g.shape.begin(), g.shape.begin() + static_cast<std::ptrdiff_t>(g_dom));
  std::vector<std::size_t> c(g.shape.begin() + static_cast<std::ptrdiff_t>(g_dom), g.shape.end());
  if (b != b2) throw Error(ErrorKind::ShapeMismatch, "cannot compose tensors " + format_dims(f.shape) + " and " + format_dims(g.shape));
  std::vector<std::size_t> shape = a;
  shape.insert(shape.end(), c.begin(), c.end());
  Tensor out(shape);
  const std::size_t na = product(a), nb = product(b), nc = product(c);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const double x = f.data[i * nb + j];
      if (x == 0.0) continue;
      for (std::size_t k = 0; k < nc; ++k) out.data[i * nc + k] += x * g.data[j * nc + k];
    }
  if (relational)
    for (double& v : out.data) v = v != 0.0 ? 1.0 : 0.0;
  return out;
}

}  // namespace

OperatorRegistry OperatorRegistry::defaults() {
  OperatorRegistry r;
  r.add("twice", [](const std::vector<Tensor>& fills, bool relational) {
    if (fills.size() != 1 || fills[0].rank() % 2 != 0)
      throw Error(ErrorKind::ShapeMismatch, "twice expects one endomorphism filling");
    const std::size_t half = fills[0].rank() / 2;
    return compose_tensors(fills[0], half, fills[0], half, relational);
  });
  return r;
}

void OperatorRegistry::add(const std::string& name, HomsetOperator op) { ops_[name] = std::move(op); }

const HomsetOperator* OperatorRegistry::find(const std::string& name) const {
  auto it = ops_.find(name);
  return it == ops_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Interpretation files

namespace {

void flatten(const nlohmann::json& j, std::vector<std::size_t>& shape, std::size_t depth, std::vector<double>& out,
             const std::string& box) {
  if (j.is_array()) {
    if (depth == shape.size()) shape.push_back(j.size());
    else if (shape[depth] != j.size())
      throw Error(ErrorKind::InvalidArgument, "ragged tensor for box '" + box + "'");
    for (const auto& x : j) flatten(x, shape, depth + 1, out, box);
    return;
  }
  if (depth != shape.size() && !(depth == 0 && shape.empty()))
    throw Error(ErrorKind::InvalidArgument, "ragged tensor for box '" + box + "'");
  if (j.is_boolean()) out.push_back(j.get<bool>() ? 1.0 : 0.0);
  else if (j.is_number()) out.push_back(j.get<double>());
  else throw Error(ErrorKind::InvalidArgument, "tensor entries of box '" + box + "' must be numbers");
}

}  // namespace

TensorInterp interp_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("interpretation JSON: ") + e.what());
  }
  TensorInterp interp;
  try {
    for (const auto& [obj, dim] : j.at("dims").items()) interp.dims[obj] = dim.get<std::size_t>();
    if (j.contains("boxes"))
      for (const auto& [name, value] : j["boxes"].items()) {
        Tensor t;
        t.data.clear();
        flatten(value, t.shape, 0, t.data, name);
        if (t.data.size() != product(t.shape)) throw Error(ErrorKind::InvalidArgument, "ragged tensor for box '" + name + "'");
        interp.boxes[name] = std::move(t);
      }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("interpretation JSON: ") + e.what());
  }
  return interp;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const TensorInterp& interp, bool relational) : interp_(interp), relational_(relational) {}

  Tensor eval(const Diagram& d) {
    LayeredForm lf = normalize(d);
    // State indexed by (dom wires, current wires); starts as the identity.
    std::vector<std::size_t> dom = dims(lf.dom);
    const std::size_t nd = product(dom);
    std::vector<double> state(nd * nd, 0.0);
    for (std::size_t i = 0; i < nd; ++i) state[i * nd + i] = 1.0;
    for (const auto& layer : lf.layers) {
      Tensor g = generator(layer.generator);
      const std::size_t nl = product(dims(layer.left));
      const std::size_t nr = product(dims(layer.right));
      const std::size_t gi = product(dims(layer.generator.dom()));
      const std::size_t go = product(dims(layer.generator.cod()));
      std::vector<double> next(nd * nl * go * nr, 0.0);
      for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t l = 0; l < nl; ++l)
          for (std::size_t i = 0; i < gi; ++i)
            for (std::size_t r = 0; r < nr; ++r) {
              const double x = state[((a * nl + l) * gi + i) * nr + r];
              if (x == 0.0) continue;
              for (std::size_t o = 0; o < go; ++o) next[((a * nl + l) * go + o) * nr + r] += x * g.data[i * go + o];
            }
      if (relational_)
        for (double& v : next) v = v != 0.0 ? 1.0 : 0.0;
      state = std::move(next);
    }
    std::vector<std::size_t> shape = dom;
    for (std::size_t k : dims(lf.cod())) shape.push_back(k);
    Tensor out(shape);
    out.data = std::move(state);
    return out;
  }

 private:
  std::size_t dim(const std::string& object) const {
    auto it = interp_.dims.find(object);
    if (it == interp_.dims.end()) throw Error(ErrorKind::MissingSymbol, "no dimension for object '" + object + "'");
    return it->second;
  }

  std::vector<std::size_t> dims(const ObjectList& objects) const {
    std::vector<std::size_t> out;
    for (const auto& o : objects) out.push_back(dim(o));
    return out;
  }

  Tensor diagonal(std::size_t legs, std::size_t n) const {
    Tensor t(std::vector<std::size_t>(legs, n));
    if (legs == 0) {
      // closed loop: sum over the shared index
      t.data[0] = relational_ ? (n > 0 ? 1.0 : 0.0) : static_cast<double>(n);
      return t;
    }
    for (std::size_t i = 0; i < n; ++i) t.at(std::vector<std::size_t>(legs, i)) = 1.0;
    return t;
  }

  Tensor generator(const Diagram& g) {
    using K = Diagram::Kind;
    switch (g.kind()) {
      case K::Box: return box(g);
      case K::Spider: return diagonal(g.legs_in() + g.legs_out(), dim(g.object()));
      case K::Cup:
      case K::Cap: return diagonal(2, dim(g.object()));
      case K::Swap: {
        const std::size_t a = dim(g.object()), b = dim(g.right_object());
        Tensor t({a, b, b, a});
        for (std::size_t i = 0; i < a; ++i)
          for (std::size_t j = 0; j < b; ++j) t.at({i, j, j, i}) = 1.0;
        return t;
      }
      case K::Cut: {
        if (!relational_) throw Error(ErrorKind::Unsupported, "cut in Vect: negation is not linear");
        Tensor t = eval(g.inner());
        for (double& v : t.data) v = v != 0.0 ? 0.0 : 1.0;
        return t;
      }
      default: throw Error(ErrorKind::InvalidArgument, "not a generator: " + g.str());
    }
  }

  Tensor box(const Diagram& g) {
    std::vector<std::size_t> shape = dims(g.dom());
    for (std::size_t k : dims(g.cod())) shape.push_back(k);
    Tensor t;
    if (!g.fillings().empty()) {
      const HomsetOperator* op = interp_.operators.find(g.name());
      if (!op) throw Error(ErrorKind::MissingSymbol, "no operator registered for box '" + g.name() + "'");
      std::vector<Tensor> fills;
      for (const auto& f : g.fillings()) fills.push_back(eval(f));
      t = (*op)(fills, relational_);
    } else {
      auto it = interp_.boxes.find(g.name());
      if (it == interp_.boxes.end()) throw Error(ErrorKind::MissingSymbol, "no tensor for box '" + g.name() + "'");
      t = it->second;
    }
    if (t.shape != shape)
      throw Error(ErrorKind::ShapeMismatch, "tensor for box '" + g.name() + "' has shape " + format_dims(t.shape) +
                                                ", expected " + format_dims(shape));
    return t;
  }

  const TensorInterp& interp_;
  bool relational_;
};

}  // namespace

Tensor eval_rel(const Diagram& d, const RelInterp& interp) { return Evaluator(interp, true).eval(d); }

Tensor eval_vect(const Diagram& d, const VectInterp& interp) { return Evaluator(interp, false).eval(d); }

RelInterp model_to_relinterp(const Model& m, const MonoidalSignature& sig) {
  RelInterp interp;
  for (const auto& obj : sig.objects()) interp.dims[obj] = m.universe;
  for (const auto& b : sig.boxes()) {
    if (!b.holes.empty()) continue;
    auto it = m.predicates.find(b.name);
    if (it == m.predicates.end()) throw Error(ErrorKind::MissingSymbol, "model has no predicate '" + b.name + "'");
    const Relation& rel = it->second;
    const std::size_t k = b.arity();
    if (rel.arity != k)
      throw Error(ErrorKind::InvalidArgument, "predicate '" + b.name + "' has arity " + std::to_string(rel.arity) +
                                                  " but box has " + std::to_string(k) + " wires");
    Tensor t(std::vector<std::size_t>(k, m.universe));
    std::vector<std::size_t> ports(k, 0), args(k, 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      std::size_t rest = flat;
      for (std::size_t p = k; p-- > 0;) {
        ports[p] = rest % m.universe;
        rest /= m.universe;
      }
      for (std::size_t a = 0; a < k; ++a) args[a] = ports[b.fol_order.empty() ? a : b.fol_order[a]];
      t.data[flat] = m.holds(b.name, args) ? 1.0 : 0.0;
    }
    interp.boxes[b.name] = std::move(t);
  }
  return interp;
}

LogicSignature logic_signature_of(const MonoidalSignature& sig) {
  LogicSignature out;
  for (const auto& b : sig.boxes())
    if (b.holes.empty()) out.predicates[b.name] = b.arity();
  return out;
}

}  // namespace peircelex
