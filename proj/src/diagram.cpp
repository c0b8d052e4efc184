// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/diagram.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "diagram_detail.hpp"
#include "peircelex/error.hpp"

namespace peircelex {

struct Diagram::Node {
  Kind kind;
  DiagramShape shape;
  std::string name;               // Box
  std::vector<Diagram> children;  // Box fillings; Compose/Tensor pair; Cut inner
  std::size_t legs_in = 0, legs_out = 0;
  std::string object, right_object;
};

namespace {

ObjectList repeat(const std::string& object, std::size_t n) { return ObjectList(n, object); }

ObjectList reversed(ObjectList objects) {
  std::reverse(objects.begin(), objects.end());
  return objects;
}

ObjectList slice(const ObjectList& objects, std::size_t from, std::size_t to) {
  return ObjectList(objects.begin() + static_cast<std::ptrdiff_t>(from),
                    objects.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

Diagram::Kind Diagram::kind() const { return node_->kind; }
const DiagramShape& Diagram::shape() const { return node_->shape; }
const std::string& Diagram::name() const { return node_->name; }
const std::vector<Diagram>& Diagram::fillings() const { return node_->children; }
const Diagram& Diagram::first() const { return node_->children.at(0); }
const Diagram& Diagram::second() const { return node_->children.at(1); }
const Diagram& Diagram::top() const { return node_->children.at(0); }
const Diagram& Diagram::bottom() const { return node_->children.at(1); }
const Diagram& Diagram::inner() const { return node_->children.at(0); }
std::size_t Diagram::legs_in() const { return node_->legs_in; }
std::size_t Diagram::legs_out() const { return node_->legs_out; }
const std::string& Diagram::object() const { return node_->object; }
const std::string& Diagram::right_object() const { return node_->right_object; }

bool Diagram::is_generator() const {
  return kind() != Kind::Identity && kind() != Kind::Compose && kind() != Kind::Tensor;
}

std::string Diagram::str() const {
  switch (kind()) {
    case Kind::Identity: return "id(" + format_objects(dom()) + ")";
    case Kind::Box: {
      if (fillings().empty()) return name();
      std::string out = name() + "(";
      for (std::size_t i = 0; i < fillings().size(); ++i) out += (i ? ", " : "") + fillings()[i].str();
      return out + ")";
    }
    case Kind::Compose: return "(" + first().str() + " ; " + second().str() + ")";
    case Kind::Tensor: return "(" + top().str() + " ⊗ " + bottom().str() + ")";
    case Kind::Spider:
      return "spider(" + std::to_string(legs_in()) + "," + std::to_string(legs_out()) + "," + object() + ")";
    case Kind::Cup: return "cup(" + object() + ")";
    case Kind::Cap: return "cap(" + object() + ")";
    case Kind::Swap: return "swap(" + object() + "," + right_object() + ")";
    case Kind::Cut: return "cut(" + inner().str() + ")";
  }
  return {};
}

Diagram Diagram::make_box(std::string name, ObjectList dom, ObjectList cod, std::vector<Diagram> fillings) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->shape = {std::move(dom), std::move(cod)};
  n->name = std::move(name);
  n->children = std::move(fillings);
  return Diagram(std::move(n));
}

Diagram identity(const ObjectList& type) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Identity;
  n->shape = {type, type};
  return Diagram(std::move(n));
}

Diagram identity(const MonoidalSignature& sig, const ObjectList& type) {
  sig.require_objects(type);
  return identity(type);
}

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.cod() != second.dom())
    throw Error(ErrorKind::ShapeMismatch, "cannot compose: codomain " + format_objects(first.cod()) +
                                              " does not match domain " + format_objects(second.dom()));
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Compose;
  n->shape = {first.dom(), second.cod()};
  n->children = {first, second};
  return Diagram(std::move(n));
}

Diagram tensor(const Diagram& top, const Diagram& bottom) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Tensor;
  n->shape = {concat(top.dom(), bottom.dom()), concat(top.cod(), bottom.cod())};
  n->children = {top, bottom};
  return Diagram(std::move(n));
}

Diagram box(const MonoidalSignature& sig, const std::string& name, const std::vector<Diagram>& fillings) {
  const BoxDecl& decl = sig.box(name);
  if (fillings.size() != decl.holes.size())
    throw Error(ErrorKind::ShapeMismatch, "box '" + name + "' has " + std::to_string(decl.holes.size()) +
                                              " hole(s) but got " + std::to_string(fillings.size()) + " filling(s)");
  for (std::size_t i = 0; i < fillings.size(); ++i)
    if (fillings[i].shape() != decl.holes[i])
      throw Error(ErrorKind::ShapeMismatch, "hole " + std::to_string(i) + " of box '" + name + "' expects " +
                                                format_shape(decl.holes[i]) + " but the filling has shape " +
                                                format_shape(fillings[i].shape()));
  return Diagram::make_box(name, decl.dom, decl.cod, fillings);
}

Diagram spider(std::size_t legs_in, std::size_t legs_out, const std::string& object) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Spider;
  n->shape = {repeat(object, legs_in), repeat(object, legs_out)};
  n->legs_in = legs_in;
  n->legs_out = legs_out;
  n->object = object;
  return Diagram(std::move(n));
}

Diagram cup(const std::string& object) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Cup;
  n->shape = {repeat(object, 2), {}};
  n->object = object;
  return Diagram(std::move(n));
}

Diagram cap(const std::string& object) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Cap;
  n->shape = {{}, repeat(object, 2)};
  n->object = object;
  return Diagram(std::move(n));
}

Diagram swap(const std::string& left, const std::string& right) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Swap;
  n->shape = {{left, right}, {right, left}};
  n->object = left;
  n->right_object = right;
  return Diagram(std::move(n));
}

Diagram cut(const Diagram& inner) {
  auto n = std::make_shared<Diagram::Node>();
  n->kind = Diagram::Kind::Cut;
  n->shape = inner.shape();
  n->children = {inner};
  return Diagram(std::move(n));
}

namespace {

// id(left) ⊗ g ⊗ id(right), omitting empty identities.
Diagram whisker(const ObjectList& left, const Diagram& g, const ObjectList& right) {
  Diagram out = g;
  if (!left.empty()) out = tensor(identity(left), out);
  if (!right.empty()) out = tensor(out, identity(right));
  return out;
}

}  // namespace

Diagram transpose(const Diagram& d) {
  const ObjectList& dom = d.dom();
  const ObjectList& cod = d.cod();
  if (dom.empty() && cod.empty()) return d;
  if (!dom.empty() && !cod.empty())
    throw Error(ErrorKind::ShapeMismatch,
                "transpose needs a state or an effect, got shape " + format_shape(d.shape()));
  if (dom.empty()) {
    // State (1, x1..xk): rev(x) ⊗ x, then nested cups from the middle out.
    const std::size_t k = cod.size();
    ObjectList rev = reversed(cod);
    Diagram out = tensor(identity(rev), d);
    for (std::size_t i = 0; i < k; ++i) {
      ObjectList left = slice(rev, 0, k - 1 - i);
      ObjectList right = slice(cod, i + 1, k);
      out = compose(out, whisker(left, cup(cod[i]), right));
    }
    return out;
  }
  // Effect (x1..xk, 1): nested caps produce x ⊗ rev(x), then d eats x.
  const std::size_t k = dom.size();
  Diagram out = cap(dom[0]);
  for (std::size_t i = 1; i < k; ++i) {
    ObjectList left = slice(dom, 0, i);
    ObjectList right = reversed(slice(dom, 0, i));
    out = compose(out, whisker(left, cap(dom[i]), right));
  }
  return compose(out, whisker({}, d, reversed(dom)));
}

// ---------------------------------------------------------------------------
// Normal form

namespace {

struct Slot {
  std::size_t offset;
  Diagram generator;
  std::string key;
};


Diagram normalized_generator(const Diagram& g) {
  if (g.is(Diagram::Kind::Cut)) return cut(normalize(g.inner()).reconstruct());
  if (g.is(Diagram::Kind::Box) && !g.fillings().empty()) {
    std::vector<Diagram> fills;
    for (const auto& f : g.fillings()) fills.push_back(normalize(f).reconstruct());
    return Diagram::make_box(g.name(), g.dom(), g.cod(), std::move(fills));
  }
  return g;
}

void flatten(const Diagram& d, std::size_t offset, std::vector<Slot>& out) {
  switch (d.kind()) {
    case Diagram::Kind::Identity: return;
    case Diagram::Kind::Compose:
      flatten(d.first(), offset, out);
      flatten(d.second(), offset, out);
      return;
    case Diagram::Kind::Tensor:
      flatten(d.top(), offset, out);
      flatten(d.bottom(), offset + d.top().cod().size(), out);
      return;
    default: {
      Diagram g = normalized_generator(d);
      std::string key = detail::generator_key(g);
      out.push_back({offset, std::move(g), std::move(key)});
    }
  }
}

// Slides `later` before `earlier` when they touch disjoint wires.
std::optional<std::pair<Slot, Slot>> interchange(const Slot& earlier, const Slot& later) {
  const std::size_t in1 = earlier.generator.dom().size(), out1 = earlier.generator.cod().size();
  const std::size_t in2 = later.generator.dom().size(), out2 = later.generator.cod().size();
  const std::size_t o1 = earlier.offset, o2 = later.offset;
  if (o2 + in2 <= o1) {
    return std::make_pair(Slot{o2, later.generator, later.key},
                          Slot{o1 - in2 + out2, earlier.generator, earlier.key});
  }
  if (o2 >= o1 + out1) {
    return std::make_pair(Slot{o2 - out1 + in1, later.generator, later.key}, earlier);
  }
  return std::nullopt;
}

std::vector<Slot> canonical_order(std::vector<Slot> rest) {
  std::vector<Slot> result;
  result.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    std::size_t best_offset = rest[0].offset;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      Slot moving = rest[j];
      bool movable = true;
      for (std::size_t i = j; i-- > 0;) {
        auto swapped = interchange(rest[i], moving);
        if (!swapped) {
          movable = false;
          break;
        }
        moving = swapped->first;
      }
      if (!movable) continue;
      if (moving.offset < best_offset || (moving.offset == best_offset && moving.key < rest[best].key)) {
        best = j;
        best_offset = moving.offset;
      }
    }
    Slot moving = rest[best];
    for (std::size_t i = best; i-- > 0;) {
      auto swapped = interchange(rest[i], moving);
      moving = swapped->first;
      rest[i] = swapped->second;
    }
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    result.push_back(std::move(moving));
  }
  return result;
}

}  // namespace

namespace detail {

std::string generator_key(const Diagram& g) {
  switch (g.kind()) {
    case Diagram::Kind::Box: {
      std::string out = "B{" + g.name() + "|" + format_objects(g.dom()) + "|" + format_objects(g.cod());
      for (const auto& f : g.fillings()) out += "|[" + canonical_key(f) + "]";
      return out + "}";
    }
    case Diagram::Kind::Cut: return "C{" + canonical_key(g.inner()) + "}";
    case Diagram::Kind::Spider:
      return "S{" + std::to_string(g.legs_in()) + "," + std::to_string(g.legs_out()) + "," + g.object() + "}";
    case Diagram::Kind::Cup: return "U{" + g.object() + "}";
    case Diagram::Kind::Cap: return "A{" + g.object() + "}";
    case Diagram::Kind::Swap: return "W{" + g.object() + "," + g.right_object() + "}";
    default: return "?";
  }
}

}  // namespace detail

ObjectList LayeredForm::cod() const {
  ObjectList wires = dom;
  for (const auto& layer : layers) wires = concat(concat(layer.left, layer.generator.cod()), layer.right);
  return wires;
}

Diagram LayeredForm::reconstruct() const {
  Diagram out = identity(dom);
  bool first = true;
  for (const auto& layer : layers) {
    Diagram step = whisker(layer.left, layer.generator, layer.right);
    out = first ? step : compose(out, step);
    first = false;
  }
  return out;
}

LayeredForm normalize(const Diagram& d) {
  std::vector<Slot> slots;
  flatten(d, 0, slots);
  slots = canonical_order(std::move(slots));

  LayeredForm form{d.dom(), {}};
  ObjectList wires = d.dom();
  for (auto& slot : slots) {
    const Diagram& g = slot.generator;
    ObjectList left = slice(wires, 0, slot.offset);
    ObjectList right = slice(wires, slot.offset + g.dom().size(), wires.size());
    wires = concat(concat(left, g.cod()), right);
    form.layers.push_back({std::move(left), g, std::move(right)});
  }
  return form;
}

namespace {

void collect_boxes(const Diagram& d, std::multiset<std::string>& out) {
  switch (d.kind()) {
    case Diagram::Kind::Box:
      out.insert(d.name());
      for (const auto& f : d.fillings()) collect_boxes(f, out);
      return;
    case Diagram::Kind::Compose:
    case Diagram::Kind::Tensor:
      collect_boxes(d.first(), out);
      collect_boxes(d.second(), out);
      return;
    case Diagram::Kind::Cut: collect_boxes(d.inner(), out); return;
    default: return;
  }
}

std::size_t count_kind(const Diagram& d, Diagram::Kind kind) {
  std::size_t n = d.is(kind) ? 1 : 0;
  switch (d.kind()) {
    case Diagram::Kind::Box:
      for (const auto& f : d.fillings()) n += count_kind(f, kind);
      break;
    case Diagram::Kind::Compose:
    case Diagram::Kind::Tensor:
      n += count_kind(d.first(), kind) + count_kind(d.second(), kind);
      break;
    case Diagram::Kind::Cut: n += count_kind(d.inner(), kind); break;
    default: break;
  }
  return n;
}

}  // namespace

std::multiset<std::string> boxes_of(const Diagram& d) {
  std::multiset<std::string> out;
  collect_boxes(d, out);
  return out;
}

std::size_t count_generators(const Diagram& d, Diagram::Kind kind) { return count_kind(d, kind); }

}  // namespace peircelex
