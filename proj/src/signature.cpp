// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/signature.hpp"

#include <algorithm>
#include <set>

#include "peircelex/error.hpp"

namespace peircelex {

bool MonoidalSignature::has_object(const std::string& name) const {
  return std::find(objects_.begin(), objects_.end(), name) != objects_.end();
}

const BoxDecl* MonoidalSignature::find_box(const std::string& name) const {
  for (const auto& b : boxes_)
    if (b.name == name) return &b;
  return nullptr;
}

const BoxDecl& MonoidalSignature::box(const std::string& name) const {
  if (const BoxDecl* b = find_box(name)) return *b;
  throw Error(ErrorKind::MissingSymbol, "unknown box '" + name + "'");
}

void MonoidalSignature::require_objects(const ObjectList& objects) const {
  for (const auto& o : objects)
    if (!has_object(o)) throw Error(ErrorKind::MissingSymbol, "unknown object '" + o + "'");
}

std::vector<Violation> validate_signature(const MonoidalSignature& sig) {
  std::vector<Violation> out;
  std::set<std::string> seen_objects;
  for (const auto& o : sig.objects())
    if (!seen_objects.insert(o).second)
      out.push_back({"duplicate-object", o, "object '" + o + "' declared twice"});

  std::set<std::string> seen_boxes;
  for (const auto& b : sig.boxes()) {
    if (!seen_boxes.insert(b.name).second)
      out.push_back({"duplicate-box", b.name, "box '" + b.name + "' declared twice"});

    std::set<std::string> reported;
    auto check = [&](const ObjectList& objects) {
      for (const auto& o : objects)
        if (!sig.has_object(o) && reported.insert(o).second)
          out.push_back({"unknown-object", o, "box '" + b.name + "' uses undeclared object '" + o + "'"});
    };
    check(b.dom);
    check(b.cod);
    for (const auto& hole : b.holes) {
      check(hole.dom);
      check(hole.cod);
    }

    if (!b.fol_order.empty()) {
      std::vector<std::size_t> sorted = b.fol_order;
      std::sort(sorted.begin(), sorted.end());
      bool ok = sorted.size() == b.arity();
      for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
      if (!ok)
        out.push_back({"bad-fol-order", b.name,
                       "fol_order of box '" + b.name + "' is not a permutation of its " +
                           std::to_string(b.arity()) + " boundary wires"});
    }
  }
  return out;
}

}  // namespace peircelex
