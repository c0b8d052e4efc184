// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "peircelex/diagram.hpp"
#include "peircelex/grammar.hpp"
#include "peircelex/logic.hpp"
#include "peircelex/signature.hpp"

namespace peircelex {

/// Wire-level view of a diagram: box ports, identification nodes and the
/// cut regions they sit in.
///
/// Region 0 is the sheet of assertion; every cut opens a child region.
/// Wires are never shared between regions: a wire entering or leaving a cut
/// is split in two and the halves are joined by an identification node
/// inside the cut. Spiders, cups and caps are identification nodes too.
struct WireGraph {
  struct Region {
    int parent = -1;  // -1 for the sheet
    std::size_t depth = 0;
  };
  struct Wire {
    std::size_t region = 0;
    std::string object;
  };
  /// Something written inside a region, in encounter order.
  struct Item {
    enum class Kind { Atom, Identify, Cut };
    Kind kind = Kind::Atom;
    std::string box;                  // Atom
    std::vector<std::size_t> wires;   // Atom: ports in predicate order; Identify: legs
    std::size_t child = 0;            // Cut: region
  };

  std::vector<Region> regions;
  std::vector<Wire> wires;
  std::vector<std::vector<Item>> items;  // per region
  /// Boundary wires, dom then cod. They become the free variables.
  std::vector<std::size_t> boundary;
};

/// Throws Error(Unsupported) for boxes with holes and
/// Error(MissingSymbol) for boxes missing from sig.
WireGraph wire_graph(const Diagram& d, const MonoidalSignature& sig);

/// First-order reading of a diagram. Boxes are atoms with arguments in
/// boundary order (dom then cod, permuted by the box's fol_order), cuts are
/// negations and each connected line of identity is one variable,
/// existentially bound at the outermost region it reaches. Identifications
/// that cannot be merged soundly become equality atoms. Free variables are
/// x0, x1, ... for the boundary wires; bound ones continue the numbering in
/// order of first appearance.
Formula to_fol(const Diagram& d, const MonoidalSignature& sig);

/// Merges spiders joined by a wire within one cut region and removes
/// spiders with one input and one output.
Diagram spider_fuse(const Diagram& d);

/// cut(cut(x)) → x wherever the two cuts are immediately nested.
Diagram double_cut_elim(const Diagram& d);

/// First reading of the sentence through a diagram lexicon, translated by
/// to_fol. Throws Error(InvalidArgument) for logic lexicons.
Formula fol_of_sentence(std::string_view sentence, const Lexicon& lex);

}  // namespace peircelex
