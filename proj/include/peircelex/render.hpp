// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "peircelex/diagram.hpp"
#include "peircelex/logic.hpp"

namespace peircelex {

/// Tagged union mirroring the constructors, e.g.
/// {"kind": "box", "name": "man", "dom": [], "cod": ["N"], "fillings": []}.
std::string diagram_json(const Diagram& d);

/// Graphviz source. Boxes are rectangles, spiders black dots, cuts rounded
/// clusters and boxes with holes framed clusters.
std::string diagram_dot(const Diagram& d);

/// Standalone SVG with one column per layer of the normal form.
std::string diagram_svg(const Diagram& d);

/// {"kind": "exists", "var": "x0", "body": {...}} and so on.
std::string formula_json(const Formula& f);

}  // namespace peircelex
