// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>

#include "peircelex/diagram.hpp"
#include "peircelex/lambda.hpp"
#include "peircelex/signature.hpp"

namespace peircelex::gen {

/// Objects A, B; boxes f: A → B, g: B → A B, h: A A → 1, s: 1 → A, t: B → B.
MonoidalSignature law_signature();

/// Random diagram with the given domain and roughly `size` generators,
/// mixing layered and tensored construction. Width stays at most 4.
Diagram random_diagram(std::mt19937_64& rng, const MonoidalSignature& sig, const ObjectList& dom, std::size_t size);

/// Object N; boxes car: 1 → N, big: N → N, hot: N → 1, tick: 1 → 1.
MonoidalSignature lambda_signature();

/// Closed term of the given type, built from boxes, compose, tensor, cut,
/// typed abstractions and beta redexes, nesting at most `depth` deep.
Term random_term(std::mt19937_64& rng, const SemType& type, std::size_t depth);

/// D(x, y) for random x, y in {1, N}; sometimes D → D or (D → D) → D.
SemType random_type(std::mt19937_64& rng);

}  // namespace peircelex::gen
