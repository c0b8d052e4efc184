// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "peircelex/grammar.hpp"
#include "peircelex/logic.hpp"

namespace peircelex {

/// Closed formula of the first reading of a sentence under a logic lexicon.
/// Throws Error(NoParse), Error(InvalidArgument) for diagram lexicons and
/// Error(Type) when the result has free variables.
Formula montague_formula(std::string_view sentence, const Lexicon& lex);

struct CrossValidation {
  Formula montague;
  Formula peirce;     // as translated from the diagram
  Formula rewritten;  // after the singleton rewrite
  Verdict verdict;
};

/// Runs both pipelines and compares the formulas on finite models over the
/// union of their symbols.
CrossValidation cross_validate(std::string_view sentence, const Lexicon& montague, const Lexicon& peirce,
                               const EquivalenceOptions& options = {});

}  // namespace peircelex
