// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/montague.hpp"

#include "peircelex/error.hpp"
#include "peircelex/peirce.hpp"

namespace peircelex {

Formula montague_formula(std::string_view sentence, const Lexicon& lex) {
  if (!lex.is_logic())
    throw Error(ErrorKind::InvalidArgument, "lexicon '" + lex.name() + "' produces diagrams, not formulas");
  GrammarType target = lex.default_target().value_or(GrammarType::atom("s"));
  auto readings = pipeline(sentence, lex, target);
  Formula f = std::get<Formula>(readings.front().value);
  if (!free_vars(f).empty()) throw Error(ErrorKind::Type, "formula " + f.str() + " is not closed");
  return f;
}

CrossValidation cross_validate(std::string_view sentence, const Lexicon& montague, const Lexicon& peirce,
                               const EquivalenceOptions& options) {
  Formula m = montague_formula(sentence, montague);
  Formula p = fol_of_sentence(sentence, peirce);
  Formula r = singleton_rewrite(p, peirce.singletons());
  LogicSignature sig;
  collect_symbols(m, sig);
  collect_symbols(r, sig);
  return {m, p, r, equivalent(m, r, sig, options)};
}

}  // namespace peircelex
