// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "peircelex/grammar.hpp"
#include "peircelex/types.hpp"

namespace peircelex::cmd {

enum class Format { Text, Json, Dot, Svg };
enum class Backend { Fol, Rel, Vect };

struct MeaningOptions {
  bool logic = false;       // first-order formula instead of the diagram
  bool all = false;         // every reading
  bool singletons = false;  // apply the singleton rewrite to formulas
  Format format = Format::Text;
};

/// Explicit target, else the lexicon's, else s.
GrammarType resolve_target(const Lexicon& lex, const std::optional<std::string>& target);

std::string parse(const Lexicon& lex, std::string_view sentence, const GrammarType& target, bool all, Format format);
std::string meaning(const Lexicon& lex, std::string_view sentence, const GrammarType& target,
                    const MeaningOptions& options);
/// Dot, Svg or Json of the first reading's diagram.
std::string draw(const Lexicon& lex, std::string_view sentence, const GrammarType& target, Format format);
/// data_path is a model file for fol and rel, an interpretation file for vect.
std::string eval(const Lexicon& lex, std::string_view sentence, const GrammarType& target, Backend backend,
                 const std::string& data_path);

struct EquivReport {
  std::string text;
  bool equivalent = false;
};
EquivReport check_equiv(const Lexicon& montague, const Lexicon& peirce, std::string_view sentence,
                        std::size_t max_universe);

std::string read_text_file(const std::string& path);

}  // namespace peircelex::cmd
