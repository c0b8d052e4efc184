// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "peircelex/lambda.hpp"
#include "peircelex/sem_type.hpp"
#include "peircelex/signature.hpp"
#include "peircelex/types.hpp"

namespace peircelex {

struct LexiconEntry {
  std::string word;
  GrammarType type;
  std::string source;  // meaning as written in the lexicon
  Term meaning;        // elaborated against the semantic image of type
};

/// Unary rule `from ⇒ to` with a meaning of type image(from) → image(to).
struct Coercion {
  std::string name;
  GrammarType from;
  GrammarType to;
  std::string source;
  Term meaning;
};

class Lexicon {
 public:
  /// Parses and type checks a lexicon. Entry errors are collected and
  /// reported together, each naming its word. Blank text gives an empty
  /// lexicon.
  static Lexicon from_json(std::string_view text);
  static Lexicon load(const std::string& path);

  const std::string& name() const { return name_; }
  const std::set<std::string>& atoms() const { return atoms_; }
  const AtomAssignment& assignment() const { return assignment_; }
  const MonoidalSignature& signature() const { return signature_; }
  const LogicSignature& logic_signature() const { return logic_signature_; }
  const ConstantTable& constants() const { return *constants_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const std::vector<Coercion>& coercions() const { return coercions_; }
  const std::optional<GrammarType>& default_target() const { return target_; }

  /// True for lexicons whose meanings are first-order formulas.
  bool is_logic() const { return logic_; }

  /// Boxes declared as singletons.
  std::set<std::string> singletons() const;

  std::vector<const LexiconEntry*> lookup(const std::string& word) const;
  bool has_word(const std::string& word) const { return !lookup(word).empty(); }

  /// Longest lexicon word, in whitespace separated tokens.
  std::size_t max_word_tokens() const;

  SemType sem_type(const GrammarType& t) const { return semantic_type_of(t, assignment_); }

 private:
  std::string name_;
  std::set<std::string> atoms_;
  AtomAssignment assignment_;
  MonoidalSignature signature_;
  LogicSignature logic_signature_;
  std::shared_ptr<const ConstantTable> constants_;
  std::vector<LexiconEntry> entries_;
  std::vector<Coercion> coercions_;
  std::optional<GrammarType> target_;
  bool logic_ = false;
};

/// Derivation of a categorial grammar.
class SyntaxTree {
 public:
  enum class Kind { Leaf, ApplyLeft, ApplyRight, Coerce };

  static SyntaxTree leaf(const LexiconEntry& entry);
  /// function (x ← y) then argument (y).
  static SyntaxTree apply_left(SyntaxTree function, SyntaxTree argument);
  /// argument (y) then function (y → x).
  static SyntaxTree apply_right(SyntaxTree argument, SyntaxTree function);
  static SyntaxTree coerce(const Coercion& rule, SyntaxTree child);

  Kind kind() const;
  const GrammarType& type() const;
  const LexiconEntry& entry() const;  // Leaf
  const Coercion& rule() const;       // Coerce
  const SyntaxTree& function() const;  // ApplyLeft, ApplyRight
  const SyntaxTree& argument() const;  // ApplyLeft, ApplyRight
  const SyntaxTree& child() const;     // Coerce

  /// Words at the leaves, left to right.
  std::vector<std::string> words() const;

  /// Indented text, one node per line.
  std::string str() const;
  std::string json() const;

 private:
  struct Node;
  explicit SyntaxTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Whitespace split, then greedy longest match of multiword lexicon words.
std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex);

/// Every derivation of target over the tokens, by CYK with forward and
/// backward application plus the lexicon's unary coercions. Throws
/// Error(MissingSymbol) listing unknown words; returns an empty list when
/// nothing derives the target.
std::vector<SyntaxTree> parse_sentence(const std::vector<std::string>& words, const Lexicon& lex,
                                       const GrammarType& target);

/// Meaning term of a derivation: applications of the annotated lexicon
/// meanings.
Term meaning_of(const SyntaxTree& tree, const Lexicon& lex);

struct Reading {
  SyntaxTree tree;
  Term term;  // beta normal and elaborated
  GroundValue value;
};

/// tokenize, parse, meaning_of, beta_normalize and eval_closed. Throws
/// Error(NoParse) when the sentence has no derivation.
std::vector<Reading> pipeline(std::string_view sentence, const Lexicon& lex, const GrammarType& target);

}  // namespace peircelex
