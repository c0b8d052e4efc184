// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace peircelex {

/// First-order term: a variable or a constant symbol.
struct FolTerm {
  enum class Kind { Var, Const };
  Kind kind = Kind::Var;
  std::string name;

  static FolTerm var(std::string n) { return {Kind::Var, std::move(n)}; }
  static FolTerm constant(std::string n) { return {Kind::Const, std::move(n)}; }
  bool is_var() const { return kind == Kind::Var; }

  bool operator==(const FolTerm&) const = default;
};

/// First-order formula. The predicate "=" is built-in equality.
class Formula {
 public:
  enum class Kind { Atom, Top, Bottom, Not, And, Or, Implies, Forall, Exists };

  static Formula atom(std::string predicate, std::vector<FolTerm> args);
  static Formula equals(FolTerm a, FolTerm b);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  /// Right-nested conjunction; ⊤ for an empty list.
  static Formula conj_all(const std::vector<Formula>& parts);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const std::string& predicate() const;     // Atom
  const std::vector<FolTerm>& args() const;  // Atom
  const Formula& operand() const;            // Not
  const Formula& left() const;               // And, Or, Implies
  const Formula& right() const;              // And, Or, Implies
  const std::string& var() const;            // Forall, Exists
  const Formula& body() const;               // Forall, Exists

  /// ASCII syntax: `~`, `&`, `|`, `->`, `exists x.`, `forall x.`.
  std::string str() const;
  /// Same layout with ¬ ∧ ∨ → ∃ ∀.
  std::string unicode() const;

  /// Syntactic identity.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the output syntax of Formula::str() and the Unicode variant.
/// Identifiers bound by a quantifier are variables, all others constants.
Formula parse_formula(std::string_view text);

std::set<std::string> free_vars(const Formula& f);

/// Constant symbols and predicate symbols with their arities.
struct LogicSignature {
  std::set<std::string> constants;
  std::map<std::string, std::size_t> predicates;

  bool operator==(const LogicSignature&) const = default;
};

/// Symbols of f added to sig. Throws Error(InvalidArgument) on
/// inconsistent arities.
void collect_symbols(const Formula& f, LogicSignature& sig);

/// Alpha-equivalence: equal up to renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

/// Capture-avoiding substitution of a free variable.
Formula substitute(const Formula& f, const std::string& var, const FolTerm& value);

/// Dense boolean table over universe^arity, row-major in argument order.
struct Relation {
  std::size_t arity = 0;
  std::vector<std::uint8_t> table;

  bool operator==(const Relation&) const = default;
};

/// Finite first-order structure over the universe {0, ..., universe-1}.
struct Model {
  std::size_t universe = 1;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, Relation> predicates;

  /// Empty relation of the given arity.
  Relation& declare(const std::string& predicate, std::size_t arity);
  void add_tuple(const std::string& predicate, const std::vector<std::size_t>& tuple);
  bool holds(const std::string& predicate, const std::vector<std::size_t>& tuple) const;

  bool operator==(const Model&) const = default;
};

/// {"universe": n, "constants": {...}, "predicates": {"man": [[0],[2]]}}.
/// Throws Error(InvalidArgument) on out-of-range elements or ragged arities.
Model model_from_json(std::string_view text);
std::string model_to_json(const Model& m);

using Assignment = std::map<std::string, std::size_t>;

/// Tarskian evaluation. Throws Error(MissingSymbol) for unknown symbols or
/// unbound variables and Error(InvalidArgument) for arity mismatches.
bool evaluate(const Formula& f, const Model& m, const Assignment& env = {});

struct EquivalenceOptions {
  std::size_t max_universe = 3;
  std::size_t samples = 1000;
  std::size_t budget = std::size_t{1} << 17;
  std::uint64_t seed = 1;
};

struct Verdict {
  bool equivalent = true;
  bool exhaustive = true;
  std::size_t max_universe = 0;
  std::size_t models_checked = 0;
  std::optional<Model> countermodel;

  std::string str() const;
};

/// Number of models over sig with universes 1..max_universe.
double model_count(const LogicSignature& sig, std::size_t max_universe);

/// Calls visit(model) for every model over sig with the given universe
/// size, in a fixed order. Stops early when visit returns false.
void for_each_model(const LogicSignature& sig, std::size_t universe,
                    const std::function<bool(const Model&)>& visit);

/// Closed-formula equivalence on finite models. Every model up to
/// max_universe is checked when model_count fits the budget, otherwise
/// `samples` seeded random models are drawn.
Verdict equivalent(const Formula& f, const Formula& g, const LogicSignature& sig,
                   const EquivalenceOptions& options = {});

/// Random model over sig with the given universe size.
Model random_model(const LogicSignature& sig, std::size_t universe, std::mt19937_64& rng);

/// Rewrites ∃x. P(x) ∧ φ into φ[x := P] for singleton predicates P, also
/// when P(x) sits anywhere in a conjunction directly under the quantifier.
Formula singleton_rewrite(const Formula& f, const std::set<std::string>& singletons);

}  // namespace peircelex
