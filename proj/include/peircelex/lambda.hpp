// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "peircelex/diagram.hpp"
#include "peircelex/logic.hpp"
#include "peircelex/sem_type.hpp"
#include "peircelex/signature.hpp"

namespace peircelex {

/// Values of the shape variables of a polymorphic constant.
using Instantiation = std::map<std::string, ShapeSeq>;

/// Lambda term over named constants.
///
/// `Ann` is a type ascription `(t : T)`; it is transparent to reduction and
/// evaluation and only guides the type checker.
class Term {
 public:
  enum class Kind { Var, Lam, App, Const, Ann };

  static Term var(std::string name);
  static Term lam(std::string binder, Term body, std::optional<SemType> binder_type = std::nullopt);
  static Term app(Term fun, Term arg);
  /// `explicit_inst` holds instantiations written in the source, e.g. the
  /// `N` of `id(N)`. `inst` is the complete instantiation found by the
  /// type checker.
  static Term constant(std::string name, Instantiation explicit_inst = {}, Instantiation inst = {});
  static Term ann(Term term, SemType type);

  /// f a1 a2 ... an
  static Term apply(Term fun, const std::vector<Term>& args);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const std::string& name() const;  // Var, Const; binder of Lam
  const std::optional<SemType>& binder_type() const;  // Lam
  const Term& body() const;  // Lam; annotated term of Ann
  const Term& fun() const;   // App
  const Term& arg() const;   // App
  const Instantiation& explicit_inst() const;  // Const
  const Instantiation& inst() const;           // Const
  const SemType& type() const;                 // Ann

  /// Re-parsable surface syntax with binary constants re-sugared.
  std::string str() const;

  /// Structural identity including binder names.
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_equal(const Term& a, const Term& b);

std::vector<std::string> free_term_vars(const Term& t);

/// Capture-avoiding substitution t[var := value].
Term substitute(const Term& t, const std::string& var, const Term& value);

// ---------------------------------------------------------------------------
// Evaluation values

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct EnvNode {
  std::string name;
  ValuePtr value;
  std::shared_ptr<const EnvNode> next;
};
using Env = std::shared_ptr<const EnvNode>;

struct Closure {
  std::string binder;
  Term body;
  Env env;
};

/// A constant applied to fewer arguments than its arity.
struct Partial {
  std::string name;
  Instantiation inst;
  std::vector<ValuePtr> args;
};

struct Value {
  std::variant<Diagram, Formula, FolTerm, Closure, Partial> data;

  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(data);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(data);
  }
};

class EvalContext;

/// Action of a constant on its evaluated arguments.
using EvalRule =
    std::function<ValuePtr(EvalContext& ctx, const std::vector<ValuePtr>& args, const Instantiation& inst)>;

struct ConstantDecl {
  std::string name;
  SemType scheme;
  std::size_t arity = 0;
  EvalRule rule;
};

/// Typed constants and their evaluation rules.
class ConstantTable {
 public:
  /// Box constants from the signature plus id, compose, tensor, cut,
  /// transpose, cup, cap, swap and the spider family.
  static ConstantTable diagrams(const MonoidalSignature& sig);
  /// Constants τ, predicates τ → ... → φ, the connectives, equality and
  /// the quantifiers ∀, ∃ : (τ → φ) → φ.
  static ConstantTable logic(const LogicSignature& sig);

  void add(ConstantDecl decl);
  /// Includes the parametric spider family `spider[m,n]`.
  std::optional<ConstantDecl> find(const std::string& name) const;
  /// Throws Error(MissingSymbol) for unknown names.
  ConstantDecl at(const std::string& name) const;

  bool is_logic() const { return logic_; }

 private:
  std::map<std::string, ConstantDecl> table_;
  bool logic_ = false;
  bool spiders_ = false;
};

/// Name of the spider constant with the given legs.
std::string spider_name(std::size_t legs_in, std::size_t legs_out);

/// Parses the surface syntax. Identifiers bound by λ are variables; free
/// identifiers must name constants of the table (Error(MissingSymbol)).
Term parse_term(std::string_view text, const ConstantTable& consts);

using TypeContext = std::map<std::string, SemType>;

struct Elaborated {
  Term term;  // constants carry their complete instantiation
  SemType type;
};

/// Bidirectional type checking with unification of shape variables at
/// constant use sites. Throws Error(Type) on mismatch or when an
/// instantiation stays ambiguous.
Elaborated elaborate(const Term& t, const ConstantTable& consts, const TypeContext& ctx = {},
                     const std::optional<SemType>& expected = std::nullopt);

SemType typecheck(const Term& t, const ConstantTable& consts, const TypeContext& ctx = {});

enum class Strategy { NormalOrder, Innermost };

/// Full beta normal form; ascriptions are erased. Throws Error(Unsupported)
/// beyond max_steps contractions.
Term beta_normalize(const Term& t, Strategy strategy = Strategy::NormalOrder, std::size_t max_steps = 100000);

using GroundValue = std::variant<Diagram, Formula>;

/// Evaluates a closed term of ground type, elaborating it first when a
/// polymorphic constant has no instantiation yet. Throws Error(Type) when
/// the result is still a function.
GroundValue eval_closed(const Term& t, const ConstantTable& consts);

/// Evaluator state handed to constant rules.
class EvalContext {
 public:
  explicit EvalContext(const ConstantTable& consts) : consts_(consts) {}

  ValuePtr eval(const Term& t, const Env& env);
  ValuePtr apply(const ValuePtr& fun, const ValuePtr& arg);

  /// A variable name based on hint that is not bound by an enclosing
  /// quantifier; release it when its scope ends.
  std::string bind_fresh(const std::string& hint);
  void release(const std::string& name);

 private:
  const ConstantTable& consts_;
  std::multiset<std::string> in_scope_;
};

ValuePtr make_value(Diagram d);
ValuePtr make_value(Formula f);
ValuePtr make_value(FolTerm t);

}  // namespace peircelex
