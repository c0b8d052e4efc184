// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/logic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "peircelex/error.hpp"
#include "scanner.hpp"

namespace peircelex {

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<FolTerm> args;
  std::vector<Formula> children;
};

namespace {

Formula make(Formula::Kind kind, std::string name, std::vector<FolTerm> args, std::vector<Formula> children);

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<FolTerm> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::equals(FolTerm a, FolTerm b) { return atom("=", {std::move(a), std::move(b)}); }

Formula Formula::top() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    return Formula(std::move(n));
  }();
  return f;
}

#define PLX_FORMULA_NODE(KIND, NAME, ...)  \
  auto n = std::make_shared<Node>();       \
  n->kind = Kind::KIND;                    \
  n->name = NAME;                          \
  n->children = {__VA_ARGS__};             \
  return Formula(std::move(n));

Formula Formula::negation(Formula f) { PLX_FORMULA_NODE(Not, "", std::move(f)) }
Formula Formula::conj(Formula a, Formula b) { PLX_FORMULA_NODE(And, "", std::move(a), std::move(b)) }
Formula Formula::disj(Formula a, Formula b) { PLX_FORMULA_NODE(Or, "", std::move(a), std::move(b)) }
Formula Formula::implies(Formula a, Formula b) { PLX_FORMULA_NODE(Implies, "", std::move(a), std::move(b)) }
Formula Formula::forall(std::string var, Formula body) { PLX_FORMULA_NODE(Forall, std::move(var), std::move(body)) }
Formula Formula::exists(std::string var, Formula body) { PLX_FORMULA_NODE(Exists, std::move(var), std::move(body)) }

#undef PLX_FORMULA_NODE

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = conj(parts[i], out);
  return out;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::predicate() const { return node_->name; }
const std::vector<FolTerm>& Formula::args() const { return node_->args; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const std::string& Formula::var() const { return node_->name; }
const Formula& Formula::body() const { return node_->children.at(0); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || node_->name != other.node_->name || node_->args != other.node_->args) return false;
  return node_->children == other.node_->children;
}

namespace {

Formula make(Formula::Kind kind, std::string name, std::vector<FolTerm> args, std::vector<Formula> children) {
  switch (kind) {
    case Formula::Kind::Atom: return Formula::atom(std::move(name), std::move(args));
    case Formula::Kind::Top: return Formula::top();
    case Formula::Kind::Bottom: return Formula::bottom();
    case Formula::Kind::Not: return Formula::negation(children.at(0));
    case Formula::Kind::And: return Formula::conj(children.at(0), children.at(1));
    case Formula::Kind::Or: return Formula::disj(children.at(0), children.at(1));
    case Formula::Kind::Implies: return Formula::implies(children.at(0), children.at(1));
    case Formula::Kind::Forall: return Formula::forall(std::move(name), children.at(0));
    case Formula::Kind::Exists: return Formula::exists(std::move(name), children.at(0));
  }
  return Formula::top();
}

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

struct Symbols {
  const char *neg, *conj, *disj, *impl, *ex, *all, *top, *bot;
};

constexpr Symbols kAscii{"~", " & ", " | ", " -> ", "exists ", "forall ", "top", "bottom"};
constexpr Symbols kUnicode{"¬", " ∧ ", " ∨ ", " → ", "∃", "∀", "⊤", "⊥"};

std::string render(const Formula& f, int min_prec, const Symbols& sym) {
  std::string out;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (f.predicate() == "=" && f.args().size() == 2) {
        out = f.args()[0].name + " = " + f.args()[1].name;
      } else {
        out = f.predicate();
        if (!f.args().empty()) {
          out += "(";
          for (std::size_t i = 0; i < f.args().size(); ++i) out += (i ? ", " : "") + f.args()[i].name;
          out += ")";
        }
      }
      break;
    case Formula::Kind::Top: out = sym.top; break;
    case Formula::Kind::Bottom: out = sym.bot; break;
    case Formula::Kind::Not: out = sym.neg + render(f.operand(), 4, sym); break;
    case Formula::Kind::And: out = render(f.left(), 4, sym) + sym.conj + render(f.right(), 3, sym); break;
    case Formula::Kind::Or: out = render(f.left(), 3, sym) + sym.disj + render(f.right(), 2, sym); break;
    case Formula::Kind::Implies: out = render(f.left(), 2, sym) + sym.impl + render(f.right(), 1, sym); break;
    case Formula::Kind::Forall: out = sym.all + f.var() + ". " + render(f.body(), 0, sym); break;
    case Formula::Kind::Exists: out = sym.ex + f.var() + ". " + render(f.body(), 0, sym); break;
  }
  if (precedence(f) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

std::string Formula::str() const { return render(*this, 0, kAscii); }
std::string Formula::unicode() const { return render(*this, 0, kUnicode); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : s_(text) {}

  Formula parse() {
    Formula f = formula();
    if (!s_.at_end()) s_.fail("unexpected trailing input in formula");
    return f;
  }

 private:
  bool quantifier(bool& is_forall) {
    if (s_.accept_any({"∀"}) || s_.accept_word("forall")) {
      is_forall = true;
      return true;
    }
    if (s_.accept_any({"∃"}) || s_.accept_word("exists")) {
      is_forall = false;
      return true;
    }
    return false;
  }

  Formula formula() {
    bool is_forall = false;
    if (quantifier(is_forall)) {
      std::vector<std::string> vars;
      do vars.push_back(s_.ident());
      while (s_.peek_ident());
      s_.expect(".");
      bound_.insert(bound_.end(), vars.begin(), vars.end());
      Formula body = formula();
      bound_.resize(bound_.size() - vars.size());
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = is_forall ? Formula::forall(*it, body) : Formula::exists(*it, body);
      return body;
    }
    Formula lhs = disjunction();
    if (s_.accept_any({"->", "→"})) return Formula::implies(lhs, formula());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (s_.accept_any({"|", "∨"})) return Formula::disj(lhs, disjunction_or_quant());
    return lhs;
  }

  Formula disjunction_or_quant() {
    bool dummy = false;
    std::size_t save = s_.pos();
    if (quantifier(dummy)) {
      s_.reset(save);
      return formula();
    }
    return disjunction();
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (s_.accept_any({"&", "∧"})) {
      bool dummy = false;
      std::size_t save = s_.pos();
      if (quantifier(dummy)) {
        s_.reset(save);
        return Formula::conj(lhs, formula());
      }
      return Formula::conj(lhs, conjunction());
    }
    return lhs;
  }

  Formula unary() {
    if (s_.accept_any({"~", "¬"})) return Formula::negation(unary());
    bool dummy = false;
    std::size_t save = s_.pos();
    if (quantifier(dummy)) {
      s_.reset(save);
      return formula();
    }
    return primary();
  }

  FolTerm term(const std::string& name) const {
    if (std::find(bound_.begin(), bound_.end(), name) != bound_.end()) return FolTerm::var(name);
    return FolTerm::constant(name);
  }

  Formula primary() {
    if (s_.accept("(")) {
      Formula f = formula();
      s_.expect(")");
      return f;
    }
    if (s_.accept("⊤") || s_.accept_word("top")) return Formula::top();
    if (s_.accept("⊥") || s_.accept_word("bottom")) return Formula::bottom();
    std::string name = s_.ident();
    if (s_.accept("(")) {
      std::vector<FolTerm> args;
      if (!s_.accept(")")) {
        do args.push_back(term(s_.ident()));
        while (s_.accept(","));
        s_.expect(")");
      }
      return Formula::atom(name, std::move(args));
    }
    if (s_.peek("=") && !s_.peek("=>")) {
      s_.expect("=");
      return Formula::equals(term(name), term(s_.ident()));
    }
    return Formula::atom(name, {});
  }

  detail::Scanner s_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ---------------------------------------------------------------------------
// Syntax utilities

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f.args())
        if (a.is_var() && !bound.count(a.name)) out.insert(a.name);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Not: free_vars_into(f.operand(), bound, out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      free_vars_into(f.left(), bound, out);
      free_vars_into(f.right(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f.var()).second;
      free_vars_into(f.body(), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

void collect_symbols(const Formula& f, LogicSignature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      for (const auto& a : f.args())
        if (!a.is_var()) sig.constants.insert(a.name);
      if (f.predicate() == "=") return;
      auto [it, inserted] = sig.predicates.emplace(f.predicate(), f.args().size());
      if (!inserted && it->second != f.args().size())
        throw Error(ErrorKind::InvalidArgument, "predicate '" + f.predicate() + "' used with arities " +
                                                    std::to_string(it->second) + " and " +
                                                    std::to_string(f.args().size()));
      return;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Not: collect_symbols(f.operand(), sig); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_symbols(f.left(), sig);
      collect_symbols(f.right(), sig);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collect_symbols(f.body(), sig); return;
  }
}

namespace {

using BoundMap = std::vector<std::pair<std::string, std::string>>;

bool same_term(const FolTerm& a, const FolTerm& b, const BoundMap& map) {
  if (a.kind != b.kind) return false;
  if (!a.is_var()) return a.name == b.name;
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    bool la = it->first == a.name, lb = it->second == b.name;
    if (la || lb) return la && lb;
  }
  return a.name == b.name;
}

bool alpha_with(const Formula& a, const Formula& b, BoundMap& map) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!same_term(a.args()[i], b.args()[i], map)) return false;
      return true;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Not: return alpha_with(a.operand(), b.operand(), map);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return alpha_with(a.left(), b.left(), map) && alpha_with(a.right(), b.right(), map);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      map.emplace_back(a.var(), b.var());
      bool ok = alpha_with(a.body(), b.body(), map);
      map.pop_back();
      return ok;
    }
  }
  return false;
}

void all_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) out.insert(a.name);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Not: all_vars(f.operand(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      all_vars(f.left(), out);
      all_vars(f.right(), out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f.var());
      all_vars(f.body(), out);
      return;
  }
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  BoundMap map;
  return alpha_with(a, b, map);
}

Formula substitute(const Formula& f, const std::string& var, const FolTerm& value) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<FolTerm> args = f.args();
      for (auto& a : args)
        if (a.is_var() && a.name == var) a = value;
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Not: return Formula::negation(substitute(f.operand(), var, value));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return make(f.kind(), "", {}, {substitute(f.left(), var, value), substitute(f.right(), var, value)});
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f.var() == var || !free_vars(f.body()).count(var)) return f;
      if (value.is_var() && value.name == f.var()) {
        std::set<std::string> used;
        all_vars(f.body(), used);
        used.insert(value.name);
        std::string fresh = f.var();
        for (int i = 1; used.count(fresh); ++i) fresh = f.var() + std::to_string(i);
        Formula renamed = substitute(f.body(), f.var(), FolTerm::var(fresh));
        return make(f.kind(), fresh, {}, {substitute(renamed, var, value)});
      }
      return make(f.kind(), f.var(), {}, {substitute(f.body(), var, value)});
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Models

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t universe) {
  std::size_t idx = 0;
  for (auto e : tuple) {
    if (e >= universe)
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(e) + " outside universe of size " + std::to_string(universe));
    idx = idx * universe + e;
  }
  return idx;
}

}  // namespace

Relation& Model::declare(const std::string& predicate, std::size_t arity) {
  Relation& r = predicates[predicate];
  r.arity = arity;
  r.table.assign(power(universe, arity), 0);
  return r;
}

void Model::add_tuple(const std::string& predicate, const std::vector<std::size_t>& tuple) {
  if (!predicates.count(predicate)) declare(predicate, tuple.size());
  auto it = predicates.find(predicate);
  if (it->second.arity != tuple.size())
    throw Error(ErrorKind::InvalidArgument, "predicate '" + predicate + "' has arity " +
                                                std::to_string(it->second.arity) + " but got a tuple of length " +
                                                std::to_string(tuple.size()));
  it->second.table[tuple_index(tuple, universe)] = 1;
}

bool Model::holds(const std::string& predicate, const std::vector<std::size_t>& tuple) const {
  auto it = predicates.find(predicate);
  if (it == predicates.end()) throw Error(ErrorKind::MissingSymbol, "unknown predicate '" + predicate + "'");
  if (it->second.arity != tuple.size())
    throw Error(ErrorKind::InvalidArgument, "predicate '" + predicate + "' has arity " +
                                                std::to_string(it->second.arity) + " but was applied to " +
                                                std::to_string(tuple.size()) + " argument(s)");
  return it->second.table[tuple_index(tuple, universe)] != 0;
}

Model model_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("model JSON: ") + e.what());
  }
  try {
    Model m;
    m.universe = j.at("universe").get<std::size_t>();
    if (m.universe == 0) throw Error(ErrorKind::InvalidArgument, "model universe must be non-empty");
    if (j.contains("constants")) {
      for (const auto& [name, value] : j["constants"].items()) {
        auto e = value.get<std::size_t>();
        if (e >= m.universe)
          throw Error(ErrorKind::InvalidArgument, "constant '" + name + "' outside the universe");
        m.constants[name] = e;
      }
    }
    if (j.contains("predicates")) {
      for (const auto& [name, tuples] : j["predicates"].items()) {
        std::optional<std::size_t> arity;
        if (j.contains("arities") && j["arities"].contains(name)) arity = j["arities"][name].get<std::size_t>();
        for (const auto& t : tuples) {
          if (!arity) arity = t.size();
          if (t.size() != *arity)
            throw Error(ErrorKind::InvalidArgument, "predicate '" + name + "' has tuples of different lengths");
        }
        m.declare(name, arity.value_or(1));
        for (const auto& t : tuples) m.add_tuple(name, t.get<std::vector<std::size_t>>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("model JSON: ") + e.what());
  }
}

std::string model_to_json(const Model& m) {
  nlohmann::ordered_json j;
  j["universe"] = m.universe;
  j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [name, e] : m.constants) j["constants"][name] = e;
  j["predicates"] = nlohmann::ordered_json::object();
  j["arities"] = nlohmann::ordered_json::object();
  for (const auto& [name, rel] : m.predicates) {
    auto tuples = nlohmann::ordered_json::array();
    for (std::size_t idx = 0; idx < rel.table.size(); ++idx) {
      if (!rel.table[idx]) continue;
      std::vector<std::size_t> tuple(rel.arity);
      std::size_t rest = idx;
      for (std::size_t k = rel.arity; k-- > 0;) {
        tuple[k] = rest % m.universe;
        rest /= m.universe;
      }
      tuples.push_back(tuple);
    }
    j["predicates"][name] = tuples;
    j["arities"][name] = rel.arity;
  }
  return j.dump();
}

namespace {

std::size_t term_value(const FolTerm& t, const Model& m, const Assignment& env) {
  if (t.is_var()) {
    auto it = env.find(t.name);
    if (it == env.end()) throw Error(ErrorKind::MissingSymbol, "unbound variable '" + t.name + "'");
    return it->second;
  }
  auto it = m.constants.find(t.name);
  if (it == m.constants.end()) throw Error(ErrorKind::MissingSymbol, "unknown constant '" + t.name + "'");
  return it->second;
}

bool eval(const Formula& f, const Model& m, Assignment& env) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<std::size_t> tuple;
      tuple.reserve(f.args().size());
      for (const auto& a : f.args()) tuple.push_back(term_value(a, m, env));
      if (f.predicate() == "=") return tuple.size() == 2 && tuple[0] == tuple[1];
      return m.holds(f.predicate(), tuple);
    }
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Not: return !eval(f.operand(), m, env);
    case Formula::Kind::And: return eval(f.left(), m, env) && eval(f.right(), m, env);
    case Formula::Kind::Or: return eval(f.left(), m, env) || eval(f.right(), m, env);
    case Formula::Kind::Implies: return !eval(f.left(), m, env) || eval(f.right(), m, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const bool universal = f.is(Formula::Kind::Forall);
      std::optional<std::size_t> saved;
      if (auto it = env.find(f.var()); it != env.end()) saved = it->second;
      bool result = universal;
      for (std::size_t e = 0; e < m.universe; ++e) {
        env[f.var()] = e;
        if (eval(f.body(), m, env) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved)
        env[f.var()] = *saved;
      else
        env.erase(f.var());
      return result;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const Formula& f, const Model& m, const Assignment& env) {
  Assignment scratch = env;
  return eval(f, m, scratch);
}

// ---------------------------------------------------------------------------
// Equivalence

double model_count(const LogicSignature& sig, std::size_t max_universe) {
  double total = 0;
  for (std::size_t n = 1; n <= max_universe; ++n) {
    double count = std::pow(static_cast<double>(n), static_cast<double>(sig.constants.size()));
    for (const auto& [name, arity] : sig.predicates) count *= std::pow(2.0, std::pow(static_cast<double>(n), arity));
    total += count;
  }
  return total;
}

namespace {

Model empty_model(const LogicSignature& sig, std::size_t universe) {
  Model m;
  m.universe = universe;
  for (const auto& c : sig.constants) m.constants[c] = 0;
  for (const auto& [name, arity] : sig.predicates) m.declare(name, arity);
  return m;
}

}  // namespace

void for_each_model(const LogicSignature& sig, std::size_t universe,
                    const std::function<bool(const Model&)>& visit) {
  Model m = empty_model(sig, universe);
  // Mixed-radix counter over constant values, then every table bit.
  std::vector<std::size_t*> consts;
  for (auto& [name, e] : m.constants) consts.push_back(&e);
  std::vector<std::uint8_t*> bits;
  for (auto& [name, rel] : m.predicates)
    for (auto& b : rel.table) bits.push_back(&b);
  while (true) {
    if (!visit(m)) return;
    bool carried = true;
    for (auto* c : consts) {
      if (++*c < universe) {
        carried = false;
        break;
      }
      *c = 0;
    }
    if (!carried) continue;
    for (auto* b : bits) {
      if (*b == 0) {
        *b = 1;
        carried = false;
        break;
      }
      *b = 0;
    }
    if (carried) return;
  }
}

Model random_model(const LogicSignature& sig, std::size_t universe, std::mt19937_64& rng) {
  Model m = empty_model(sig, universe);
  std::uniform_int_distribution<std::size_t> element(0, universe - 1);
  std::bernoulli_distribution coin(0.5);
  for (auto& [name, e] : m.constants) e = element(rng);
  for (auto& [name, rel] : m.predicates)
    for (auto& b : rel.table) b = coin(rng) ? 1 : 0;
  return m;
}

Verdict equivalent(const Formula& f, const Formula& g, const LogicSignature& sig,
                   const EquivalenceOptions& options) {
  for (const auto* x : {&f, &g}) {
    auto fv = free_vars(*x);
    if (!fv.empty())
      throw Error(ErrorKind::InvalidArgument, "equivalence needs closed formulas, '" + x->str() +
                                                  "' has free variable '" + *fv.begin() + "'");
  }
  LogicSignature full = sig;
  collect_symbols(f, full);
  collect_symbols(g, full);

  Verdict v;
  v.max_universe = options.max_universe;
  auto check = [&](const Model& m) {
    ++v.models_checked;
    if (evaluate(f, m) != evaluate(g, m)) {
      v.equivalent = false;
      v.countermodel = m;
      return false;
    }
    return true;
  };

  if (model_count(full, options.max_universe) <= static_cast<double>(options.budget)) {
    v.exhaustive = true;
    for (std::size_t n = 1; n <= options.max_universe && v.equivalent; ++n) for_each_model(full, n, check);
    return v;
  }
  v.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, options.max_universe));
  for (std::size_t i = 0; i < options.samples && v.equivalent; ++i) check(random_model(full, size(rng), rng));
  return v;
}

std::string Verdict::str() const {
  std::string bound = (exhaustive ? "exhaustive" : "sampled") + std::string(", universe <= ") +
                      std::to_string(max_universe) + ", " + std::to_string(models_checked) + " models";
  if (equivalent) return "equivalent (" + bound + ")";
  return "not equivalent (" + bound + "), countermodel " + model_to_json(*countermodel);
}

// ---------------------------------------------------------------------------
// Singleton rewrite

namespace {

void flatten_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.is(Formula::Kind::And)) {
    flatten_conj(f.left(), out);
    flatten_conj(f.right(), out);
  } else {
    out.push_back(f);
  }
}

Formula rewrite(const Formula& f, const std::set<std::string>& singletons) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Not: return Formula::negation(rewrite(f.operand(), singletons));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return make(f.kind(), "", {}, {rewrite(f.left(), singletons), rewrite(f.right(), singletons)});
    case Formula::Kind::Forall: return Formula::forall(f.var(), rewrite(f.body(), singletons));
    case Formula::Kind::Exists: break;
  }
  // Peel a block of existentials, then drop singleton atoms on its variables.
  std::vector<std::string> vars;
  Formula core = f;
  while (core.is(Formula::Kind::Exists)) {
    vars.push_back(core.var());
    core = core.body();
  }
  core = rewrite(core, singletons);
  std::vector<Formula> parts;
  flatten_conj(core, parts);
  std::vector<std::string> kept;
  for (const auto& v : vars) {
    auto it = std::find_if(parts.begin(), parts.end(), [&](const Formula& p) {
      return p.is(Formula::Kind::Atom) && singletons.count(p.predicate()) && p.args().size() == 1 &&
             p.args()[0] == FolTerm::var(v);
    });
    if (it == parts.end() || std::count(vars.begin(), vars.end(), v) > 1) {
      kept.push_back(v);
      continue;
    }
    FolTerm constant = FolTerm::constant(it->predicate());
    parts.erase(it);
    for (auto& p : parts) p = substitute(p, v, constant);
  }
  Formula out = Formula::conj_all(parts);
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) out = Formula::exists(*it, out);
  return out;
}

}  // namespace

Formula singleton_rewrite(const Formula& f, const std::set<std::string>& singletons) {
  if (singletons.empty()) return f;
  return rewrite(f, singletons);
}

}  // namespace peircelex
