// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>

#include "peircelex/error.hpp"
#include "peircelex/lambda.hpp"

namespace peircelex {

struct Term::Node {
  Kind kind;
  std::string name;
  std::optional<SemType> type;  // Lam binder type; Ann type
  std::vector<Term> children;   // Lam: body; App: fun, arg; Ann: term
  Instantiation explicit_inst, inst;
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::lam(std::string binder, Term body, std::optional<SemType> binder_type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::move(binder);
  n->type = std::move(binder_type);
  n->children = {std::move(body)};
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->children = {std::move(fun), std::move(arg)};
  return Term(std::move(n));
}

Term Term::constant(std::string name, Instantiation explicit_inst, Instantiation inst) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = std::move(name);
  n->explicit_inst = std::move(explicit_inst);
  n->inst = std::move(inst);
  return Term(std::move(n));
}

Term Term::ann(Term term, SemType type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ann;
  n->type = std::move(type);
  n->children = {std::move(term)};
  return Term(std::move(n));
}

Term Term::apply(Term fun, const std::vector<Term>& args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::optional<SemType>& Term::binder_type() const { return node_->type; }
const Term& Term::body() const { return node_->children.at(0); }
const Term& Term::fun() const { return node_->children.at(0); }
const Term& Term::arg() const { return node_->children.at(1); }
const Instantiation& Term::explicit_inst() const { return node_->explicit_inst; }
const Instantiation& Term::inst() const { return node_->inst; }
const SemType& Term::type() const { return *node_->type; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  if (node_->type.has_value() != other.node_->type.has_value()) return false;
  if (node_->type && *node_->type != *other.node_->type) return false;
  if (node_->explicit_inst != other.node_->explicit_inst) return false;
  return node_->children == other.node_->children;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print(const Term& t);

bool is_atomic(const Term& t) { return t.is(Term::Kind::Var) || t.is(Term::Kind::Const); }

std::string atomic(const Term& t) {
  std::string s = print(t);
  return is_atomic(t) ? s : "(" + s + ")";
}

std::string const_name(const Term& t) {
  const std::string& n = t.name();
  const auto& ex = t.explicit_inst();
  auto get = [&](const char* var) -> std::optional<std::string> {
    auto it = ex.find(var);
    if (it == ex.end()) return std::nullopt;
    return format_shape_seq(it->second);
  };
  if (n == "id") {
    if (auto x = get("x")) return "id(" + *x + ")";
    return n;
  }
  if (n.rfind("spider[", 0) == 0) {
    std::string legs = n.substr(7, n.size() - 8);
    if (auto a = get("a")) return "spider(" + legs + "," + *a + ")";
    return "spider(" + legs + ")";
  }
  if (n == "cup" || n == "cap") {
    if (auto a = get("a")) return n + "(" + *a + ")";
    return n;
  }
  if (n == "swap") {
    auto a = get("a"), b = get("b");
    if (a && b) return "swap(" + *a + "," + *b + ")";
    return n;
  }
  if (n == "top") return "⊤";
  if (n == "bottom") return "⊥";
  return n;
}

struct Sugar {
  const char* op;
  std::size_t arity;
  bool swapped;
};

std::optional<Sugar> binary_sugar(const std::string& name) {
  static const std::map<std::string, Sugar> table{
      {"compose", {" ∘ ", 2, true}}, {"tensor", {" ⊗ ", 2, false}}, {"and", {" ∧ ", 2, false}},
      {"or", {" ∨ ", 2, false}},     {"implies", {" → ", 2, false}}, {"eq", {" = ", 2, false}},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string print(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name();
    case Term::Kind::Const: return const_name(t);
    case Term::Kind::Ann: return "(" + print(t.body()) + " : " + t.type().str() + ")";
    case Term::Kind::Lam: {
      std::string out = "λ";
      const Term* cur = &t;
      bool first = true;
      while (cur->is(Term::Kind::Lam)) {
        if (!first) out += " ";
        first = false;
        if (cur->binder_type())
          out += "(" + cur->name() + " : " + cur->binder_type()->str() + ")";
        else
          out += cur->name();
        cur = &cur->body();
      }
      return out + ". " + print(*cur);
    }
    case Term::Kind::App: break;
  }
  std::vector<const Term*> args;
  const Term* head = &t;
  while (head->is(Term::Kind::App)) {
    args.push_back(&head->arg());
    head = &head->fun();
  }
  std::reverse(args.begin(), args.end());

  std::string out;
  std::size_t used = 0;
  if (head->is(Term::Kind::Const)) {
    const std::string& n = head->name();
    if (auto sugar = binary_sugar(n); sugar && args.size() >= 2) {
      const Term* a = args[0];
      const Term* b = args[1];
      if (sugar->swapped) std::swap(a, b);
      out = atomic(*a) + sugar->op + atomic(*b);
      used = 2;
    } else if (n == "not" && !args.empty()) {
      out = "¬" + atomic(*args[0]);
      used = 1;
    } else if (n == "transpose" && !args.empty()) {
      out = atomic(*args[0]) + "ᵀ";
      used = 1;
    } else if ((n == "forall" || n == "exists") && !args.empty() && args[0]->is(Term::Kind::Lam) &&
               !args[0]->binder_type()) {
      out = std::string(n == "forall" ? "∀" : "∃") + args[0]->name() + ". " + print(args[0]->body());
      used = 1;
    }
  }
  if (used == 0) {
    out = atomic(*head);
  } else if (used < args.size()) {
    out = "(" + out + ")";
  }
  for (std::size_t i = used; i < args.size(); ++i) out += " " + atomic(*args[i]);
  return out;
}

}  // namespace

std::string Term::str() const { return print(*this); }

// ---------------------------------------------------------------------------
// Variables, alpha-equivalence and substitution

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case Term::Kind::Const: return;
    case Term::Kind::Ann: collect_free(t.body(), bound, out); return;
    case Term::Kind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
  }
}

std::set<std::string> free_set(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

void all_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: out.insert(t.name()); return;
    case Term::Kind::Ann: all_names(t.body(), out); return;
    case Term::Kind::Lam:
      out.insert(t.name());
      all_names(t.body(), out);
      return;
    case Term::Kind::App:
      all_names(t.fun(), out);
      all_names(t.arg(), out);
      return;
  }
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

bool alpha_with(const Term& a, const Term& b, Pairs& bound) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        bool la = it->first == a.name(), lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();
    case Term::Kind::Const: return a.name() == b.name() && a.explicit_inst() == b.explicit_inst();
    case Term::Kind::Ann: return a.type() == b.type() && alpha_with(a.body(), b.body(), bound);
    case Term::Kind::Lam: {
      if (a.binder_type().has_value() != b.binder_type().has_value()) return false;
      if (a.binder_type() && *a.binder_type() != *b.binder_type()) return false;
      bound.emplace_back(a.name(), b.name());
      bool ok = alpha_with(a.body(), b.body(), bound);
      bound.pop_back();
      return ok;
    }
    case Term::Kind::App: return alpha_with(a.fun(), b.fun(), bound) && alpha_with(a.arg(), b.arg(), bound);
  }
  return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string out = base;
  while (avoid.count(out)) out += "'";
  return out;
}

Term subst(const Term& t, const std::string& var, const Term& value, const std::set<std::string>& value_free) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == var ? value : t;
    case Term::Kind::Const: return t;
    case Term::Kind::Ann: return Term::ann(subst(t.body(), var, value, value_free), t.type());
    case Term::Kind::App:
      return Term::app(subst(t.fun(), var, value, value_free), subst(t.arg(), var, value, value_free));
    case Term::Kind::Lam: {
      if (t.name() == var) return t;
      if (!value_free.count(t.name())) return Term::lam(t.name(), subst(t.body(), var, value, value_free), t.binder_type());
      std::set<std::string> avoid = value_free;
      all_names(t.body(), avoid);
      avoid.insert(var);
      std::string renamed = fresh_name(t.name(), avoid);
      Term body = subst(t.body(), t.name(), Term::var(renamed), {renamed});
      return Term::lam(renamed, subst(body, var, value, value_free), t.binder_type());
    }
  }
  return t;
}

}  // namespace

std::vector<std::string> free_term_vars(const Term& t) {
  auto s = free_set(t);
  return {s.begin(), s.end()};
}

bool alpha_equal(const Term& a, const Term& b) {
  Pairs bound;
  return alpha_with(a, b, bound);
}

Term substitute(const Term& t, const std::string& var, const Term& value) {
  return subst(t, var, value, free_set(value));
}

// ---------------------------------------------------------------------------
// Beta normalisation

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::size_t max_steps) : budget_(max_steps) {}

  Term normal_order(const Term& t) {
    Term w = whnf(t);
    switch (w.kind()) {
      case Term::Kind::Lam: return Term::lam(w.name(), normal_order(w.body()), w.binder_type());
      case Term::Kind::App: return Term::app(normal_order(w.fun()), normal_order(w.arg()));
      default: return w;
    }
  }

  Term innermost(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
      case Term::Kind::Const: return t;
      case Term::Kind::Ann: return innermost(t.body());
      case Term::Kind::Lam: return Term::lam(t.name(), innermost(t.body()), t.binder_type());
      case Term::Kind::App: {
        Term f = innermost(t.fun());
        Term a = innermost(t.arg());
        if (f.is(Term::Kind::Lam)) {
          step();
          return innermost(substitute(f.body(), f.name(), a));
        }
        return Term::app(f, a);
      }
    }
    return t;
  }

 private:
  void step() {
    if (budget_-- == 0) throw Error(ErrorKind::Unsupported, "beta normalisation exceeded its step limit");
  }

  Term whnf(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Ann: return whnf(t.body());
      case Term::Kind::App: {
        Term f = whnf(t.fun());
        if (f.is(Term::Kind::Lam)) {
          step();
          return whnf(substitute(f.body(), f.name(), t.arg()));
        }
        return Term::app(f, t.arg());
      }
      default: return t;
    }
  }

  std::size_t budget_;
};

}  // namespace

Term beta_normalize(const Term& t, Strategy strategy, std::size_t max_steps) {
  Normalizer n(max_steps);
  return strategy == Strategy::NormalOrder ? n.normal_order(t) : n.innermost(t);
}

}  // namespace peircelex
