// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "peircelex/error.hpp"
#include "peircelex/lambda.hpp"

namespace peircelex {

ValuePtr make_value(Diagram d) { return std::make_shared<const Value>(Value{std::move(d)}); }
ValuePtr make_value(Formula f) { return std::make_shared<const Value>(Value{std::move(f)}); }
ValuePtr make_value(FolTerm t) { return std::make_shared<const Value>(Value{std::move(t)}); }

std::string spider_name(std::size_t legs_in, std::size_t legs_out) {
  return "spider[" + std::to_string(legs_in) + "," + std::to_string(legs_out) + "]";
}

namespace {

const Diagram& diagram_arg(const std::vector<ValuePtr>& args, std::size_t i, const std::string& who) {
  if (!args.at(i)->holds<Diagram>()) throw Error(ErrorKind::Type, who + " expects a diagram argument");
  return args[i]->as<Diagram>();
}

const Formula& formula_arg(const std::vector<ValuePtr>& args, std::size_t i, const std::string& who) {
  if (!args.at(i)->holds<Formula>()) throw Error(ErrorKind::Type, who + " expects a formula argument");
  return args[i]->as<Formula>();
}

const FolTerm& fol_term_arg(const std::vector<ValuePtr>& args, std::size_t i, const std::string& who) {
  if (!args.at(i)->holds<FolTerm>()) throw Error(ErrorKind::Type, who + " expects a term argument");
  return args[i]->as<FolTerm>();
}

ObjectList objects_of(const Instantiation& inst, const std::string& var, const std::string& who) {
  auto it = inst.find(var);
  if (it == inst.end()) throw Error(ErrorKind::Type, "constant '" + who + "' was evaluated without instantiation");
  auto objects = to_objects(it->second);
  if (!objects)
    throw Error(ErrorKind::Type, "constant '" + who + "' instantiated at the non-ground shape " +
                                     format_shape_seq(it->second));
  return *objects;
}

std::string single_object(const Instantiation& inst, const std::string& var, const std::string& who) {
  ObjectList objects = objects_of(inst, var, who);
  if (objects.size() != 1) throw Error(ErrorKind::Type, "constant '" + who + "' needs a single object");
  return objects[0];
}

SemType diag(std::initializer_list<ShapeItem> dom, std::initializer_list<ShapeItem> cod) {
  return SemType::diag(ShapeSeq(dom), ShapeSeq(cod));
}

ShapeItem lv(const char* n) { return ShapeItem::list_var(n); }
ShapeItem ov(const char* n) { return ShapeItem::object_var(n); }

SemType prods(std::vector<std::string> binders, SemType body, SemType::Sort sort = SemType::Sort::List) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = SemType::prod(*it, body, sort);
  return body;
}

SemType arrows(const std::vector<SemType>& args, SemType res) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) res = SemType::arrow(*it, res);
  return res;
}

}  // namespace

void ConstantTable::add(ConstantDecl decl) {
  std::string name = decl.name;
  table_.insert_or_assign(std::move(name), std::move(decl));
}

std::optional<ConstantDecl> ConstantTable::find(const std::string& name) const {
  if (auto it = table_.find(name); it != table_.end()) return it->second;
  if (!spiders_ || name.rfind("spider[", 0) != 0 || name.back() != ']') return std::nullopt;
  std::string legs = name.substr(7, name.size() - 8);
  auto comma = legs.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::size_t m = 0, n = 0;
  try {
    m = std::stoul(legs.substr(0, comma));
    n = std::stoul(legs.substr(comma + 1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (spider_name(m, n) != name) return std::nullopt;
  return ConstantDecl{
      name, SemType::prod("a", SemType::diag(ShapeSeq(m, ov("a")), ShapeSeq(n, ov("a"))), SemType::Sort::Object), 0,
      [m, n, name](EvalContext&, const std::vector<ValuePtr>&, const Instantiation& inst) {
        return make_value(spider(m, n, single_object(inst, "a", name)));
      }};
}

ConstantDecl ConstantTable::at(const std::string& name) const {
  if (auto d = find(name)) return *d;
  throw Error(ErrorKind::MissingSymbol, "unknown constant '" + name + "'");
}

ConstantTable ConstantTable::diagrams(const MonoidalSignature& sig) {
  ConstantTable t;
  t.spiders_ = true;
  for (const auto& b : sig.boxes()) {
    std::vector<SemType> holes;
    for (const auto& h : b.holes) holes.push_back(SemType::diag(h));
    auto shared_sig = std::make_shared<const MonoidalSignature>(sig);
    std::string name = b.name;
    t.add({b.name, arrows(holes, SemType::diag(b.shape())), holes.size(),
           [shared_sig, name](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
             std::vector<Diagram> fillings;
             for (std::size_t i = 0; i < args.size(); ++i) fillings.push_back(diagram_arg(args, i, name));
             return make_value(box(*shared_sig, name, fillings));
           }});
  }
  t.add({"id", prods({"x"}, diag({lv("x")}, {lv("x")})), 0,
         [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation& inst) {
           return make_value(identity(objects_of(inst, "x", "id")));
         }});
  t.add({"compose",
         prods({"x", "y", "z"},
               arrows({diag({lv("x")}, {lv("y")}), diag({lv("y")}, {lv("z")})}, diag({lv("x")}, {lv("z")}))),
         2,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(compose(diagram_arg(args, 0, "compose"), diagram_arg(args, 1, "compose")));
         }});
  t.add({"tensor",
         prods({"x", "y", "z", "w"}, arrows({diag({lv("x")}, {lv("y")}), diag({lv("z")}, {lv("w")})},
                                            diag({lv("x"), lv("z")}, {lv("y"), lv("w")}))),
         2,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(tensor(diagram_arg(args, 0, "tensor"), diagram_arg(args, 1, "tensor")));
         }});
  t.add({"cut", prods({"x", "y"}, arrows({diag({lv("x")}, {lv("y")})}, diag({lv("x")}, {lv("y")}))), 1,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(cut(diagram_arg(args, 0, "cut")));
         }});
  // The checker types transpose specially; the scheme only documents the state case.
  t.add({"transpose", prods({"x"}, arrows({diag({}, {lv("x")})}, diag({lv("x")}, {}))), 1,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(transpose(diagram_arg(args, 0, "transpose")));
         }});
  t.add({"cup", prods({"a"}, diag({ov("a"), ov("a")}, {}), SemType::Sort::Object), 0,
         [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation& inst) {
           return make_value(cup(single_object(inst, "a", "cup")));
         }});
  t.add({"cap", prods({"a"}, diag({}, {ov("a"), ov("a")}), SemType::Sort::Object), 0,
         [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation& inst) {
           return make_value(cap(single_object(inst, "a", "cap")));
         }});
  t.add({"swap", prods({"a", "b"}, diag({ov("a"), ov("b")}, {ov("b"), ov("a")}), SemType::Sort::Object), 0,
         [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation& inst) {
           return make_value(swap(single_object(inst, "a", "swap"), single_object(inst, "b", "swap")));
         }});
  return t;
}

ConstantTable ConstantTable::logic(const LogicSignature& sig) {
  ConstantTable t;
  t.logic_ = true;
  const SemType phi = SemType::form();
  const SemType tau = SemType::term();
  for (const auto& c : sig.constants) {
    t.add({c, tau, 0, [c](EvalContext&, const std::vector<ValuePtr>&, const Instantiation&) {
             return make_value(FolTerm::constant(c));
           }});
  }
  for (const auto& [p, arity] : sig.predicates) {
    std::string name = p;
    t.add({p, arrows(std::vector<SemType>(arity, tau), phi), arity,
           [name](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
             std::vector<FolTerm> terms;
             for (std::size_t i = 0; i < args.size(); ++i) terms.push_back(fol_term_arg(args, i, name));
             return make_value(Formula::atom(name, std::move(terms)));
           }});
  }
  t.add({"top", phi, 0, [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation&) {
           return make_value(Formula::top());
         }});
  t.add({"bottom", phi, 0, [](EvalContext&, const std::vector<ValuePtr>&, const Instantiation&) {
           return make_value(Formula::bottom());
         }});
  t.add({"not", SemType::arrow(phi, phi), 1,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(Formula::negation(formula_arg(args, 0, "not")));
         }});
  auto binary = [&](const std::string& name, Formula (*build)(Formula, Formula)) {
    t.add({name, arrows({phi, phi}, phi), 2,
           [name, build](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
             return make_value(build(formula_arg(args, 0, name), formula_arg(args, 1, name)));
           }});
  };
  binary("and", &Formula::conj);
  binary("or", &Formula::disj);
  binary("implies", &Formula::implies);
  t.add({"eq", arrows({tau, tau}, phi), 2,
         [](EvalContext&, const std::vector<ValuePtr>& args, const Instantiation&) {
           return make_value(Formula::equals(fol_term_arg(args, 0, "eq"), fol_term_arg(args, 1, "eq")));
         }});
  auto quantifier = [&](const std::string& name, bool universal) {
    t.add({name, SemType::arrow(SemType::arrow(tau, phi), phi), 1,
           [name, universal](EvalContext& ctx, const std::vector<ValuePtr>& args, const Instantiation&) {
             std::string hint = args[0]->holds<Closure>() ? args[0]->as<Closure>().binder : "x";
             std::string var = ctx.bind_fresh(hint);
             ValuePtr body = ctx.apply(args[0], make_value(FolTerm::var(var)));
             ctx.release(var);
             if (!body->holds<Formula>()) throw Error(ErrorKind::Type, name + " body is not a formula");
             const Formula& f = body->as<Formula>();
             return make_value(universal ? Formula::forall(var, f) : Formula::exists(var, f));
           }});
  };
  quantifier("forall", true);
  quantifier("exists", false);
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation

ValuePtr EvalContext::eval(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const EnvNode* e = env.get(); e; e = e->next.get())
        if (e->name == t.name()) return e->value;
      throw Error(ErrorKind::Type, "free variable '" + t.name() + "' during evaluation");
    case Term::Kind::Lam: return std::make_shared<const Value>(Value{Closure{t.name(), t.body(), env}});
    case Term::Kind::Ann: return eval(t.body(), env);
    case Term::Kind::App: {
      ValuePtr f = eval(t.fun(), env);
      return apply(f, eval(t.arg(), env));
    }
    case Term::Kind::Const: {
      ConstantDecl decl = consts_.at(t.name());
      Instantiation inst = t.inst();
      for (const auto& [k, v] : t.explicit_inst()) inst.insert_or_assign(k, v);
      if (decl.arity == 0) return decl.rule(*this, {}, inst);
      return std::make_shared<const Value>(Value{Partial{t.name(), std::move(inst), {}}});
    }
  }
  throw Error(ErrorKind::Type, "malformed term");
}

ValuePtr EvalContext::apply(const ValuePtr& fun, const ValuePtr& arg) {
  if (fun->holds<Closure>()) {
    const Closure& c = fun->as<Closure>();
    auto env = std::make_shared<const EnvNode>(EnvNode{c.binder, arg, c.env});
    return eval(c.body, env);
  }
  if (fun->holds<Partial>()) {
    Partial p = fun->as<Partial>();
    p.args.push_back(arg);
    ConstantDecl decl = consts_.at(p.name);
    if (p.args.size() == decl.arity) return decl.rule(*this, p.args, p.inst);
    return std::make_shared<const Value>(Value{std::move(p)});
  }
  throw Error(ErrorKind::Type, "applying a value that is not a function");
}

std::string EvalContext::bind_fresh(const std::string& hint) {
  std::string name = hint;
  for (int i = 1; in_scope_.count(name); ++i) name = hint + std::to_string(i);
  in_scope_.insert(name);
  return name;
}

void EvalContext::release(const std::string& name) {
  auto it = in_scope_.find(name);
  if (it != in_scope_.end()) in_scope_.erase(it);
}

namespace {

// Polymorphic constants without an instantiation.
bool needs_elaboration(const Term& t, const ConstantTable& consts) {
  switch (t.kind()) {
    case Term::Kind::Var: return false;
    case Term::Kind::Lam:
    case Term::Kind::Ann: return needs_elaboration(t.body(), consts);
    case Term::Kind::App: return needs_elaboration(t.fun(), consts) || needs_elaboration(t.arg(), consts);
    case Term::Kind::Const: {
      if (!t.inst().empty()) return false;
      auto decl = consts.find(t.name());
      return decl && decl->scheme.is(SemType::Kind::Prod);
    }
  }
  return false;
}

}  // namespace

GroundValue eval_closed(const Term& t, const ConstantTable& consts) {
  EvalContext ctx(consts);
  ValuePtr v = ctx.eval(needs_elaboration(t, consts) ? elaborate(t, consts).term : t, nullptr);
  if (v->holds<Diagram>()) return v->as<Diagram>();
  if (v->holds<Formula>()) return v->as<Formula>();
  throw Error(ErrorKind::Type, "residual lambda at ground type: the term does not evaluate to a diagram or formula");
}

}  // namespace peircelex
