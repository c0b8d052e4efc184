// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "peircelex/error.hpp"
#include "peircelex/lambda.hpp"

namespace peircelex {

namespace {

class Checker {
 public:
  explicit Checker(const ConstantTable& consts) : consts_(consts) {}

  Elaborated run(const Term& t, const TypeContext& ctx, const std::optional<SemType>& expected) {
    Scope scope;
    for (const auto& [name, type] : ctx) scope.emplace_back(name, type);
    if (expected) return {finalize(check(t, *expected, scope)), zonk(*expected)};
    auto [out, type] = synth(t, scope);
    return {finalize(out), zonk(type)};
  }

 private:
  using Scope = std::vector<std::pair<std::string, SemType>>;

  // -- metas ---------------------------------------------------------------

  ShapeItem fresh_meta(SemType::Sort sort) {
    std::string name = "?" + std::to_string(next_meta_++);
    return {sort == SemType::Sort::List ? ShapeItem::Kind::ListMeta : ShapeItem::Kind::ObjectMeta, name};
  }

  ShapeItem fresh_skolem(const std::string& hint, SemType::Sort sort) {
    std::string name = hint + "#" + std::to_string(next_skolem_++);
    return {sort == SemType::Sort::List ? ShapeItem::Kind::ListVar : ShapeItem::Kind::ObjectVar, name};
  }

  ShapeSeq zonk(const ShapeSeq& seq) const {
    ShapeSeq out;
    for (const auto& item : seq) {
      if (item.is_meta()) {
        auto it = solution_.find(item.name);
        if (it != solution_.end()) {
          ShapeSeq resolved = zonk(it->second);
          out.insert(out.end(), resolved.begin(), resolved.end());
          continue;
        }
      }
      out.push_back(item);
    }
    return out;
  }

  SemType zonk(const SemType& t) const {
    switch (t.kind()) {
      case SemType::Kind::Diag: return SemType::diag(zonk(t.dom()), zonk(t.cod()));
      case SemType::Kind::Arrow: return SemType::arrow(zonk(t.arg()), zonk(t.res()));
      case SemType::Kind::Prod: return SemType::prod(t.binder(), zonk(t.body()), t.sort());
      default: return t;
    }
  }

  static bool occurs(const std::string& meta, const ShapeSeq& seq) {
    return std::any_of(seq.begin(), seq.end(), [&](const ShapeItem& i) { return i.is_meta() && i.name == meta; });
  }

  [[noreturn]] void shape_error(const ShapeSeq& a, const ShapeSeq& b) const {
    throw Error(ErrorKind::Type, "cannot unify shapes '" + format_shape_seq(zonk(a)) + "' and '" +
                                     format_shape_seq(zonk(b)) + "'");
  }

  void bind(const ShapeItem& meta, const ShapeSeq& value, const ShapeSeq& a, const ShapeSeq& b) {
    if (value.size() == 1 && value[0] == meta) return;
    if (occurs(meta.name, value)) shape_error(a, b);
    if (meta.kind == ShapeItem::Kind::ObjectMeta && (value.size() != 1 || !value[0].is_single())) shape_error(a, b);
    solution_[meta.name] = value;
  }

  void unify_single(const ShapeItem& x, const ShapeItem& y, const ShapeSeq& a, const ShapeSeq& b) {
    if (x == y) return;
    if (x.kind == ShapeItem::Kind::ObjectMeta) return bind(x, {y}, a, b);
    if (y.kind == ShapeItem::Kind::ObjectMeta) return bind(y, {x}, a, b);
    shape_error(a, b);
  }

  void unify(const ShapeSeq& a0, const ShapeSeq& b0) {
    ShapeSeq a = zonk(a0), b = zonk(b0);
    while (true) {
      if (!a.empty() && !b.empty()) {
        const ShapeItem &x = a.front(), &y = b.front();
        if ((x.is_single() && y.is_single()) || x == y) {
          unify_single(x, y, a0, b0);
          a = zonk(ShapeSeq(a.begin() + 1, a.end()));
          b = zonk(ShapeSeq(b.begin() + 1, b.end()));
          continue;
        }
        const ShapeItem &u = a.back(), &v = b.back();
        if ((u.is_single() && v.is_single()) || u == v) {
          unify_single(u, v, a0, b0);
          a = zonk(ShapeSeq(a.begin(), a.end() - 1));
          b = zonk(ShapeSeq(b.begin(), b.end() - 1));
          continue;
        }
      }
      if (a.size() == 1 && a[0].kind == ShapeItem::Kind::ListMeta) return bind(a[0], b, a0, b0);
      if (b.size() == 1 && b[0].kind == ShapeItem::Kind::ListMeta) return bind(b[0], a, a0, b0);
      if (a.empty() || b.empty()) {
        const ShapeSeq& rest = a.empty() ? b : a;
        for (const auto& item : rest)
          if (item.kind != ShapeItem::Kind::ListMeta) shape_error(a0, b0);
        for (const auto& item : rest) solution_[item.name] = {};
        return;
      }
      throw Error(ErrorKind::Type, "ambiguous instantiation: cannot decide how '" + format_shape_seq(a) +
                                       "' and '" + format_shape_seq(b) + "' line up");
    }
  }

  // -- types ---------------------------------------------------------------

  [[noreturn]] void mismatch(const SemType& expected, const SemType& actual) const {
    throw Error(ErrorKind::Type, "expected type " + zonk(expected).str() + " but found " + zonk(actual).str());
  }

  SemType skolemize(const SemType& prod) {
    ShapeItem sk = fresh_skolem(prod.binder(), prod.sort());
    return substitute_shape_var(prod.body(), prod.binder(), {sk});
  }

  SemType instantiate(SemType t, Instantiation* record = nullptr, const Instantiation* given = nullptr) {
    while (t.is(SemType::Kind::Prod)) {
      ShapeSeq value;
      if (given && given->count(t.binder())) {
        value = given->at(t.binder());
      } else {
        value = {fresh_meta(t.sort())};
      }
      if (record) (*record)[t.binder()] = value;
      t = substitute_shape_var(t.body(), t.binder(), value);
    }
    return t;
  }

  void unify_types(const SemType& a0, const SemType& b0) {
    SemType a = zonk(a0), b = zonk(b0);
    if (a.kind() != b.kind()) mismatch(b, a);
    switch (a.kind()) {
      case SemType::Kind::Form:
      case SemType::Kind::Term: return;
      case SemType::Kind::Diag:
        try {
          unify(a.dom(), b.dom());
          unify(a.cod(), b.cod());
        } catch (const Error& e) {
          throw Error(ErrorKind::Type, "expected type " + zonk(b0).str() + " but found " + zonk(a0).str() + " (" +
                                           e.what() + ")");
        }
        return;
      case SemType::Kind::Arrow:
        unify_types(a.arg(), b.arg());
        unify_types(a.res(), b.res());
        return;
      case SemType::Kind::Prod: {
        if (a.sort() != b.sort()) mismatch(b, a);
        ShapeItem sk = fresh_skolem(a.binder(), a.sort());
        unify_types(substitute_shape_var(a.body(), a.binder(), {sk}),
                    substitute_shape_var(b.body(), b.binder(), {sk}));
        return;
      }
    }
  }

  // actual may be used where expected is required.
  void subsume(const SemType& actual0, const SemType& expected0) {
    SemType actual = zonk(actual0), expected = zonk(expected0);
    if (expected.is(SemType::Kind::Prod)) return subsume(actual, skolemize(expected));
    if (actual.is(SemType::Kind::Prod)) return subsume(instantiate(actual), expected);
    if (actual.is(SemType::Kind::Arrow) && expected.is(SemType::Kind::Arrow)) {
      subsume(expected.arg(), actual.arg());
      subsume(actual.res(), expected.res());
      return;
    }
    unify_types(actual, expected);
  }

  // -- terms ---------------------------------------------------------------

  static const SemType* lookup(const Scope& scope, const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  Term check(const Term& t, const SemType& expected0, Scope& scope) {
    SemType expected = zonk(expected0);
    if (expected.is(SemType::Kind::Prod)) return check(t, skolemize(expected), scope);
    if (t.is(Term::Kind::Lam)) {
      if (!expected.is(SemType::Kind::Arrow))
        throw Error(ErrorKind::Type, "λ" + t.name() + " checked against non-function type " + expected.str());
      SemType binder = expected.arg();
      if (t.binder_type()) {
        subsume(expected.arg(), *t.binder_type());
        binder = *t.binder_type();
      }
      scope.emplace_back(t.name(), binder);
      Term body = check(t.body(), expected.res(), scope);
      scope.pop_back();
      return Term::lam(t.name(), body, t.binder_type());
    }
    auto [out, actual] = synth(t, scope);
    try {
      subsume(actual, expected);
    } catch (const Error& e) {
      throw Error(ErrorKind::Type, "in `" + t.str() + "`: " + e.what());
    }
    return out;
  }

  std::pair<Term, SemType> synth(const Term& t, Scope& scope) {
    auto done = [](Term out, SemType type) { return std::make_pair(std::move(out), std::move(type)); };
    switch (t.kind()) {
      case Term::Kind::Var: {
        const SemType* type = lookup(scope, t.name());
        if (!type) throw Error(ErrorKind::Type, "unbound variable '" + t.name() + "'");
        return done(t, instantiate(*type));
      }
      case Term::Kind::Const: {
        if (t.name() == "transpose")
          throw Error(ErrorKind::Type, "transpose must be applied to a diagram");
        ConstantDecl decl = consts_.at(t.name());
        Instantiation inst;
        SemType type = instantiate(decl.scheme, &inst, &t.explicit_inst());
        return done(Term::constant(t.name(), t.explicit_inst(), inst), type);
      }
      case Term::Kind::Ann: {
        Term inner = check(t.body(), t.type(), scope);
        return done(Term::ann(inner, t.type()), t.type());
      }
      case Term::Kind::Lam: {
        if (!t.binder_type())
          throw Error(ErrorKind::Type, "cannot infer the type of λ" + t.name() + "; add an annotation");
        scope.emplace_back(t.name(), *t.binder_type());
        auto [body, res] = synth(t.body(), scope);
        scope.pop_back();
        return done(Term::lam(t.name(), body, t.binder_type()), SemType::arrow(*t.binder_type(), res));
      }
      case Term::Kind::App: break;
    }

    const Term& f = t.fun();
    if (f.is(Term::Kind::Const) && f.name() == "transpose") {
      auto [arg, type0] = synth(t.arg(), scope);
      SemType type = zonk(instantiate(type0));
      if (!type.is(SemType::Kind::Diag))
        throw Error(ErrorKind::Type, "transpose expects a diagram, found " + type.str());
      return done(Term::app(Term::constant("transpose"), arg), transposed(type));
    }
    if (f.is(Term::Kind::Lam) && !f.binder_type()) {
      auto [arg, arg_type] = synth(t.arg(), scope);
      scope.emplace_back(f.name(), arg_type);
      auto [body, res] = synth(f.body(), scope);
      scope.pop_back();
      return done(Term::app(Term::lam(f.name(), body), arg), res);
    }
    auto [fun, fun_type0] = synth(f, scope);
    SemType fun_type = zonk(instantiate(fun_type0));
    if (!fun_type.is(SemType::Kind::Arrow))
      throw Error(ErrorKind::Type, "`" + f.str() + "` has type " + fun_type.str() + " and cannot be applied");
    Term arg = check(t.arg(), fun_type.arg(), scope);
    return done(Term::app(fun, arg), fun_type.res());
  }

  SemType transposed(const SemType& d) const {
    auto reversible = [](const ShapeSeq& s) {
      return std::all_of(s.begin(), s.end(), [](const ShapeItem& i) { return i.is_single(); });
    };
    if (d.dom().empty() && d.cod().empty()) return d;
    if (d.dom().empty() && reversible(d.cod())) {
      ShapeSeq rev(d.cod().rbegin(), d.cod().rend());
      return SemType::diag(rev, {});
    }
    if (d.cod().empty() && reversible(d.dom())) {
      ShapeSeq rev(d.dom().rbegin(), d.dom().rend());
      return SemType::diag({}, rev);
    }
    throw Error(ErrorKind::Type, "transpose needs a state or an effect with known wires, found " + d.str());
  }

  Term finalize(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Var: return t;
      case Term::Kind::Const: {
        Instantiation inst;
        for (const auto& [var, seq] : t.inst()) {
          ShapeSeq z = zonk(seq);
          for (const auto& item : z)
            if (item.is_meta())
              throw Error(ErrorKind::Type, "ambiguous instantiation of '" + var + "' in constant '" + t.name() + "'");
          inst[var] = z;
        }
        return Term::constant(t.name(), t.explicit_inst(), inst);
      }
      case Term::Kind::Ann: return Term::ann(finalize(t.body()), t.type());
      case Term::Kind::Lam: return Term::lam(t.name(), finalize(t.body()), t.binder_type());
      case Term::Kind::App: return Term::app(finalize(t.fun()), finalize(t.arg()));
    }
    return t;
  }

  const ConstantTable& consts_;
  std::map<std::string, ShapeSeq> solution_;
  std::size_t next_meta_ = 0;
  std::size_t next_skolem_ = 0;
};

}  // namespace

Elaborated elaborate(const Term& t, const ConstantTable& consts, const TypeContext& ctx,
                     const std::optional<SemType>& expected) {
  return Checker(consts).run(t, ctx, expected);
}

SemType typecheck(const Term& t, const ConstantTable& consts, const TypeContext& ctx) {
  return elaborate(t, consts, ctx).type;
}

}  // namespace peircelex
