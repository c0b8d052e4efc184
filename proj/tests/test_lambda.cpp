// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "peircelex/diagram.hpp"
#include "peircelex/lambda.hpp"
#include "peircelex/logic.hpp"
#include "random_gen.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

MonoidalSignature toy() {
  return MonoidalSignature({"N"}, {BoxDecl{"car", {}, {"N"}, {}, false, {}},
                                   BoxDecl{"big", {"N"}, {"N"}, {}, false, {}},
                                   BoxDecl{"hot", {"N"}, {}, {}, false, {}}});
}

const ConstantTable& consts() {
  static const ConstantTable t = ConstantTable::diagrams(toy());
  return t;
}

Term parse(const char* text) { return parse_term(text, consts()); }

Diagram eval_diagram(const Term& t) { return std::get<Diagram>(eval_closed(t, consts())); }

}  // namespace

TEST_CASE("surface syntax round trips") {
  for (const char* text : {"λ(f : (1, N) → (1, N)) (x : (1, N)). f (f x)", "big ∘ car", "car ; big ; hot",
                           "car ⊗ car", "λ(x : (1, N)). cut(hot ∘ x)", "spider(2,1) ∘ (car ⊗ car)"}) {
    Term t = parse(text);
    CHECK(alpha_equal(parse_term(t.str(), consts()), t));
  }
  // g ∘ f runs f first.
  CHECK(alpha_equal(parse("big ∘ car"), parse("car ; big")));
  CHECK(alpha_equal(parse("car * car"), parse("car ⊗ car")));
  CHECK(kind_of([] { parse("nope"); }) == ErrorKind::MissingSymbol);
  CHECK(kind_of([] { parse("λ. car"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse("car ∘"); }) == ErrorKind::Syntax);
}

TEST_CASE("type checking") {
  const SemType d1n = parse_sem_type("(1, N)");
  CHECK(typecheck(parse("big ∘ car"), consts()) == d1n);
  CHECK(typecheck(parse("λ(f : (1, N) → (1, N)) (x : (1, N)). f (f x)"), consts()) ==
        parse_sem_type("((1, N) → (1, N)) → (1, N) → (1, N)"));
  CHECK(typecheck(parse("hot ∘ big ∘ car"), consts()) == parse_sem_type("(1, 1)"));
  CHECK(typecheck(parse("id(N)"), consts()) == parse_sem_type("(N, N)"));
  CHECK(typecheck(parse("cap(N) ; cup(N)"), consts()) == parse_sem_type("(1, 1)"));
  CHECK(kind_of([] { typecheck(parse("car ∘ car"), consts()); }) == ErrorKind::Type);
  CHECK(kind_of([] { typecheck(parse("car car"), consts()); }) == ErrorKind::Type);
  CHECK(kind_of([] { typecheck(parse("λ(x : (1, N)). x x"), consts()); }) == ErrorKind::Type);
  // Unannotated binders are fine when checked against a known type.
  CHECK_NOTHROW(elaborate(parse("λx. big ∘ x"), consts(), {}, parse_sem_type("(1, N) → (1, N)")));
}

TEST_CASE("very big car normalises to big (big car)") {
  Term very = parse("λ(f : (1, N) → (1, N)) (x : (1, N)). f (f x)");
  Term big = parse("λ(x : (1, N)). big ∘ x");
  Term t = Term::apply(very, {big, parse("car")});
  Term nf = beta_normalize(t);
  CHECK(alpha_equal(nf, parse("big ∘ (big ∘ car)")));
  CHECK(alpha_equal(beta_normalize(t, Strategy::Innermost), nf));
  CHECK(equal(eval_diagram(t), compose(compose(box(toy(), "car"), box(toy(), "big")), box(toy(), "big"))));
}

TEST_CASE("substitution avoids capture") {
  // (λy. x y)[x := y] must not bind the new y.
  Term t = Term::lam("y", Term::app(Term::var("x"), Term::var("y")));
  Term r = substitute(t, "x", Term::var("y"));
  CHECK(alpha_equal(r, Term::lam("z", Term::app(Term::var("y"), Term::var("z")))));
  CHECK_FALSE(alpha_equal(r, Term::lam("y", Term::app(Term::var("y"), Term::var("y")))));
  CHECK(free_term_vars(r) == std::vector<std::string>{"y"});
  // Shadowed occurrences stay put.
  Term s = Term::lam("x", Term::var("x"));
  CHECK(substitute(s, "x", Term::var("q")) == s);
}

TEST_CASE("runaway reduction is cut off") {
  Term omega = Term::lam("x", Term::app(Term::var("x"), Term::var("x")));
  CHECK(kind_of([&] { beta_normalize(Term::app(omega, omega), Strategy::NormalOrder, 500); }) ==
        ErrorKind::Unsupported);
}

TEST_CASE("normal order skips a divergent argument") {
  Term omega = Term::lam("x", Term::app(Term::var("x"), Term::var("x")));
  Term k = Term::lam("a", Term::lam("b", Term::var("a")));
  Term t = Term::apply(k, {Term::var("v"), Term::app(omega, omega)});
  CHECK(alpha_equal(beta_normalize(t, Strategy::NormalOrder, 500), Term::var("v")));
}

TEST_CASE("evaluation") {
  CHECK(equal(eval_diagram(parse("spider(2,1) ∘ (car ⊗ car)")),
              compose(tensor(box(toy(), "car"), box(toy(), "car")), spider(2, 1, "N"))));
  CHECK(equal(eval_diagram(parse("cut(hot ∘ car)")), cut(compose(box(toy(), "car"), box(toy(), "hot")))));
  CHECK(kind_of([] { eval_closed(parse("λ(x : (1, N)). x"), consts()); }) == ErrorKind::Type);

  LogicSignature ls{{"Alice"}, {{"man", 1}, {"sleeps", 1}}};
  ConstantTable logic = ConstantTable::logic(ls);
  GroundValue v = eval_closed(parse_term("∀x. man(x) → sleeps(x)", logic), logic);
  CHECK(alpha_equivalent(std::get<Formula>(v), parse_formula("forall y. man(y) -> sleeps(y)")));
  GroundValue w = eval_closed(parse_term("(λ(P : τ → φ). P(Alice)) (λ(x : τ). sleeps(x))", logic), logic);
  CHECK(std::get<Formula>(w) == parse_formula("sleeps(Alice)"));
}

TEST_CASE("random terms: subject reduction, confluence, evaluation") {
  std::mt19937_64 rng(3);
  const ConstantTable table = ConstantTable::diagrams(gen::lambda_signature());
  for (int i = 0; i < 300; ++i) {
    SemType type = gen::random_type(rng);
    Term t = gen::random_term(rng, type, 1 + i % 8);
    CAPTURE(t.str());
    REQUIRE(typecheck(t, table) == type);
    Term n1 = beta_normalize(t, Strategy::NormalOrder);
    Term n2 = beta_normalize(t, Strategy::Innermost);
    REQUIRE(typecheck(n1, table) == type);
    REQUIRE(alpha_equal(n1, n2));
    REQUIRE(alpha_equal(beta_normalize(n1), n1));
    if (type.is(SemType::Kind::Diag))
      REQUIRE(equal(std::get<Diagram>(eval_closed(t, table)), std::get<Diagram>(eval_closed(n1, table))));
  }
}
