// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "peircelex/logic.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

Formula f(const char* text) { return parse_formula(text); }

Model small() {
  return model_from_json(R"json({"universe": 3, "constants": {"Alice": 0},
    "predicates": {"man": [[0], [1]], "sleeps": [[0]], "kills": [[0, 1]]}})json");
}

}  // namespace

TEST_CASE("formulas print and parse") {
  for (const char* text : {"forall x. man(x) -> sleeps(x)", "exists x0. man(x0) & ~hot(x0)",
                           "~(exists x. man(x) & island(x))", "exists x. mortal(x) & kills(Alice, x)",
                           "Alice = x | T", "F -> (p(x) -> q(x))"}) {
    CAPTURE(text);
    Formula g = f(text);
    CHECK(parse_formula(g.str()) == g);
    CHECK(parse_formula(g.unicode()) == g);
  }
  CHECK(f("∀x. man(x) → sleeps(x)") == f("forall x. man(x) -> sleeps(x)"));
  CHECK(kind_of([] { parse_formula("forall . p(x)"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_formula("p(x"); }) == ErrorKind::Syntax);
}

TEST_CASE("free variables and symbols") {
  using T = FolTerm;
  const Formula open = Formula::exists(
      "x", Formula::conj(Formula::atom("kills", {T::var("x"), T::var("y")}), Formula::atom("man", {T::var("z")})));
  CHECK(free_vars(open) == std::set<std::string>{"y", "z"});
  // Unbound identifiers parse as constants.
  CHECK(free_vars(f("exists x. kills(x, y) & man(z)")).empty());
  CHECK(free_vars(f("forall x. man(x)")).empty());
  LogicSignature sig;
  collect_symbols(f("exists x. kills(Alice, x) & man(x)"), sig);
  CHECK(sig.constants == std::set<std::string>{"Alice"});
  CHECK(sig.predicates == std::map<std::string, std::size_t>{{"kills", 2}, {"man", 1}});
  CHECK(kind_of([] {
          LogicSignature s;
          collect_symbols(parse_formula("p(x) & p(x, y)"), s);
        }) == ErrorKind::InvalidArgument);
}

TEST_CASE("evaluation in a finite model") {
  const Model m = small();
  CHECK(evaluate(f("sleeps(Alice)"), m));
  CHECK_FALSE(evaluate(f("forall x. man(x) -> sleeps(x)"), m));
  CHECK(evaluate(f("exists x. man(x) & ~sleeps(x)"), m));
  CHECK(evaluate(f("exists x. kills(Alice, x) & man(x)"), m));
  CHECK_FALSE(evaluate(f("exists x. kills(x, x)"), m));
  const Formula open = Formula::atom("man", {FolTerm::var("y")});
  CHECK(evaluate(open, m, {{"y", 1}}));
  CHECK_FALSE(evaluate(open, m, {{"y", 2}}));
  CHECK(kind_of([&] { evaluate(open, m); }) == ErrorKind::MissingSymbol);
  CHECK(evaluate(f("forall x. exists y. x = y"), m));
  CHECK(kind_of([&] { evaluate(f("island(Alice)"), m); }) == ErrorKind::MissingSymbol);
  CHECK(kind_of([&] { evaluate(f("man(y)"), m); }) == ErrorKind::MissingSymbol);
  CHECK(kind_of([&] { evaluate(f("man(Alice, Alice)"), m); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("models round trip through JSON") {
  const Model m = small();
  CHECK(model_from_json(model_to_json(m)) == m);
  CHECK(m.holds("kills", {0, 1}));
  CHECK_FALSE(m.holds("kills", {1, 0}));
  CHECK(kind_of([] { model_from_json(R"({"universe": 2, "predicates": {"p": [[5]]}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { model_from_json(R"({"universe": 2, "predicates": {"p": [[0], [0, 1]]}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { model_from_json("{"); }) == ErrorKind::Syntax);
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equivalent(f("forall x. man(x) -> sleeps(x)"), f("forall y. man(y) -> sleeps(y)")));
  CHECK(alpha_equivalent(f("exists x. exists y. kills(x, y)"), f("exists a. exists b. kills(a, b)")));
  CHECK_FALSE(alpha_equivalent(f("exists x. exists y. kills(x, y)"), f("exists a. exists b. kills(b, a)")));
  CHECK_FALSE(alpha_equivalent(f("man(x)"), f("man(y)")));
  CHECK_FALSE(alpha_equivalent(f("p(x) & q(x)"), f("q(x) & p(x)")));
}

TEST_CASE("model enumeration matches the closed-form count") {
  LogicSignature sig{{"c"}, {{"P", 1}, {"R", 2}}};
  double want = 0;
  for (int n = 1; n <= 3; ++n) want += n * std::pow(2.0, n) * std::pow(2.0, n * n);
  CHECK(model_count(sig, 3) == doctest::Approx(want));
  for (std::size_t n = 1; n <= 2; ++n) {
    std::set<std::string> seen;
    for_each_model(sig, n, [&](const Model& m) {
      CHECK(m.universe == n);
      seen.insert(model_to_json(m));
      return true;
    });
    CHECK(seen.size() == static_cast<std::size_t>(n * std::pow(2.0, n) * std::pow(2.0, n * n)));
  }
}

TEST_CASE("bounded equivalence") {
  LogicSignature sig{{}, {{"man", 1}, {"island", 1}, {"sleeps", 1}}};
  Verdict v = equivalent(f("~(exists x. man(x) & island(x))"), f("forall x. man(x) -> ~island(x)"), sig);
  CHECK(v.equivalent);
  CHECK(v.exhaustive);
  CHECK(v.models_checked == static_cast<std::size_t>(model_count(sig, 3)));

  const Formula a = f("forall x. man(x) -> sleeps(x)"), b = f("exists x. man(x) & sleeps(x)");
  Verdict w = equivalent(a, b, sig);
  CHECK_FALSE(w.equivalent);
  REQUIRE(w.countermodel);
  CHECK(evaluate(a, *w.countermodel) != evaluate(b, *w.countermodel));
  CHECK(w.str().find("not equivalent") == 0);

  // Too many models: falls back to sampling.
  LogicSignature big{{}, {{"R", 3}, {"S", 3}}};
  EquivalenceOptions o;
  o.max_universe = 4;
  o.samples = 200;
  Verdict s = equivalent(f("forall x. R(x, x, x)"), f("forall y. R(y, y, y)"), big, o);
  CHECK(s.equivalent);
  CHECK_FALSE(s.exhaustive);
}

TEST_CASE("random models respect the signature") {
  LogicSignature sig{{"c"}, {{"P", 1}, {"R", 2}}};
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    Model m = random_model(sig, 4, rng);
    CHECK(m.universe == 4);
    CHECK(m.constants.at("c") < 4);
    CHECK(m.predicates.at("R").arity == 2);
    CHECK(m.predicates.at("R").table.size() == 16);
  }
}

TEST_CASE("singleton rewrite") {
  const std::set<std::string> alice{"Alice"};
  CHECK(singleton_rewrite(f("exists x0. Alice(x0) & sleeps(x0)"), alice) == f("sleeps(Alice)"));
  CHECK(alpha_equivalent(singleton_rewrite(f("exists x0. exists x1. Alice(x0) & mortal(x1) & kills(x0, x1)"), alice),
                         f("exists x1. mortal(x1) & kills(Alice, x1)")));
  CHECK(singleton_rewrite(f("exists x. mortal(x) & Alice(x)"), alice) == f("mortal(Alice)"));
  // Only directly under the quantifier, inside a conjunction.
  CHECK(singleton_rewrite(f("exists x. Alice(x) | sleeps(x)"), alice) == f("exists x. Alice(x) | sleeps(x)"));
  CHECK(singleton_rewrite(f("exists x. man(x) & sleeps(x)"), alice) == f("exists x. man(x) & sleeps(x)"));
}
