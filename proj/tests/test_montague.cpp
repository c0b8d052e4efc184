// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "peircelex/backends.hpp"
#include "peircelex/grammar.hpp"
#include "peircelex/montague.hpp"
#include "peircelex/peirce.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Lexicon& mont() {
  static const Lexicon lex = Lexicon::load(testutil::lexicon("montague.json"));
  return lex;
}
const Lexicon& peirce() {
  static const Lexicon lex = Lexicon::load(testutil::lexicon("peirce.json"));
  return lex;
}

const char* const battery[] = {"Man's Not Hot", "no man is an island", "Alice kills a mortal", "every big man sleeps",
                               "Alice sleeps",  "every man sleeps",    "no man sleeps",        "Alice is a mortal"};

}  // namespace

TEST_CASE("Montague formulas") {
  auto m = [](const char* s) { return montague_formula(s, mont()); };
  CHECK(alpha_equivalent(m("Man's Not Hot"), parse_formula("exists x. man(x) & ~hot(x)")));
  CHECK(alpha_equivalent(m("no man is an island"),
                         parse_formula("forall x. man(x) -> ~(exists y. island(y) & x = y)")));
  CHECK(alpha_equivalent(m("every man sleeps"), parse_formula("forall x. man(x) -> sleeps(x)")));
  CHECK(alpha_equivalent(m("every big man sleeps"), parse_formula("forall x. big(x) & man(x) -> sleeps(x)")));
  CHECK(alpha_equivalent(m("Alice sleeps"), parse_formula("sleeps(Alice)")));
  CHECK(alpha_equivalent(m("Alice kills a mortal"), parse_formula("exists y. mortal(y) & kills(Alice, y)")));
  for (const char* s : battery) {
    CAPTURE(s);
    CHECK(free_vars(m(s)).empty());
  }
  CHECK(kind_of([] { montague_formula("every man sleeps", peirce()); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { montague_formula("sleeps every", mont()); }) == ErrorKind::NoParse);
  CHECK(kind_of([] { montague_formula("every dog sleeps", mont()); }) == ErrorKind::MissingSymbol);
}

TEST_CASE("Montague and diagram readings agree in the shipped model") {
  const Model model = model_from_json(slurp(testutil::lexicon("model.json")));
  const RelInterp rel = model_to_relinterp(model, peirce().signature());
  for (const char* s : battery) {
    CAPTURE(s);
    const auto readings = pipeline(s, peirce(), GrammarType::atom("s"));
    const Tensor t = eval_rel(std::get<Diagram>(readings.front().value), rel);
    REQUIRE(t.rank() == 0);
    CHECK(evaluate(montague_formula(s, mont()), model) == (t.data[0] != 0));
  }
}

TEST_CASE("cross validation on the fragment") {
  for (const char* s : battery) {
    CAPTURE(s);
    const CrossValidation cv = cross_validate(s, mont(), peirce());
    CHECK(cv.verdict.equivalent);
    CHECK(cv.verdict.exhaustive);
    CHECK(cv.peirce == fol_of_sentence(s, peirce()));
    CHECK(cv.rewritten == singleton_rewrite(cv.peirce, {"Alice"}));
  }
}

TEST_CASE("cross validation finds a wrong entry") {
  std::string text = slurp(testutil::lexicon("peirce.json"));
  const std::string every = R"j("meaning": "λf g. cut(cut(g) ∘ f)")j";
  const auto at = text.find(every);
  REQUIRE(at != std::string::npos);
  text.replace(at, every.size(), R"j("meaning": "λf g. g ∘ f")j");
  const Lexicon broken = Lexicon::from_json(text);
  const CrossValidation cv = cross_validate("every man sleeps", mont(), broken);
  CHECK_FALSE(cv.verdict.equivalent);
  REQUIRE(cv.verdict.countermodel);
  CHECK(evaluate(cv.montague, *cv.verdict.countermodel) != evaluate(cv.rewritten, *cv.verdict.countermodel));
  CHECK(kind_of([] { cross_validate("every man sleeps", peirce(), peirce()); }) == ErrorKind::InvalidArgument);
}
