// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "peircelex/diagram.hpp"
#include "peircelex/grammar.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;
using testutil::lexicon;

namespace {

const Lexicon& peirce() {
  static const Lexicon l = Lexicon::load(lexicon("peirce.json"));
  return l;
}

const GrammarType s = GrammarType::atom("s");

// Brute-force oracle: every derivation over every bracketing, no tables.
std::vector<GrammarType> closure(std::vector<GrammarType> types, const Lexicon& lex) {
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (const Coercion& c : lex.coercions())
      if (c.from == types[i]) types.push_back(c.to);
    if (types.size() > 64) break;
  }
  return types;
}

std::vector<GrammarType> derive(const std::vector<std::string>& words, std::size_t i, std::size_t j,
                                const Lexicon& lex) {
  std::vector<GrammarType> out;
  if (j == i + 1) {
    for (const LexiconEntry* e : lex.lookup(words[i])) out.push_back(e->type);
    return closure(out, lex);
  }
  for (std::size_t k = i + 1; k < j; ++k) {
    for (const GrammarType& l : derive(words, i, k, lex))
      for (const GrammarType& r : derive(words, k, j, lex)) {
        if (l.kind() == GrammarType::Kind::Over && l.argument() == r) out.push_back(l.result());
        if (r.kind() == GrammarType::Kind::Under && r.argument() == l) out.push_back(r.result());
      }
  }
  return closure(out, lex);
}

std::size_t count_derivations(const std::string& sentence, const Lexicon& lex, const GrammarType& target) {
  auto words = tokenize(sentence, lex);
  std::size_t n = 0;
  for (const GrammarType& t : derive(words, 0, words.size(), lex)) n += t == target;
  return n;
}

}  // namespace

TEST_CASE("shipped lexicons load") {
  for (const char* f : {"peirce.json", "montague.json", "toy.json", "ccg.json", "holes.json"}) {
    CAPTURE(f);
    Lexicon l = Lexicon::load(lexicon(f));
    CHECK_FALSE(l.entries().empty());
  }
  CHECK(peirce().name() == "peirce");
  CHECK(*peirce().default_target() == s);
  CHECK_FALSE(peirce().is_logic());
  CHECK(Lexicon::load(lexicon("montague.json")).is_logic());
  CHECK(peirce().singletons() == std::set<std::string>{"Alice"});
  CHECK(peirce().max_word_tokens() == 2);
}

TEST_CASE("lexicon errors are collected per word") {
  const std::string text = R"json({
    "name": "broken", "atoms": ["s", "n"], "assignment": {"n": "(1, N)", "s": "(1, 1)"},
    "signature": {"objects": ["N"], "boxes": [{"name": "car", "dom": "1", "cod": "N"}]},
    "entries": [
      {"word": "car", "type": "n", "meaning": "car ∘ car"},
      {"word": "van", "type": "n", "meaning": "van"},
      {"word": "ok", "type": "n", "meaning": "car"}
    ]})json";
  try {
    Lexicon::from_json(text);
    FAIL("expected an error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("car") != std::string::npos);
    CHECK(msg.find("van") != std::string::npos);
    CHECK(msg.find("lexicon 'broken'") != std::string::npos);
  }
  CHECK(kind_of([] { Lexicon::from_json("{"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { Lexicon::load("/nonexistent/lexicon.json"); }) == ErrorKind::Io);
}

TEST_CASE("multiword tokens") {
  CHECK(tokenize("no man is an island", peirce()) == std::vector<std::string>{"no", "man", "is an", "island"});
  CHECK(tokenize("Alice is a mortal", peirce()) == std::vector<std::string>{"Alice", "is", "a", "mortal"});
}

TEST_CASE("no man is an island has one parse through p←n") {
  auto trees = parse_sentence(tokenize("no man is an island", peirce()), peirce(), s);
  REQUIRE(trees.size() == 1);
  const std::string text = trees[0].str();
  CHECK(text.find("[p←n]") != std::string::npos);
  CHECK(trees[0].words() == std::vector<std::string>{"no", "man", "is an", "island"});
  auto j = nlohmann::json::parse(trees[0].json());
  CHECK(j.contains("type"));
}

TEST_CASE("parse counts match a brute-force enumeration") {
  const std::vector<std::string> sentences{"Man's Not Hot",        "no man is an island", "Alice kills a mortal",
                                           "every big man sleeps", "Alice sleeps",        "every man sleeps",
                                           "no man sleeps",        "Alice is a mortal",   "man sleeps",
                                           "big big man sleeps",   "Alice kills Alice",   "sleeps Alice"};
  for (const auto& sentence : sentences) {
    CAPTURE(sentence);
    CHECK(parse_sentence(tokenize(sentence, peirce()), peirce(), s).size() ==
          count_derivations(sentence, peirce(), s));
  }
  Lexicon toy = Lexicon::load(lexicon("toy.json"));
  const GrammarType n = GrammarType::atom("n");
  for (const char* sentence : {"very big car", "big big car", "very very big car", "big very big car"}) {
    CAPTURE(sentence);
    CHECK(parse_sentence(tokenize(sentence, toy), toy, n).size() == count_derivations(sentence, toy, n));
  }
}

TEST_CASE("ambiguous words give several readings") {
  const std::string text = R"json({
    "name": "amb", "atoms": ["n"], "assignment": {"n": "(1, N)"}, "target": "n",
    "signature": {"objects": ["N"], "boxes": [{"name": "bank", "dom": "1", "cod": "N"},
                                             {"name": "shore", "dom": "1", "cod": "N"}]},
    "entries": [{"word": "bank", "type": "n", "meaning": "bank"},
                {"word": "bank", "type": "n", "meaning": "shore"}]})json";
  Lexicon amb = Lexicon::from_json(text);
  auto readings = pipeline("bank", amb, GrammarType::atom("n"));
  REQUIRE(readings.size() == 2);
  CHECK_FALSE(equal(std::get<Diagram>(readings[0].value), std::get<Diagram>(readings[1].value)));
}

TEST_CASE("pipeline") {
  auto readings = pipeline("every big man sleeps", peirce(), s);
  REQUIRE(readings.size() == 1);
  // The reading has the image of the target type.
  CHECK(typecheck(readings[0].term, peirce().constants()) == peirce().sem_type(s));
  const Diagram& d = std::get<Diagram>(readings[0].value);
  CHECK(d.dom().empty());
  CHECK(d.cod().empty());
  CHECK(boxes_of(d) == std::multiset<std::string>{"big", "man", "sleeps"});
  CHECK(count_generators(d, Diagram::Kind::Cut) == 2);

  Lexicon toy = Lexicon::load(lexicon("toy.json"));
  auto a = pipeline("very big car", toy, GrammarType::atom("n"));
  auto b = pipeline("big big car", toy, GrammarType::atom("n"));
  CHECK(alpha_equal(a[0].term, b[0].term));

  CHECK(kind_of([] { pipeline("man island man", peirce(), GrammarType::atom("s")); }) == ErrorKind::NoParse);
  CHECK(kind_of([] { pipeline("Bob sleeps", peirce(), GrammarType::atom("s")); }) == ErrorKind::MissingSymbol);
}
