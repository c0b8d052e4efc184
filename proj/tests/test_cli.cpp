// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstring>
#include <string>

#include "peircelex/peircelex.h"

namespace {

std::string path(const char* file) { return std::string(PEIRCELEX_TEST_LEXICONS) + "/" + file; }

// Owns one handle; frees on scope exit.
struct Lex {
  plx_lexicon* p = nullptr;
  explicit Lex(const char* file) { REQUIRE(plx_lexicon_load(path(file).c_str(), &p) == PLX_OK); }
  ~Lex() { plx_lexicon_free(p); }
};

std::string take(plx_buffer* buf) {
  REQUIRE(buf != nullptr);
  std::string s(plx_buffer_data(buf), plx_buffer_size(buf));
  CHECK(std::strlen(plx_buffer_data(buf)) == plx_buffer_size(buf));
  plx_buffer_free(buf);
  return s;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(plx_version()).size() >= 5);
  CHECK(std::string(plx_status_name(PLX_OK)) == "ok");
  CHECK(std::string(plx_status_name(PLX_ERR_SYNTAX)) == "syntax-error");
  CHECK(std::string(plx_status_name(PLX_ERR_TYPE)) == "type-error");
  CHECK(std::string(plx_status_name(PLX_ERR_NO_PARSE)) == "no-parse");
  CHECK(std::string(plx_status_name(PLX_ERR_MISSING_SYMBOL)) == "missing-symbol");
  CHECK(std::string(plx_status_name(PLX_ERR_SHAPE_MISMATCH)) == "shape-mismatch");
  CHECK(std::string(plx_status_name(PLX_ERR_IO)) == "io-error");
  CHECK(std::string(plx_status_name(PLX_ERR_INVALID_ARGUMENT)) == "invalid-argument");
  CHECK(std::string(plx_status_name(PLX_ERR_UNSUPPORTED)) == "unsupported");
  CHECK(std::string(plx_status_name(PLX_ERR_INTERNAL)) == "internal-error");
}

TEST_CASE("loading lexicons") {
  plx_lexicon* lex = nullptr;
  CHECK(plx_lexicon_load("/nonexistent/lexicon.json", &lex) == PLX_ERR_IO);
  CHECK(lex == nullptr);
  CHECK(std::string(plx_last_error()).find("lexicon.json") != std::string::npos);
  CHECK(plx_lexicon_from_json("{", &lex) == PLX_ERR_SYNTAX);
  CHECK(plx_lexicon_from_json(nullptr, &lex) == PLX_ERR_INVALID_ARGUMENT);
  CHECK(plx_lexicon_load(path("peirce.json").c_str(), nullptr) == PLX_ERR_INVALID_ARGUMENT);
  plx_lexicon_free(nullptr);

  Lex toy("toy.json");
  plx_buffer* buf = nullptr;
  REQUIRE(plx_lexicon_default_target(toy.p, &buf) == PLX_OK);
  CHECK(take(buf) == "n");
}

TEST_CASE("meaning, parse and draw") {
  Lex lex("peirce.json");
  plx_buffer* buf = nullptr;
  REQUIRE(plx_meaning(lex.p, "Man's Not Hot", nullptr, PLX_MEANING_LOGIC, PLX_FORMAT_TEXT, &buf) == PLX_OK);
  CHECK(take(buf) == "exists x0. man(x0) & ~hot(x0)\n");

  REQUIRE(plx_meaning(lex.p, "Alice sleeps", "s", PLX_MEANING_LOGIC | PLX_MEANING_SINGLETONS, PLX_FORMAT_TEXT,
                      &buf) == PLX_OK);
  CHECK(take(buf) == "sleeps(Alice)\n");

  REQUIRE(plx_meaning(lex.p, "every man sleeps", nullptr, 0, PLX_FORMAT_JSON, &buf) == PLX_OK);
  const std::string json = take(buf);
  CHECK(json.front() == '{');
  CHECK(json.find("\"term\"") != std::string::npos);
  CHECK(json.find("\"diagram\"") != std::string::npos);

  REQUIRE(plx_parse(lex.p, "no man is an island", nullptr, 0, PLX_FORMAT_TEXT, &buf) == PLX_OK);
  CHECK(take(buf).find("p←n") != std::string::npos);
  REQUIRE(plx_parse(lex.p, "Alice sleeps", nullptr, 1, PLX_FORMAT_JSON, &buf) == PLX_OK);
  CHECK(take(buf).front() == '[');

  REQUIRE(plx_draw(lex.p, "every man sleeps", nullptr, PLX_FORMAT_DOT, &buf) == PLX_OK);
  CHECK(take(buf).rfind("digraph", 0) == 0);
  REQUIRE(plx_draw(lex.p, "every man sleeps", nullptr, PLX_FORMAT_SVG, &buf) == PLX_OK);
  CHECK(take(buf).find("<svg") != std::string::npos);
}

TEST_CASE("errors leave the output untouched") {
  Lex lex("peirce.json");
  plx_buffer* buf = nullptr;
  CHECK(plx_meaning(lex.p, "sleeps man every", nullptr, 0, PLX_FORMAT_TEXT, &buf) == PLX_ERR_NO_PARSE);
  CHECK(buf == nullptr);
  CHECK(std::string(plx_last_error()).size() > 0);
  CHECK(plx_meaning(lex.p, "every dog sleeps", nullptr, 0, PLX_FORMAT_TEXT, &buf) == PLX_ERR_MISSING_SYMBOL);
  CHECK(plx_meaning(lex.p, "Alice sleeps", "((", 0, PLX_FORMAT_TEXT, &buf) == PLX_ERR_SYNTAX);
  CHECK(plx_meaning(nullptr, "Alice sleeps", nullptr, 0, PLX_FORMAT_TEXT, &buf) == PLX_ERR_INVALID_ARGUMENT);
  CHECK(plx_meaning(lex.p, nullptr, nullptr, 0, PLX_FORMAT_TEXT, &buf) == PLX_ERR_INVALID_ARGUMENT);
  CHECK(plx_meaning(lex.p, "Alice sleeps", nullptr, 0, PLX_FORMAT_TEXT, nullptr) == PLX_ERR_INVALID_ARGUMENT);
  CHECK(plx_meaning(lex.p, "Alice sleeps", nullptr, 0, static_cast<plx_format>(42), &buf) ==
        PLX_ERR_INVALID_ARGUMENT);
  CHECK(buf == nullptr);
  // A later success does not clear anything it should not.
  REQUIRE(plx_meaning(lex.p, "Alice sleeps", nullptr, PLX_MEANING_LOGIC, PLX_FORMAT_TEXT, &buf) == PLX_OK);
  plx_buffer_free(buf);
  plx_buffer_free(nullptr);
}

TEST_CASE("evaluation backends") {
  Lex peirce("peirce.json");
  Lex toy("toy.json");
  plx_buffer* buf = nullptr;
  REQUIRE(plx_eval(toy.p, "very big car", nullptr, PLX_BACKEND_VECT, path("toy_interp.json").c_str(), &buf) ==
          PLX_OK);
  CHECK(take(buf) == "[10, 2]\n");
  const std::string model = path("model.json");
  for (const char* s : {"Alice sleeps", "every man sleeps", "no man is an island", "Alice kills a mortal"}) {
    CAPTURE(s);
    REQUIRE(plx_eval(peirce.p, s, nullptr, PLX_BACKEND_REL, model.c_str(), &buf) == PLX_OK);
    const std::string rel = take(buf);
    CHECK((rel == "true\n" || rel == "false\n"));
    Lex mont("montague.json");
    REQUIRE(plx_eval(mont.p, s, nullptr, PLX_BACKEND_FOL, model.c_str(), &buf) == PLX_OK);
    CHECK(take(buf) == rel);
  }
  CHECK(plx_eval(peirce.p, "Alice sleeps", nullptr, PLX_BACKEND_VECT, path("toy_interp.json").c_str(), &buf) ==
        PLX_ERR_MISSING_SYMBOL);
  CHECK(plx_eval(peirce.p, "every man sleeps", nullptr, PLX_BACKEND_REL, "/nonexistent.json", &buf) == PLX_ERR_IO);
  CHECK(plx_eval(peirce.p, "Alice sleeps", nullptr, static_cast<plx_backend>(9), model.c_str(), &buf) ==
        PLX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("check equivalence") {
  Lex mont("montague.json");
  Lex peirce("peirce.json");
  plx_buffer* buf = nullptr;
  int eq = -1;
  REQUIRE(plx_check_equiv(mont.p, peirce.p, "every big man sleeps", 3, &buf, &eq) == PLX_OK);
  CHECK(eq == 1);
  const std::string report = take(buf);
  CHECK(report.find("montague") != std::string::npos);
  CHECK(report.find("peirce") != std::string::npos);
  CHECK(plx_check_equiv(mont.p, peirce.p, "every big man sleeps", 0, &buf, &eq) == PLX_ERR_INVALID_ARGUMENT);
  CHECK(plx_check_equiv(peirce.p, peirce.p, "every man sleeps", 2, &buf, &eq) == PLX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("output is deterministic") {
  Lex lex("peirce.json");
  auto run = [&](plx_format f) {
    plx_buffer* buf = nullptr;
    REQUIRE(plx_draw(lex.p, "every big man sleeps", nullptr, f, &buf) == PLX_OK);
    return take(buf);
  };
  for (plx_format f : {PLX_FORMAT_TEXT, PLX_FORMAT_JSON, PLX_FORMAT_DOT, PLX_FORMAT_SVG}) CHECK(run(f) == run(f));
}
