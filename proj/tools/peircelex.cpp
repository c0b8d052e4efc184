// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library through the C interface only.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "peircelex/peircelex.h"

namespace {

namespace fs = std::filesystem;

// Failure already reported through plx_last_error.
struct Failure {
  plx_status status;
  std::string message;
};

void check(plx_status s) {
  if (s != PLX_OK) throw Failure{s, plx_last_error()};
}

struct LexiconDeleter {
  void operator()(plx_lexicon* l) const { plx_lexicon_free(l); }
};
struct BufferDeleter {
  void operator()(plx_buffer* b) const { plx_buffer_free(b); }
};
using LexiconPtr = std::unique_ptr<plx_lexicon, LexiconDeleter>;
using BufferPtr = std::unique_ptr<plx_buffer, BufferDeleter>;

// As given if it exists, else under $PEIRCELEX_LEXICON_DIR, else under the
// installed lexicon directory.
std::string resolve(const std::string& path) {
  if (fs::exists(path) || fs::path(path).is_absolute()) return path;
  if (const char* env = std::getenv("PEIRCELEX_LEXICON_DIR"); env && *env) {
    fs::path p = fs::path(env) / path;
    if (fs::exists(p)) return p.string();
  }
  fs::path p = fs::path(PEIRCELEX_DEFAULT_LEXICON_DIR) / path;
  if (fs::exists(p)) return p.string();
  return path;
}

std::string lexicon_dir() {
  if (const char* env = std::getenv("PEIRCELEX_LEXICON_DIR"); env && *env) return env;
  return PEIRCELEX_DEFAULT_LEXICON_DIR;
}

LexiconPtr load(const std::string& path) {
  plx_lexicon* lex = nullptr;
  check(plx_lexicon_load(resolve(path).c_str(), &lex));
  return LexiconPtr(lex);
}

const char* target_or_null(const std::string& target) { return target.empty() ? nullptr : target.c_str(); }

struct Options {
  std::string sentence;
  std::string lexicon = "peirce.json";
  std::string target;
  std::string format;
  std::string output;
  bool all = false;
  bool logic = false;
  bool singletons = false;
  std::string backend = "fol";
  std::string model = "model.json";
  std::string interp;
  std::string montague = "montague.json";
  std::string peirce = "peirce.json";
  unsigned max_universe = 3;
  std::string dir;
};

const std::map<std::string, plx_format> kFormats{
    {"text", PLX_FORMAT_TEXT}, {"json", PLX_FORMAT_JSON}, {"dot", PLX_FORMAT_DOT}, {"svg", PLX_FORMAT_SVG}};
const std::map<std::string, plx_backend> kBackends{
    {"fol", PLX_BACKEND_FOL}, {"rel", PLX_BACKEND_REL}, {"vect", PLX_BACKEND_VECT}};

plx_format format_of(const std::string& name, const char* fallback) {
  return kFormats.at(name.empty() ? fallback : name);
}

void write(const Options& o, const BufferPtr& buf) {
  const std::string_view text(plx_buffer_data(buf.get()), plx_buffer_size(buf.get()));
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Failure{PLX_ERR_IO, "cannot write '" + o.output + "'"};
  out << text;
}

int run(const std::string& command, const Options& o) {
  plx_buffer* raw = nullptr;
  if (command == "parse") {
    auto lex = load(o.lexicon);
    check(plx_parse(lex.get(), o.sentence.c_str(), target_or_null(o.target), o.all, format_of(o.format, "text"), &raw));
  } else if (command == "meaning") {
    auto lex = load(o.lexicon);
    unsigned flags = 0;
    if (o.logic) flags |= PLX_MEANING_LOGIC;
    if (o.all) flags |= PLX_MEANING_ALL;
    if (o.singletons) flags |= PLX_MEANING_SINGLETONS;
    check(plx_meaning(lex.get(), o.sentence.c_str(), target_or_null(o.target), flags, format_of(o.format, "text"),
                      &raw));
  } else if (command == "draw") {
    auto lex = load(o.lexicon);
    check(plx_draw(lex.get(), o.sentence.c_str(), target_or_null(o.target), format_of(o.format, "dot"), &raw));
  } else if (command == "eval") {
    const plx_backend backend = kBackends.at(o.backend);
    std::string data = backend == PLX_BACKEND_VECT ? o.interp : o.model;
    if (data.empty()) throw Failure{PLX_ERR_INVALID_ARGUMENT, "the vect backend needs --interp"};
    auto lex = load(o.lexicon);
    check(plx_eval(lex.get(), o.sentence.c_str(), target_or_null(o.target), backend, resolve(data).c_str(), &raw));
  } else if (command == "check-equiv") {
    auto m = load(o.montague);
    auto p = load(o.peirce);
    int equivalent = 0;
    check(plx_check_equiv(m.get(), p.get(), o.sentence.c_str(), o.max_universe, &raw, &equivalent));
    write(o, BufferPtr(raw));
    return equivalent ? 0 : 2;
  } else if (command == "selftest") {
    int passed = 0;
    check(plx_selftest((o.dir.empty() ? lexicon_dir() : o.dir).c_str(), &raw, &passed));
    write(o, BufferPtr(raw));
    return passed ? 0 : 2;
  }
  write(o, BufferPtr(raw));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peircelex: compile sentences to string diagrams and first-order logic"};
  app.set_version_flag("--version", std::string(plx_version()));
  app.require_subcommand(1);
  Options o;

  auto add_sentence = [&](CLI::App* sub) { sub->add_option("sentence", o.sentence, "Sentence to analyse")->required(); };
  auto add_lexicon = [&](CLI::App* sub) {
    sub->add_option("-l,--lexicon", o.lexicon, "Lexicon file (looked up in PEIRCELEX_LEXICON_DIR too)")
        ->capture_default_str();
    sub->add_option("-t,--target", o.target, "Target grammatical type, e.g. s or n");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write to this file"); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("-f,--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* parse = app.add_subcommand("parse", "Print the syntax tree");
  add_sentence(parse);
  add_lexicon(parse);
  parse->add_flag("-a,--all", o.all, "Every parse");
  add_format(parse, {"text", "json"});
  add_output(parse);

  CLI::App* meaning = app.add_subcommand("meaning", "Print the normal-form term and its diagram or formula");
  add_sentence(meaning);
  add_lexicon(meaning);
  meaning->add_flag("-a,--all", o.all, "Every reading");
  meaning->add_flag("--logic", o.logic, "First-order formula instead of the diagram");
  meaning->add_flag("--singletons", o.singletons, "Singleton predicates become constants");
  add_format(meaning, {"text", "json", "dot", "svg"});
  add_output(meaning);

  CLI::App* draw = app.add_subcommand("draw", "Render the diagram");
  add_sentence(draw);
  add_lexicon(draw);
  add_format(draw, {"dot", "svg", "json", "text"});
  add_output(draw);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate in a model or a tensor interpretation");
  add_sentence(eval);
  add_lexicon(eval);
  eval->add_option("-b,--backend", o.backend, "fol, rel or vect")
      ->check(CLI::IsMember({"fol", "rel", "vect"}))
      ->capture_default_str();
  eval->add_option("-m,--model", o.model, "Model file for fol and rel")->capture_default_str();
  eval->add_option("-i,--interp", o.interp, "Interpretation file for vect");
  add_output(eval);

  CLI::App* equiv = app.add_subcommand("check-equiv", "Compare the Montague and Peirce readings");
  add_sentence(equiv);
  equiv->add_option("--montague", o.montague, "Montague lexicon")->capture_default_str();
  equiv->add_option("--peirce", o.peirce, "Peirce lexicon")->capture_default_str();
  equiv->add_option("--max-universe", o.max_universe, "Largest universe checked")
      ->check(CLI::Range(1u, 8u))
      ->capture_default_str();
  add_output(equiv);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance battery");
  selftest->add_option("--lexicon-dir", o.dir, "Directory with lexicons, model and interpretation files");
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[" << plx_status_name(PLX_ERR_INVALID_ARGUMENT) << "]: " << e.what() << "\n";
    return 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    std::string msg = f.message;
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error[" << plx_status_name(f.status) << "]: " << msg << "\n";
    return 1;
  }
}
