// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "peircelex/backends.hpp"
#include "peircelex/error.hpp"
#include "peircelex/montague.hpp"
#include "peircelex/peirce.hpp"
#include "peircelex/render.hpp"

namespace peircelex::cmd {

namespace {

const Diagram& diagram_of(const Reading& r) {
  if (!std::holds_alternative<Diagram>(r.value))
    throw Error(ErrorKind::InvalidArgument, "this lexicon produces formulas, not diagrams");
  return std::get<Diagram>(r.value);
}

Formula formula_of(const Reading& r, const Lexicon& lex, bool singletons) {
  Formula f = std::holds_alternative<Formula>(r.value) ? std::get<Formula>(r.value)
                                                        : to_fol(std::get<Diagram>(r.value), lex.signature());
  return singletons ? singleton_rewrite(f, lex.singletons()) : f;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GrammarType resolve_target(const Lexicon& lex, const std::optional<std::string>& target) {
  if (target) return parse_grammar_type(*target);
  return lex.default_target().value_or(GrammarType::atom("s"));
}

std::string parse(const Lexicon& lex, std::string_view sentence, const GrammarType& target, bool all, Format format) {
  auto trees = parse_sentence(tokenize(sentence, lex), lex, target);
  if (trees.empty())
    throw Error(ErrorKind::NoParse, "no parse of \"" + std::string(sentence) + "\" at type " + target.str());
  const std::size_t n = all ? trees.size() : 1;
  if (format == Format::Json) {
    if (!all) return with_newline(trees.front().json());
    std::string out = "[\n";
    for (std::size_t i = 0; i < n; ++i) out += (i ? ",\n" : "") + trees[i].json();
    return out + "\n]\n";
  }
  if (format != Format::Text) throw Error(ErrorKind::InvalidArgument, "parse supports text and json output");
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (all) out += "# parse " + std::to_string(i + 1) + " of " + std::to_string(trees.size()) + "\n";
    out += trees[i].str();
  }
  return out;
}

std::string meaning(const Lexicon& lex, std::string_view sentence, const GrammarType& target,
                    const MeaningOptions& options) {
  auto readings = pipeline(sentence, lex, target);
  const std::size_t n = options.all ? readings.size() : 1;
  std::string out;
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const Reading& r = readings[i];
    if (options.all && options.format == Format::Text)
      out += "# reading " + std::to_string(i + 1) + " of " + std::to_string(readings.size()) + "\n";
    const bool formula = options.logic || lex.is_logic();
    switch (options.format) {
      case Format::Text:
        if (options.logic) {
          out += formula_of(r, lex, options.singletons).str() + "\n";
        } else {
          out += "term: " + r.term.str() + "\n";
          out += formula ? "formula: " + formula_of(r, lex, options.singletons).str() + "\n"
                         : "diagram: " + diagram_of(r).str() + "\n";
        }
        break;
      case Format::Json: {
        nlohmann::ordered_json j;
        j["term"] = r.term.str();
        if (formula) j["formula"] = nlohmann::ordered_json::parse(formula_json(formula_of(r, lex, options.singletons)));
        else j["diagram"] = nlohmann::ordered_json::parse(diagram_json(diagram_of(r)));
        array.push_back(j);
        break;
      }
      case Format::Dot:
        if (formula) throw Error(ErrorKind::InvalidArgument, "formulas have no dot rendering");
        out += diagram_dot(diagram_of(r));
        break;
      case Format::Svg:
        if (formula) throw Error(ErrorKind::InvalidArgument, "formulas have no svg rendering");
        out += diagram_svg(diagram_of(r));
        break;
    }
  }
  if (options.format == Format::Json) return (options.all ? array.dump(2) : array.front().dump(2)) + "\n";
  return out;
}

std::string draw(const Lexicon& lex, std::string_view sentence, const GrammarType& target, Format format) {
  auto readings = pipeline(sentence, lex, target);
  const Diagram& d = diagram_of(readings.front());
  switch (format) {
    case Format::Dot: return diagram_dot(d);
    case Format::Svg: return diagram_svg(d);
    case Format::Json: return diagram_json(d) + "\n";
    case Format::Text: return d.str() + "\n";
  }
  return {};
}

std::string eval(const Lexicon& lex, std::string_view sentence, const GrammarType& target, Backend backend,
                 const std::string& data_path) {
  auto readings = pipeline(sentence, lex, target);
  const Reading& r = readings.front();
  const std::string data = read_text_file(data_path);
  switch (backend) {
    case Backend::Fol: {
      Formula f = formula_of(r, lex, false);
      if (!free_vars(f).empty())
        throw Error(ErrorKind::InvalidArgument, "formula " + f.str() + " has free variables; fol needs a sentence");
      return evaluate(f, model_from_json(data)) ? "true\n" : "false\n";
    }
    case Backend::Rel: {
      Tensor t = eval_rel(diagram_of(r), model_to_relinterp(model_from_json(data), lex.signature()));
      if (t.rank() == 0) return t.data[0] != 0.0 ? "true\n" : "false\n";
      return tensor_to_json(t) + "\n";
    }
    case Backend::Vect: return tensor_to_json(eval_vect(diagram_of(r), interp_from_json(data))) + "\n";
  }
  return {};
}

EquivReport check_equiv(const Lexicon& montague, const Lexicon& peirce, std::string_view sentence,
                        std::size_t max_universe) {
  EquivalenceOptions opts;
  opts.max_universe = max_universe;
  CrossValidation cv = cross_validate(sentence, montague, peirce, opts);
  std::string text = "sentence: " + std::string(sentence) + "\n";
  text += "montague: " + cv.montague.str() + "\n";
  text += "peirce: " + cv.peirce.str() + "\n";
  text += "rewritten: " + cv.rewritten.str() + "\n";
  text += "verdict: " + cv.verdict.str() + "\n";
  return {text, cv.verdict.equivalent};
}

}  // namespace peircelex::cmd
