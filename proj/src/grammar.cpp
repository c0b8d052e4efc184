// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "peircelex/error.hpp"

namespace peircelex {

// ---------------------------------------------------------------------------
// Lexicon loading

namespace {

using json = nlohmann::json;

class Problems {
 public:
  void add(ErrorKind kind, const std::string& message) {
    if (messages_.empty()) kind_ = kind;
    messages_.push_back(message);
  }

  template <class F>
  void guard(const std::string& context, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      add(e.kind(), context + ": " + e.what());
    } catch (const json::exception& e) {
      add(ErrorKind::InvalidArgument, context + ": " + e.what());
    }
  }

  void raise(const std::string& name) const {
    if (messages_.empty()) return;
    std::string out = "lexicon";
    if (!name.empty()) out += " '" + name + "'";
    out += ": ";
    for (std::size_t i = 0; i < messages_.size(); ++i) out += (i ? "; " : "") + messages_[i];
    throw Error(kind_, out);
  }

 private:
  ErrorKind kind_ = ErrorKind::InvalidArgument;
  std::vector<std::string> messages_;
};

ObjectList objects_from_json(const json& j) {
  if (j.is_string()) return parse_objects(j.get<std::string>());
  return j.get<std::vector<std::string>>();
}

MonoidalSignature signature_from_json(const json& j) {
  std::vector<std::string> objects = j.value("objects", std::vector<std::string>{});
  std::vector<BoxDecl> boxes;
  for (const auto& b : j.value("boxes", json::array())) {
    BoxDecl decl;
    decl.name = b.at("name").get<std::string>();
    decl.dom = objects_from_json(b.at("dom"));
    decl.cod = objects_from_json(b.at("cod"));
    for (const auto& h : b.value("holes", json::array())) {
      if (!h.is_array() || h.size() != 2)
        throw Error(ErrorKind::InvalidArgument, "hole of box '" + decl.name + "' must be a [dom, cod] pair");
      decl.holes.push_back({objects_from_json(h[0]), objects_from_json(h[1])});
    }
    decl.singleton = b.value("singleton", false);
    decl.fol_order = b.value("fol_order", std::vector<std::size_t>{});
    boxes.push_back(std::move(decl));
  }
  return MonoidalSignature(std::move(objects), std::move(boxes));
}

void check_atoms(const GrammarType& t, const std::set<std::string>& atoms) {
  for (const auto& a : t.atoms())
    if (!atoms.count(a)) throw Error(ErrorKind::MissingSymbol, "unknown grammatical atom '" + a + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Lexicon Lexicon::from_json(std::string_view text) {
  Lexicon lex;
  lex.atoms_.insert(predefined_atoms().begin(), predefined_atoms().end());
  lex.constants_ = std::make_shared<const ConstantTable>(ConstantTable::diagrams({}));
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return lex;

  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("lexicon JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "lexicon JSON must be an object");

  Problems problems;
  lex.name_ = j.value("name", "");
  problems.guard("atoms", [&] {
    for (const auto& a : j.value("atoms", std::vector<std::string>{})) lex.atoms_.insert(a);
  });
  if (j.contains("assignment")) {
    for (const auto& [atom, text] : j["assignment"].items())
      problems.guard("assignment of '" + atom + "'",
                     [&] { lex.assignment_.insert_or_assign(atom, parse_sem_type(text.get<std::string>())); });
  }

  const json sig = j.value("signature", json::object());
  lex.logic_ = sig.contains("predicates") || sig.contains("constants");
  problems.guard("signature", [&] {
    if (lex.logic_) {
      for (const auto& c : sig.value("constants", std::vector<std::string>{})) lex.logic_signature_.constants.insert(c);
      const json preds = sig.value("predicates", json::object());
      for (const auto& [p, arity] : preds.items()) lex.logic_signature_.predicates[p] = arity.get<std::size_t>();
      lex.constants_ = std::make_shared<const ConstantTable>(ConstantTable::logic(lex.logic_signature_));
    } else {
      lex.signature_ = signature_from_json(sig);
      for (const auto& v : validate_signature(lex.signature_))
        problems.add(v.code == "unknown-object" ? ErrorKind::MissingSymbol : ErrorKind::InvalidArgument,
                     "signature: " + v.message);
      lex.constants_ = std::make_shared<const ConstantTable>(ConstantTable::diagrams(lex.signature_));
    }
  });

  if (j.contains("target")) {
    problems.guard("target", [&] {
      GrammarType t = parse_grammar_type(j["target"].get<std::string>());
      check_atoms(t, lex.atoms_);
      lex.target_ = t;
    });
  }

  for (const auto& c : j.value("coercions", json::array())) {
    std::string name = c.value("name", c.value("from", std::string("?")) + " => " + c.value("to", std::string("?")));
    problems.guard("coercion '" + name + "'", [&] {
      GrammarType from = parse_grammar_type(c.at("from").get<std::string>());
      GrammarType to = parse_grammar_type(c.at("to").get<std::string>());
      check_atoms(from, lex.atoms_);
      check_atoms(to, lex.atoms_);
      std::string source = c.at("meaning").get<std::string>();
      SemType type = SemType::arrow(lex.sem_type(from), lex.sem_type(to));
      Term meaning = elaborate(parse_term(source, *lex.constants_), *lex.constants_, {}, type).term;
      lex.coercions_.push_back({name, from, to, source, meaning});
    });
  }

  for (const auto& e : j.value("entries", json::array())) {
    std::string word = e.value("word", std::string("?"));
    problems.guard("word '" + word + "'", [&] {
      GrammarType type = parse_grammar_type(e.at("type").get<std::string>());
      check_atoms(type, lex.atoms_);
      std::string source = e.at("meaning").get<std::string>();
      Term meaning = elaborate(parse_term(source, *lex.constants_), *lex.constants_, {}, lex.sem_type(type)).term;
      lex.entries_.push_back({word, type, source, meaning});
    });
  }
  problems.raise(lex.name_);
  return lex;
}

Lexicon Lexicon::load(const std::string& path) { return from_json(read_file(path)); }

std::set<std::string> Lexicon::singletons() const {
  std::set<std::string> out;
  for (const auto& b : signature_.boxes())
    if (b.singleton) out.insert(b.name);
  return out;
}

std::vector<const LexiconEntry*> Lexicon::lookup(const std::string& word) const {
  std::vector<const LexiconEntry*> out;
  for (const auto& e : entries_)
    if (e.word == word) out.push_back(&e);
  return out;
}

std::size_t Lexicon::max_word_tokens() const {
  std::size_t best = 1;
  for (const auto& e : entries_) {
    std::istringstream ss(e.word);
    std::size_t n = 0;
    for (std::string tok; ss >> tok;) ++n;
    best = std::max(best, n);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Syntax trees

struct SyntaxTree::Node {
  Kind kind;
  GrammarType type;
  std::shared_ptr<const LexiconEntry> entry;
  std::shared_ptr<const Coercion> rule;
  std::vector<SyntaxTree> children;  // function, argument; or child
};

SyntaxTree SyntaxTree::leaf(const LexiconEntry& entry) {
  return SyntaxTree(std::make_shared<const Node>(
      Node{Kind::Leaf, entry.type, std::make_shared<const LexiconEntry>(entry), nullptr, {}}));
}

SyntaxTree SyntaxTree::apply_left(SyntaxTree function, SyntaxTree argument) {
  GrammarType result = function.type().result();
  return SyntaxTree(std::make_shared<const Node>(
      Node{Kind::ApplyLeft, result, nullptr, nullptr, {std::move(function), std::move(argument)}}));
}

SyntaxTree SyntaxTree::apply_right(SyntaxTree argument, SyntaxTree function) {
  GrammarType result = function.type().result();
  return SyntaxTree(std::make_shared<const Node>(
      Node{Kind::ApplyRight, result, nullptr, nullptr, {std::move(function), std::move(argument)}}));
}

SyntaxTree SyntaxTree::coerce(const Coercion& rule, SyntaxTree child) {
  return SyntaxTree(std::make_shared<const Node>(
      Node{Kind::Coerce, rule.to, nullptr, std::make_shared<const Coercion>(rule), {std::move(child)}}));
}

SyntaxTree::Kind SyntaxTree::kind() const { return node_->kind; }
const GrammarType& SyntaxTree::type() const { return node_->type; }
const LexiconEntry& SyntaxTree::entry() const { return *node_->entry; }
const Coercion& SyntaxTree::rule() const { return *node_->rule; }
const SyntaxTree& SyntaxTree::function() const { return node_->children.at(0); }
const SyntaxTree& SyntaxTree::argument() const { return node_->children.at(1); }
const SyntaxTree& SyntaxTree::child() const { return node_->children.at(0); }

std::vector<std::string> SyntaxTree::words() const {
  switch (kind()) {
    case Kind::Leaf: return {entry().word};
    case Kind::Coerce: return child().words();
    case Kind::ApplyLeft: {
      auto out = function().words();
      auto rest = argument().words();
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case Kind::ApplyRight: {
      auto out = argument().words();
      auto rest = function().words();
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }
  return {};
}

namespace {

void render_tree(const SyntaxTree& t, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + t.type().str();
  switch (t.kind()) {
    case SyntaxTree::Kind::Leaf: out += "  \"" + t.entry().word + "\"\n"; return;
    case SyntaxTree::Kind::Coerce:
      out += "  [" + t.rule().name + "]\n";
      render_tree(t.child(), depth + 1, out);
      return;
    case SyntaxTree::Kind::ApplyLeft:
      out += "  >\n";
      render_tree(t.function(), depth + 1, out);
      render_tree(t.argument(), depth + 1, out);
      return;
    case SyntaxTree::Kind::ApplyRight:
      out += "  <\n";
      render_tree(t.argument(), depth + 1, out);
      render_tree(t.function(), depth + 1, out);
      return;
  }
}

nlohmann::ordered_json tree_json(const SyntaxTree& t) {
  nlohmann::ordered_json j;
  j["type"] = t.type().str();
  switch (t.kind()) {
    case SyntaxTree::Kind::Leaf:
      j["rule"] = "leaf";
      j["word"] = t.entry().word;
      j["meaning"] = t.entry().source;
      break;
    case SyntaxTree::Kind::Coerce:
      j["rule"] = "coerce";
      j["name"] = t.rule().name;
      j["children"] = {tree_json(t.child())};
      break;
    case SyntaxTree::Kind::ApplyLeft:
      j["rule"] = "forward";
      j["children"] = {tree_json(t.function()), tree_json(t.argument())};
      break;
    case SyntaxTree::Kind::ApplyRight:
      j["rule"] = "backward";
      j["children"] = {tree_json(t.argument()), tree_json(t.function())};
      break;
  }
  return j;
}

}  // namespace

std::string SyntaxTree::str() const {
  std::string out;
  render_tree(*this, 0, out);
  return out;
}

std::string SyntaxTree::json() const { return tree_json(*this).dump(2); }

// ---------------------------------------------------------------------------
// Parsing

std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex) {
  std::vector<std::string> raw;
  std::istringstream ss{std::string(sentence)};
  for (std::string tok; ss >> tok;) raw.push_back(tok);

  std::vector<std::string> out;
  const std::size_t longest = lex.max_word_tokens();
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t taken = 1;
    for (std::size_t k = std::min(longest, raw.size() - i); k >= 2; --k) {
      std::string joined = raw[i];
      for (std::size_t m = 1; m < k; ++m) joined += " " + raw[i + m];
      if (lex.has_word(joined)) {
        taken = k;
        break;
      }
    }
    std::string word = raw[i];
    for (std::size_t m = 1; m < taken; ++m) word += " " + raw[i + m];
    out.push_back(word);
    i += taken;
  }
  return out;
}

namespace {

bool chain_has(const SyntaxTree& t, const GrammarType& type) {
  const SyntaxTree* cur = &t;
  while (true) {
    if (cur->type() == type) return true;
    if (cur->kind() != SyntaxTree::Kind::Coerce) return false;
    cur = &cur->child();
  }
}

void close_unary(std::vector<SyntaxTree>& cell, std::size_t from, const Lexicon& lex) {
  for (std::size_t i = from; i < cell.size(); ++i) {
    for (const auto& rule : lex.coercions()) {
      if (cell[i].type() != rule.from || chain_has(cell[i], rule.to)) continue;
      cell.push_back(SyntaxTree::coerce(rule, cell[i]));
    }
  }
}

}  // namespace

std::vector<SyntaxTree> parse_sentence(const std::vector<std::string>& words, const Lexicon& lex,
                                       const GrammarType& target) {
  std::vector<std::string> unknown;
  for (const auto& w : words)
    if (!lex.has_word(w) && std::find(unknown.begin(), unknown.end(), w) == unknown.end()) unknown.push_back(w);
  if (!unknown.empty()) {
    std::string list;
    for (std::size_t i = 0; i < unknown.size(); ++i) list += (i ? ", " : "") + unknown[i];
    throw Error(ErrorKind::MissingSymbol, "unknown word(s): " + list);
  }
  const std::size_t n = words.size();
  if (n == 0) return {};

  std::vector<std::vector<std::vector<SyntaxTree>>> chart(n + 1, std::vector<std::vector<SyntaxTree>>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    auto& cell = chart[i][i + 1];
    for (const auto* e : lex.lookup(words[i])) cell.push_back(SyntaxTree::leaf(*e));
    close_unary(cell, 0, lex);
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      auto& cell = chart[i][j];
      for (std::size_t k = i + 1; k < j; ++k) {
        for (const auto& a : chart[i][k]) {
          for (const auto& b : chart[k][j]) {
            const GrammarType& ta = a.type();
            const GrammarType& tb = b.type();
            if (ta.kind() == GrammarType::Kind::Over && ta.argument() == tb)
              cell.push_back(SyntaxTree::apply_left(a, b));
            if (tb.kind() == GrammarType::Kind::Under && tb.argument() == ta)
              cell.push_back(SyntaxTree::apply_right(a, b));
          }
        }
      }
      close_unary(cell, 0, lex);
    }
  }
  std::vector<SyntaxTree> out;
  for (const auto& t : chart[0][n])
    if (t.type() == target) out.push_back(t);
  return out;
}

Term meaning_of(const SyntaxTree& tree, const Lexicon& lex) {
  switch (tree.kind()) {
    case SyntaxTree::Kind::Leaf: return Term::ann(tree.entry().meaning, lex.sem_type(tree.type()));
    case SyntaxTree::Kind::Coerce: {
      const Coercion& rule = tree.rule();
      SemType type = SemType::arrow(lex.sem_type(rule.from), lex.sem_type(rule.to));
      return Term::app(Term::ann(rule.meaning, type), meaning_of(tree.child(), lex));
    }
    case SyntaxTree::Kind::ApplyLeft:
    case SyntaxTree::Kind::ApplyRight:
      return Term::app(meaning_of(tree.function(), lex), meaning_of(tree.argument(), lex));
  }
  throw Error(ErrorKind::Type, "malformed syntax tree");
}

std::vector<Reading> pipeline(std::string_view sentence, const Lexicon& lex, const GrammarType& target) {
  std::vector<std::string> words = tokenize(sentence, lex);
  std::vector<SyntaxTree> trees = parse_sentence(words, lex, target);
  if (trees.empty())
    throw Error(ErrorKind::NoParse, "no parse of \"" + std::string(sentence) + "\" at type " + target.str());
  const ConstantTable& consts = lex.constants();
  const SemType expected = lex.sem_type(target);
  std::vector<Reading> out;
  for (const auto& tree : trees) {
    Term term = elaborate(meaning_of(tree, lex), consts, {}, expected).term;
    Term normal = elaborate(beta_normalize(term), consts, {}, expected).term;
    out.push_back({tree, normal, eval_closed(normal, consts)});
  }
  return out;
}

}  // namespace peircelex
