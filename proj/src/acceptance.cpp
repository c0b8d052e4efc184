// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "acceptance.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <set>

#include "commands.hpp"
#include "peircelex/backends.hpp"
#include "peircelex/diagram.hpp"
#include "peircelex/error.hpp"
#include "peircelex/grammar.hpp"
#include "peircelex/lambda.hpp"
#include "peircelex/logic.hpp"
#include "peircelex/montague.hpp"
#include "peircelex/peirce.hpp"
#include "random_gen.hpp"

namespace peircelex::acceptance {

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<std::string> kBattery{
    "Man's Not Hot",  "no man is an island", "Alice kills a mortal", "every big man sleeps",
    "Alice sleeps",   "every man sleeps",    "no man sleeps",        "Alice is a mortal",
};

Diagram first_diagram(const std::string& sentence, const Lexicon& lex,
                      const std::optional<GrammarType>& target = std::nullopt) {
  auto readings = pipeline(sentence, lex, target.value_or(cmd::resolve_target(lex, std::nullopt)));
  return std::get<Diagram>(readings.front().value);
}

// ---------------------------------------------------------------------------
// 1

// Matrix product with M[out][in] = tensor[in][out], summed in input order.
std::vector<double> apply_matrix(const Tensor& b, const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j] += v[i] * b.data[i * n + j];
  return out;
}

Check toy(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/toy.json");
  Diagram d1 = first_diagram("very big car", lex), d2 = first_diagram("big big car", lex);
  if (!equal(d1, d2)) c.fail("diagrams differ: " + d1.str() + " vs " + d2.str());
  const std::size_t dim = 4;
  std::size_t exact = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    VectInterp interp;
    interp.dims["N"] = dim;
    Tensor car({dim}), big({dim, dim});
    for (double& x : car.data) x = normal(rng);
    for (double& x : big.data) x = normal(rng);
    interp.boxes["car"] = car;
    interp.boxes["big"] = big;
    const std::vector<double> want = apply_matrix(big, apply_matrix(big, car.data));
    const Tensor v1 = eval_vect(d1, interp), v2 = eval_vect(d2, interp);
    if (v1.shape == std::vector<std::size_t>{dim} && v1.data == want && v2.data == want) ++exact;
    else c.fail("seed " + std::to_string(seed) + " differs from B*B*car");
  }
  if (c.ok) c.detail = "equal diagrams " + d1.str() + "; " + std::to_string(exact) + "/100 seeds match B*B*car exactly";
  return c;
}

// ---------------------------------------------------------------------------
// 2

Check montague(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/montague.json");
  const std::vector<std::pair<std::string, std::string>> cases{
      {"Alice sleeps", "sleeps(Alice)"},
      {"every man sleeps", "forall x. man(x) -> sleeps(x)"},
  };
  for (const auto& [s, want] : cases) {
    Formula got = montague_formula(s, lex);
    if (!alpha_equivalent(got, parse_formula(want))) c.fail("\"" + s + "\" gave " + got.str() + ", want " + want);
    if (!free_vars(got).empty()) c.fail("\"" + s + "\" is not closed");
  }
  if (c.ok) c.detail = "sleeps(Alice); forall x. man(x) -> sleeps(x)";
  return c;
}

// ---------------------------------------------------------------------------
// 3

Check ccg(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/ccg.json");
  const MonoidalSignature& sig = lex.signature();
  Diagram d = first_diagram("Alice loves Bob", lex);
  if (boxes_of(d) != std::multiset<std::string>{"Alice", "Bob", "loves"}) c.fail("boxes differ: " + d.str());
  const std::size_t cups = count_generators(d, Diagram::Kind::Cup);
  if (cups != 2) c.fail(std::to_string(cups) + " cups in " + d.str());
  // (cup_N ⊗ id_S ⊗ cup_N) after (g ⊗ loves ⊗ f), subject Alice on the left.
  Diagram words = tensor(tensor(box(sig, "Alice"), box(sig, "loves")), box(sig, "Bob"));
  Diagram wiring = tensor(tensor(cup("N"), identity({"S"})), cup("N"));
  if (!equal(d, compose(words, wiring))) c.fail("structure differs: " + d.str());
  if (c.ok) c.detail = d.str();
  return c;
}

// ---------------------------------------------------------------------------
// 4

Check holes(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/holes.json");
  const MonoidalSignature& sig = lex.signature();
  Diagram ideas = first_diagram("ideas sleep furiously", lex);
  Diagram want_f = box(sig, "F", {compose(box(sig, "I"), box(sig, "S"))});
  if (!ideas.is(Diagram::Kind::Box) || !equal(ideas, want_f)) c.fail("got " + ideas.str() + ", want " + want_f.str());
  Diagram concepts = first_diagram("concepts with attitude", lex, GrammarType::atom("n"));
  // with = λx y. W(y, x): the noun modified fills the first hole.
  Diagram want_w = box(sig, "W", {box(sig, "concepts"), box(sig, "attitude")});
  if (!concepts.is(Diagram::Kind::Box) || !equal(concepts, want_w))
    c.fail("got " + concepts.str() + ", want " + want_w.str());
  if (c.ok) c.detail = ideas.str() + "; " + concepts.str();
  return c;
}

// ---------------------------------------------------------------------------
// 5

Check peirce_targets(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/peirce.json");
  const std::vector<std::pair<std::string, std::string>> cases{
      {"Man's Not Hot", "exists x. man(x) & ~hot(x)"},
      {"no man is an island", "~(exists x. man(x) & island(x))"},
      {"Alice kills a mortal", "exists x. mortal(x) & kills(Alice, x)"},
      {"every big man sleeps", "forall x. big(x) & man(x) -> sleeps(x)"},
  };
  std::size_t alpha = 0;
  for (const auto& [s, text] : cases) {
    Formula got = singleton_rewrite(fol_of_sentence(s, lex), lex.singletons());
    Formula want = parse_formula(text);
    if (alpha_equivalent(got, want)) {
      ++alpha;
      continue;
    }
    LogicSignature sig;
    collect_symbols(got, sig);
    collect_symbols(want, sig);
    Verdict v = equivalent(got, want, sig);
    if (!v.equivalent || !v.exhaustive) c.fail("\"" + s + "\": " + got.str() + " vs " + text + ": " + v.str());
  }
  if (c.ok)
    c.detail = std::to_string(alpha) + " alpha-equivalent, " + std::to_string(cases.size() - alpha) +
               " equivalent by exhaustive check up to 3";
  return c;
}

// ---------------------------------------------------------------------------
// 6, 7

MonoidalSignature restrict_to(const MonoidalSignature& sig, const std::multiset<std::string>& used) {
  std::vector<BoxDecl> boxes;
  for (const BoxDecl& b : sig.boxes())
    if (used.count(b.name)) boxes.push_back(b);
  return MonoidalSignature(sig.objects(), boxes);
}

// Exhaustive models of sizes 1 to 3 over the diagram's own predicates, then
// random ones of size 4 until at least 200 more.
void for_battery_models(const LogicSignature& sig, const std::function<void(const Model&)>& visit) {
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_model(sig, n, [&](const Model& m) {
      visit(m);
      return true;
    });
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) visit(random_model(sig, 4, rng));
}

struct BatteryItem {
  std::string label;
  Diagram diagram;
};

std::vector<BatteryItem> battery(const Lexicon& lex) {
  std::vector<BatteryItem> out;
  for (const std::string& s : kBattery) out.push_back({s, first_diagram(s, lex)});
  return out;
}

bool truth(const Tensor& t) { return t.data.at(0) != 0.0; }

Check backend_agreement(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/peirce.json");
  std::size_t checks = 0, fewest = SIZE_MAX;
  for (const BatteryItem& item : battery(lex)) {
    MonoidalSignature sig = restrict_to(lex.signature(), boxes_of(item.diagram));
    Formula f = to_fol(item.diagram, sig);
    std::size_t models = 0;
    for_battery_models(logic_signature_of(sig), [&](const Model& m) {
      ++models;
      if (truth(eval_rel(item.diagram, model_to_relinterp(m, sig))) != evaluate(f, m))
        c.fail("\"" + item.label + "\" disagrees on " + model_to_json(m));
    });
    checks += models;
    fewest = std::min(fewest, models);
  }
  if (c.ok)
    c.detail = std::to_string(kBattery.size()) + " sentences, " + std::to_string(checks) + " models (at least " +
               std::to_string(fewest) + " each), 0 disagreements";
  return c;
}

Check rewrite_soundness(const std::string& dir) {
  Check c;
  Lexicon lex = Lexicon::load(dir + "/peirce.json");
  const MonoidalSignature& full = lex.signature();
  std::vector<BatteryItem> items = battery(lex);
  const std::size_t sentences = items.size();
  for (std::size_t i = 0; i < sentences; ++i)
    items.push_back({"double cut of \"" + items[i].label + "\"", cut(cut(items[i].diagram))});
  auto b = [&](const char* n) { return box(full, n); };
  items.push_back({"spider chain", compose(compose(b("man"), compose(spider(1, 2, "N"), spider(2, 1, "N"))), b("sleeps"))});
  items.push_back({"spider fan", compose(compose(b("man"), spider(1, 2, "N")),
                                         tensor(b("hot"), compose(spider(1, 1, "N"), cut(cut(b("sleeps"))))))});
  items.push_back({"nested cuts", cut(cut(compose(b("man"), cut(cut(cut(b("hot")))))))});

  std::size_t fused = 0, uncut = 0, checks = 0;
  for (const BatteryItem& item : items) {
    Diagram f = spider_fuse(item.diagram), g = double_cut_elim(item.diagram);
    if (!equal(f, item.diagram)) ++fused;
    if (!equal(g, item.diagram)) ++uncut;
    MonoidalSignature sig = restrict_to(full, boxes_of(item.diagram));
    for_battery_models(logic_signature_of(sig), [&](const Model& m) {
      ++checks;
      RelInterp interp = model_to_relinterp(m, sig);
      const Tensor want = eval_rel(item.diagram, interp);
      if (!(eval_rel(f, interp) == want)) c.fail("spider_fuse changes \"" + item.label + "\" on " + model_to_json(m));
      if (!(eval_rel(g, interp) == want))
        c.fail("double_cut_elim changes \"" + item.label + "\" on " + model_to_json(m));
    });
  }
  if (fused == 0 || uncut == 0) c.fail("a rewrite never fired on the battery");
  if (c.ok)
    c.detail = std::to_string(items.size()) + " diagrams (" + std::to_string(fused) + " fused, " +
               std::to_string(uncut) + " uncut), " + std::to_string(checks) + " models, 0 disagreements";
  return c;
}

// ---------------------------------------------------------------------------
// 8

Check laws() {
  Check c;
  const MonoidalSignature sig = gen::law_signature();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  const std::vector<ObjectList> doms{{}, {"A"}, {"B"}, {"A", "B"}, {"B", "A"}};
  for (int i = 0; i < 1000 && c.ok; ++i) {
    const ObjectList& x = doms[i % doms.size()];
    Diagram a = gen::random_diagram(rng, sig, x, size(rng));
    Diagram b = gen::random_diagram(rng, sig, a.cod(), size(rng));
    Diagram e = gen::random_diagram(rng, sig, b.cod(), size(rng));
    const std::string at = " at sample " + std::to_string(i);
    if (!equal(compose(compose(a, b), e), compose(a, compose(b, e)))) c.fail("compose associativity" + at);
    if (!equal(compose(identity(a.dom()), a), a) || !equal(compose(a, identity(a.cod())), a)) c.fail("compose unit" + at);
    if (!equal(tensor(tensor(a, b), e), tensor(a, tensor(b, e)))) c.fail("tensor associativity" + at);
    if (!equal(tensor(identity({}), a), a) || !equal(tensor(a, identity({})), a)) c.fail("tensor unit" + at);
    // Interchange with an unrelated pair.
    Diagram f = gen::random_diagram(rng, sig, doms[(i + 2) % doms.size()], size(rng));
    Diagram g = gen::random_diagram(rng, sig, f.cod(), size(rng));
    if (!equal(tensor(compose(a, b), compose(f, g)), compose(tensor(a, f), tensor(b, g)))) c.fail("interchange" + at);
    if (!equal(compose(tensor(a, identity(f.dom())), tensor(identity(a.cod()), f)),
               compose(tensor(identity(a.dom()), f), tensor(a, identity(f.cod())))))
      c.fail("sliding" + at);
  }
  const std::string diagrams_ok = c.ok ? "1000 diagram samples" : "";

  const MonoidalSignature lsig = gen::lambda_signature();
  const ConstantTable consts = ConstantTable::diagrams(lsig);
  std::mt19937_64 trng(88);
  std::uniform_int_distribution<std::size_t> depth(1, 8);
  std::size_t redexes = 0;
  for (int i = 0; i < 1000 && c.ok; ++i) {
    const SemType type = gen::random_type(trng);
    const Term t = gen::random_term(trng, type, depth(trng));
    const std::string at = " at term " + std::to_string(i) + ": " + t.str();
    try {
      if (typecheck(t, consts) != type) {
        c.fail("generator produced the wrong type" + at);
        break;
      }
      const Term n1 = beta_normalize(t, Strategy::NormalOrder);
      const Term n2 = beta_normalize(t, Strategy::Innermost);
      if (!(n1 == t)) ++redexes;
      if (typecheck(n1, consts) != type || typecheck(n2, consts) != type) c.fail("subject reduction" + at);
      if (!alpha_equal(n1, n2)) c.fail("strategies disagree" + at);
      if (type.is(SemType::Kind::Diag)) {
        const Diagram v = std::get<Diagram>(eval_closed(t, consts));
        if (!equal(v, std::get<Diagram>(eval_closed(n1, consts)))) c.fail("evaluation changes under reduction" + at);
      }
    } catch (const Error& e) {
      c.fail(std::string(e.what()) + at);
    }
  }
  if (c.ok) c.detail = diagrams_ok + "; 1000 terms (" + std::to_string(redexes) + " with redexes)";
  return c;
}

// ---------------------------------------------------------------------------
// 9

Check cross_pipeline(const std::string& dir) {
  Check c;
  Lexicon m = Lexicon::load(dir + "/montague.json"), p = Lexicon::load(dir + "/peirce.json");
  std::size_t models = 0;
  for (const std::string& s : kBattery) {
    CrossValidation cv = cross_validate(s, m, p);
    models += cv.verdict.models_checked;
    if (!cv.verdict.equivalent || !cv.verdict.exhaustive) c.fail("\"" + s + "\": " + cv.verdict.str());
  }
  if (c.ok)
    c.detail = std::to_string(kBattery.size()) + " sentences equivalent, exhaustive up to 3 (" +
               std::to_string(models) + " models)";
  return c;
}

// ---------------------------------------------------------------------------
// 10

Check determinism(const std::string& dir) {
  Check c;
  Lexicon p = Lexicon::load(dir + "/peirce.json"), m = Lexicon::load(dir + "/montague.json"),
          t = Lexicon::load(dir + "/toy.json"), h = Lexicon::load(dir + "/holes.json");
  const std::string model = dir + "/model.json", interp = dir + "/toy_interp.json";
  auto target = [](const Lexicon& l) { return cmd::resolve_target(l, std::nullopt); };
  std::vector<std::pair<std::string, std::function<std::string()>>> runs;
  for (const std::string& s : kBattery) {
    for (cmd::Format f : {cmd::Format::Text, cmd::Format::Json, cmd::Format::Dot, cmd::Format::Svg}) {
      cmd::MeaningOptions o;
      o.format = f;
      runs.push_back({"meaning " + s, [&, s, o] { return cmd::meaning(p, s, target(p), o); }});
    }
    cmd::MeaningOptions logic;
    logic.logic = true;
    runs.push_back({"meaning --logic " + s, [&, s, logic] { return cmd::meaning(p, s, target(p), logic); }});
    runs.push_back({"meaning montague " + s, [&, s] { return cmd::meaning(m, s, target(m), {}); }});
    for (cmd::Format f : {cmd::Format::Dot, cmd::Format::Svg, cmd::Format::Json})
      runs.push_back({"draw " + s, [&, s, f] { return cmd::draw(p, s, target(p), f); }});
    for (cmd::Backend b : {cmd::Backend::Fol, cmd::Backend::Rel})
      runs.push_back({"eval " + s, [&, s, b] { return cmd::eval(p, s, target(p), b, model); }});
  }
  runs.push_back({"eval vect", [&] { return cmd::eval(t, "very big car", target(t), cmd::Backend::Vect, interp); }});
  runs.push_back({"draw holes", [&] { return cmd::draw(h, "ideas sleep furiously", target(h), cmd::Format::Svg); }});
  for (const auto& [label, f] : runs) {
    const std::string first = f();
    for (int k = 0; k < 2; ++k)
      if (f() != first) c.fail(label + " differs between runs");
  }
  if (c.ok) c.detail = std::to_string(runs.size()) + " invocations, 3 runs each, byte-identical";
  return c;
}

}  // namespace

std::vector<Result> run(const std::string& lexicon_dir) {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"toy higher-order example", [&] { return toy(lexicon_dir); }},
      {"montague fragment", [&] { return montague(lexicon_dir); }},
      {"ccg to discocat", [&] { return ccg(lexicon_dir); }},
      {"boxes with holes", [&] { return holes(lexicon_dir); }},
      {"peirce sentences", [&] { return peirce_targets(lexicon_dir); }},
      {"backend agreement", [&] { return backend_agreement(lexicon_dir); }},
      {"rewrite soundness", [&] { return rewrite_soundness(lexicon_dir); }},
      {"algebraic laws", [] { return laws(); }},
      {"cross-pipeline equivalence", [&] { return cross_pipeline(lexicon_dir); }},
      {"determinism", [&] { return determinism(lexicon_dir); }},
  };
  std::vector<Result> out;
  int id = 0;
  for (const auto& [name, check] : criteria) {
    Result r{++id, name, false, ""};
    try {
      Check c = check();
      r.passed = c.ok;
      r.detail = c.detail;
    } catch (const Error& e) {
      r.detail = std::string("error[") + error_tag(e.kind()) + "]: " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<Result>& results) {
  for (const Result& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

std::string report(const std::vector<Result>& results) {
  std::string out;
  for (const Result& r : results)
    out += std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name + ": " + r.detail + "\n";
  return out;
}

}  // namespace peircelex::acceptance
