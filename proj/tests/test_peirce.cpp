// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include "peircelex/backends.hpp"
#include "peircelex/grammar.hpp"
#include "peircelex/peirce.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

const Lexicon& peirce_lex() {
  static const Lexicon lex = Lexicon::load(testutil::lexicon("peirce.json"));
  return lex;
}
const MonoidalSignature& sig() { return peirce_lex().signature(); }
Diagram b(const char* name) { return box(sig(), name); }

Diagram sentence(const char* text) {
  auto readings = pipeline(text, peirce_lex(), GrammarType::atom("s"));
  return std::get<Diagram>(readings.front().value);
}

Model random_model(std::size_t n, std::mt19937_64& rng) {
  Model m;
  m.universe = n;
  std::bernoulli_distribution coin(0.5);
  for (const BoxDecl& d : sig().boxes()) {
    Relation& r = m.declare(d.name, d.arity());
    for (auto& cell : r.table) cell = coin(rng) ? 1 : 0;
  }
  return m;
}

// Every cell of the Rel tensor against the formula under the matching
// assignment of x0, x1, ...
void check_reading(const Diagram& d, std::size_t models) {
  const Formula phi = to_fol(d, sig());
  const std::size_t rank = d.dom().size() + d.cod().size();
  std::mt19937_64 rng(17);
  for (std::size_t i = 0; i < models; ++i) {
    const std::size_t n = 1 + i % 3;
    const Model m = random_model(n, rng);
    const Tensor t = eval_rel(d, model_to_relinterp(m, sig()));
    std::vector<std::size_t> index(rank, 0);
    for (std::size_t cell = 0; cell < t.size(); ++cell) {
      std::size_t rest = cell;
      Assignment env;
      for (std::size_t k = rank; k-- > 0;) {
        index[k] = rest % n;
        rest /= n;
        env["x" + std::to_string(k)] = index[k];
      }
      REQUIRE((t.at(index) != 0) == evaluate(phi, m, env));
    }
  }
}

// eval_rel over random models of every size up to 3.
bool same_relation(const Diagram& a, const Diagram& b2) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Model m = random_model(1 + i % 3, rng);
    const RelInterp interp = model_to_relinterp(m, sig());
    if (eval_rel(a, interp) != eval_rel(b2, interp)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sentences read as first-order formulas") {
  auto fol = [](const char* s) { return fol_of_sentence(s, peirce_lex()); };
  CHECK(alpha_equivalent(fol("Man's Not Hot"), parse_formula("exists x. man(x) & ~hot(x)")));
  CHECK(alpha_equivalent(fol("no man is an island"), parse_formula("~(exists x. man(x) & island(x))")));
  CHECK(alpha_equivalent(fol("every man sleeps"), parse_formula("~(exists x. man(x) & ~sleeps(x))")));
  CHECK(alpha_equivalent(fol("every big man sleeps"), parse_formula("~(exists x. big(x) & man(x) & ~sleeps(x))")));
  CHECK(alpha_equivalent(fol("Alice kills a mortal"),
                         parse_formula("exists a. exists m. Alice(a) & mortal(m) & kills(a, m)")));
  CHECK(free_vars(fol("Alice sleeps")).empty());
  const Lexicon mont = Lexicon::load(testutil::lexicon("montague.json"));
  CHECK(kind_of([&] { fol_of_sentence("every man sleeps", mont); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { fol_of_sentence("man man", peirce_lex()); }) == ErrorKind::NoParse);
}

TEST_CASE("open diagrams give free variables in boundary order") {
  Formula k = to_fol(b("kills"), sig());
  CHECK(k == Formula::atom("kills", {FolTerm::var("x1"), FolTerm::var("x0")}));
  CHECK(free_vars(to_fol(cup("N"), sig())) == std::set<std::string>{"x0", "x1"});
  CHECK(to_fol(identity({}), sig()) == Formula::top());
  check_reading(b("kills"), 30);
  check_reading(cup("N"), 30);
  check_reading(spider(2, 1, "N"), 30);
  check_reading(swap("N", "N"), 30);
  check_reading(cut(spider(1, 2, "N")), 30);
  check_reading(compose(b("man"), cut(b("kills"))), 30);
  check_reading(tensor(cap("N"), cut(compose(b("mortal"), b("hot")))), 30);
  check_reading(compose(cap("N"), tensor(identity({"N"}), cut(compose(b("kills"), cut(b("sleeps")))))), 30);
}

TEST_CASE("first-order readings agree with Rel on the battery") {
  for (const char* s : {"Man's Not Hot", "no man is an island", "Alice kills a mortal", "every big man sleeps",
                        "Alice sleeps", "every man sleeps", "no man sleeps", "Alice is a mortal"}) {
    CAPTURE(s);
    check_reading(sentence(s), 60);
  }
}

TEST_CASE("wire graph of nested cuts") {
  const Diagram d = cut(compose(b("man"), cut(b("sleeps"))));
  const WireGraph g = wire_graph(d, sig());
  REQUIRE(g.regions.size() == 3);
  CHECK(g.regions[1].parent == 0);
  CHECK(g.regions[2].parent == 1);
  CHECK(g.regions[2].depth == 2);
  CHECK(g.boundary.empty());
  REQUIRE(g.items[0].size() == 1);
  CHECK(g.items[0][0].kind == WireGraph::Item::Kind::Cut);
  auto atom_region = [&](const std::string& name) {
    for (std::size_t r = 0; r < g.items.size(); ++r)
      for (const auto& item : g.items[r])
        if (item.kind == WireGraph::Item::Kind::Atom && item.box == name) {
          for (std::size_t w : item.wires) CHECK(g.wires[w].region == r);
          return static_cast<int>(r);
        }
    return -1;
  };
  CHECK(atom_region("man") == 1);
  CHECK(atom_region("sleeps") == 2);

  const WireGraph k = wire_graph(b("kills"), sig());
  CHECK(k.boundary.size() == 2);
  // The atom, then the output joined to its boundary copy.
  REQUIRE(k.items[0].size() == 2);
  const auto& atom = k.items[0][0];
  CHECK(atom.kind == WireGraph::Item::Kind::Atom);
  REQUIRE(atom.wires.size() == 2);
  CHECK(atom.wires[1] == k.boundary[0]);
  CHECK(k.items[0][1].kind == WireGraph::Item::Kind::Identify);
  CHECK(k.items[0][1].wires == std::vector<std::size_t>{atom.wires[0], k.boundary[1]});

  MonoidalSignature holes({"N"}, {BoxDecl{"twice", {"N"}, {"N"}, {{{"N"}, {"N"}}}, false, {}}});
  const Diagram t = box(holes, "twice", {identity({"N"})});
  CHECK(kind_of([&] { wire_graph(t, holes); }) == ErrorKind::Unsupported);
  CHECK(kind_of([&] { to_fol(t, holes); }) == ErrorKind::Unsupported);
  CHECK(kind_of([&] { to_fol(b("man"), MonoidalSignature({"N"}, {})); }) == ErrorKind::MissingSymbol);
}

TEST_CASE("spider fusion") {
  const Diagram two = compose(spider(2, 1, "N"), spider(1, 2, "N"));
  const Diagram fused = spider_fuse(two);
  CHECK(equal(fused, spider(2, 2, "N")));
  CHECK(same_relation(two, fused));

  CHECK(equal(spider_fuse(spider(1, 1, "N")), identity({"N"})));
  const Diagram chain = compose(compose(b("man"), spider(1, 1, "N")), b("hot"));
  CHECK(equal(spider_fuse(chain), compose(b("man"), b("hot"))));

  // Separated by a cut boundary: nothing to fuse across.
  const Diagram across = compose(spider(2, 1, "N"), cut(spider(1, 2, "N")));
  CHECK(count_generators(spider_fuse(across), Diagram::Kind::Spider) == 2);
  CHECK(same_relation(across, spider_fuse(across)));

  const Diagram big = sentence("every big man sleeps");
  CHECK(same_relation(big, spider_fuse(big)));
  CHECK(equal(spider_fuse(spider_fuse(big)), spider_fuse(big)));
}

TEST_CASE("double cut elimination") {
  const Diagram s = compose(b("man"), b("sleeps"));
  CHECK(equal(double_cut_elim(cut(cut(s))), s));
  CHECK(equal(double_cut_elim(cut(s)), cut(s)));
  CHECK(equal(double_cut_elim(cut(cut(cut(s)))), cut(s)));
  const Diagram inner = compose(b("man"), cut(cut(b("hot"))));
  CHECK(equal(double_cut_elim(inner), compose(b("man"), b("hot"))));
  // Not immediately nested.
  const Diagram apart = cut(tensor(cut(s), compose(b("mortal"), b("hot"))));
  CHECK(equal(double_cut_elim(apart), apart));
  for (const Diagram& d : {cut(cut(s)), inner, apart, cut(cut(spider(1, 2, "N")))}) {
    CHECK(same_relation(d, double_cut_elim(d)));
  }
}
