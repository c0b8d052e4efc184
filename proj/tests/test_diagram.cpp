// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "peircelex/backends.hpp"
#include "peircelex/diagram.hpp"
#include "random_gen.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

MonoidalSignature sig() {
  return MonoidalSignature({"A", "B", "N"},
                           {
                               BoxDecl{"f", {"A"}, {"A"}, {}, false, {}},
                               BoxDecl{"g", {"A"}, {"A"}, {}, false, {}},
                               BoxDecl{"k", {"B"}, {"B"}, {}, false, {}},
                               BoxDecl{"s", {}, {"A"}, {}, false, {}},
                               BoxDecl{"u", {}, {"A"}, {}, false, {}},
                               BoxDecl{"e", {"A"}, {}, {}, false, {}},
                               BoxDecl{"z", {}, {}, {}, false, {}},
                               BoxDecl{"car", {}, {"N"}, {}, false, {}},
                               BoxDecl{"twice", {"N"}, {"N"}, {{{"N"}, {"N"}}}, false, {}},
                           });
}

Diagram b(const char* name) { return box(sig(), name); }

}  // namespace

TEST_CASE("construction checks shapes") {
  CHECK(compose(b("f"), b("g")).dom() == ObjectList{"A"});
  CHECK(tensor(b("f"), b("k")).cod() == ObjectList{"A", "B"});
  CHECK(kind_of([] { compose(b("f"), b("k")); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { box(sig(), "missing"); }) == ErrorKind::MissingSymbol);
  CHECK(kind_of([] { box(sig(), "twice"); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { box(sig(), "twice", {b("f")}); }) == ErrorKind::ShapeMismatch);
  Diagram t = box(sig(), "twice", {box(sig(), "twice", {identity({"N"})})});
  CHECK(t.fillings().size() == 1);
  CHECK(spider(2, 1, "N").dom() == ObjectList{"N", "N"});
  CHECK(cup("N").cod().empty());
  CHECK(cap("N").cod() == ObjectList{"N", "N"});
  CHECK(swap("A", "B").cod() == ObjectList{"B", "A"});
  CHECK(cut(b("e")).dom() == ObjectList{"A"});
}

TEST_CASE("normal form reconstructs an equal diagram") {
  Diagram d = compose(tensor(b("f"), b("k")), tensor(b("g"), identity({"B"})));
  LayeredForm form = normalize(d);
  CHECK(form.layers.size() == 3);
  CHECK(form.cod() == d.cod());
  CHECK(equal(form.reconstruct(), d));
  CHECK(canonical_key(normalize(form.reconstruct()).reconstruct()) == canonical_key(d));
}

TEST_CASE("monoidal laws") {
  Diagram f = b("f"), g = b("g"), k = b("k");
  CHECK(equal(compose(compose(f, g), f), compose(f, compose(g, f))));
  CHECK(equal(compose(identity({"A"}), f), f));
  CHECK(equal(tensor(identity({}), f), f));
  CHECK(equal(tensor(tensor(f, k), g), tensor(f, tensor(k, g))));
  // Interchange.
  CHECK(equal(compose(tensor(f, identity({"B"})), tensor(identity({"A"}), k)),
              compose(tensor(identity({"A"}), k), tensor(f, identity({"B"})))));
  CHECK(equal(tensor(compose(f, g), k), compose(tensor(f, k), tensor(g, identity({"B"})))));
}

TEST_CASE("distinct composites differ") {
  // Brute-force oracle: the only rearrangements are the two orders.
  CHECK_FALSE(equal(compose(b("f"), b("g")), compose(b("g"), b("f"))));
  CHECK_FALSE(equal(b("f"), b("g")));
  CHECK_FALSE(equal(cut(b("f")), b("f")));
  CHECK_FALSE(equal(tensor(b("f"), b("g")), tensor(b("g"), b("f"))));
  CHECK(equal(cut(compose(tensor(b("f"), b("k")), tensor(b("g"), identity({"B"})))),
              cut(compose(tensor(compose(b("f"), b("g")), identity({"B"})), tensor(identity({"A"}), b("k"))))));
}

TEST_CASE("planar isotopy with floating pieces") {
  const Diagram a = identity({"A"});
  // A state cannot cross a through wire.
  CHECK_FALSE(equal(tensor(b("s"), a), tensor(a, b("s"))));
  // Nor can a scalar.
  CHECK_FALSE(equal(tensor(b("z"), a), tensor(a, b("z"))));
  // But it may pass around an effect.
  CHECK(equal(compose(b("e"), tensor(b("s"), identity({}))), compose(tensor(b("s"), a), tensor(identity({"A"}), b("e")))));
  CHECK(equal(compose(tensor(b("s"), a), tensor(a, b("e"))), compose(tensor(a, b("s")), tensor(b("e"), a))));
  // Identical states may trade places; distinct ones may not.
  CHECK(equal(compose(b("s"), tensor(b("s"), a)), compose(b("s"), tensor(a, b("s")))));
  CHECK_FALSE(equal(tensor(b("s"), b("u")), tensor(b("u"), b("s"))));
  // Scalars commute with each other and float across effects.
  CHECK(equal(tensor(b("z"), cut(b("z"))), tensor(cut(b("z")), b("z"))));
  CHECK(equal(compose(b("s"), tensor(b("z"), b("e"))), compose(b("s"), tensor(b("e"), b("z")))));
  // Inside a loop versus outside it.
  const Diagram loop_in = compose(cap("A"), compose(tensor(tensor(a, b("z")), a), cup("A")));
  const Diagram loop_out = tensor(compose(cap("A"), cup("A")), b("z"));
  CHECK_FALSE(equal(loop_in, loop_out));
  CHECK(equal(loop_out, tensor(b("z"), compose(cap("A"), cup("A")))));
}

TEST_CASE("holes and cuts are compared recursively") {
  Diagram car = b("car");
  Diagram t1 = box(sig(), "twice", {compose(identity({"N"}), box(sig(), "twice", {identity({"N"})}))});
  Diagram t2 = box(sig(), "twice", {box(sig(), "twice", {identity({"N"})})});
  CHECK(equal(t1, t2));
  CHECK_FALSE(equal(t2, box(sig(), "twice", {identity({"N"})})));
  CHECK(equal(compose(car, t2), compose(compose(car, identity({"N"})), t2)));
}

TEST_CASE("box and generator counts") {
  Diagram d = compose(b("car"), box(sig(), "twice", {compose(spider(1, 2, "N"), spider(2, 1, "N"))}));
  CHECK(boxes_of(d) == std::multiset<std::string>{"car", "twice"});
  CHECK(count_generators(d, Diagram::Kind::Spider) == 2);
  CHECK(count_generators(cut(cut(b("f"))), Diagram::Kind::Cut) == 2);
  CHECK(count_generators(compose(cap("A"), cup("A")), Diagram::Kind::Cup) == 1);
}

TEST_CASE("transpose bends wires") {
  Diagram t = transpose(b("s"));
  CHECK(t.dom() == ObjectList{"A"});
  CHECK(t.cod().empty());
  CHECK(transpose(transpose(b("s"))).cod() == ObjectList{"A"});
  CHECK(kind_of([] { transpose(b("f")); }) == ErrorKind::ShapeMismatch);
}

namespace {

// Independent oracle: a layered list of (offset, generator), the moves that
// slide neighbouring generators past each other, and reconstruction.
using Slots = std::vector<std::pair<std::size_t, Diagram>>;

Slots slots_of(const LayeredForm& f) {
  Slots out;
  for (const Layer& l : f.layers) out.emplace_back(l.left.size(), l.generator);
  return out;
}

Diagram rebuild(const ObjectList& dom, const Slots& slots) {
  Diagram d = identity(dom);
  for (const auto& [o, g] : slots) {
    ObjectList w = d.cod();
    ObjectList left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(o));
    ObjectList right(w.begin() + static_cast<std::ptrdiff_t>(o + g.dom().size()), w.end());
    d = compose(d, tensor(tensor(identity(left), g), identity(right)));
  }
  return d;
}

std::vector<Slots> neighbours(const Slots& s) {
  std::vector<Slots> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const auto& [o1, g1] = s[i];
    const auto& [o2, g2] = s[i + 1];
    const std::size_t in1 = g1.dom().size(), out1 = g1.cod().size(), in2 = g2.dom().size(), out2 = g2.cod().size();
    if (o2 + in2 <= o1) {
      Slots t = s;
      t[i] = {o2, g2};
      t[i + 1] = {o1 - in2 + out2, g1};
      out.push_back(t);
    }
    if (o2 >= o1 + out1) {
      Slots t = s;
      t[i] = {o2 - out1 + in1, g2};
      t[i + 1] = {o1, g1};
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("every interchange rearrangement has the same key and semantics") {
  const MonoidalSignature ls = gen::law_signature();
  std::mt19937_64 rng(21);
  RelInterp interp;
  interp.dims = {{"A", 2}, {"B", 2}};
  std::bernoulli_distribution bit(0.5);
  auto random_tensor = [&](std::vector<std::size_t> shape) {
    Tensor t(shape);
    for (double& x : t.data) x = bit(rng) ? 1.0 : 0.0;
    return t;
  };
  interp.boxes = {{"f", random_tensor({2, 2})}, {"g", random_tensor({2, 2, 2})}, {"h", random_tensor({2, 2})},
                  {"s", random_tensor({2})},    {"t", random_tensor({2, 2})}};
  const std::vector<ObjectList> doms{{}, {"A"}, {"B"}, {"A", "B"}};
  std::size_t explored = 0;
  for (int i = 0; i < 150; ++i) {
    Diagram d = gen::random_diagram(rng, ls, doms[i % doms.size()], 1 + i % 7);
    const std::string key = canonical_key(d);
    const Tensor value = eval_rel(d, interp);
    std::vector<Slots> frontier{slots_of(normalize(d))};
    std::set<std::string> seen;
    while (!frontier.empty() && seen.size() < 60) {
      Slots s = frontier.back();
      frontier.pop_back();
      Diagram r = rebuild(d.dom(), s);
      if (!seen.insert(r.str()).second) continue;
      ++explored;
      REQUIRE(canonical_key(r) == key);
      REQUIRE(eval_rel(r, interp) == value);
      for (Slots& n : neighbours(s)) frontier.push_back(std::move(n));
    }
  }
  CHECK(explored > 500);
}

TEST_CASE("random laws") {
  const MonoidalSignature ls = gen::law_signature();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Diagram a = gen::random_diagram(rng, ls, i % 2 ? ObjectList{"A"} : ObjectList{}, 1 + i % 6);
    Diagram c = gen::random_diagram(rng, ls, a.cod(), 1 + i % 5);
    Diagram f = gen::random_diagram(rng, ls, {"B"}, 1 + i % 4);
    REQUIRE(equal(compose(compose(a, c), identity(c.cod())), compose(a, c)));
    REQUIRE(equal(compose(tensor(a, identity(f.dom())), tensor(identity(a.cod()), f)),
                  compose(tensor(identity(a.dom()), f), tensor(a, identity(f.cod())))));
    REQUIRE(equal(normalize(a).reconstruct(), a));
  }
}
