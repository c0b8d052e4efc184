// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "peircelex/backends.hpp"
#include "peircelex/grammar.hpp"
#include "test_util.hpp"

using namespace peircelex;
using testutil::kind_of;

namespace {

using Matrix = std::vector<std::vector<double>>;

const MonoidalSignature& sig() {
  static const MonoidalSignature s({"A", "B"}, {
                                                   BoxDecl{"f", {"A"}, {"B"}, {}, false, {}},
                                                   BoxDecl{"g", {"B"}, {"A"}, {}, false, {}},
                                                   BoxDecl{"h", {"A"}, {"A"}, {}, false, {}},
                                                   BoxDecl{"s", {}, {"A"}, {}, false, {}},
                                                   BoxDecl{"e", {"A"}, {}, {}, false, {}},
                                                   BoxDecl{"twice", {"A"}, {"A"}, {{{"A"}, {"A"}}}, false, {}},
                                               });
  return s;
}
Diagram b(const char* name) { return box(sig(), name); }

Tensor from_matrix(const Matrix& m) {
  Tensor t({m.size(), m.front().size()});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t.at({i, j}) = m[i][j];
  return t;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int hi) {
  std::uniform_int_distribution<int> pick(hi > 1 ? -hi : 0, hi);
  Matrix m(rows, std::vector<double>(cols));
  for (auto& row : m)
    for (auto& x : row) x = pick(rng);
  return m;
}

// Row vector times matrix: rows index inputs.
Matrix mul(const Matrix& a, const Matrix& c) {
  Matrix r(a.size(), std::vector<double>(c.front().size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t j = 0; j < c[k].size(); ++j) r[i][j] += a[i][k] * c[k][j];
  return r;
}

TensorInterp interp(std::mt19937_64& rng, int hi) {
  TensorInterp in;
  in.dims = {{"A", 2}, {"B", 3}};
  in.boxes["f"] = from_matrix(random_matrix(2, 3, rng, hi));
  in.boxes["g"] = from_matrix(random_matrix(3, 2, rng, hi));
  in.boxes["h"] = from_matrix(random_matrix(2, 2, rng, hi));
  Tensor s({2}), e({2});
  s.data = random_matrix(1, 2, rng, hi)[0];
  e.data = random_matrix(1, 2, rng, hi)[0];
  in.boxes["s"] = s;
  in.boxes["e"] = e;
  return in;
}

Matrix as_matrix(const Tensor& t) {
  REQUIRE(t.rank() == 2);
  Matrix m(t.shape[0], std::vector<double>(t.shape[1]));
  for (std::size_t i = 0; i < t.shape[0]; ++i)
    for (std::size_t j = 0; j < t.shape[1]; ++j) m[i][j] = t.at({i, j});
  return m;
}

void check_close(const Tensor& a, const Tensor& c, double tol) {
  REQUIRE(a.shape == c.shape);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.data[i] == doctest::Approx(c.data[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("tensor layout and JSON") {
  Tensor t({2, 3});
  t.at({1, 2}) = 5;
  CHECK(t.data[5] == 5);
  CHECK(tensor_to_json(t) == "[[0, 0, 0], [0, 0, 5]]");
  Tensor v({2});
  v.data = {10, 2};
  CHECK(tensor_to_json(v) == "[10, 2]");
  CHECK(tensor_to_json(Tensor()) == "0");
  CHECK(kind_of([&] { t.at({2, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { t.at({0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Vect matches matrix arithmetic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorInterp in = interp(rng, 4);
    const Matrix F = as_matrix(in.boxes.at("f")), G = as_matrix(in.boxes.at("g")), H = as_matrix(in.boxes.at("h"));
    CHECK(as_matrix(eval_vect(compose(b("f"), b("g")), in)) == mul(F, G));
    CHECK(as_matrix(eval_vect(compose(compose(b("h"), b("f")), b("g")), in)) == mul(mul(H, F), G));
    // s ; h ; e as a scalar.
    const Matrix S{in.boxes.at("s").data}, E = [&] {
      Matrix m;
      for (double x : in.boxes.at("e").data) m.push_back({x});
      return m;
    }();
    const Tensor scalar = eval_vect(compose(compose(b("s"), b("h")), b("e")), in);
    CHECK(scalar.rank() == 0);
    CHECK(scalar.data[0] == mul(mul(S, H), E)[0][0]);
    // Kronecker product, axes dom then cod.
    const Tensor k = eval_vect(tensor(b("f"), b("h")), in);
    REQUIRE(k.shape == std::vector<std::size_t>{2, 2, 3, 2});
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 2; ++y) CHECK(k.at({a, c, x, y}) == F[a][x] * H[c][y]);
    // Swap then f on the bottom wire.
    const Tensor sw = eval_vect(compose(swap("A", "A"), tensor(identity({"A"}), b("f"))), in);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t x = 0; x < 2; ++x)
          for (std::size_t y = 0; y < 3; ++y) CHECK(sw.at({a, c, x, y}) == (x == c ? F[a][y] : 0.0));
  }
}

TEST_CASE("spiders are Kronecker deltas") {
  TensorInterp in;
  in.dims = {{"A", 3}};
  const Tensor t = eval_vect(spider(2, 2, "A"), in);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t a = i / 27, c = i / 9 % 3, x = i / 3 % 3, y = i % 3;
    CHECK(t.data[i] == ((a == c && c == x && x == y) ? 1.0 : 0.0));
  }
  CHECK(eval_vect(spider(0, 0, "A"), in).data[0] == 3.0);
  CHECK(eval_vect(compose(spider(0, 1, "A"), spider(1, 0, "A")), in) == eval_vect(spider(0, 0, "A"), in));
  CHECK(eval_rel(spider(0, 0, "A"), in).data[0] == 1.0);
  const Tensor cupt = eval_vect(cup("A"), in);
  CHECK(cupt == eval_vect(spider(2, 0, "A"), in));
  CHECK(eval_vect(cap("A"), in) == eval_vect(spider(0, 2, "A"), in));
}

TEST_CASE("snake equations") {
  const Diagram snake = compose(tensor(identity({"A"}), cap("A")), tensor(cup("A"), identity({"A"})));
  const Diagram other = compose(tensor(cap("A"), identity({"A"})), tensor(identity({"A"}), cup("A")));
  std::mt19937_64 rng(11);
  TensorInterp rel;
  rel.dims = {{"A", 3}, {"B", 2}};
  CHECK(eval_rel(snake, rel) == eval_rel(identity({"A"}), rel));
  CHECK(eval_rel(other, rel) == eval_rel(identity({"A"}), rel));
  for (int trial = 0; trial < 20; ++trial) {
    TensorInterp in = interp(rng, 1);
    std::normal_distribution<double> normal;
    for (auto& [name, t] : in.boxes)
      for (auto& x : t.data) x = normal(rng);
    check_close(eval_vect(compose(snake, b("h")), in), eval_vect(b("h"), in), 1e-12);
    check_close(eval_vect(compose(b("h"), other), in), eval_vect(b("h"), in), 1e-12);
  }
}

TEST_CASE("Rel is boolean relational composition with complement") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorInterp in = interp(rng, 1);
    const Matrix F = as_matrix(in.boxes.at("f")), G = as_matrix(in.boxes.at("g"));
    Matrix want = mul(F, G);
    for (auto& row : want)
      for (auto& x : row) x = x > 0 ? 1 : 0;
    CHECK(as_matrix(eval_rel(compose(b("f"), b("g")), in)) == want);
    const Matrix neg = as_matrix(eval_rel(cut(b("f")), in));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(neg[i][j] == 1 - F[i][j]);
    CHECK(eval_rel(cut(cut(b("f"))), in) == eval_rel(b("f"), in));
    // ∃a. s(a) ∧ e(a)
    double any = 0;
    for (std::size_t a = 0; a < 2; ++a) any = std::max(any, in.boxes.at("s").data[a] * in.boxes.at("e").data[a]);
    CHECK(eval_rel(compose(b("s"), b("e")), in).data[0] == any);
  }
}

TEST_CASE("homset operators") {
  std::mt19937_64 rng(8);
  const TensorInterp in = interp(rng, 3);
  const Diagram t = box(sig(), "twice", {b("h")});
  CHECK(eval_vect(t, in) == eval_vect(compose(b("h"), b("h")), in));
  TensorInterp rel = interp(rng, 1);
  CHECK(eval_rel(t, rel) == eval_rel(compose(b("h"), b("h")), rel));
  CHECK(eval_vect(box(sig(), "twice", {t}), in) ==
        eval_vect(compose(compose(b("h"), b("h")), compose(b("h"), b("h"))), in));

  TensorInterp bare = in;
  bare.operators = OperatorRegistry();
  CHECK(kind_of([&] { eval_vect(t, bare); }) == ErrorKind::MissingSymbol);
  bare.operators.add("twice", [](const std::vector<Tensor>& fills, bool) { return fills.at(0); });
  CHECK(eval_vect(t, bare) == eval_vect(b("h"), in));

  const Lexicon toy = Lexicon::load(testutil::lexicon("toy.json"));
  const auto readings = pipeline("very big car", toy, GrammarType::atom("n"));
  std::ifstream file(testutil::lexicon("toy_interp.json"));
  std::stringstream buf;
  buf << file.rdbuf();
  CHECK(tensor_to_json(eval_vect(std::get<Diagram>(readings.front().value), interp_from_json(buf.str()))) ==
        "[10, 2]");
}

TEST_CASE("backend errors") {
  std::mt19937_64 rng(1);
  TensorInterp in = interp(rng, 2);
  CHECK(kind_of([&] { eval_vect(cut(b("h")), in); }) == ErrorKind::Unsupported);
  TensorInterp missing = in;
  missing.boxes.erase("g");
  CHECK(kind_of([&] { eval_vect(b("g"), missing); }) == ErrorKind::MissingSymbol);
  CHECK(kind_of([&] { eval_rel(b("g"), missing); }) == ErrorKind::MissingSymbol);
  TensorInterp wrong = in;
  wrong.boxes["g"] = in.boxes.at("f");
  CHECK(kind_of([&] { eval_vect(b("g"), wrong); }) == ErrorKind::ShapeMismatch);
  TensorInterp nodim = in;
  nodim.dims.erase("B");
  CHECK(kind_of([&] { eval_vect(identity({"B"}), nodim); }) == ErrorKind::MissingSymbol);
}

TEST_CASE("interpretation JSON") {
  const TensorInterp t = interp_from_json(R"({"dims": {"N": 2}, "boxes": {"m": [[1, 2], [3, 4]], "v": [5, 6]}})");
  CHECK(t.dims.at("N") == 2);
  CHECK(t.boxes.at("m").shape == std::vector<std::size_t>{2, 2});
  CHECK(t.boxes.at("m").at({1, 0}) == 3);
  CHECK(kind_of([] { interp_from_json(R"({"dims": {"N": 2}, "boxes": {"m": [[1, 2], [3]]}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { interp_from_json(R"({"dims": {"N": 2}, "boxes": {"m": ["x"]}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { interp_from_json("[1,"); }) == ErrorKind::Syntax);
}

TEST_CASE("models become Rel interpretations") {
  const Lexicon lex = Lexicon::load(testutil::lexicon("peirce.json"));
  Model m;
  m.universe = 3;
  for (const BoxDecl& d : lex.signature().boxes()) m.declare(d.name, d.arity());
  m.add_tuple("kills", {0, 2});
  m.add_tuple("man", {1});
  const RelInterp r = model_to_relinterp(m, lex.signature());
  CHECK(r.dims.at("N") == 3);
  // kills has dom then cod reversed in its predicate.
  const Tensor& k = r.boxes.at("kills");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK((k.at({i, j}) != 0) == (i == 2 && j == 0));
  CHECK(r.boxes.at("man").data == std::vector<double>{0, 1, 0});

  Model missing = m;
  missing.predicates.erase("hot");
  CHECK(kind_of([&] { model_to_relinterp(missing, lex.signature()); }) == ErrorKind::MissingSymbol);
  Model bad = m;
  bad.declare("hot", 2);
  CHECK(kind_of([&] { model_to_relinterp(bad, lex.signature()); }) == ErrorKind::InvalidArgument);

  const LogicSignature ls = logic_signature_of(sig());
  CHECK(ls.predicates == std::map<std::string, std::size_t>{{"e", 1}, {"f", 2}, {"g", 2}, {"h", 2}, {"s", 1}});
}
