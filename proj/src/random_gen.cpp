// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "random_gen.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace peircelex::gen {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ObjectList slice(const ObjectList& w, std::size_t from, std::size_t to) {
  return ObjectList(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

// A generator placed at wires [at, at + len) of the current codomain.
struct Placement {
  std::size_t at = 0, len = 0;
  std::function<Diagram()> make;
};

constexpr std::size_t kMaxWidth = 4;

std::vector<Placement> placements(std::mt19937_64& rng, const MonoidalSignature& sig, const ObjectList& w,
                                  std::size_t size) {
  std::vector<Placement> out;
  auto fits = [&](std::size_t removed, std::size_t added) { return w.size() - removed + added <= kMaxWidth; };
  for (std::size_t at = 0; at <= w.size(); ++at) {
    for (const BoxDecl& b : sig.boxes()) {
      if (!b.holes.empty() || at + b.dom.size() > w.size()) continue;
      if (slice(w, at, at + b.dom.size()) != b.dom || !fits(b.dom.size(), b.cod.size())) continue;
      out.push_back({at, b.dom.size(), [&sig, name = b.name] { return box(sig, name); }});
    }
    for (const std::string& o : sig.objects()) {
      for (std::size_t m = 0; m <= 2 && at + m <= w.size(); ++m) {
        bool same = true;
        for (std::size_t k = at; k < at + m; ++k) same = same && w[k] == o;
        if (!same) continue;
        for (std::size_t n = 0; n <= 2; ++n)
          if ((m > 0 || n > 0) && fits(m, n)) out.push_back({at, m, [m, n, o] { return spider(m, n, o); }});
      }
      if (at + 2 <= w.size() && w[at] == o && w[at + 1] == o) out.push_back({at, 2, [o] { return cup(o); }});
      if (fits(0, 2)) out.push_back({at, 0, [o] { return cap(o); }});
    }
    if (at + 2 <= w.size()) {
      const std::string a = w[at], b = w[at + 1];
      out.push_back({at, 2, [a, b] { return swap(a, b); }});
    }
    if (size > 1 && at < w.size()) {
      const ObjectList inner_dom{w[at]};
      out.push_back({at, 1, [&rng, &sig, inner_dom, size] {
                       return cut(random_diagram(rng, sig, inner_dom, 1 + pick(rng, size / 2 + 1)));
                     }});
    }
  }
  return out;
}

Diagram layered(std::mt19937_64& rng, const MonoidalSignature& sig, const ObjectList& dom, std::size_t size) {
  Diagram d = identity(dom);
  for (std::size_t k = 0; k < size; ++k) {
    const ObjectList w = d.cod();
    auto options = placements(rng, sig, w, size - k);
    if (options.empty()) break;
    const Placement& p = options[pick(rng, options.size())];
    Diagram g = p.make();
    if (g.cod().size() + w.size() - p.len > kMaxWidth) continue;
    Diagram layer = tensor(tensor(identity(slice(w, 0, p.at)), g), identity(slice(w, p.at + p.len, w.size())));
    d = compose(d, layer);
  }
  return d;
}

}  // namespace

MonoidalSignature law_signature() {
  return MonoidalSignature({"A", "B"}, {
                                           BoxDecl{"f", {"A"}, {"B"}, {}, false, {}},
                                           BoxDecl{"g", {"B"}, {"A", "B"}, {}, false, {}},
                                           BoxDecl{"h", {"A", "A"}, {}, {}, false, {}},
                                           BoxDecl{"s", {}, {"A"}, {}, false, {}},
                                           BoxDecl{"t", {"B"}, {"B"}, {}, false, {}},
                                       });
}

Diagram random_diagram(std::mt19937_64& rng, const MonoidalSignature& sig, const ObjectList& dom, std::size_t size) {
  if (size >= 2 && coin(rng, 0.3)) {
    // Side by side, then a little more on top.
    const std::size_t split = pick(rng, dom.size() + 1);
    const std::size_t left = 1 + pick(rng, size - 1);
    Diagram d = tensor(random_diagram(rng, sig, slice(dom, 0, split), left),
                       random_diagram(rng, sig, slice(dom, split, dom.size()), size - left));
    if (d.cod().size() > kMaxWidth) return layered(rng, sig, dom, size);
    return d;
  }
  if (size >= 2 && coin(rng, 0.3)) {
    const std::size_t first = 1 + pick(rng, size - 1);
    Diagram a = random_diagram(rng, sig, dom, first);
    return compose(a, random_diagram(rng, sig, a.cod(), size - first));
  }
  return layered(rng, sig, dom, size);
}

MonoidalSignature lambda_signature() {
  return MonoidalSignature({"N"}, {
                                      BoxDecl{"car", {}, {"N"}, {}, false, {}},
                                      BoxDecl{"big", {"N"}, {"N"}, {}, false, {}},
                                      BoxDecl{"hot", {"N"}, {}, {}, false, {}},
                                      BoxDecl{"tick", {}, {}, {}, false, {}},
                                  });
}

namespace {

SemType shape_type(bool dom_n, bool cod_n) {
  ShapeSeq none;
  ShapeSeq n{ShapeItem::object("N")};
  return SemType::diag(dom_n ? n : none, cod_n ? n : none);
}

SemType random_diag(std::mt19937_64& rng) { return shape_type(coin(rng, 0.5), coin(rng, 0.5)); }

std::string box_for(const SemType& t) {
  const bool d = !t.dom().empty(), c = !t.cod().empty();
  if (!d && c) return "car";
  if (d && c) return "big";
  if (d) return "hot";
  return "tick";
}

struct TermGen {
  std::mt19937_64& rng;
  std::size_t fresh = 0;

  using Ctx = std::vector<std::pair<std::string, SemType>>;

  Term make(const SemType& type, const Ctx& ctx, std::size_t depth) {
    if (type.is(SemType::Kind::Arrow)) {
      const std::string x = "v" + std::to_string(fresh++);
      Ctx inner = ctx;
      inner.emplace_back(x, type.arg());
      return Term::lam(x, make(type.res(), inner, depth == 0 ? 0 : depth - 1), type.arg());
    }
    std::vector<std::function<Term()>> options;
    for (const auto& [name, t] : ctx)
      if (t == type) options.push_back([name = name] { return Term::var(name); });
    options.push_back([&] { return Term::constant(box_for(type)); });
    if (depth > 0) {
      const std::size_t d = depth - 1;
      options.push_back([&, d] {
        SemType a = shape_type(!type.dom().empty(), coin(rng, 0.5));
        SemType b = SemType::diag(a.cod(), type.cod());
        return Term::apply(Term::constant("compose"), {make(a, ctx, d), make(b, ctx, d)});
      });
      options.push_back([&, d] {
        return Term::apply(Term::constant("tensor"), {make(shape_type(false, false), ctx, d), make(type, ctx, d)});
      });
      options.push_back([&, d] { return Term::app(Term::constant("cut"), make(type, ctx, d)); });
      options.push_back([&, d] {
        SemType a = coin(rng, 0.7) ? random_diag(rng) : SemType::arrow(random_diag(rng), random_diag(rng));
        const std::string x = "v" + std::to_string(fresh++);
        Ctx inner = ctx;
        inner.emplace_back(x, a);
        Term body = make(type, inner, d);
        return Term::app(Term::lam(x, body, a), make(a, ctx, d));
      });
      for (const auto& [name, t] : ctx)
        if (t.is(SemType::Kind::Arrow) && t.res() == type)
          options.push_back([&, d, name = name, arg = t.arg()] { return Term::app(Term::var(name), make(arg, ctx, d)); });
      // Leaves get likelier as depth runs out.
      if (coin(rng, 1.0 / static_cast<double>(depth + 1))) options.resize(options.size() > 2 ? 2 : options.size());
    }
    return options[pick(rng, options.size())]();
  }
};

}  // namespace

SemType random_type(std::mt19937_64& rng) {
  switch (pick(rng, 5)) {
    case 0: return SemType::arrow(random_diag(rng), random_diag(rng));
    case 1: return SemType::arrow(SemType::arrow(random_diag(rng), random_diag(rng)), random_diag(rng));
    default: return random_diag(rng);
  }
}

Term random_term(std::mt19937_64& rng, const SemType& type, std::size_t depth) {
  TermGen g{rng};
  return g.make(type, {}, depth);
}

}  // namespace peircelex::gen
