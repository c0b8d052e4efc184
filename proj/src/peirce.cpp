// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/peirce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "peircelex/error.hpp"

namespace peircelex {

// ---------------------------------------------------------------------------
// Wire graph

namespace {

class GraphBuilder {
 public:
  explicit GraphBuilder(const MonoidalSignature& sig) : sig_(sig) {
    g_.regions.push_back({});
    g_.items.emplace_back();
  }

  WireGraph run(const Diagram& d) {
    std::vector<std::size_t> in;
    for (const auto& obj : d.dom()) {
      in.push_back(wire(0, obj));
      g_.boundary.push_back(in.back());
    }
    for (std::size_t w : walk(d, 0, in)) {
      std::size_t b = wire(0, g_.wires[w].object);
      identify(0, {w, b});
      g_.boundary.push_back(b);
    }
    return std::move(g_);
  }

 private:
  std::size_t wire(std::size_t region, const std::string& object) {
    g_.wires.push_back({region, object});
    return g_.wires.size() - 1;
  }

  void identify(std::size_t region, std::vector<std::size_t> legs) {
    WireGraph::Item item;
    item.kind = WireGraph::Item::Kind::Identify;
    item.wires = std::move(legs);
    g_.items[region].push_back(std::move(item));
  }

  std::vector<std::size_t> fresh(std::size_t region, const ObjectList& objects) {
    std::vector<std::size_t> out;
    for (const auto& o : objects) out.push_back(wire(region, o));
    return out;
  }

  std::vector<std::size_t> walk(const Diagram& d, std::size_t region, std::vector<std::size_t> in) {
    using K = Diagram::Kind;
    switch (d.kind()) {
      case K::Identity: return in;
      case K::Compose: return walk(d.second(), region, walk(d.first(), region, std::move(in)));
      case K::Tensor: {
        const std::size_t k = d.top().dom().size();
        std::vector<std::size_t> a(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<std::size_t> b(in.begin() + static_cast<std::ptrdiff_t>(k), in.end());
        auto out = walk(d.top(), region, std::move(a));
        auto rest = walk(d.bottom(), region, std::move(b));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      case K::Box: {
        if (!d.fillings().empty())
          throw Error(ErrorKind::Unsupported, "box '" + d.name() + "' has holes and no first-order reading");
        const BoxDecl& decl = sig_.box(d.name());
        auto out = fresh(region, d.cod());
        std::vector<std::size_t> ports = in;
        ports.insert(ports.end(), out.begin(), out.end());
        WireGraph::Item item;
        item.box = d.name();
        if (decl.fol_order.empty()) {
          item.wires = ports;
        } else {
          for (std::size_t k : decl.fol_order) item.wires.push_back(ports.at(k));
        }
        g_.items[region].push_back(std::move(item));
        return out;
      }
      case K::Spider: {
        auto out = fresh(region, d.cod());
        std::vector<std::size_t> legs = in;
        legs.insert(legs.end(), out.begin(), out.end());
        identify(region, std::move(legs));
        return out;
      }
      case K::Cup: identify(region, in); return {};
      case K::Cap: {
        auto out = fresh(region, d.cod());
        identify(region, out);
        return out;
      }
      case K::Swap: return {in.at(1), in.at(0)};
      case K::Cut: {
        const std::size_t child = g_.regions.size();
        g_.regions.push_back({static_cast<int>(region), g_.regions[region].depth + 1});
        g_.items.emplace_back();
        WireGraph::Item item;
        item.kind = WireGraph::Item::Kind::Cut;
        item.child = child;
        g_.items[region].push_back(item);
        std::vector<std::size_t> inner_in;
        for (std::size_t w : in) {
          inner_in.push_back(wire(child, g_.wires[w].object));
          identify(child, {w, inner_in.back()});
        }
        std::vector<std::size_t> out;
        for (std::size_t w : walk(d.inner(), child, std::move(inner_in))) {
          out.push_back(wire(region, g_.wires[w].object));
          identify(child, {w, out.back()});
        }
        return out;
      }
    }
    return in;
  }

  const MonoidalSignature& sig_;
  WireGraph g_;
};

// Union-find over wires, tracking the outermost region of each line.
class Lines {
 public:
  explicit Lines(const WireGraph& g) : g_(g), parent_(g.wires.size()), lca_(g.wires.size()), free_(g.wires.size()) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (std::size_t w = 0; w < g.wires.size(); ++w) lca_[w] = g.wires[w].region;
    for (std::size_t w : g.boundary) free_[w] = true;
  }

  std::size_t find(std::size_t w) {
    while (parent_[w] != w) w = parent_[w] = parent_[parent_[w]];
    return w;
  }

  // Keeps the root of a.
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    lca_[a] = meet(lca_[a], lca_[b]);
    free_[a] = free_[a] || free_[b];
  }

  bool is_free(std::size_t w) { return free_[find(w)]; }
  std::size_t outermost(std::size_t w) { return lca_[find(w)]; }

 private:
  std::size_t meet(std::size_t a, std::size_t b) const {
    while (g_.regions[a].depth > g_.regions[b].depth) a = static_cast<std::size_t>(g_.regions[a].parent);
    while (g_.regions[b].depth > g_.regions[a].depth) b = static_cast<std::size_t>(g_.regions[b].parent);
    while (a != b) {
      a = static_cast<std::size_t>(g_.regions[a].parent);
      b = static_cast<std::size_t>(g_.regions[b].parent);
    }
    return a;
  }

  const WireGraph& g_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> lca_;
  std::vector<bool> free_;
};

class Translator {
 public:
  explicit Translator(const WireGraph& g) : g_(g), lines_(g) {}

  Formula run() {
    resolve(0);
    Formula f = region_formula(0);
    // Deterministic names: boundary first, then binders in order.
    std::map<std::string, std::string> names;
    for (std::size_t w : g_.boundary) {
      std::string v = var(w);
      if (!names.count(v)) names[v] = "x" + std::to_string(names.size());
    }
    return rename(f, names);
  }

 private:
  // Equalities kept by identification nodes: (region, item index) → pairs.
  using Key = std::pair<std::size_t, std::size_t>;

  void resolve(std::size_t region) {
    const auto& items = g_.items[region];
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      if (item.kind == WireGraph::Item::Kind::Cut) {
        resolve(item.child);
        continue;
      }
      if (item.kind != WireGraph::Item::Kind::Identify) continue;
      std::vector<std::size_t> roots;
      for (std::size_t w : item.wires) {
        std::size_t r = lines_.find(w);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      std::vector<std::size_t> outer, inner;
      for (std::size_t r : roots) (lines_.is_free(r) || lines_.outermost(r) != region ? outer : inner).push_back(r);
      const std::size_t keep = outer.empty() ? (roots.empty() ? 0 : roots.front()) : outer.front();
      for (std::size_t r : inner) lines_.merge(keep, r);
      for (std::size_t k = 1; k < outer.size(); ++k) equalities_[{region, i}].push_back({outer.front(), outer[k]});
    }
  }

  std::string var(std::size_t w) { return "w" + std::to_string(lines_.find(w)); }

  Formula region_formula(std::size_t region) {
    std::vector<Formula> parts;
    const auto& items = g_.items[region];
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      switch (item.kind) {
        case WireGraph::Item::Kind::Atom: {
          std::vector<FolTerm> args;
          for (std::size_t w : item.wires) args.push_back(FolTerm::var(var(w)));
          parts.push_back(Formula::atom(item.box, std::move(args)));
          break;
        }
        case WireGraph::Item::Kind::Identify: {
          auto it = equalities_.find({region, i});
          if (it == equalities_.end()) break;
          for (const auto& [a, b] : it->second)
            if (lines_.find(a) != lines_.find(b))
              parts.push_back(Formula::equals(FolTerm::var(var(a)), FolTerm::var(var(b))));
          break;
        }
        case WireGraph::Item::Kind::Cut: parts.push_back(Formula::negation(region_formula(item.child))); break;
      }
    }
    Formula body = Formula::conj_all(parts);
    std::vector<std::string> order;
    occurrences(body, order);
    std::vector<std::string> bound;
    for (const auto& v : order) {
      std::size_t root = std::stoul(v.substr(1));
      if (!lines_.is_free(root) && lines_.outermost(root) == region &&
          std::find(bound.begin(), bound.end(), v) == bound.end())
        bound.push_back(v);
    }
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) body = Formula::exists(*it, body);
    return body;
  }

  static void occurrences(const Formula& f, std::vector<std::string>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom:
        for (const auto& a : f.args())
          if (a.is_var()) out.push_back(a.name);
        return;
      case K::Not: occurrences(f.operand(), out); return;
      case K::And:
      case K::Or:
      case K::Implies:
        occurrences(f.left(), out);
        occurrences(f.right(), out);
        return;
      case K::Forall:
      case K::Exists: occurrences(f.body(), out); return;
      default: return;
    }
  }

  static Formula rename(const Formula& f, std::map<std::string, std::string>& names) {
    using K = Formula::Kind;
    auto name_of = [&](const std::string& v) {
      auto it = names.find(v);
      if (it != names.end()) return it->second;
      std::string n = "x" + std::to_string(names.size());
      names[v] = n;
      return n;
    };
    switch (f.kind()) {
      case K::Atom: {
        std::vector<FolTerm> args;
        for (const auto& a : f.args()) args.push_back(a.is_var() ? FolTerm::var(name_of(a.name)) : a);
        return Formula::atom(f.predicate(), std::move(args));
      }
      case K::Not: return Formula::negation(rename(f.operand(), names));
      case K::And: return Formula::conj(rename(f.left(), names), rename(f.right(), names));
      case K::Or: return Formula::disj(rename(f.left(), names), rename(f.right(), names));
      case K::Implies: return Formula::implies(rename(f.left(), names), rename(f.right(), names));
      case K::Exists: {
        std::string v = name_of(f.var());
        return Formula::exists(v, rename(f.body(), names));
      }
      case K::Forall: {
        std::string v = name_of(f.var());
        return Formula::forall(v, rename(f.body(), names));
      }
      default: return f;
    }
  }

  const WireGraph& g_;
  Lines lines_;
  std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> equalities_;
};

}  // namespace

WireGraph wire_graph(const Diagram& d, const MonoidalSignature& sig) { return GraphBuilder(sig).run(d); }

Formula to_fol(const Diagram& d, const MonoidalSignature& sig) {
  WireGraph g = wire_graph(d, sig);
  return Translator(g).run();
}

// ---------------------------------------------------------------------------
// Rewrites

namespace {

Diagram map_nested(const Diagram& g, Diagram (*rewrite)(const Diagram&)) {
  if (g.is(Diagram::Kind::Cut)) return cut(rewrite(g.inner()));
  if (g.is(Diagram::Kind::Box) && !g.fillings().empty()) {
    std::vector<Diagram> fills;
    for (const auto& f : g.fillings()) fills.push_back(rewrite(f));
    return Diagram::make_box(g.name(), g.dom(), g.cod(), std::move(fills));
  }
  return g;
}

void resize_run(ObjectList& list, std::size_t at, long delta, const std::string& object) {
  if (delta > 0) {
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(at), static_cast<std::size_t>(delta), object);
  } else if (delta < 0) {
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(at), list.begin() + static_cast<std::ptrdiff_t>(at) - delta);
  }
}

// One fusion step on a layered form. Returns false when nothing applies.
bool fuse_once(std::vector<Layer>& layers) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Diagram& g = layers[i].generator;
    if (g.is(Diagram::Kind::Spider) && g.legs_in() == 1 && g.legs_out() == 1) {
      layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Diagram s1 = layers[i].generator;
    if (!s1.is(Diagram::Kind::Spider) || s1.legs_out() == 0) continue;
    std::size_t lo = layers[i].left.size();
    std::size_t hi = lo + s1.legs_out();
    struct Seen {
      std::size_t index;
      bool left_of_run;
      std::size_t lo;
    };
    std::vector<Seen> between;
    for (std::size_t j = i + 1; j < layers.size(); ++j) {
      const Diagram& g = layers[j].generator;
      const std::size_t off = layers[j].left.size();
      const std::size_t in = g.dom().size();
      const std::size_t out = g.cod().size();
      if (off + in <= lo) {
        between.push_back({j, true, lo});
        lo = lo + out - in;
        hi = hi + out - in;
        continue;
      }
      if (off >= hi) {
        between.push_back({j, false, lo});
        continue;
      }
      if (g.is(Diagram::Kind::Spider) && g.object() == s1.object() && in > 0 && off >= lo && off + in <= hi) {
        const long delta = static_cast<long>(out) - static_cast<long>(in);
        layers[i].generator = spider(s1.legs_in(), s1.legs_out() - in + out, s1.object());
        for (const auto& b : between) {
          Layer& l = layers[b.index];
          if (b.left_of_run) {
            const std::size_t start = b.lo - (l.left.size() + l.generator.cod().size());
            resize_run(l.right, start, delta, s1.object());
          } else {
            resize_run(l.left, b.lo, delta, s1.object());
          }
        }
        layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(j));
        return true;
      }
      break;  // overlaps the run without being fusable
    }
  }
  return false;
}

}  // namespace

Diagram spider_fuse(const Diagram& d) {
  LayeredForm lf = normalize(d);
  for (auto& layer : lf.layers) layer.generator = map_nested(layer.generator, &spider_fuse);
  while (fuse_once(lf.layers)) {
  }
  return lf.reconstruct();
}

Diagram double_cut_elim(const Diagram& d) {
  LayeredForm lf = normalize(d);
  for (auto& layer : lf.layers) {
    Diagram g = map_nested(layer.generator, &double_cut_elim);
    if (g.is(Diagram::Kind::Cut)) {
      LayeredForm inner = normalize(g.inner());
      if (inner.layers.size() == 1 && inner.layers[0].left.empty() && inner.layers[0].right.empty() &&
          inner.layers[0].generator.is(Diagram::Kind::Cut))
        g = inner.layers[0].generator.inner();
    }
    layer.generator = g;
  }
  return lf.reconstruct();
}

Formula fol_of_sentence(std::string_view sentence, const Lexicon& lex) {
  if (lex.is_logic())
    throw Error(ErrorKind::InvalidArgument, "lexicon '" + lex.name() + "' produces formulas, not diagrams");
  GrammarType target = lex.default_target().value_or(GrammarType::atom("s"));
  auto readings = pipeline(sentence, lex, target);
  return to_fol(std::get<Diagram>(readings.front().value), lex.signature());
}

}  // namespace peircelex
