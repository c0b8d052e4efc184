// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

// Equality up to planar isotopy. The layered normal form is only unique for
// diagrams whose pieces all reach the boundary; floating pieces (closed
// loops, state/effect pairs, scalars) can slide around inside the face they
// occupy. The key is therefore built from the port graph: the boundary
// component is labelled from the top boundary, each floating component by
// its least labelling, and each floating component is filed under the face
// of its innermost enclosing component.

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "diagram_detail.hpp"
#include "peircelex/diagram.hpp"

namespace peircelex {

namespace {

using Port = std::pair<std::size_t, std::size_t>;  // node, port
constexpr std::size_t kTop = 0, kBottom = 1;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Step {
  std::size_t node, offset, in, out;
};

struct Graph {
  std::vector<std::string> key;
  std::vector<std::vector<Port>> in, out;  // peer of every port
  std::vector<Port> wire_src;
  std::vector<std::vector<std::size_t>> slices;  // wire ids between layers
  std::vector<Step> steps;
};

Graph build(const Diagram& d) {
  const LayeredForm form = normalize(d);
  Graph g;
  g.key = {"^", "$"};
  g.in = {{}, {}};
  g.out = {std::vector<Port>(d.dom().size()), {}};
  std::vector<std::size_t> wires;
  for (std::size_t i = 0; i < d.dom().size(); ++i) {
    wires.push_back(g.wire_src.size());
    g.wire_src.push_back({kTop, i});
  }
  g.slices.push_back(wires);
  for (const Layer& layer : form.layers) {
    const std::size_t node = g.key.size(), o = layer.left.size();
    const std::size_t nin = layer.generator.dom().size(), nout = layer.generator.cod().size();
    g.key.push_back(detail::generator_key(layer.generator));
    g.in.emplace_back(nin);
    g.out.emplace_back(nout);
    for (std::size_t k = 0; k < nin; ++k) {
      const Port src = g.wire_src[wires[o + k]];
      g.in[node][k] = src;
      g.out[src.first][src.second] = {node, k};
    }
    std::vector<std::size_t> next(wires.begin(), wires.begin() + static_cast<std::ptrdiff_t>(o));
    for (std::size_t k = 0; k < nout; ++k) {
      next.push_back(g.wire_src.size());
      g.wire_src.push_back({node, k});
    }
    next.insert(next.end(), wires.begin() + static_cast<std::ptrdiff_t>(o + nin), wires.end());
    wires = std::move(next);
    g.steps.push_back({node, o, nin, nout});
    g.slices.push_back(wires);
  }
  g.in[kBottom].resize(wires.size());
  for (std::size_t j = 0; j < wires.size(); ++j) {
    const Port src = g.wire_src[wires[j]];
    g.in[kBottom][j] = src;
    g.out[src.first][src.second] = {kBottom, j};
  }
  return g;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Faces of one component, as gaps between its wires at every slice.
struct Faces {
  std::vector<std::size_t> base;  // first gap index of each slice
  UnionFind uf{0};
  std::size_t gap(std::size_t slice, std::size_t i) const { return base[slice] + i; }
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Diagram& d) : g_(build(d)) {}

  std::string key() {
    const std::size_t n = g_.key.size();
    UnionFind uf(n);
    uf.unite(kTop, kBottom);
    for (std::size_t u = 0; u < n; ++u)
      for (const Port& p : g_.out[u]) uf.unite(u, p.first);
    comp_.assign(n, 0);
    std::map<std::size_t, std::size_t> index;
    index[uf.find(kTop)] = 0;
    for (std::size_t u = 0; u < n; ++u) {
      auto [it, fresh] = index.emplace(uf.find(u), index.size());
      comp_[u] = it->second;
    }
    ncomp_ = index.size();
    faces_.resize(ncomp_);
    for (std::size_t c = 0; c < ncomp_; ++c) faces_[c] = faces_of(c);
    nest();
    return encode(0);
  }

 private:
  bool wire_in(std::size_t wire, std::size_t c) const { return comp_[g_.wire_src[wire].first] == c; }

  // Number of the component's wires left of position `pos` in a slice.
  std::size_t before(std::size_t slice, std::size_t pos, std::size_t c) const {
    std::size_t a = 0;
    for (std::size_t i = 0; i < pos; ++i) a += wire_in(g_.slices[slice][i], c);
    return a;
  }

  Faces faces_of(std::size_t c) const {
    Faces f;
    std::size_t total = 0;
    for (std::size_t s = 0; s < g_.slices.size(); ++s) {
      f.base.push_back(total);
      total += before(s, g_.slices[s].size(), c) + 1;
    }
    f.uf = UnionFind(total);
    for (std::size_t k = 0; k < g_.steps.size(); ++k) {
      const Step& st = g_.steps[k];
      const std::size_t m = before(k, g_.slices[k].size(), c);
      if (comp_[st.node] != c) {
        for (std::size_t i = 0; i <= m; ++i) f.uf.unite(f.gap(k, i), f.gap(k + 1, i));
        continue;
      }
      const std::size_t a = before(k, st.offset, c);
      for (std::size_t i = 0; i < a; ++i) f.uf.unite(f.gap(k, i), f.gap(k + 1, i));
      f.uf.unite(f.gap(k, a), f.gap(k + 1, a));
      f.uf.unite(f.gap(k, a + st.in), f.gap(k + 1, a + st.out));
      for (std::size_t i = a + st.in + 1; i <= m; ++i) f.uf.unite(f.gap(k, i), f.gap(k + 1, i - st.in + st.out));
    }
    return f;
  }

  // Face of component d holding floating component c.
  std::size_t face_holding(std::size_t c, std::size_t d) {
    for (const Step& st : g_.steps) {
      if (comp_[st.node] != c) continue;
      const std::size_t k = static_cast<std::size_t>(&st - g_.steps.data());
      return faces_[d].uf.find(faces_[d].gap(k, before(k, st.offset, d)));
    }
    return kNone;
  }

  void nest() {
    parent_.assign(ncomp_, 0);
    parent_face_.assign(ncomp_, kNone);
    std::vector<std::vector<std::size_t>> containers(ncomp_);
    for (std::size_t c = 1; c < ncomp_; ++c)
      for (std::size_t d = 1; d < ncomp_; ++d)
        if (d != c && face_holding(c, d) != faces_[d].uf.find(faces_[d].gap(0, 0))) containers[c].push_back(d);
    for (std::size_t c = 1; c < ncomp_; ++c) {
      std::size_t best = 0;
      for (std::size_t d : containers[c])
        if (best == 0 || containers[d].size() > containers[best].size()) best = d;
      parent_[c] = best;
      parent_face_[c] = face_holding(c, best);
    }
  }

  // Breadth-first labelling following ports in order.
  std::vector<std::size_t> label(std::size_t c, std::size_t start) const {
    std::vector<std::size_t> id(g_.key.size(), kNone), order;
    auto visit = [&](std::size_t u) {
      if (id[u] != kNone) return;
      id[u] = order.size();
      order.push_back(u);
    };
    if (c == 0) {
      visit(kTop);
      visit(kBottom);
    } else {
      visit(start);
    }
    for (std::size_t q = 0; q < order.size(); ++q) {
      const std::size_t u = order[q];
      for (const Port& p : g_.in[u]) visit(p.first);
      for (const Port& p : g_.out[u]) visit(p.first);
    }
    return id;
  }

  std::string encode_with(std::size_t c, const std::vector<std::size_t>& id,
                          const std::map<std::size_t, std::vector<std::string>>& children) const {
    std::vector<std::size_t> order;
    for (std::size_t u = 0; u < id.size(); ++u)
      if (id[u] != kNone) order.push_back(u);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return id[a] < id[b]; });
    std::string out;
    for (std::size_t u : order) {
      out += g_.key[u] + "(";
      for (const Port& p : g_.in[u]) out += std::to_string(id[p.first]) + "." + std::to_string(p.second) + ",";
      out += ")[";
      for (const Port& p : g_.out[u]) out += std::to_string(id[p.first]) + "." + std::to_string(p.second) + ",";
      out += "];";
    }
    if (children.empty()) return out;

    // A face is named by the least wire side it touches.
    using Side = std::tuple<int, std::size_t, std::size_t, int>;
    const Faces& f = faces_[c];
    std::map<std::size_t, Side> name;
    auto touch = [&](std::size_t gap, const Side& side) {
      const std::size_t root = const_cast<UnionFind&>(f.uf).find(gap);
      auto it = name.find(root);
      if (it == name.end() || side < it->second) name[root] = side;
    };
    for (std::size_t s = 0; s < g_.slices.size(); ++s) {
      std::size_t p = 0;
      touch(f.gap(s, 0), Side{0, 0, 0, 0});
      for (std::size_t w : g_.slices[s]) {
        if (!wire_in(w, c)) continue;
        const Port src = g_.wire_src[w];
        touch(f.gap(s, p), Side{1, id[src.first], src.second, 0});
        touch(f.gap(s, p + 1), Side{1, id[src.first], src.second, 1});
        ++p;
      }
      touch(f.gap(s, p), Side{0, 0, 0, 1});
    }
    std::map<Side, std::vector<std::string>> filed;
    for (const auto& [face, encs] : children) {
      auto& slot = filed[name.at(face)];
      slot.insert(slot.end(), encs.begin(), encs.end());
    }
    out += "{";
    for (auto& [side, encs] : filed) {
      std::sort(encs.begin(), encs.end());
      out += std::to_string(std::get<0>(side)) + "/" + std::to_string(std::get<1>(side)) + "/" +
             std::to_string(std::get<2>(side)) + "/" + std::to_string(std::get<3>(side)) + ":";
      for (const auto& e : encs) out += "<" + e + ">";
    }
    return out + "}";
  }

  std::string encode(std::size_t c) {
    std::map<std::size_t, std::vector<std::string>> children;
    for (std::size_t k = 1; k < ncomp_; ++k)
      if (k != c && parent_[k] == c) children[parent_face_[k]].push_back(encode(k));
    if (c == 0) return encode_with(0, label(0, kTop), children);
    std::string best;
    bool first = true;
    for (std::size_t u = 0; u < g_.key.size(); ++u) {
      if (comp_[u] != c) continue;
      std::string e = encode_with(c, label(c, u), children);
      if (first || e < best) best = std::move(e);
      first = false;
    }
    return best;
  }

  Graph g_;
  std::vector<std::size_t> comp_;
  std::size_t ncomp_ = 0;
  std::vector<Faces> faces_;
  std::vector<std::size_t> parent_, parent_face_;
};

}  // namespace

std::string canonical_key(const Diagram& d) {
  return format_objects(d.dom()) + "->" + format_objects(d.cod()) + "|" + Canonicalizer(d).key();
}

bool equal(const Diagram& a, const Diagram& b) {
  return a.shape() == b.shape() && canonical_key(a) == canonical_key(b);
}

}  // namespace peircelex
