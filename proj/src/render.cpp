// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace peircelex {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON

namespace {

ojson to_json(const Diagram& d) {
  using K = Diagram::Kind;
  ojson j;
  switch (d.kind()) {
    case K::Identity: j["kind"] = "id"; j["type"] = d.dom(); break;
    case K::Box: {
      j["kind"] = "box";
      j["name"] = d.name();
      j["dom"] = d.dom();
      j["cod"] = d.cod();
      ojson fills = ojson::array();
      for (const auto& f : d.fillings()) fills.push_back(to_json(f));
      j["fillings"] = fills;
      break;
    }
    case K::Compose:
      j["kind"] = "compose";
      j["first"] = to_json(d.first());
      j["second"] = to_json(d.second());
      break;
    case K::Tensor:
      j["kind"] = "tensor";
      j["top"] = to_json(d.top());
      j["bottom"] = to_json(d.bottom());
      break;
    case K::Spider:
      j["kind"] = "spider";
      j["legs_in"] = d.legs_in();
      j["legs_out"] = d.legs_out();
      j["object"] = d.object();
      break;
    case K::Cup: j["kind"] = "cup"; j["object"] = d.object(); break;
    case K::Cap: j["kind"] = "cap"; j["object"] = d.object(); break;
    case K::Swap:
      j["kind"] = "swap";
      j["left"] = d.object();
      j["right"] = d.right_object();
      break;
    case K::Cut: j["kind"] = "cut"; j["inner"] = to_json(d.inner()); break;
  }
  return j;
}

ojson to_json(const Formula& f) {
  using K = Formula::Kind;
  ojson j;
  switch (f.kind()) {
    case K::Atom: {
      j["kind"] = "atom";
      j["predicate"] = f.predicate();
      ojson args = ojson::array();
      for (const auto& a : f.args()) {
        ojson t;
        t[a.is_var() ? "var" : "const"] = a.name;
        args.push_back(t);
      }
      j["args"] = args;
      break;
    }
    case K::Top: j["kind"] = "top"; break;
    case K::Bottom: j["kind"] = "bottom"; break;
    case K::Not: j["kind"] = "not"; j["operand"] = to_json(f.operand()); break;
    case K::And:
    case K::Or:
    case K::Implies:
      j["kind"] = f.is(K::And) ? "and" : f.is(K::Or) ? "or" : "implies";
      j["left"] = to_json(f.left());
      j["right"] = to_json(f.right());
      break;
    case K::Forall:
    case K::Exists:
      j["kind"] = f.is(K::Forall) ? "forall" : "exists";
      j["var"] = f.var();
      j["body"] = to_json(f.body());
      break;
  }
  return j;
}

}  // namespace

std::string diagram_json(const Diagram& d) { return to_json(d).dump(2); }

std::string formula_json(const Formula& f) { return to_json(f).dump(2); }

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotWriter {
 public:
  std::string run(const Diagram& d) {
    body_ << "digraph diagram {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n";
    std::vector<std::string> in;
    for (std::size_t i = 0; i < d.dom().size(); ++i) in.push_back(boundary("in", d.dom()[i], 1));
    auto out = emit(d, in, 1);
    for (std::size_t i = 0; i < out.size(); ++i) edge(out[i], boundary("out", d.cod()[i], 1), d.cod()[i]);
    body_ << edges_.str() << "}\n";
    return body_.str();
  }

 private:
  std::string indent(int depth) const { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  std::string node(const std::string& attrs, int depth) {
    std::string id = "n" + std::to_string(next_++);
    body_ << indent(depth) << id << " [" << attrs << "];\n";
    return id;
  }

  std::string boundary(const std::string& kind, const std::string& object, int depth) {
    return node("shape=plaintext, label=" + quote(kind == "in" ? object + " ▸" : "▸ " + object), depth);
  }

  void edge(const std::string& from, const std::string& to, const std::string& object) {
    edges_ << "  " << from << " -> " << to << " [arrowhead=none, label=" << quote(object) << "];\n";
  }

  std::vector<std::string> emit(const Diagram& d, std::vector<std::string> wires, int depth) {
    LayeredForm lf = normalize(d);
    for (const auto& layer : lf.layers) {
      const Diagram& g = layer.generator;
      const std::size_t off = layer.left.size();
      std::vector<std::string> ins(wires.begin() + static_cast<std::ptrdiff_t>(off),
                                   wires.begin() + static_cast<std::ptrdiff_t>(off + g.dom().size()));
      std::vector<std::string> outs = generator(g, ins, depth);
      wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(off),
                  wires.begin() + static_cast<std::ptrdiff_t>(off + g.dom().size()));
      wires.insert(wires.begin() + static_cast<std::ptrdiff_t>(off), outs.begin(), outs.end());
    }
    return wires;
  }

  std::vector<std::string> connect(const Diagram& g, const std::vector<std::string>& ins, const std::string& n) {
    for (std::size_t i = 0; i < ins.size(); ++i) edge(ins[i], n, g.dom()[i]);
    return std::vector<std::string>(g.cod().size(), n);
  }

  std::vector<std::string> generator(const Diagram& g, const std::vector<std::string>& ins, int depth) {
    using K = Diagram::Kind;
    switch (g.kind()) {
      case K::Box: {
        if (g.fillings().empty()) return connect(g, ins, node("shape=box, label=" + quote(g.name()), depth));
        body_ << indent(depth) << "subgraph cluster_" << next_++ << " {\n"
              << indent(depth + 1) << "style=solid; label=" << quote(g.name()) << ";\n";
        std::string n = node("shape=box, label=" + quote(g.name()), depth + 1);
        for (std::size_t h = 0; h < g.fillings().size(); ++h) {
          const Diagram& f = g.fillings()[h];
          body_ << indent(depth + 1) << "subgraph cluster_" << next_++ << " {\n"
                << indent(depth + 2) << "style=dashed; label=" << quote("hole " + std::to_string(h)) << ";\n";
          std::vector<std::string> fin;
          for (const auto& o : f.dom()) fin.push_back(boundary("in", o, depth + 2));
          auto fout = emit(f, fin, depth + 2);
          for (std::size_t i = 0; i < fout.size(); ++i) edge(fout[i], boundary("out", f.cod()[i], depth + 2), f.cod()[i]);
          body_ << indent(depth + 1) << "}\n";
        }
        body_ << indent(depth) << "}\n";
        return connect(g, ins, n);
      }
      case K::Spider:
        return connect(g, ins, node("shape=point, width=0.12, label=" + quote(g.object()), depth));
      case K::Cup:
      case K::Cap: return connect(g, ins, node("shape=point, width=0.04", depth));
      case K::Swap: {
        std::string n = node("shape=point, width=0.04, xlabel=\"swap\"", depth);
        connect(g, ins, n);
        return {n, n};
      }
      case K::Cut: {
        body_ << indent(depth) << "subgraph cluster_" << next_++ << " {\n"
              << indent(depth + 1) << "style=rounded; label=\"\";\n";
        auto out = emit(g.inner(), ins, depth + 1);
        if (out.empty() && ins.empty()) node("shape=point, style=invis", depth + 1);
        body_ << indent(depth) << "}\n";
        return out;
      }
      default: return ins;
    }
  }

  std::ostringstream body_;
  std::ostringstream edges_;
  int next_ = 0;
};

}  // namespace

std::string diagram_dot(const Diagram& d) { return DotWriter().run(d); }

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr double kRow = 30;
constexpr double kGap = 30;

std::string num(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << x;
  return s.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Block {
  double w = 0;
  double h = 0;
  std::string body;  // relative to the block origin
  std::vector<double> in_y;
  std::vector<double> out_y;
};

std::string group(const std::string& body, double dx, double dy) {
  return "<g transform=\"translate(" + num(dx) + "," + num(dy) + ")\">\n" + body + "</g>\n";
}

std::string line(double x1, double y1, double x2, double y2) {
  return "<path d=\"M" + num(x1) + "," + num(y1) + " C" + num((x1 + x2) / 2) + "," + num(y1) + " " +
         num((x1 + x2) / 2) + "," + num(y2) + " " + num(x2) + "," + num(y2) + "\" class=\"wire\"/>\n";
}

std::vector<double> rows(std::size_t n, double h) {
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(h * (static_cast<double>(k) + 1) / (static_cast<double>(n) + 1));
  return out;
}

Block layout(const Diagram& d);

Block generator_block(const Diagram& g) {
  using K = Diagram::Kind;
  Block b;
  const std::size_t in = g.dom().size(), out = g.cod().size();
  const double legs = static_cast<double>(std::max<std::size_t>({in, out, 1}));
  switch (g.kind()) {
    case K::Box: {
      if (g.fillings().empty()) {
        b.w = std::max(50.0, 9.0 * static_cast<double>(g.name().size()) + 16);
        b.h = legs * kRow;
        b.body = "<rect x=\"0\" y=\"2\" width=\"" + num(b.w) + "\" height=\"" + num(b.h - 4) + "\" class=\"box\"/>\n" +
                 "<text x=\"" + num(b.w / 2) + "\" y=\"" + num(b.h / 2 + 4) + "\">" + escape(g.name()) + "</text>\n";
      } else {
        double y = 24, w = 40;
        std::string inner;
        for (const auto& f : g.fillings()) {
          Block fb = layout(f);
          inner += "<rect x=\"8\" y=\"" + num(y) + "\" width=\"" + num(fb.w + 8) + "\" height=\"" + num(fb.h) +
                   "\" class=\"hole\"/>\n" + group(fb.body, 12, y);
          y += fb.h + 8;
          w = std::max(w, fb.w + 24);
        }
        b.w = w;
        b.h = std::max(y, legs * kRow);
        b.body = "<rect x=\"0\" y=\"2\" width=\"" + num(b.w) + "\" height=\"" + num(b.h - 4) + "\" class=\"box\"/>\n" +
                 "<text x=\"" + num(b.w / 2) + "\" y=\"16\">" + escape(g.name()) + "</text>\n" + inner;
      }
      b.in_y = rows(in, b.h);
      b.out_y = rows(out, b.h);
      return b;
    }
    case K::Spider: {
      b.w = kGap;
      b.h = legs * kRow;
      b.in_y = rows(in, b.h);
      b.out_y = rows(out, b.h);
      for (double y : b.in_y) b.body += line(0, y, b.w / 2, b.h / 2);
      for (double y : b.out_y) b.body += line(b.w / 2, b.h / 2, b.w, y);
      b.body += "<circle cx=\"" + num(b.w / 2) + "\" cy=\"" + num(b.h / 2) + "\" r=\"4\" class=\"spider\"/>\n";
      return b;
    }
    case K::Cup:
    case K::Cap: {
      b.w = kGap;
      b.h = 2 * kRow;
      const bool cup = g.is(K::Cup);
      (cup ? b.in_y : b.out_y) = {kRow / 2, 1.5 * kRow};
      const double x0 = cup ? 0 : b.w, x1 = cup ? b.w * 0.8 : b.w * 0.2;
      b.body = "<path d=\"M" + num(x0) + "," + num(kRow / 2) + " C" + num(x1) + "," + num(kRow / 2) + " " + num(x1) +
               "," + num(1.5 * kRow) + " " + num(x0) + "," + num(1.5 * kRow) + "\" class=\"wire\"/>\n";
      return b;
    }
    case K::Swap: {
      b.w = kGap;
      b.h = 2 * kRow;
      b.in_y = b.out_y = {kRow / 2, 1.5 * kRow};
      b.body = line(0, kRow / 2, b.w, 1.5 * kRow) + line(0, 1.5 * kRow, b.w, kRow / 2);
      return b;
    }
    case K::Cut: {
      Block inner = layout(g.inner());
      b.w = inner.w + 24;
      b.h = std::max(inner.h, kRow) + 16;
      for (double y : inner.in_y) b.in_y.push_back(y + 8);
      for (double y : inner.out_y) b.out_y.push_back(y + 8);
      b.body = "<rect x=\"2\" y=\"2\" width=\"" + num(b.w - 4) + "\" height=\"" + num(b.h - 4) + "\" rx=\"" +
               num(std::min(b.w, b.h) / 2 - 2) + "\" class=\"cut\"/>\n" + group(inner.body, 12, 8);
      for (double y : b.in_y) b.body += line(0, y, 12, y);
      for (double y : b.out_y) b.body += line(b.w - 12, y, b.w, y);
      return b;
    }
    default: return b;
  }
}

Block layout(const Diagram& d) {
  LayeredForm lf = normalize(d);
  struct Column {
    Block gen;
    double top;  // generator offset inside the column
    std::vector<double> in_y, out_y;
    double h;
    std::size_t left, right;
  };
  std::vector<Column> cols;
  for (const auto& layer : lf.layers) {
    Column c{generator_block(layer.generator), 0, {}, {}, 0, layer.left.size(), layer.right.size()};
    const double nl = static_cast<double>(layer.left.size());
    c.top = nl * kRow;
    for (std::size_t k = 0; k < layer.left.size(); ++k) {
      c.in_y.push_back(kRow / 2 + kRow * static_cast<double>(k));
      c.out_y.push_back(c.in_y.back());
    }
    for (double y : c.gen.in_y) c.in_y.push_back(c.top + y);
    for (double y : c.gen.out_y) c.out_y.push_back(c.top + y);
    const double below = c.top + c.gen.h;
    for (std::size_t k = 0; k < layer.right.size(); ++k) {
      double y = below + kRow / 2 + kRow * static_cast<double>(k);
      c.in_y.push_back(y);
      c.out_y.push_back(y);
    }
    c.h = below + kRow * static_cast<double>(layer.right.size());
    cols.push_back(std::move(c));
  }
  Block b;
  b.h = kRow * static_cast<double>(std::max<std::size_t>({lf.dom.size(), lf.cod().size(), 1}));
  for (const auto& c : cols) b.h = std::max(b.h, c.h);
  b.in_y = rows(lf.dom.size(), b.h);
  b.out_y = rows(lf.cod().size(), b.h);
  std::vector<double> prev = b.in_y;
  double x = 0;
  for (const auto& c : cols) {
    for (std::size_t k = 0; k < prev.size(); ++k) b.body += line(x, prev[k], x + kGap, c.in_y[k]);
    x += kGap;
    b.body += group(c.gen.body, x, c.top);
    // Whiskered wires run straight through the column.
    const double width = c.gen.w;
    for (std::size_t k = 0; k < c.in_y.size(); ++k) {
      if (k >= c.left && k < c.in_y.size() - c.right) continue;
      b.body += "<line x1=\"" + num(x) + "\" y1=\"" + num(c.in_y[k]) + "\" x2=\"" + num(x + width) +
                "\" y2=\"" + num(c.in_y[k]) + "\" class=\"wire\"/>\n";
    }
    x += width;
    prev = c.out_y;
  }
  for (std::size_t k = 0; k < prev.size(); ++k) b.body += line(x, prev[k], x + kGap, b.out_y[k]);
  b.w = x + kGap;
  return b;
}

}  // namespace

std::string diagram_svg(const Diagram& d) {
  Block b = layout(d);
  std::ostringstream out;
  const double w = b.w + 40, h = b.h + 40;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
      << "<style>.wire{fill:none;stroke:#000;stroke-width:1.5}.box{fill:#fff;stroke:#000}"
         ".hole{fill:#f4f4f4;stroke:#666;stroke-dasharray:4 2}.cut{fill:none;stroke:#000;stroke-width:1.5}"
         ".spider{fill:#000}text{font:12px sans-serif;text-anchor:middle}</style>\n"
      << group(b.body, 20, 20) << "</svg>\n";
  return out.str();
}

}  // namespace peircelex
