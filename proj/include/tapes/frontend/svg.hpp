// Copyright 2026 The tapes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Layered SVG drawing of a tape. Each ⊕-summand is a horizontal lane (a
// shaded band) holding one wire per sort; circuits are boxes on the wires.
// Sizes are fixed integers, so equal terms give identical bytes.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tapes/tape.hpp"

namespace tapes::frontend {

namespace svg {

inline constexpr int kWire = 14;     // distance between wires
inline constexpr int kPad = 8;       // band padding above and below wires
inline constexpr int kGap = 10;      // vertical gap between lanes
inline constexpr int kJoin = 24;     // width of connectors in a composite
inline constexpr int kMargin = 10;

inline int laneHeight(const Monomial& u) {
  return 2 * kPad + static_cast<int>(std::max<std::size_t>(1, u.length())) * kWire;
}

inline int wireY(const Monomial& u, std::size_t i) {
  int n = static_cast<int>(std::max<std::size_t>(1, u.length()));
  int top = kPad + (n - static_cast<int>(u.length())) * kWire / 2;
  return top + kWire / 2 + static_cast<int>(i) * kWire;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Port {
  int y;
  Monomial mono;
};

struct Block {
  int w = 0;
  int h = 0;
  std::vector<Port> in;
  std::vector<Port> out;
  std::string body;
};

inline std::string num(int v) { return std::to_string(v); }

// A band carrying monomial u from (x0, y0) to (x1, y1), tops given.
inline std::string band(int x0, int y0, int x1, int y1, const Monomial& u, bool labels = false) {
  int h = laneHeight(u);
  int xm = (x0 + x1) / 2;
  std::string out = "<path class=\"lane\" d=\"M" + num(x0) + " " + num(y0) + " C" + num(xm) + " " + num(y0) + " " +
                    num(xm) + " " + num(y1) + " " + num(x1) + " " + num(y1) + " L" + num(x1) + " " + num(y1 + h) +
                    " C" + num(xm) + " " + num(y1 + h) + " " + num(xm) + " " + num(y0 + h) + " " + num(x0) + " " +
                    num(y0 + h) + " Z\"/>\n";
  for (std::size_t i = 0; i < u.length(); ++i) {
    int a = y0 + wireY(u, i), b = y1 + wireY(u, i);
    out += "<path class=\"wire\" d=\"M" + num(x0) + " " + num(a) + " C" + num(xm) + " " + num(a) + " " + num(xm) + " " +
           num(b) + " " + num(x1) + " " + num(b) + "\"/>\n";
    if (labels) {
      out += "<text class=\"label\" x=\"" + num(x0 + 3) + "\" y=\"" + num(a - 3) + "\">" +
             escape(u.sorts[i].name()) + "</text>\n";
    }
  }
  return out;
}

inline std::string group(const std::string& cls, const std::string& body) {
  return "<g class=\"" + cls + "\">\n" + body + "</g>\n";
}

inline std::string translate(int x, int y, const std::string& body) {
  if (x == 0 && y == 0) return body;
  return "<g transform=\"translate(" + num(x) + "," + num(y) + ")\">\n" + body + "</g>\n";
}

inline Block layout(const TapeTerm& t);

inline Block identity(const Monomial& u) {
  Block b{40, laneHeight(u), {{0, u}}, {{0, u}}, ""};
  b.body = group("identity", band(0, 0, b.w, 0, u, true));
  return b;
}

inline Block circuitBox(const CircuitTerm& c) {
  CircuitType ty = inferCircuitType(c);
  std::string label = toString(c);
  int boxW = std::max(30, 7 * static_cast<int>(label.size()) + 12);
  int h = std::max(laneHeight(ty.dom), laneHeight(ty.cod));
  int w = boxW + 28;
  Block b{w, h, {{0, ty.dom}}, {{0, ty.cod}}, ""};
  std::string body = "<rect class=\"lane\" x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) + "\"/>\n";
  for (std::size_t i = 0; i < ty.dom.length(); ++i) {
    int y = wireY(ty.dom, i);
    body += "<path class=\"wire\" d=\"M0 " + num(y) + " L14 " + num(y) + "\"/>\n";
  }
  for (std::size_t i = 0; i < ty.cod.length(); ++i) {
    int y = wireY(ty.cod, i);
    body += "<path class=\"wire\" d=\"M" + num(14 + boxW) + " " + num(y) + " L" + num(w) + " " + num(y) + "\"/>\n";
  }
  body += "<rect class=\"box\" x=\"14\" y=\"4\" width=\"" + num(boxW) + "\" height=\"" + num(h - 8) + "\"/>\n";
  body += "<text class=\"box-label\" x=\"" + num(14 + boxW / 2) + "\" y=\"" + num(h / 2 + 4) + "\">" + escape(label) +
          "</text>\n";
  b.body = group("circuit", body);
  return b;
}

inline Block symPlus(const Monomial& u, const Monomial& v) {
  int hu = laneHeight(u), hv = laneHeight(v);
  Block b{60, hu + kGap + hv, {{0, u}, {hu + kGap, v}}, {{0, v}, {hv + kGap, u}}, ""};
  b.body = group("cross", band(0, 0, b.w, hv + kGap, u) + band(0, hu + kGap, b.w, 0, v));
  return b;
}

inline Block codiag(const Monomial& u) {
  int hu = laneHeight(u);
  int mid = (hu + kGap) / 2;
  Block b{50, 2 * hu + kGap, {{0, u}, {hu + kGap, u}}, {{mid, u}}, ""};
  b.body = group("merge", band(0, 0, b.w, mid, u) + band(0, hu + kGap, b.w, mid, u));
  return b;
}

inline Block cobang(const Monomial& u) {
  int hu = laneHeight(u);
  Block b{40, hu, {}, {{0, u}}, ""};
  std::string body = "<rect class=\"lane\" x=\"12\" y=\"0\" width=\"28\" height=\"" + num(hu) + "\" rx=\"8\"/>\n";
  for (std::size_t i = 0; i < u.length(); ++i) {
    int y = wireY(u, i);
    body += "<path class=\"wire\" d=\"M20 " + num(y) + " L40 " + num(y) + "\"/>\n";
  }
  b.body = group("cap", body);
  return b;
}

inline Block split(const OpSymbol& f, const Monomial& u) {
  int hu = laneHeight(u);
  int n = static_cast<int>(f.arity);
  std::string label = "<text class=\"op-label\" x=\"4\" y=\"-2\">" + escape(toString(f)) + "</text>\n";
  if (n == 0) {
    Block b{40, hu, {{0, u}}, {}, ""};
    std::string body = "<rect class=\"lane\" x=\"0\" y=\"0\" width=\"28\" height=\"" + num(hu) + "\" rx=\"8\"/>\n";
    for (std::size_t i = 0; i < u.length(); ++i) {
      int y = wireY(u, i);
      body += "<path class=\"wire\" d=\"M0 " + num(y) + " L20 " + num(y) + "\"/>\n";
    }
    b.body = group("split", body + translate(0, 10, label));
    return b;
  }
  int h = n * hu + (n - 1) * kGap;
  int mid = (h - hu) / 2;
  Block b{60, h, {{mid, u}}, {}, ""};
  std::string body;
  for (int i = 0; i < n; ++i) {
    int y = i * (hu + kGap);
    b.out.push_back({y, u});
    body += band(0, mid, b.w, y, u);
  }
  b.body = group("split", body + translate(0, mid + hu + 10, label));
  return b;
}

inline Block seq(const Block& a, const Block& c) {
  Block b;
  b.w = a.w + kJoin + c.w;
  b.h = std::max(a.h, c.h);
  b.in = a.in;
  b.out = c.out;
  std::string joins;
  for (std::size_t i = 0; i < a.out.size() && i < c.in.size(); ++i) {
    joins += band(a.w, a.out[i].y, a.w + kJoin, c.in[i].y, a.out[i].mono);
  }
  b.body = a.body + group("join", joins) + translate(a.w + kJoin, 0, c.body);
  return b;
}

inline Block stretch(const Block& a, int w) {
  if (a.w >= w) return a;
  Block b = a;
  std::string ext;
  for (const auto& p : a.out) ext += band(a.w, p.y, w, p.y, p.mono);
  b.w = w;
  if (!ext.empty()) b.body += group("join", ext);
  return b;
}

inline Block sum(const Block& a0, const Block& c0) {
  int w = std::max(a0.w, c0.w);
  Block a = stretch(a0, w), c = stretch(c0, w);
  int gap = (a.h > 0 && c.h > 0) ? kGap : 0;
  int dy = a.h + gap;
  Block b;
  b.w = w;
  b.h = a.h + gap + c.h;
  b.in = a.in;
  b.out = a.out;
  for (auto p : c.in) b.in.push_back({p.y + dy, p.mono});
  for (auto p : c.out) b.out.push_back({p.y + dy, p.mono});
  b.body = a.body + translate(0, dy, c.body);
  return b;
}

inline Block layout(const TapeTerm& t) {
  using K = TapeTerm::Kind;
  switch (t.kind()) {
    case K::IdMon: return identity(t.monomial());
    case K::IdZero: return Block{16, 0, {}, {}, ""};
    case K::TapeOf: return circuitBox(t.circuit());
    case K::SymPlus: return symPlus(t.monomial(0), t.monomial(1));
    case K::Codiag: return codiag(t.monomial());
    case K::Cobang: return cobang(t.monomial());
    case K::OpInj: return split(t.op(), t.monomial());
    case K::Seq: return seq(layout(t.left()), layout(t.right()));
    case K::Sum: return sum(layout(t.left()), layout(t.right()));
  }
  return {};
}

}  // namespace svg

/// SVG 1.1 document for a well-typed tape.
inline std::string renderSvg(const TapeTerm& t) {
  inferTapeType(t);
  svg::Block b = svg::layout(t);
  int w = b.w + 2 * svg::kMargin, h = std::max(b.h, 1) + 2 * svg::kMargin;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg::num(w) + "\" height=\"" +
         svg::num(h) + "\" viewBox=\"0 0 " + svg::num(w) + " " + svg::num(h) + "\">\n";
  out +=
      "<style>\n"
      ".lane{fill:#e6edf6;stroke:#6b7f9e;stroke-width:1}\n"
      ".wire{fill:none;stroke:#000;stroke-width:1.2}\n"
      ".box{fill:#fff;stroke:#000;stroke-width:1}\n"
      ".label,.op-label{font:9px monospace;fill:#333}\n"
      ".box-label{font:10px monospace;text-anchor:middle}\n"
      "</style>\n";
  out += svg::translate(svg::kMargin, svg::kMargin, b.body);
  out += "</svg>\n";
  return out;
}

}  // namespace tapes::frontend
