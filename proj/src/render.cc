// Copyright 2026 The dagstack Authors
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


#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "dagstack/error.h"
#include "dagstack/io.h"

namespace dagstack {

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};
constexpr int kPaletteSize = 12;
constexpr int kSpacing = 40;
constexpr int kMargin = 30;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_arc_diagram_svg(const Layout& l) {
  const int n = l.graph.num_vertices();
  const auto pos = positions_of(l.ordering, n);
  int max_span = 0;
  for (const Edge& e : l.graph.edges()) {
    max_span = std::max(max_span, std::abs(pos[e.head] - pos[e.tail]));
  }
  const int width = 2 * kMargin + std::max(0, n - 1) * kSpacing;
  const int baseline = kMargin + max_span * kSpacing / 2;
  const int height = baseline + 2 * kMargin;
  const int colours = std::min(std::max(l.num_stacks, 1), kPaletteSize);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n<defs>\n";
  for (int c = 0; c < colours; ++c) {
    out << "<marker id=\"arrow" << c
        << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M0,0 "
           "L10,5 L0,10 z\" fill=\""
        << kPalette[c] << "\"/></marker>\n";
  }
  out << "</defs>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << baseline << "\" x2=\""
      << width - kMargin << "\" y2=\"" << baseline
      << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
  for (int id = 0; id < l.graph.num_edges(); ++id) {
    const Edge& e = l.graph.edge(id);
    const int stack = id < static_cast<int>(l.stack_of_edge.size())
                          ? std::max(l.stack_of_edge[id], 0)
                          : 0;
    const int colour = stack % kPaletteSize;
    const int x1 = kMargin + pos[e.tail] * kSpacing;
    const int x2 = kMargin + pos[e.head] * kSpacing;
    const int r2 = std::abs(x2 - x1);  // twice the radius
    out << "<path class=\"edge\" data-stack=\"" << stack << "\" d=\"M " << x1
        << ' ' << baseline << " A " << r2 / 2 << (r2 % 2 ? ".5" : "") << ' '
        << r2 / 2 << (r2 % 2 ? ".5" : "") << " 0 0 " << (x1 < x2 ? 1 : 0)
        << ' ' << x2 << ' ' << baseline << "\" fill=\"none\" stroke=\""
        << kPalette[colour] << "\" stroke-width=\"1.5\""
        << (stack >= kPaletteSize ? " stroke-dasharray=\"4 2\"" : "")
        << " marker-end=\"url(#arrow" << colour << ")\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    const VertexId v = l.ordering[i];
    const int x = kMargin + i * kSpacing;
    out << "<circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << baseline
        << "\" r=\"4\" fill=\"#000\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << baseline + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">"
        << xml_escape(l.graph.vertex_label(v)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void render_arc_diagram(const Layout& l, const std::string& path) {
  write_file(path, render_arc_diagram_svg(l));
}

}  // namespace dagstack
