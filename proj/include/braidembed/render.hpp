// Copyright 2026 The braidembed Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "grid.hpp"

namespace braidembed {

// Single-character cell label: 1-9, then a-z for 10..35, '?' beyond.
inline char ascii_label(int v) {
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    if (v >= 10 && v <= 35) return static_cast<char>('a' + (v - 10));
    return '?';
}

// One text line per grid row; '.' marks cells outside every island.  When
// some label has no single-character form, a legend lists the '?' cells of
// each affected row left to right.
inline std::string render_ascii(const Embedding &e) {
    const GridDims d = e.dims();
    std::string out;
    std::vector<std::string> legend;
    for (int r = 1; r <= d.rows; ++r) {
        std::string row_legend;
        for (int c = 1; c <= d.cols; ++c) {
            auto v = e.label_at(GridCoord{r, c});
            char ch = v ? ascii_label(*v) : '.';
            out += ch;
            if (ch == '?') row_legend += " " + std::to_string(*v);
        }
        out += '\n';
        if (!row_legend.empty()) legend.push_back("row " + std::to_string(r) + ":" + row_legend);
    }
    if (!legend.empty()) {
        out += "legend:\n";
        for (const auto &l : legend) out += l + "\n";
    }
    return out;
}

namespace detail {
inline constexpr int svg_spacing = 40;
inline constexpr int svg_margin = 30;
inline int svg_x(GridCoord c) { return svg_margin + (c.col - 1) * svg_spacing; }
inline int svg_y(GridCoord c) { return svg_margin + (c.row - 1) * svg_spacing; }

inline std::string island_colour(int v) {
    // golden-angle hue walk, integer arithmetic keeps the bytes stable
    int hue = static_cast<int>((static_cast<long long>(v) * 137508 / 1000) % 360);
    return "hsl(" + std::to_string(hue) + ",65%,45%)";
}

inline void svg_line(std::ostringstream &out, const char *cls, GridCoord a, GridCoord b) {
    out << "    <line class=\"" << cls << "\" x1=\"" << svg_x(a) << "\" y1=\"" << svg_y(a) << "\" x2=\"" << svg_x(b)
        << "\" y2=\"" << svg_y(b) << "\"/>\n";
}
}  // namespace detail

// Lattice drawing: one <g class="island-v"> per island holding its chain
// segments and cell circles, then a group of highlighted bridge segments.
inline std::string render_svg(const Embedding &e) {
    using namespace detail;
    const GridDims d = e.dims();
    const int width = 2 * svg_margin + (d.cols - 1) * svg_spacing;
    const int height = 2 * svg_margin + (d.rows - 1) * svg_spacing;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    out << "  <g class=\"lattice\" fill=\"#cccccc\">\n";
    for (int r = 1; r <= d.rows; ++r)
        for (int c = 1; c <= d.cols; ++c) {
            if (e.label_at(GridCoord{r, c})) continue;
            out << "    <rect x=\"" << svg_x({r, c}) - 2 << "\" y=\"" << svg_y({r, c}) - 2
                << "\" width=\"4\" height=\"4\"/>\n";
        }
    out << "  </g>\n";

    for (const Island &isl : e.islands()) {
        if (isl.cells.empty()) continue;
        const std::string colour = island_colour(isl.label);
        out << "  <g class=\"island-" << isl.label << "\" stroke=\"" << colour << "\" fill=\"" << colour
            << "\" stroke-width=\"4\">\n";
        for (const CellPair &ce : isl.chain_edges) svg_line(out, "chain", ce.first, ce.second);
        for (GridCoord c : isl.cells)
            out << "    <circle cx=\"" << svg_x(c) << "\" cy=\"" << svg_y(c) << "\" r=\"8\"/>\n";
        out << "  </g>\n";
    }

    out << "  <g class=\"bridges\" stroke=\"#e01010\" stroke-width=\"3\" stroke-dasharray=\"6,3\">\n";
    for (const Bridge &b : e.bridges()) svg_line(out, "bridge", b.endpoints.first, b.endpoints.second);
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace braidembed
