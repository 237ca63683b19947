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

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "grid.hpp"

// Text formats:
//
//   edge list      one "u v" pair of labels per line, '#' starts a comment line
//   ordering       whitespace separated labels, lowest ordinal first
//   embedding doc  JSON object with keys dims, islands, chain_edges, bridges,
//                  ordering, written in that order.  Coordinates are 1-based
//                  [row, col] pairs.

namespace braidembed {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

template <class F>
void for_each_content_line(std::string_view text, F &&f) {
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        auto t = trim(line);
        if (!t.empty() && t.front() != '#') f(t, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace detail

// Vertices are numbered in order of first appearance; repeated edges collapse.
inline SourceGraph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::set<Edge> edges;
    auto intern = [&](const std::string &tok) {
        auto [it, fresh] = index.emplace(tok, static_cast<int>(labels.size()) + 1);
        if (fresh) labels.push_back(tok);
        return it->second;
    };

    detail::for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) tokens.push_back(tok);
        if (tokens.size() != 2)
            throw parse_error("expected 2 tokens, found " + std::to_string(tokens.size()), line_no);
        if (tokens[0] == tokens[1]) throw parse_error("self-loop on '" + tokens[0] + "'", line_no);
        int u = intern(tokens[0]);
        int v = intern(tokens[1]);
        edges.emplace(u, v);
    });
    if (labels.empty()) throw parse_error("edge list has no edges");
    return SourceGraph(std::move(labels), std::vector<Edge>(edges.begin(), edges.end()));
}

// Reorders g by a list of its labels, lowest ordinal first.
inline SourceGraph parse_ordering(std::string_view text, const SourceGraph &g) {
    std::vector<int> sequence;
    std::vector<bool> seen(g.vertex_count(), false);
    detail::for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
        std::istringstream in{std::string(line)};
        for (std::string tok; in >> tok;) {
            auto v = g.index_of(tok);
            if (!v) throw parse_error("unknown vertex '" + tok + "' in ordering", line_no);
            if (seen[*v - 1]) throw parse_error("vertex '" + tok + "' repeated in ordering", line_no);
            seen[*v - 1] = true;
            sequence.push_back(*v);
        }
    });
    if (static_cast<int>(sequence.size()) != g.vertex_count())
        throw parse_error("ordering lists " + std::to_string(sequence.size()) + " of " +
                          std::to_string(g.vertex_count()) + " vertices");
    return g.with_order(sequence);
}

namespace detail {

inline nlohmann::ordered_json coord_json(GridCoord c) { return nlohmann::ordered_json::array({c.row, c.col}); }
inline nlohmann::ordered_json pair_json(const CellPair &p) {
    return nlohmann::ordered_json::array({coord_json(p.first), coord_json(p.second)});
}

inline GridCoord coord_from(const nlohmann::ordered_json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw parse_error("coordinate must be an array of two integers");
    return GridCoord{j[0].get<int>(), j[1].get<int>()};
}

inline CellPair pair_from(const nlohmann::ordered_json &j) {
    if (!j.is_array() || j.size() != 2) throw parse_error("cell pair must be an array of two coordinates");
    return CellPair{coord_from(j[0]), coord_from(j[1])};
}

inline const nlohmann::ordered_json &field(const nlohmann::ordered_json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw parse_error(std::string("embedding document lacks '") + key + "'");
    return *it;
}

inline nlohmann::ordered_json parse_json(std::string_view text) {
    try {
        auto doc = nlohmann::ordered_json::parse(text);
        if (!doc.is_object()) throw parse_error("embedding document must be a JSON object");
        return doc;
    } catch (const nlohmann::ordered_json::exception &ex) {
        throw parse_error(std::string("malformed embedding document: ") + ex.what());
    }
}

}  // namespace detail

// Writes the embedding document.  Islands follow vertex order, bridges are
// sorted by their first endpoint (row, col).  Output ends with a newline.
inline std::string serialize_embedding(const Embedding &e, const SourceGraph &g) {
    auto str = [](const std::string &s) { return nlohmann::ordered_json(s).dump(); };
    std::ostringstream out;
    out << "{\n";
    out << "  \"dims\": {\"rows\": " << e.dims().rows << ", \"cols\": " << e.dims().cols << "},\n";

    auto keyed_block = [&](const char *name, auto &&value_of) {
        out << "  \"" << name << "\": {";
        bool first = true;
        for (const Island &isl : e.islands()) {
            if (isl.label > g.vertex_count()) continue;
            out << (first ? "\n" : ",\n") << "    " << str(g.label(isl.label)) << ": " << value_of(isl).dump();
            first = false;
        }
        out << (first ? "},\n" : "\n  },\n");
    };
    keyed_block("islands", [](const Island &isl) {
        auto arr = nlohmann::ordered_json::array();
        for (GridCoord c : isl.cells) arr.push_back(detail::coord_json(c));
        return arr;
    });
    keyed_block("chain_edges", [](const Island &isl) {
        auto arr = nlohmann::ordered_json::array();
        for (const CellPair &p : isl.chain_edges) arr.push_back(detail::pair_json(p));
        return arr;
    });

    std::vector<Bridge> bridges = e.bridges();
    std::stable_sort(bridges.begin(), bridges.end(), [](const Bridge &a, const Bridge &b) {
        return a.endpoints < b.endpoints;
    });
    auto name = [&](int v) { return (v >= 1 && v <= g.vertex_count()) ? g.label(v) : "#" + std::to_string(v); };
    out << "  \"bridges\": [";
    for (std::size_t k = 0; k < bridges.size(); ++k) {
        const Bridge &b = bridges[k];
        out << (k ? ",\n" : "\n") << "    {\"edge\": [" << str(name(b.u)) << ", " << str(name(b.v))
            << "], \"endpoints\": " << detail::pair_json(b.endpoints).dump() << "}";
    }
    out << (bridges.empty() ? "],\n" : "\n  ],\n");

    out << "  \"ordering\": [";
    for (int k = 1; k <= g.vertex_count(); ++k) out << (k > 1 ? ", " : "") << str(g.label(g.vertex_at(k)));
    out << "]\n}\n";
    return out.str();
}

// Reads an embedding document against g's labels.  Structural problems
// (bad JSON, wrong types, unknown labels) raise parse_error; semantic ones are
// left for validate().
inline Embedding parse_embedding(std::string_view text, const SourceGraph &g) {
    const nlohmann::ordered_json doc = detail::parse_json(text);
    auto vertex = [&](const nlohmann::ordered_json &j) {
        if (!j.is_string()) throw parse_error("vertex label must be a string");
        auto v = g.index_of(j.get<std::string>());
        if (!v) throw parse_error("unknown vertex '" + j.get<std::string>() + "'");
        return *v;
    };

    const auto &dims_j = detail::field(doc, "dims");
    if (!dims_j.is_object()) throw parse_error("'dims' must be an object");
    const auto &rows = detail::field(dims_j, "rows");
    const auto &cols = detail::field(dims_j, "cols");
    if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() < 1 ||
        cols.get<long long>() < 1)
        throw parse_error("'dims' needs positive integer rows and cols");
    const GridDims dims(rows.get<int>(), cols.get<int>());

    std::vector<Island> islands(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) islands[v - 1].label = v;

    const auto &islands_j = detail::field(doc, "islands");
    if (!islands_j.is_object()) throw parse_error("'islands' must be an object");
    for (auto it = islands_j.begin(); it != islands_j.end(); ++it) {
        int v = vertex(nlohmann::ordered_json(it.key()));
        if (!it.value().is_array()) throw parse_error("island cells must be an array");
        for (const auto &c : it.value()) islands[v - 1].cells.push_back(detail::coord_from(c));
    }

    const auto &chains_j = detail::field(doc, "chain_edges");
    if (!chains_j.is_object()) throw parse_error("'chain_edges' must be an object");
    for (auto it = chains_j.begin(); it != chains_j.end(); ++it) {
        int v = vertex(nlohmann::ordered_json(it.key()));
        if (!it.value().is_array()) throw parse_error("chain edges must be an array");
        for (const auto &p : it.value()) islands[v - 1].chain_edges.push_back(detail::pair_from(p));
    }

    std::vector<Bridge> bridges;
    const auto &bridges_j = detail::field(doc, "bridges");
    if (!bridges_j.is_array()) throw parse_error("'bridges' must be an array");
    for (const auto &b : bridges_j) {
        if (!b.is_object()) throw parse_error("bridge must be an object");
        const auto &edge = detail::field(b, "edge");
        if (!edge.is_array() || edge.size() != 2) throw parse_error("bridge edge must list two labels");
        bridges.push_back(Bridge{vertex(edge[0]), vertex(edge[1]), detail::pair_from(detail::field(b, "endpoints"))});
    }

    const auto &ordering = detail::field(doc, "ordering");
    if (!ordering.is_array()) throw parse_error("'ordering' must be an array");
    std::vector<bool> seen(g.vertex_count(), false);
    for (const auto &l : ordering) {
        int v = vertex(l);
        if (seen[v - 1]) throw parse_error("vertex repeated in ordering");
        seen[v - 1] = true;
    }
    if (static_cast<int>(ordering.size()) != g.vertex_count()) throw parse_error("ordering must list every vertex");

    return Embedding(dims, std::move(islands), std::move(bridges), g.vertex_count());
}

// The graph a document describes on its own: vertices are the island keys in
// document order, edges are the bridged pairs, ordering from 'ordering'.
inline SourceGraph implied_graph(std::string_view text) {
    const nlohmann::ordered_json doc = detail::parse_json(text);
    const auto &islands_j = detail::field(doc, "islands");
    if (!islands_j.is_object()) throw parse_error("'islands' must be an object");
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    for (auto it = islands_j.begin(); it != islands_j.end(); ++it) {
        index.emplace(it.key(), static_cast<int>(labels.size()) + 1);
        labels.push_back(it.key());
    }
    if (labels.empty()) throw parse_error("embedding document has no islands");
    auto vertex = [&](const nlohmann::ordered_json &j) {
        if (!j.is_string() || !index.count(j.get<std::string>())) throw parse_error("bridge names an unknown vertex");
        return index.at(j.get<std::string>());
    };

    std::set<Edge> edges;
    const auto &bridges_j = detail::field(doc, "bridges");
    if (!bridges_j.is_array()) throw parse_error("'bridges' must be an array");
    for (const auto &b : bridges_j) {
        if (!b.is_object()) throw parse_error("bridge must be an object");
        const auto &edge = detail::field(b, "edge");
        if (!edge.is_array() || edge.size() != 2) throw parse_error("bridge edge must list two labels");
        int u = vertex(edge[0]), v = vertex(edge[1]);
        if (u != v) edges.emplace(u, v);
    }

    std::vector<int> sequence;
    const auto &ordering = detail::field(doc, "ordering");
    if (!ordering.is_array()) throw parse_error("'ordering' must be an array");
    for (const auto &l : ordering) sequence.push_back(vertex(l));
    try {
        return SourceGraph(std::move(labels), std::vector<Edge>(edges.begin(), edges.end())).with_order(sequence);
    } catch (const precondition_error &ex) {
        throw parse_error(ex.what());
    }
}

}  // namespace braidembed
