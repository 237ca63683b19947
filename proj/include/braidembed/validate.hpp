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
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "grid.hpp"

namespace braidembed {

// The seven clauses of the embedding definition, checked independently.
enum class Clause : int {
    island_nonempty = 0,   // (a) every vertex has a nonempty island
    island_connected = 1,  // (b) chain edges are grid edges inside the island and connect it
    islands_disjoint = 2,  // (c) no cell belongs to two islands
    cells_in_bounds = 3,   // (d) every cell lies inside the grid
    edge_bridged = 4,      // (e) every source edge has exactly one bridge
    bridge_valid = 5,      // (f) bridge endpoints are adjacent and correctly labelled
    no_spurious_bridge = 6 // (g) no bridge stands for a non-edge
};

inline constexpr int clause_count = 7;

inline char clause_id(Clause c) { return static_cast<char>('a' + static_cast<int>(c)); }

inline const char *clause_name(Clause c) {
    static constexpr std::array<const char *, clause_count> names = {
        "island nonempty", "island connected", "islands disjoint", "cells in bounds",
        "edge bridged",    "bridge valid",     "no spurious bridge"};
    return names[static_cast<int>(c)];
}

struct Violation {
    Clause clause;
    std::string message;
    std::string element;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    bool has(Clause c) const {
        return std::any_of(violations.begin(), violations.end(), [c](const Violation &v) { return v.clause == c; });
    }
    int clauses_passed() const {
        int k = 0;
        for (int i = 0; i < clause_count; ++i) k += has(static_cast<Clause>(i)) ? 0 : 1;
        return k;
    }
};

namespace detail {

inline std::string pair_string(const CellPair &p) { return to_string(p.first) + "-" + to_string(p.second); }

inline std::string edge_string(const SourceGraph &g, int u, int v) {
    auto name = [&](int x) { return (x >= 1 && x <= g.vertex_count()) ? g.label(x) : "#" + std::to_string(x); };
    return "{" + name(u) + "," + name(v) + "}";
}

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : _parent(n) { std::iota(_parent.begin(), _parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (_parent[x] != x) x = _parent[x] = _parent[_parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        _parent[a] = b;
        return true;
    }

  private:
    std::vector<std::size_t> _parent;
};

inline bool sorted_contains(const std::vector<GridCoord> &cells, GridCoord c) {
    return std::binary_search(cells.begin(), cells.end(), c);
}

}  // namespace detail

// Checks every clause of the embedding definition and accumulates all
// violations.  Never throws on malformed embeddings.
inline ValidationReport validate(const SourceGraph &g, const Embedding &e) {
    ValidationReport report;
    auto flag = [&](Clause c, std::string msg, std::string elem) {
        report.violations.push_back(Violation{c, std::move(msg), std::move(elem)});
    };

    const int n = g.vertex_count();
    const GridDims dims = e.dims();
    const auto &islands = e.islands();

    // (a)
    for (int v = 1; v <= n; ++v) {
        if (v > static_cast<int>(islands.size()) || islands[v - 1].cells.empty())
            flag(Clause::island_nonempty, "vertex " + g.label(v) + " has no island", g.label(v));
    }
    for (int v = n + 1; v <= static_cast<int>(islands.size()); ++v) {
        if (!islands[v - 1].cells.empty())
            flag(Clause::island_nonempty, "island for unknown vertex #" + std::to_string(v), "#" + std::to_string(v));
    }

    // Sorted, deduplicated cell lists for membership tests.
    std::vector<std::vector<GridCoord>> sorted_cells(islands.size());
    for (std::size_t i = 0; i < islands.size(); ++i) {
        auto &cells = sorted_cells[i];
        cells = islands[i].cells;
        std::sort(cells.begin(), cells.end());
        auto dup = std::adjacent_find(cells.begin(), cells.end());
        if (dup != cells.end())
            flag(Clause::islands_disjoint, "cell listed twice in island " + std::to_string(i + 1), to_string(*dup));
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    }

    // (b)
    for (std::size_t i = 0; i < islands.size(); ++i) {
        const auto &cells = sorted_cells[i];
        if (cells.empty()) continue;
        const std::string who = "island " + std::to_string(i + 1);
        detail::UnionFind uf(cells.size());
        std::size_t components = cells.size();
        for (const CellPair &ce : islands[i].chain_edges) {
            auto a = std::lower_bound(cells.begin(), cells.end(), ce.first);
            auto b = std::lower_bound(cells.begin(), cells.end(), ce.second);
            bool a_in = a != cells.end() && *a == ce.first;
            bool b_in = b != cells.end() && *b == ce.second;
            if (!a_in || !b_in) {
                flag(Clause::island_connected, who + " chain edge leaves the island", detail::pair_string(ce));
                continue;
            }
            if (!are_adjacent(ce.first, ce.second)) {
                flag(Clause::island_connected, who + " chain edge is not a grid edge", detail::pair_string(ce));
                continue;
            }
            if (uf.unite(static_cast<std::size_t>(a - cells.begin()), static_cast<std::size_t>(b - cells.begin())))
                --components;
        }
        if (components > 1)
            flag(Clause::island_connected, who + " splits into " + std::to_string(components) + " components",
                 to_string(cells.front()));
    }

    // (c) and (d)
    std::vector<int> owner(dims.cell_count(), 0);
    std::map<GridCoord, int> outside;
    for (std::size_t i = 0; i < islands.size(); ++i) {
        const int v = static_cast<int>(i) + 1;
        for (GridCoord c : sorted_cells[i]) {
            int *slot;
            if (in_bounds(c, dims)) {
                slot = &owner[to_index(c, dims) - 1];
            } else {
                flag(Clause::cells_in_bounds, "island " + std::to_string(v) + " cell outside grid", to_string(c));
                slot = &outside[c];
            }
            if (*slot != 0)
                flag(Clause::islands_disjoint,
                     "cell shared by islands " + std::to_string(*slot) + " and " + std::to_string(v), to_string(c));
            else
                *slot = v;
        }
    }

    // (e), (f), (g)
    const auto &edges = g.edges();
    std::vector<int> bridge_count(edges.size(), 0);
    auto member = [&](int v, GridCoord c) {
        return v >= 1 && v <= static_cast<int>(sorted_cells.size()) && detail::sorted_contains(sorted_cells[v - 1], c);
    };
    for (const Bridge &b : e.bridges()) {
        const std::string es = detail::edge_string(g, b.u, b.v);
        const std::string ps = detail::pair_string(b.endpoints);
        if (!g.has_edge(b.u, b.v)) {
            flag(Clause::no_spurious_bridge, "bridge for non-edge " + es, ps);
        } else {
            auto it = std::lower_bound(edges.begin(), edges.end(), b.source_edge());
            ++bridge_count[static_cast<std::size_t>(it - edges.begin())];
        }
        if (!are_adjacent(b.endpoints.first, b.endpoints.second))
            flag(Clause::bridge_valid, "bridge for " + es + " joins non-adjacent cells", ps);
        bool straight = member(b.u, b.endpoints.first) && member(b.v, b.endpoints.second);
        bool swapped = member(b.u, b.endpoints.second) && member(b.v, b.endpoints.first);
        if (!straight && !swapped) flag(Clause::bridge_valid, "bridge for " + es + " is mislabelled", ps);
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string es = detail::edge_string(g, edges[k].u, edges[k].v);
        if (bridge_count[k] == 0)
            flag(Clause::edge_bridged, "edge " + es + " has no bridge", es);
        else if (bridge_count[k] > 1)
            flag(Clause::edge_bridged, "edge " + es + " has " + std::to_string(bridge_count[k]) + " bridges", es);
    }

    return report;
}

}  // namespace braidembed
