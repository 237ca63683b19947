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

// Shared test fixtures: known-good embeddings and targeted corruptions.

#include <random>
#include <string>
#include <vector>

#include "braidembed/braid.hpp"
#include "braidembed/embedding.hpp"
#include "braidembed/graph.hpp"
#include "braidembed/prune.hpp"
#include "braidembed/validate.hpp"

namespace fixtures {

using namespace braidembed;

inline Embedding k2_embedding() {
    return Embedding(GridDims(1, 2), {Island{1, {{1, 1}}, {}}, Island{2, {{1, 2}}, {}}},
                     {Bridge{1, 2, {{1, 1}, {1, 2}}}}, 2);
}

inline SourceGraph path3() { return SourceGraph(numeric_labels(3), {Edge(1, 2), Edge(2, 3)}); }

// K_6 without the edge {1,2}; cells (1,1) and (1,2) still hold islands 1 and 2.
inline SourceGraph k6_minus_12() {
    std::vector<Edge> edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            if (!(u == 1 && v == 2)) edges.emplace_back(u, v);
    return SourceGraph(numeric_labels(6), edges);
}

struct Mutation {
    std::string name;
    Clause expected;
    Embedding embedding;
};

// One corruption per clause of the embedding definition, applied to
// embed(k6_minus_12()).
inline std::vector<Mutation> clause_mutations() {
    const SourceGraph g = k6_minus_12();
    const Embedding base = embed(g);
    const GridDims d = base.dims();
    std::vector<Mutation> out;

    auto rebuild = [&](std::vector<Island> islands, std::vector<Bridge> bridges) {
        return Embedding(d, std::move(islands), std::move(bridges), g.vertex_count());
    };

    {
        auto islands = base.islands();
        islands[2].cells.clear();
        islands[2].chain_edges.clear();
        out.push_back({"drop an island's cells", Clause::island_nonempty, rebuild(islands, base.bridges())});
    }
    {
        auto islands = base.islands();
        islands[0].chain_edges.erase(islands[0].chain_edges.begin() + 1);
        out.push_back({"drop a chain edge", Clause::island_connected, rebuild(islands, base.bridges())});
    }
    {
        auto islands = base.islands();
        islands[0].cells.push_back(islands[1].cells.front());
        out.push_back({"copy a cell into a second island", Clause::islands_disjoint, rebuild(islands, base.bridges())});
    }
    {
        auto islands = base.islands();
        GridCoord last = islands[0].cells.back();
        GridCoord outside{d.rows + 1, last.col};
        islands[0].cells.push_back(outside);
        islands[0].chain_edges.emplace_back(last, outside);
        out.push_back({"move a cell out of bounds", Clause::cells_in_bounds, rebuild(islands, base.bridges())});
    }
    {
        auto bridges = base.bridges();
        bridges.erase(bridges.begin() + 3);
        out.push_back({"delete a bridge", Clause::edge_bridged, rebuild(base.islands(), bridges)});
    }
    {
        auto bridges = base.bridges();
        bridges.push_back(bridges.front());
        out.push_back({"duplicate a bridge", Clause::edge_bridged, rebuild(base.islands(), bridges)});
    }
    {
        auto bridges = base.bridges();
        // push the second endpoint one row down, onto whatever island sits there
        bridges.front().endpoints.second.row += 1;
        out.push_back({"move a bridge endpoint off-island", Clause::bridge_valid, rebuild(base.islands(), bridges)});
    }
    {
        auto bridges = base.bridges();
        bridges.push_back(Bridge{1, 2, {{1, 1}, {1, 2}}});
        out.push_back({"bridge a non-edge", Clause::no_spurious_bridge, rebuild(base.islands(), bridges)});
    }
    return out;
}

// A mixed corpus of (graph, valid embedding) pairs.
inline std::vector<std::pair<SourceGraph, Embedding>> valid_corpus(std::size_t count, unsigned seed = 7) {
    std::vector<std::pair<SourceGraph, Embedding>> out;
    std::mt19937_64 rng(seed);
    const double ps[] = {0.1, 0.5, 0.9};
    for (std::size_t i = 0; out.size() < count; ++i) {
        SourceGraph g = [&]() {
            switch (i % 4) {
            case 0: return complete_graph(1 + static_cast<int>(i % 13));
            case 1: return complete_bipartite(1 + static_cast<int>(i % 5), 1 + static_cast<int>((i / 5) % 4));
            default: return gnp_random_graph(2 + static_cast<int>(rng() % 15), ps[i % 3], rng);
            }
        }();
        Embedding e = embed(g);
        if (i % 3 == 0) e = prune(e, g);
        out.emplace_back(std::move(g), std::move(e));
    }
    return out;
}

}  // namespace fixtures
