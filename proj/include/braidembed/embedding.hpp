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

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "grid.hpp"

namespace braidembed {

using CellPair = std::pair<GridCoord, GridCoord>;

// The cells of the grid that together stand for one source vertex, and the
// chain edges that hold them together.
struct Island {
    int label = 0;
    std::vector<GridCoord> cells;
    std::vector<CellPair> chain_edges;

    friend bool operator==(const Island &, const Island &) = default;
};

// A single grid edge standing for the source edge (u, v).  endpoints.first is
// expected in the island of u and endpoints.second in the island of v.
struct Bridge {
    int u = 0;
    int v = 0;
    CellPair endpoints;

    Edge source_edge() const { return Edge(u, v); }
    friend bool operator==(const Bridge &, const Bridge &) = default;
};

// An embedding (V^, E^, C^) of a source graph into EM[rows, cols].
//
// islands() is indexed by vertex: islands()[v-1].label == v.  Vertices with no
// island supplied get an empty one so that malformed input stays
// representable for the validator.  The labelling l (cell -> vertex) is cached
// on construction; for overlapping islands the lowest label wins.
class Embedding {
  public:
    Embedding() = default;

    Embedding(GridDims dims, std::vector<Island> islands, std::vector<Bridge> bridges, int vertex_count = 0)
        : _dims(dims), _bridges(std::move(bridges)) {
        int n = vertex_count;
        for (const Island &isl : islands) {
            if (isl.label < 1) throw precondition_error("island label must be positive");
            n = std::max(n, isl.label);
        }
        _islands.resize(n);
        for (int v = 1; v <= n; ++v) _islands[v - 1].label = v;
        std::vector<bool> seen(n, false);
        for (Island &isl : islands) {
            if (seen[isl.label - 1]) throw precondition_error("two islands share label " + std::to_string(isl.label));
            seen[isl.label - 1] = true;
            _islands[isl.label - 1] = std::move(isl);
        }

        _owner.assign(_dims.cell_count(), 0);
        for (const Island &isl : _islands)
            for (GridCoord c : isl.cells) {
                if (!in_bounds(c, _dims)) continue;
                int &slot = _owner[to_index(c, _dims) - 1];
                if (slot == 0) slot = isl.label;
            }
    }

    // For producers that already hold the labelling as a row-major table
    // (0 = uncovered); the caller guarantees it agrees with `islands`.
    struct trusted_labelling_t {};
    static constexpr trusted_labelling_t trusted_labelling{};

    Embedding(trusted_labelling_t, GridDims dims, std::vector<Island> islands, std::vector<Bridge> bridges,
              std::vector<int> labelling)
        : _dims(dims), _islands(std::move(islands)), _bridges(std::move(bridges)), _owner(std::move(labelling)) {
        if (_owner.size() != _dims.cell_count()) throw precondition_error("labelling size differs from grid");
    }

    const GridDims &dims() const { return _dims; }
    const std::vector<Island> &islands() const { return _islands; }
    const Island &island(int v) const { return _islands.at(v - 1); }
    const std::vector<Bridge> &bridges() const { return _bridges; }

    // l(c); nullopt outside every island.
    std::optional<int> label_at(GridCoord c) const {
        if (!in_bounds(c, _dims)) return std::nullopt;
        int v = _owner[to_index(c, _dims) - 1];
        if (v == 0) return std::nullopt;
        return v;
    }

    friend bool operator==(const Embedding &a, const Embedding &b) {
        return a._dims == b._dims && a._islands == b._islands && a._bridges == b._bridges;
    }

  private:
    GridDims _dims;
    std::vector<Island> _islands;
    std::vector<Bridge> _bridges;
    std::vector<int> _owner;
};

inline std::optional<int> island_of(const Embedding &e, GridCoord c) { return e.label_at(c); }

struct EmbeddingStats {
    GridDims dims;
    std::vector<std::size_t> island_sizes;  // indexed by vertex - 1
    std::size_t total_cells = 0;
    std::size_t chain_edges = 0;
    std::size_t bridges = 0;
};

inline EmbeddingStats stats(const Embedding &e) {
    EmbeddingStats s;
    s.dims = e.dims();
    for (const Island &isl : e.islands()) {
        s.island_sizes.push_back(isl.cells.size());
        s.total_cells += isl.cells.size();
        s.chain_edges += isl.chain_edges.size();
    }
    s.bridges = e.bridges().size();
    return s;
}

}  // namespace braidembed
