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
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "grid.hpp"

// Braided embedding of an n-vertex graph into EM[n-1, n].
//
// Row 1 holds the vertices in ascending ordinal order.  From there each
// island walks one column per row: odd ordinals toward the right wall, even
// ordinals toward the left.  On reaching a wall an island stays put for one
// extra row, then reverses.  Adjacent islands therefore swap places at every
// row transition, and every pair of islands ends up side by side in some row,
// which is where its bridge is placed.

namespace braidembed {

namespace detail {
constexpr long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
constexpr long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
}  // namespace detail

// Closed-form column of the island with ordinal `ordinal` in row `row` of the
// braid over n vertices.  Only rows 1..n-1 are defined.
inline int column_formula(int ordinal, int row, int n) {
    if (n < 2) throw std::domain_error("column_formula needs n >= 2");
    if (row < 1 || row > n - 1) throw std::domain_error("row " + std::to_string(row) + " outside [1, n-1]");
    if (ordinal < 1 || ordinal > n) throw std::domain_error("ordinal " + std::to_string(ordinal) + " outside [1, n]");

    const long long k = ordinal, h = row - 1, nn = n;
    long long col;
    if (k % 2 == 1) {
        const long long r_odd = h - (nn - k) - 1;
        col = k + h - detail::floor_div(k + h - 1, nn) * (2 * r_odd + 1);
    } else {
        const long long r_even = h - k;
        col = k - h + detail::ceil_div(-(k - h - 1), nn) * (2 * r_even + 1);
    }
    return static_cast<int>(col);
}

// The m x n assignment of grid cells to vertices produced by the braid, plus
// the chain edges linking each island's consecutive cells.
class LayoutTable {
  public:
    LayoutTable(GridDims dims, std::vector<int> labels, std::vector<std::vector<CellPair>> chains)
        : _dims(dims), _labels(std::move(labels)), _chains(std::move(chains)) {}

    const GridDims &dims() const { return _dims; }
    int label(int row, int col) const { return _labels[to_index(GridCoord{row, col}, _dims) - 1]; }
    std::span<const int> row(int r) const {
        return std::span<const int>(_labels).subspan(static_cast<std::size_t>(r - 1) * _dims.cols, _dims.cols);
    }
    // Chain edges of vertex v, in row order.
    const std::vector<CellPair> &chain_edges(int v) const { return _chains.at(v - 1); }
    std::span<const int> labels() const { return _labels; }

    std::vector<CellPair> take_chain(int v) && { return std::move(_chains.at(v - 1)); }
    std::vector<int> release_labels() && { return std::move(_labels); }

  private:
    GridDims _dims;
    std::vector<int> _labels;
    std::vector<std::vector<CellPair>> _chains;
};

// ordinals[v-1] = n_V(v).
inline LayoutTable braid_layout(int n, std::span<const int> ordinals) {
    if (n < 2) throw std::domain_error("braid_layout needs n >= 2");
    if (static_cast<int>(ordinals.size()) != n) throw precondition_error("ordering length differs from vertex count");

    std::vector<int> vertex_at(n, 0);
    for (int v = 1; v <= n; ++v) {
        int k = ordinals[v - 1];
        if (k < 1 || k > n || vertex_at[k - 1] != 0) throw precondition_error("ordering is not a permutation");
        vertex_at[k - 1] = v;
    }

    const int m = n - 1;
    const GridDims dims(m, n);
    std::vector<int> labels(dims.cell_count(), 0);
    std::vector<std::vector<CellPair>> chains(n);
    for (auto &chain : chains) chain.reserve(m - 1);

    // One step of an island's walk: move one column along its heading; a step
    // past a wall pins it to the wall for this row and reverses the heading.
    auto step = [n](int &j, bool &moving_right) {
        j += moving_right ? 1 : -1;
        if (j > n && moving_right) {
            j = n;
            moving_right = false;
        } else if (j < 1 && !moving_right) {
            j = 1;
            moving_right = true;
        }
    };

    // Cell labels, filled a row at a time.
    std::vector<int> col(n + 1);
    std::vector<char> heading(n + 1);
    for (int k = 1; k <= n; ++k) {
        col[k] = k;
        heading[k] = (k % 2 == 1);
    }
    for (int i = 1; i <= m; ++i) {
        int *row = labels.data() + static_cast<std::size_t>(i - 1) * n;
        for (int k = 1; k <= n; ++k) {
            row[col[k] - 1] = vertex_at[k - 1];
            bool right = heading[k];
            step(col[k], right);
            heading[k] = right;
        }
    }

    // Chain edges, one island at a time.
    for (int k = 1; k <= n; ++k) {
        auto &chain = chains[vertex_at[k - 1] - 1];
        int j = k;
        bool moving_right = (k % 2 == 1);
        for (int i = 1; i < m; ++i) {
            const int jlast = j;
            step(j, moving_right);
            chain.emplace_back(GridCoord{i, jlast}, GridCoord{i + 1, j});
        }
    }
    return LayoutTable(dims, std::move(labels), std::move(chains));
}

inline LayoutTable braid_layout(int n) {
    std::vector<int> identity(n > 0 ? n : 0);
    std::iota(identity.begin(), identity.end(), 1);
    return braid_layout(n, identity);
}

// Scans each row left to right and bridges every horizontally adjacent pair
// whose edge has not been bridged yet.  Output is in scan order.
inline std::vector<Bridge> assign_bridges(const LayoutTable &t, const SourceGraph &g) {
    const int n = g.vertex_count();
    if (t.dims().cols != n) throw precondition_error("layout width differs from vertex count");

    // unconsumed edges as an n x n bit matrix, both orientations set
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> remaining(words * n, 0);
    auto bit = [&](int a, int b) -> std::pair<std::uint64_t &, std::uint64_t> {
        return {remaining[static_cast<std::size_t>(a - 1) * words + (b - 1) / 64], std::uint64_t{1} << ((b - 1) % 64)};
    };
    for (const Edge &e : g.edges()) {
        auto [w1, m1] = bit(e.u, e.v);
        w1 |= m1;
        auto [w2, m2] = bit(e.v, e.u);
        w2 |= m2;
    }

    std::vector<Bridge> bridges;
    bridges.reserve(g.edge_count());
    for (int i = 1; i <= t.dims().rows; ++i) {
        auto uv = t.row(i);
        for (int j = 1; j < n; ++j) {
            const int a = uv[j - 1], b = uv[j];
            auto [fwd, fm] = bit(a, b);
            if (!(fwd & fm)) continue;
            bridges.push_back(Bridge{a, b, {GridCoord{i, j}, GridCoord{i, j + 1}}});
            fwd &= ~fm;
            auto [back, bm] = bit(b, a);
            back &= ~bm;
        }
    }
    return bridges;
}

// Embeds g into EM[n-1, n] (EM[1,1] for a single vertex).
inline Embedding embed(const SourceGraph &g) {
    const int n = g.vertex_count();
    if (n == 1) return Embedding(GridDims(1, 1), {Island{1, {GridCoord{1, 1}}, {}}}, {}, 1);

    LayoutTable table = braid_layout(n, g.ordinals());
    std::vector<Bridge> bridges = assign_bridges(table, g);
    const GridDims dims = table.dims();

    // An island's cells are its chain read in row order.
    std::vector<Island> islands(n);
    for (int v = 1; v <= n; ++v) {
        Island &isl = islands[v - 1];
        isl.label = v;
        isl.cells.reserve(dims.rows);
        isl.chain_edges = std::move(table).take_chain(v);
        if (isl.chain_edges.empty()) {
            isl.cells.push_back(GridCoord{1, g.ordinal(v)});
            continue;
        }
        for (const CellPair &ce : isl.chain_edges) isl.cells.push_back(ce.first);
        isl.cells.push_back(isl.chain_edges.back().second);
    }
    std::vector<int> labelling = std::move(table).release_labels();
    return Embedding(Embedding::trusted_labelling, dims, std::move(islands), std::move(bridges), std::move(labelling));
}

}  // namespace braidembed
