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
#include <deque>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "validate.hpp"

namespace braidembed {

// Trims island cells that carry no bridge and hang off the island by at most
// one chain edge, until none remain.  Every island keeps at least one cell.
// Cell and chain-edge order of the survivors is preserved.
inline Embedding prune(const Embedding &e, const SourceGraph &g) {
    if (!validate(g, e).passed()) throw precondition_error("prune requires a valid embedding");

    std::vector<GridCoord> anchored;
    for (const Bridge &b : e.bridges()) {
        anchored.push_back(b.endpoints.first);
        anchored.push_back(b.endpoints.second);
    }
    std::sort(anchored.begin(), anchored.end());

    std::vector<Island> out;
    out.reserve(e.islands().size());
    for (const Island &isl : e.islands()) {
        const auto &cells = isl.cells;
        std::vector<GridCoord> sorted = cells;
        std::sort(sorted.begin(), sorted.end());
        auto local = [&](GridCoord c) {
            return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
        };

        std::vector<std::vector<std::size_t>> adj(sorted.size());
        for (const CellPair &ce : isl.chain_edges) {
            std::size_t a = local(ce.first), b = local(ce.second);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<std::size_t> degree(sorted.size());
        for (std::size_t k = 0; k < sorted.size(); ++k) degree[k] = adj[k].size();

        auto removable = [&](std::size_t k) {
            return degree[k] <= 1 && !std::binary_search(anchored.begin(), anchored.end(), sorted[k]);
        };

        std::vector<bool> removed(sorted.size(), false);
        std::size_t alive = sorted.size();
        std::deque<std::size_t> queue;
        for (GridCoord c : cells)
            if (removable(local(c))) queue.push_back(local(c));
        while (!queue.empty() && alive > 1) {
            std::size_t k = queue.front();
            queue.pop_front();
            if (removed[k] || !removable(k)) continue;
            removed[k] = true;
            --alive;
            for (std::size_t nb : adj[k]) {
                if (removed[nb]) continue;
                --degree[nb];
                if (removable(nb)) queue.push_back(nb);
            }
        }

        Island kept{isl.label, {}, {}};
        for (GridCoord c : cells)
            if (!removed[local(c)]) kept.cells.push_back(c);
        for (const CellPair &ce : isl.chain_edges)
            if (!removed[local(ce.first)] && !removed[local(ce.second)]) kept.chain_edges.push_back(ce);
        out.push_back(std::move(kept));
    }
    return Embedding(e.dims(), std::move(out), e.bridges(), static_cast<int>(e.islands().size()));
}

}  // namespace braidembed
