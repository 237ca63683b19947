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

// Test-only reference computations.  None of these call into the library's
// braiding or validation code paths.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// 1-based m x n table, table[i][j] = ordinal occupying row i, column j.
using Table = std::vector<std::vector<int>>;

// Row-by-row simulation of the braid: every island keeps a position and a
// heading; a step past a wall pins it to the wall and flips the heading.
inline Table braid_rows(int n) {
    const int m = n - 1;
    Table t(m + 1, std::vector<int>(n + 1, 0));
    std::vector<int> col(n + 1), heading(n + 1);
    for (int k = 1; k <= n; ++k) {
        col[k] = k;
        heading[k] = (k % 2) ? +1 : -1;
    }
    for (int i = 1; i <= m; ++i) {
        for (int k = 1; k <= n; ++k) t[i][col[k]] = k;
        for (int k = 1; k <= n; ++k) {
            int next = col[k] + heading[k];
            if (next > n) {
                next = n;
                heading[k] = -1;
            } else if (next < 1) {
                next = 1;
                heading[k] = +1;
            }
            col[k] = next;
        }
    }
    return t;
}

// Column of ordinal k in each row 1..n-1 (index 0 unused).
inline std::vector<int> trajectory(int n, int k) {
    Table t = braid_rows(n);
    std::vector<int> out(n, 0);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            if (t[i][j] == k) out[i] = j;
    return out;
}

struct ScanBridge {
    int row, col;  // left cell
    int a, b;      // ordinals left, right
};

// Brute-force bridge scan with a consumed-pair set; `is_edge` decides which
// ordinal pairs are edges.
template <class IsEdge>
std::vector<ScanBridge> scan_bridges(const Table &t, int n, IsEdge &&is_edge) {
    std::set<std::pair<int, int>> consumed;
    std::vector<ScanBridge> out;
    for (int i = 1; i < static_cast<int>(t.size()); ++i)
        for (int j = 1; j < n; ++j) {
            int a = t[i][j], b = t[i][j + 1];
            auto key = std::minmax(a, b);
            if (!is_edge(a, b) || consumed.count(key)) continue;
            consumed.insert(key);
            out.push_back({i, j, a, b});
        }
    return out;
}

// Number of connected components of `cells` under `edges`, by BFS.
inline int components(const std::vector<std::pair<int, int>> &cells,
                      const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> &edges) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
    for (auto c : cells) adj[c];
    for (auto [a, b] : edges) {
        if (!adj.count(a) || !adj.count(b)) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<std::pair<int, int>> seen;
    int comps = 0;
    for (auto &[start, _] : adj) {
        if (seen.count(start)) continue;
        ++comps;
        std::queue<std::pair<int, int>> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            auto c = q.front();
            q.pop();
            for (auto nb : adj[c])
                if (seen.insert(nb).second) q.push(nb);
        }
    }
    return comps;
}

// Leaf trimming by exhaustive rescans: repeatedly drop any cell with at most
// one incident edge that is not anchored, keeping at least one cell.
inline std::set<std::pair<int, int>> trim_leaves(std::set<std::pair<int, int>> cells,
                                                 const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> &edges,
                                                 const std::set<std::pair<int, int>> &anchored) {
    bool changed = true;
    while (changed && cells.size() > 1) {
        changed = false;
        for (auto c : cells) {
            int deg = 0;
            for (auto [a, b] : edges)
                if ((a == c && cells.count(b)) || (b == c && cells.count(a))) ++deg;
            if (deg <= 1 && !anchored.count(c)) {
                cells.erase(c);
                changed = true;
                break;
            }
        }
    }
    return cells;
}

}  // namespace oracle
