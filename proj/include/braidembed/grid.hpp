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

#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"

// Geometry of the extended grid EM[m,n]: an m x n lattice whose points are
// joined to their horizontal, vertical and diagonal neighbours (a king graph).
// All coordinates are 1-based.

namespace braidembed {

struct GridDims {
    int rows = 1;
    int cols = 1;

    constexpr GridDims() = default;
    constexpr GridDims(int rows_, int cols_) : rows(rows_), cols(cols_) {
        if (rows < 1 || cols < 1) throw precondition_error("grid dimensions must be positive");
    }

    constexpr std::size_t cell_count() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
    friend constexpr bool operator==(const GridDims &, const GridDims &) = default;
};

// A lattice point.  Validity is relative to a GridDims; a GridCoord on its own
// may hold any value so that malformed embeddings remain representable.
struct GridCoord {
    int row = 1;
    int col = 1;

    friend constexpr bool operator==(const GridCoord &, const GridCoord &) = default;
    friend constexpr auto operator<=>(const GridCoord &, const GridCoord &) = default;
};

inline std::string to_string(GridCoord c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

constexpr bool in_bounds(GridCoord c, GridDims d) {
    return c.row >= 1 && c.row <= d.rows && c.col >= 1 && c.col <= d.cols;
}

namespace detail {
inline void require_in_bounds(GridCoord c, GridDims d) {
    if (!in_bounds(c, d))
        throw invalid_coordinate("coordinate " + to_string(c) + " outside " + std::to_string(d.rows) + "x" +
                                 std::to_string(d.cols) + " grid");
}
}  // namespace detail

constexpr bool are_adjacent(GridCoord a, GridCoord b) {
    int dr = a.row - b.row, dc = a.col - b.col;
    if (dr < 0) dr = -dr;
    if (dc < 0) dc = -dc;
    return a != b && dr <= 1 && dc <= 1;
}

// In-bounds king-move neighbours of c, in row-major order.
inline std::vector<GridCoord> em_neighbors(GridCoord c, GridDims d) {
    detail::require_in_bounds(c, d);
    std::vector<GridCoord> out;
    out.reserve(8);
    for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            GridCoord nb{c.row + dr, c.col + dc};
            if (in_bounds(nb, d)) out.push_back(nb);
        }
    return out;
}

// Row-major linear index in [1, rows*cols].
inline std::size_t to_index(GridCoord c, GridDims d) {
    detail::require_in_bounds(c, d);
    return static_cast<std::size_t>(c.row - 1) * static_cast<std::size_t>(d.cols) + static_cast<std::size_t>(c.col);
}

inline GridCoord from_index(std::size_t i, GridDims d) {
    if (i < 1 || i > d.cell_count())
        throw invalid_coordinate("index " + std::to_string(i) + " outside [1, " + std::to_string(d.cell_count()) + "]");
    std::size_t z = i - 1;
    return GridCoord{static_cast<int>(z / d.cols) + 1, static_cast<int>(z % d.cols) + 1};
}

}  // namespace braidembed
