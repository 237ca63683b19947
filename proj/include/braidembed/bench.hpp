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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "braid.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace braidembed {

struct BenchRow {
    int n = 0;
    std::size_t cells = 0;
    std::size_t bridges = 0;
    double millis = 0.0;
};

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw precondition_error("slope needs at least two points");
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0 || ys[i] <= 0) throw precondition_error("log-log slope needs positive values");
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = k * sxx - sx * sx;
    if (denom == 0) throw precondition_error("slope needs two distinct x values");
    return (k * sxy - sx * sy) / denom;
}

inline double time_slope(std::span<const BenchRow> rows) {
    std::vector<double> xs, ys;
    for (const BenchRow &r : rows) {
        xs.push_back(r.n);
        ys.push_back(r.millis);
    }
    return loglog_slope(xs, ys);
}

// Embeds K_n for each size and records the best wall time over `repeats`
// runs.  Graph construction is not timed.  Sizes must be strictly increasing
// and at least 2.
//
// On glibc this switches off heap trimming and mmap-backed allocations for
// the rest of the process.  Otherwise large sizes hand their pages back to
// the kernel after every repetition and pay fresh page faults each time,
// while small sizes always run on a warm heap.
inline std::vector<BenchRow> run_bench(std::span<const int> sizes, int repeats = 3) {
    if (repeats < 1) throw precondition_error("repeats must be positive");
#if defined(__GLIBC__)
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw precondition_error("bench sizes must be at least 2");
        if (i && sizes[i] <= sizes[i - 1]) throw precondition_error("bench sizes must be strictly increasing");
    }

    std::vector<BenchRow> rows;
    for (int n : sizes) {
        const SourceGraph g = complete_graph(n);
        BenchRow row{n, 0, 0, std::numeric_limits<double>::infinity()};
        for (int rep = 0; rep < repeats; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            Embedding e = embed(g);
            auto t1 = std::chrono::steady_clock::now();
            row.millis = std::min(row.millis, std::chrono::duration<double, std::milli>(t1 - t0).count());
            const auto s = stats(e);
            row.cells = s.total_cells;
            row.bridges = s.bridges;
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string bench_csv(std::span<const BenchRow> rows) {
    std::string out = "n,cells,bridges,millis\n";
    char buf[128];
    for (const BenchRow &r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%zu,%zu,%.3f\n", r.n, r.cells, r.bridges, r.millis);
        out += buf;
    }
    return out;
}

}  // namespace braidembed
