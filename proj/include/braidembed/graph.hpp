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
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace braidembed {

// Undirected edge between 1-based vertex indices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

// The source graph G = (V, E) together with its vertex ordering n_V.
//
// Vertices are the indices 1..n.  External string labels are kept only for
// I/O.  ordinal(v) is n_V(v); vertex_at(k) is its inverse.
class SourceGraph {
  public:
    SourceGraph() = default;

    // ordinals[v-1] = n_V(v); empty means identity.
    SourceGraph(std::vector<std::string> labels, std::vector<Edge> edges, std::vector<int> ordinals = {})
        : _labels(std::move(labels)), _edges(std::move(edges)), _ordinal(std::move(ordinals)) {
        const int n = vertex_count();
        if (n < 1) throw precondition_error("source graph needs at least one vertex");

        for (int v = 1; v <= n; ++v) {
            if (!_index.emplace(_labels[v - 1], v).second)
                throw precondition_error("duplicate vertex label '" + _labels[v - 1] + "'");
        }

        for (const Edge &e : _edges) {
            if (e.u < 1 || e.v > n) throw precondition_error("edge endpoint outside [1, n]");
            if (e.u == e.v) throw precondition_error("self-loop on vertex " + _labels[e.u - 1]);
        }
        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw precondition_error("duplicate edge");

        if (_ordinal.empty()) {
            _ordinal.resize(n);
            std::iota(_ordinal.begin(), _ordinal.end(), 1);
        }
        if (static_cast<int>(_ordinal.size()) != n) throw precondition_error("ordering length differs from vertex count");
        _vertex_at.assign(n, 0);
        for (int v = 1; v <= n; ++v) {
            int k = _ordinal[v - 1];
            if (k < 1 || k > n || _vertex_at[k - 1] != 0) throw precondition_error("ordering is not a permutation");
            _vertex_at[k - 1] = v;
        }

        _adj.resize(n);
        for (const Edge &e : _edges) {
            _adj[e.u - 1].push_back(e.v);
            _adj[e.v - 1].push_back(e.u);
        }
        for (auto &a : _adj) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return static_cast<int>(_labels.size()); }
    std::size_t edge_count() const { return _edges.size(); }
    const std::vector<std::string> &labels() const { return _labels; }
    const std::string &label(int v) const { return _labels.at(v - 1); }
    const std::vector<Edge> &edges() const { return _edges; }
    const std::vector<int> &neighbors(int v) const { return _adj.at(v - 1); }

    bool has_edge(int a, int b) const {
        if (a < 1 || b < 1 || a > vertex_count() || b > vertex_count() || a == b) return false;
        const auto &row = _adj[a - 1];
        return std::binary_search(row.begin(), row.end(), b);
    }

    int ordinal(int v) const { return _ordinal.at(v - 1); }
    int vertex_at(int k) const { return _vertex_at.at(k - 1); }
    const std::vector<int> &ordinals() const { return _ordinal; }

    std::optional<int> index_of(const std::string &label) const {
        auto it = _index.find(label);
        if (it == _index.end()) return std::nullopt;
        return it->second;
    }

    // Same vertices and edges, new ordering given as vertices in ordinal order.
    SourceGraph with_order(const std::vector<int> &sequence) const {
        const int n = vertex_count();
        if (static_cast<int>(sequence.size()) != n) throw precondition_error("ordering length differs from vertex count");
        std::vector<int> ord(n, 0);
        for (int k = 1; k <= n; ++k) {
            int v = sequence[k - 1];
            if (v < 1 || v > n || ord[v - 1] != 0) throw precondition_error("ordering is not a permutation");
            ord[v - 1] = k;
        }
        return SourceGraph(_labels, _edges, std::move(ord));
    }

  private:
    std::vector<std::string> _labels;
    std::vector<Edge> _edges;
    std::vector<int> _ordinal;
    std::vector<int> _vertex_at;
    std::vector<std::vector<int>> _adj;
    std::unordered_map<std::string, int> _index;
};

inline std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int v = 1; v <= n; ++v) out.push_back(std::to_string(v));
    return out;
}

inline SourceGraph complete_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return SourceGraph(numeric_labels(n), std::move(edges));
}

// K_{a,b} with parts {1..a} and {a+1..a+b}.
inline SourceGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("biclique parts must be nonempty");
    std::vector<Edge> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
    return SourceGraph(numeric_labels(a + b), std::move(edges));
}

// Erdos-Renyi G(n, p).
template <class URBG>
SourceGraph gnp_random_graph(int n, double p, URBG &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return SourceGraph(numeric_labels(n), std::move(edges));
}

}  // namespace braidembed
