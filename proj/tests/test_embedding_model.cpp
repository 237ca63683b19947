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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "braidembed/braid.hpp"
#include "braidembed/embedding.hpp"
#include "braidembed/validate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace braidembed;

TEST_CASE("source graph invariants", "[model]") {
    CHECK_THROWS_AS(SourceGraph({}, {}), precondition_error);
    CHECK_THROWS_AS(SourceGraph({"a", "a"}, {}), precondition_error);
    CHECK_THROWS_AS(SourceGraph({"a", "b"}, {Edge(1, 1)}), precondition_error);
    CHECK_THROWS_AS(SourceGraph({"a", "b"}, {Edge(1, 2), Edge(2, 1)}), precondition_error);
    CHECK_THROWS_AS(SourceGraph({"a", "b"}, {Edge(1, 3)}), precondition_error);
    CHECK_THROWS_AS(SourceGraph({"a", "b"}, {}, {1, 1}), precondition_error);

    SourceGraph g({"x", "y", "z"}, {Edge(3, 1)}, {2, 3, 1});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.vertex_at(1) == 3);
    CHECK(g.ordinal(1) == 2);
    CHECK(g.index_of("y") == 2);
    CHECK_FALSE(g.index_of("w"));
}

TEST_CASE("validate accepts the smallest valid embedding", "[model][validate]") {
    auto report = validate(complete_graph(2), fixtures::k2_embedding());
    CHECK(report.passed());
    CHECK(report.clauses_passed() == clause_count);
}

TEST_CASE("validate flags a self-pair bridge", "[model][validate]") {
    Embedding e(GridDims(1, 2), {Island{1, {{1, 1}}, {}}, Island{2, {{1, 2}}, {}}}, {Bridge{1, 2, {{1, 1}, {1, 1}}}},
                2);
    auto report = validate(complete_graph(2), e);
    CHECK_FALSE(report.passed());
    CHECK(report.has(Clause::bridge_valid));
}

TEST_CASE("deleting a chain edge of K_6 disconnects the island", "[model][validate]") {
    const SourceGraph g = complete_graph(6);
    const Embedding base = embed(g);
    auto islands = base.islands();
    auto &isl = islands[3];
    REQUIRE(isl.cells.size() > 1);
    isl.chain_edges.erase(isl.chain_edges.begin());

    std::vector<std::pair<int, int>> cells;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    for (auto c : isl.cells) cells.emplace_back(c.row, c.col);
    for (auto [a, b] : isl.chain_edges) edges.push_back({{a.row, a.col}, {b.row, b.col}});
    REQUIRE(oracle::components(cells, edges) == 2);

    auto report = validate(g, Embedding(base.dims(), islands, base.bridges(), 6));
    CHECK(report.has(Clause::island_connected));
    CHECK(report.violations.size() == 1);
}

TEST_CASE("each clause is triggered by its targeted mutation", "[model][validate]") {
    const SourceGraph g = fixtures::k6_minus_12();
    REQUIRE(validate(g, embed(g)).passed());
    for (const auto &m : fixtures::clause_mutations()) {
        INFO(m.name);
        auto report = validate(g, m.embedding);
        CHECK_FALSE(report.passed());
        CHECK(report.has(m.expected));
    }
}

TEST_CASE("validation never throws on malformed input", "[model][validate]") {
    const SourceGraph g = complete_graph(3);
    Embedding weird(GridDims(2, 2),
                    {Island{1, {{0, 0}, {9, 9}, {1, 1}, {1, 1}}, {{{0, 0}, {5, 5}}}}, Island{5, {{1, 2}}, {}}},
                    {Bridge{0, 7, {{1, 1}, {2, 2}}}, Bridge{1, 1, {{3, 3}, {3, 3}}}}, 3);
    ValidationReport report;
    CHECK_NOTHROW(report = validate(g, weird));
    CHECK(report.has(Clause::island_nonempty));
    CHECK(report.has(Clause::cells_in_bounds));
    CHECK(report.has(Clause::islands_disjoint));
    CHECK(report.has(Clause::island_connected));
    CHECK(report.has(Clause::no_spurious_bridge));
    CHECK(report.has(Clause::edge_bridged));
    CHECK(report.has(Clause::bridge_valid));
}

TEST_CASE("bridges may be listed in either orientation", "[model][validate]") {
    Embedding e(GridDims(1, 2), {Island{1, {{1, 1}}, {}}, Island{2, {{1, 2}}, {}}}, {Bridge{2, 1, {{1, 1}, {1, 2}}}},
                2);
    CHECK(validate(complete_graph(2), e).passed());
}

TEST_CASE("island_of reads the labelling", "[model]") {
    CHECK(island_of(embed(complete_graph(6)), {1, 3}) == 3);
    const auto k2 = fixtures::k2_embedding();
    CHECK(island_of(k2, {1, 1}) == 1);
    CHECK_FALSE(island_of(k2, {2, 1}));
    CHECK_FALSE(island_of(k2, {0, 1}));
}

TEST_CASE("stats count cells, islands and bridges", "[model]") {
    auto s6 = stats(embed(complete_graph(6)));
    CHECK(s6.total_cells == 30);
    CHECK(s6.island_sizes == std::vector<std::size_t>(6, 5));
    CHECK(s6.bridges == 15);
    CHECK(s6.chain_edges == 24);
    CHECK(s6.dims == GridDims(5, 6));

    auto s2 = stats(embed(complete_graph(2)));
    CHECK(s2.total_cells == 2);
    CHECK(s2.bridges == 1);

    auto s1 = stats(embed(complete_graph(1)));
    CHECK(s1.total_cells == 1);
    CHECK(s1.bridges == 0);
}

TEST_CASE("corpus embeddings are valid, disjoint and bijective", "[model][property]") {
    for (const auto &[g, e] : fixtures::valid_corpus(60)) {
        auto report = validate(g, e);
        CHECK(report.passed());

        auto s = stats(e);
        std::set<GridCoord> all;
        for (const auto &isl : e.islands()) all.insert(isl.cells.begin(), isl.cells.end());
        CHECK(all.size() == s.total_cells);
        CHECK(std::accumulate(s.island_sizes.begin(), s.island_sizes.end(), std::size_t{0}) == s.total_cells);

        CHECK(e.bridges().size() == g.edge_count());
        std::set<Edge> bridged;
        for (const auto &b : e.bridges()) bridged.insert(b.source_edge());
        CHECK(bridged.size() == e.bridges().size());

        for (const auto &isl : e.islands())
            for (GridCoord c : isl.cells) CHECK(island_of(e, c) == isl.label);
    }
}

TEST_CASE("embedding construction rejects duplicate island labels", "[model]") {
    CHECK_THROWS_AS(Embedding(GridDims(1, 2), {Island{1, {{1, 1}}, {}}, Island{1, {{1, 2}}, {}}}, {}),
                    precondition_error);
    CHECK_THROWS_AS(Embedding(GridDims(1, 2), {Island{0, {{1, 1}}, {}}}, {}), precondition_error);
}
