// Copyright (c) the chroma authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chroma/orient.hpp"
#include "test_util.hpp"

using namespace chroma;
using test::make_graph;

TEST_CASE("build_graph constructs K3") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);
}

TEST_CASE("build_graph rejects bad input with distinct defects") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), GraphError);
    try {
        make_graph(2, {{0, 0}});
    } catch (const GraphError& e) {
        CHECK(e.defect() == GraphDefect::self_loop);
        CHECK(e.index() == 0);
    }
    try {
        make_graph(4, {{0, 1}, {1, 0}});
    } catch (const GraphError& e) {
        CHECK(e.defect() == GraphDefect::duplicate_edge);
        CHECK(e.index() == 1);
    }
    try {
        make_graph(2, {{0, 5}});
    } catch (const GraphError& e) {
        CHECK(e.defect() == GraphDefect::vertex_out_of_range);
    }
}

TEST_CASE("edge list round-trips through build_graph") {
    std::vector<std::pair<VertexId, VertexId>> input{{0, 3}, {1, 2}, {0, 1}, {2, 3}};
    Graph g = build_graph(4, input);
    REQUIRE(g.num_edges() == 4);
    for (size_t i = 0; i < input.size(); ++i) {
        CHECK(g.edge(static_cast<EdgeId>(i)).u == input[i].first);
        CHECK(g.edge(static_cast<EdgeId>(i)).v == input[i].second);
    }
}

TEST_CASE("every edge id appears in exactly two adjacency lists") {
    Graph g = test::random_gnm(30, 60, 11);
    std::vector<int> appearances(static_cast<size_t>(g.num_edges()), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (const Incidence& inc : g.neighbors(v)) ++appearances[static_cast<size_t>(inc.edge)];
    for (int a : appearances) CHECK(a == 2);
}

TEST_CASE("induce_subgraph basics") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Subgraph s = induce_subgraph(k3, {0, 1}, 1);
    CHECK(s.num_edges() == 2);
    CHECK(s.level() == 1);
    CHECK(max_degree(s) == 2);

    Subgraph empty = induce_subgraph(k3, {}, 0);
    CHECK(empty.num_edges() == 0);
    CHECK(max_degree(empty) == 0);

    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Subgraph opposite = induce_subgraph(c4, {0, 2}, 0);
    auto deg = subgraph_degrees(c4, opposite.edge_ids());
    for (VertexId v = 0; v < 4; ++v) CHECK(deg[static_cast<size_t>(v)] == 1);

    CHECK_THROWS_AS(induce_subgraph(k3, {7}, 0), GraphError);
    CHECK_THROWS_AS(induce_subgraph(k3, {1, 1}, 0), GraphError);
}

TEST_CASE("subgraph degrees match a brute recount on small random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = test::random_gnm(12, 25, seed);
        SplitMix64 rng(seed * 41 + 1);
        std::vector<EdgeId> picked;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (rng.below(2) == 0) picked.push_back(e);
        auto deg = subgraph_degrees(g, picked);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            int count = 0;
            for (const Incidence& inc : g.neighbors(v))
                count += std::count(picked.begin(), picked.end(), inc.edge);
            CHECK(deg[static_cast<size_t>(v)] == count);
        }
    }
}

TEST_CASE("max_degree") {
    CHECK(max_degree(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
    CHECK(max_degree(make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 5);
    CHECK(max_degree(make_graph(4, {})) == 0);
}

TEST_CASE("orientation splits each degree into indeg plus outdeg") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = test::random_gnm(20, 45, seed + 100);
        SplitMix64 rng(seed);
        std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()));
        for (auto& f : forward) f = static_cast<std::uint8_t>(rng.below(2));
        Orientation mu(g, forward);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            CHECK(mu.indeg(v) + mu.outdeg(v) == g.degree(v));
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Edge ed = g.edge(e);
            auto out_t = mu.out_edges(mu.tail(e));
            auto in_h = mu.in_edges(mu.head(e));
            CHECK(std::count(out_t.begin(), out_t.end(), e) == 1);
            CHECK(std::count(in_h.begin(), in_h.end(), e) == 1);
            CHECK(((mu.tail(e) == ed.u && mu.head(e) == ed.v) ||
                   (mu.tail(e) == ed.v && mu.head(e) == ed.u)));
        }
    }
}
