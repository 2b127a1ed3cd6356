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

#include "chroma/ad_split.hpp"
#include "chroma/orient.hpp"
#include "chroma/verify.hpp"
#include "test_util.hpp"

using namespace chroma;
using test::make_graph;

namespace {

Orientation orient_arcs(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()), 2);
    for (auto [from, to] : arcs) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Edge ed = g.edge(e);
            if (ed.u == std::min(from, to) && ed.v == std::max(from, to))
                forward[static_cast<size_t>(e)] = (ed.u == from) ? 1 : 0;
        }
    }
    for (auto f : forward) REQUIRE(f != 2);
    return Orientation(g, forward);
}

struct OrientedSums {
    std::vector<int> in, out;
};

OrientedSums oriented_label_sums(const Graph& g, const Orientation& mu,
                                 const OrientedPartition& p) {
    OrientedSums s;
    s.in.assign(static_cast<size_t>(g.num_vertices()), 0);
    s.out.assign(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < p.edge_ids.size(); ++i) {
        EdgeId e = p.edge_ids[i];
        s.in[static_cast<size_t>(mu.head(e))] += p.labels[i];
        s.out[static_cast<size_t>(mu.tail(e))] += p.labels[i];
    }
    return s;
}

Orientation random_orientation(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()));
    for (auto& f : forward) f = static_cast<std::uint8_t>(rng.below(2));
    return Orientation(g, forward);
}

}  // namespace

TEST_CASE("odd triangle collapses to a single AD cycle") {
    // Arcs: v0->v1, v2->v1, v2->v0.
    Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Orientation mu = orient_arcs(g, {{0, 1}, {2, 1}, {2, 0}});
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    REQUIRE(dec.paths.size() == 1);
    const ADPath& p = dec.paths[0];
    CHECK(p.edges.size() == 3);
    CHECK(p.is_cycle);
    CHECK(p.vertices.front() == 0);
    CHECK(p.vertices.back() == 0);
    CHECK(p.first_role == EndpointRole::outgoing);
    CHECK(p.last_role == EndpointRole::incoming);
    CHECK_FALSE(check_ad_decomposition(g, detail::all_edge_ids(g), mu, dec).has_value());
}

TEST_CASE("directed 2-path cannot merge into one AD path") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}});
    Orientation mu = orient_arcs(g, {{0, 1}, {1, 2}});
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    REQUIRE(dec.paths.size() == 2);
    for (const ADPath& p : dec.paths) CHECK(p.edges.size() == 1);
    // Vertex 1 is the incoming endpoint of one and the outgoing endpoint of
    // the other.
    int incoming = 0, outgoing = 0;
    for (const ADPath& p : dec.paths) {
        if (p.vertices.front() == 1 && p.first_role == EndpointRole::incoming) ++incoming;
        if (p.vertices.back() == 1 && p.last_role == EndpointRole::incoming) ++incoming;
        if (p.vertices.front() == 1 && p.first_role == EndpointRole::outgoing) ++outgoing;
        if (p.vertices.back() == 1 && p.last_role == EndpointRole::outgoing) ++outgoing;
    }
    CHECK(incoming == 1);
    CHECK(outgoing == 1);
    CHECK_FALSE(check_ad_decomposition(g, detail::all_edge_ids(g), mu, dec).has_value());
}

TEST_CASE("single edge forms a single path") {
    Graph g = make_graph(2, {{0, 1}});
    Orientation mu = orient_arcs(g, {{0, 1}});
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    REQUIRE(dec.paths.size() == 1);
    CHECK(dec.paths[0].edges.size() == 1);
    CHECK_FALSE(dec.paths[0].is_cycle);

    OrientedPartition part = oriented_degree_split(g, mu);
    auto sums = oriented_label_sums(g, mu, part);
    CHECK(std::abs(sums.out[0]) == 1);
    CHECK(std::abs(sums.in[1]) == 1);
}

TEST_CASE("alternating C4 balances perfectly and honors the even-cycle rule") {
    // Arcs: 0->1, 2->1, 2->3, 0->3.
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Orientation mu = orient_arcs(g, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    REQUIRE(dec.paths.size() == 1);
    CHECK(dec.paths[0].is_cycle);
    CHECK(dec.paths[0].edges.size() == 4);

    OrientedPartition part = oriented_degree_split(g, mu);
    auto sums = oriented_label_sums(g, mu, part);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(sums.in[static_cast<size_t>(v)] == 0);
        CHECK(sums.out[static_cast<size_t>(v)] == 0);
    }

    // Even cycle: first and last edge of the path get opposite labels.
    const ADPath& p = dec.paths[0];
    auto label_of = [&](EdgeId e) {
        for (size_t i = 0; i < part.edge_ids.size(); ++i)
            if (part.edge_ids[i] == e) return static_cast<int>(part.labels[i]);
        FAIL("edge not labeled");
        return 0;
    };
    CHECK(label_of(p.edges.front()) == -label_of(p.edges.back()));
}

TEST_CASE("out-star splits its center evenly") {
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Orientation mu = orient_arcs(g, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    REQUIRE(dec.paths.size() == 2);
    for (const ADPath& p : dec.paths) {
        CHECK(p.edges.size() == 2);
        CHECK(p.vertices[1] == 0);  // center is the inner vertex
        CHECK(p.first_role == EndpointRole::incoming);
        CHECK(p.last_role == EndpointRole::incoming);
    }
    OrientedPartition part = oriented_degree_split(g, mu);
    CHECK(part.out_side1[0] == 2);
    CHECK(part.out_side2[0] == 2);
    auto sums = oriented_label_sums(g, mu, part);
    CHECK(sums.out[0] == 0);
    for (VertexId leaf = 1; leaf < 5; ++leaf)
        CHECK(std::abs(sums.in[static_cast<size_t>(leaf)]) == 1);
}

TEST_CASE("decomposition is a partition with a faithful edge map") {
    Graph g = test::random_gnm(40, 120, 77);
    Orientation mu = random_orientation(g, 5);
    ADDecomposition dec = ad_paths_decomposition(g, mu);
    size_t total = 0;
    for (size_t pi = 0; pi < dec.paths.size(); ++pi) {
        total += dec.paths[pi].edges.size();
        for (size_t i = 0; i < dec.paths[pi].edges.size(); ++i)
            CHECK(dec.edge_to_path[static_cast<size_t>(dec.paths[pi].edges[i])] ==
                  std::make_pair(static_cast<int>(pi), static_cast<int>(i)));
    }
    CHECK(total == static_cast<size_t>(g.num_edges()));
}

TEST_CASE("property: full contract on random graphs and orientations") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 6 + static_cast<int>(seed % 20);
        long long cap = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(cap, 2 + (seed * 7) % (3 * n));
        Graph g = test::random_gnm(n, m, seed + 4000);

        Orientation mu = seed % 2 == 0 ? random_orientation(g, seed)
                                       : forests_decomposition_orientation(g).orientation;
        ADDecomposition dec = ad_paths_decomposition(g, mu);
        auto bad = check_ad_decomposition(g, detail::all_edge_ids(g), mu, dec);
        if (bad) {
            CAPTURE(bad->check);
            CAPTURE(bad->detail);
            FAIL("decomposition violates its contract");
        }

        OrientedPartition part = oriented_degree_split(g, mu);
        auto sums = oriented_label_sums(g, mu, part);
        for (VertexId v = 0; v < n; ++v) {
            CHECK(std::abs(sums.in[static_cast<size_t>(v)]) <= 1);
            CHECK(std::abs(sums.out[static_cast<size_t>(v)]) <= 1);
        }
    }
}

TEST_CASE("splitting a subgraph view leaves other edges untouched") {
    Graph g = test::random_gnm(20, 50, 3);
    Orientation mu = random_orientation(g, 9);
    std::vector<EdgeId> subset;
    for (EdgeId e = 0; e < g.num_edges(); e += 3) subset.push_back(e);
    OrientedPartition part = oriented_degree_split(g, subset, mu);
    CHECK(part.edge_ids == subset);
    CHECK(part.side1.size() + part.side2.size() == subset.size());
    auto bad = check_ad_decomposition(g, subset, mu, ad_paths_decomposition(g, subset, mu));
    CHECK_FALSE(bad.has_value());
}
