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

#include <set>

#include "chroma/verify.hpp"
#include "chroma/vizing.hpp"
#include "test_util.hpp"

using namespace chroma;
using test::make_graph;

namespace {

int colors_used(const Coloring& c) {
    std::set<int> used;
    for (int col : c.color)
        if (col != 0) used.insert(col);
    return static_cast<int>(used.size());
}

}  // namespace

TEST_CASE("C5 genuinely needs three colors") {
    Graph c5 = generate({Family::cycle, 5, 0, 0}).graph;

    // Oracle: no proper 2-coloring of C5 exists.
    for (unsigned mask = 0; mask < 32; ++mask) {
        Coloring attempt;
        attempt.palette = 2;
        for (int e = 0; e < 5; ++e) attempt.color.push_back((mask >> e & 1) ? 2 : 1);
        CHECK(check_proper(c5, attempt).has_value());
    }

    Coloring c = vizing_color(c5);
    CHECK(c.palette == 3);
    CHECK_FALSE(check_proper(c5, c).has_value());
    CHECK(colors_used(c) == 3);
}

TEST_CASE("a perfect matching needs one color") {
    Graph m = make_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    Coloring c = vizing_color(m);
    CHECK(c.palette == 2);
    CHECK(colors_used(c) == 1);
    CHECK_FALSE(check_proper(m, c).has_value());
}

TEST_CASE("K4 colors within four") {
    Graph k4 = generate({Family::complete, 4, 0, 0}).graph;
    Coloring c = vizing_color(k4);
    CHECK(c.palette == 4);
    CHECK_FALSE(check_proper(k4, c).has_value());
    CHECK_FALSE(check_palette(c, 4).has_value());
}

TEST_CASE("exhaustive: all connected graphs on up to five vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : test::connected_graphs(n)) {
            Coloring c = vizing_color(g);
            CHECK(c.palette == max_degree(g) + 1);
            if (g.num_edges() > 0) CHECK_FALSE(check_proper(g, c).has_value());
            CHECK_FALSE(check_palette(c, max_degree(g) + 1).has_value());
        }
    }
}

TEST_CASE("coloring a subgraph view") {
    Graph g = test::random_gnm(20, 60, 123);
    std::vector<EdgeId> subset;
    for (EdgeId e = 0; e < g.num_edges(); e += 2) subset.push_back(e);
    Coloring c = vizing_color(g, subset);
    CHECK(c.palette == max_degree(g, subset) + 1);
    CHECK_FALSE(check_proper(g, subset, c).has_value());
    for (EdgeId e = 1; e < g.num_edges(); e += 2) CHECK(c.color_of(e) == 0);
}

TEST_CASE("free_color picks the smallest missing color") {
    Graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    Coloring c;
    c.palette = 4;
    c.color = {1, 2, 0};
    CHECK(free_color(g, c, 0) == 3);

    Coloring empty;
    empty.palette = 4;
    empty.color = {0, 0, 0};
    CHECK(free_color(g, empty, 0) == 1);

    Coloring shifted;
    shifted.palette = 4;
    shifted.color = {2, 3, 0};
    CHECK(free_color(g, shifted, 0) == 1);

    // Isolated vertex: nothing used.
    Graph with_isolated = make_graph(3, {{0, 1}});
    Coloring one;
    one.palette = 2;
    one.color = {1};
    CHECK(free_color(with_isolated, one, 2) == 1);
}

TEST_CASE("invert_cd_path on hand-built paths") {
    // No incident a or b: untouched.
    Graph g1 = make_graph(3, {{0, 1}, {1, 2}});
    Coloring c1;
    c1.palette = 4;
    c1.color = {3, 3};
    invert_cd_path(g1, c1, 0, 1, 2);
    CHECK(c1.color == std::vector<int>{3, 3});

    // Single edge colored a becomes b.
    Coloring c2;
    c2.palette = 4;
    c2.color = {1, 3};
    invert_cd_path(g1, c2, 0, 1, 2);
    CHECK(c2.color == std::vector<int>{2, 3});

    // Path of colors a,b,a from v becomes b,a,b; other colors untouched.
    Graph p4 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Coloring c3;
    c3.palette = 4;
    c3.color = {1, 2, 1, 3};
    invert_cd_path(p4, c3, 0, 1, 2);
    CHECK(c3.color == std::vector<int>{2, 1, 2, 3});
    CHECK_FALSE(check_proper(p4, c3).has_value());
}

TEST_CASE("invert_cd_path is an involution and preserves properness") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = test::random_gnm(12, 24, seed + 60);
        Coloring c = vizing_color(g);
        SplitMix64 rng(seed);
        VertexId v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(g.num_vertices())));
        int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.palette)));
        int b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.palette)));
        if (a == b) continue;
        Coloring flipped = c;
        invert_cd_path(g, flipped, v, a, b);
        if (g.num_edges() > 0) CHECK_FALSE(check_proper(g, flipped).has_value());
        invert_cd_path(g, flipped, v, a, b);
        CHECK(flipped.color == c.color);
    }
}

TEST_CASE("vizing runs are deterministic") {
    Graph g = test::random_gnm(30, 90, 8);
    Coloring a = vizing_color(g);
    Coloring b = vizing_color(g);
    CHECK(a.color == b.color);
    CHECK(a.palette == b.palette);
}

TEST_CASE("moderate random graphs stay within max degree plus one") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = test::random_gnm(60, 240, seed + 10);
        Coloring c = vizing_color(g);
        CHECK(c.palette == max_degree(g) + 1);
        CHECK_FALSE(check_proper(g, c).has_value());
        CHECK_FALSE(check_palette(c, max_degree(g) + 1).has_value());
    }
}
