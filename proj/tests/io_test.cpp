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

#include <sstream>

#include "chroma/io.hpp"
#include "chroma/rng.hpp"
#include "chroma/vizing.hpp"
#include "test_util.hpp"

using namespace chroma;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace

TEST_CASE("parse_edge_list reads K3") {
    Graph g = parse("p edge 3 3\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(max_degree(g) == 2);
}

TEST_CASE("parse_edge_list skips comments and blank lines") {
    Graph g = parse("# a comment\n\np edge 2 1\n# another\ne 0 1\n");
    CHECK(g.num_edges() == 1);
}

TEST_CASE("parse_edge_list reports line numbers") {
    try {
        parse("p edge 2 1\ne 0 5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse("p edge 2 2\ne 0 1\n"),
                         doctest::Contains("count mismatch"), ParseError);
    CHECK_THROWS_WITH_AS(parse("p edge 2 0\ne 0 1\n"),
                         doctest::Contains("count mismatch"), ParseError);
    CHECK_THROWS_AS(parse("q edge 2 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\nx 0 1\n"), ParseError);
}

TEST_CASE("edge list round trip") {
    Graph g = test::random_gnm(40, 100, 3);
    std::ostringstream out;
    write_edge_list(g, out);
    Graph back = parse(out.str());
    REQUIRE(back.num_edges() == g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        CHECK(back.edge(e).u == g.edge(e).u);
        CHECK(back.edge(e).v == g.edge(e).v);
    }
    std::ostringstream again;
    write_edge_list(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("coloring round trip on a random 100-edge coloring") {
    Graph g = test::random_gnm(40, 100, 9);
    Coloring c = vizing_color(g);
    std::ostringstream out;
    write_coloring(g, c, out);
    std::istringstream in(out.str());
    Coloring back = parse_coloring(in, g);
    CHECK(back.palette == c.palette);
    CHECK(back.color == c.color);
}

TEST_CASE("coloring header and body errors") {
    Graph k3 = test::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto parse_col = [&](const std::string& text) {
        std::istringstream in(text);
        return parse_coloring(in, k3);
    };
    CHECK_THROWS_WITH_AS(parse_col("c palette 2\n0 1 3\n1 2 1\n0 2 2\n"),
                         doctest::Contains("out of [1, 2]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_col("c palette 3\n0 9 1\n"),
                         doctest::Contains("unknown edge"), ParseError);
    CHECK_THROWS_WITH_AS(parse_col("c palette 3\n0 1 1\n1 2 2\n"),
                         doctest::Contains("missing edge"), ParseError);
    CHECK_THROWS_WITH_AS(parse_col("c palette 3\n0 1 1\n0 1 2\n1 2 3\n0 2 1\n"),
                         doctest::Contains("twice"), ParseError);
    Coloring ok = parse_col("c palette 3\n0 1 1\n1 2 2\n0 2 3\n");
    CHECK(ok.palette == 3);
}

TEST_CASE("empty graph serializes to a bare header") {
    Graph g = test::make_graph(0, {});
    Coloring c;
    c.palette = 0;
    std::ostringstream out;
    write_coloring(g, c, out);
    CHECK(out.str() == "c palette 0\n");
    std::istringstream in(out.str());
    Coloring back = parse_coloring(in, g);
    CHECK(back.palette == 0);
}

TEST_CASE("write_coloring rejects uncovered edges") {
    Graph k3 = test::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Coloring partial;
    partial.palette = 3;
    partial.color = {1, 0, 2};
    std::ostringstream out;
    CHECK_THROWS_AS(write_coloring(k3, partial, out), std::invalid_argument);
}

TEST_CASE("orientation round trip") {
    Graph g = test::random_gnm(25, 60, 5);
    SplitMix64 rng(17);
    std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()));
    for (auto& f : forward) f = static_cast<std::uint8_t>(rng.below(2));
    Orientation mu(g, forward);

    std::ostringstream out;
    write_orientation(mu, out);
    std::istringstream in(out.str());
    ParsedOrientation po = parse_orientation(in);
    REQUIRE(po.graph.num_edges() == g.num_edges());
    Orientation back(po.graph, po.forward);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        CHECK(back.tail(e) == mu.tail(e));
        CHECK(back.head(e) == mu.head(e));
    }
}
