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

#include "chroma/color.hpp"

#include <bit>
#include <stdexcept>

#include "chroma/ad_split.hpp"
#include "chroma/degree_split.hpp"
#include "chroma/orient.hpp"

namespace chroma {

namespace {

int floor_log2(int x) {
    return x >= 2 ? std::bit_width(static_cast<unsigned>(x)) - 1 : 0;
}

int validate_and_clamp_h(int h, int scale) {
    if (h < 0) throw std::invalid_argument("h out of range");
    return std::min(h, floor_log2(scale));
}

struct Frame {
    int node;
    int stage;  // 0 enter, 1 after side 1, 2 after side 2
    int offset; // palette offset of this node's color range
};

// The recursion is realized with an explicit frame stack. Side 1 is fully
// colored before side 2 so palettes and the trace are schedule-independent.
// Empty children become palette-0 leaves without reaching the base case.
ColorRun run_recursion(const Graph& g, std::vector<EdgeId> root_edges, int h,
                       const Orientation* mu, Mode mode) {
    ColorRun run;
    run.h = h;
    run.trace.mode = mode;
    if (mu != nullptr)
        run.trace.forward.assign(mu->forward_flags().begin(), mu->forward_flags().end());
    run.coloring.color.assign(static_cast<size_t>(g.num_edges()), 0);

    auto& nodes = run.trace.nodes;

    auto make_node = [&](int level, int parent, std::vector<EdgeId> edges) -> int {
        TraceNode tn;
        tn.level = level;
        tn.parent = parent;
        tn.max_degree = max_degree(g, edges);
        if (mu != nullptr) {
            std::vector<int> in(static_cast<size_t>(g.num_vertices()), 0);
            std::vector<int> out(static_cast<size_t>(g.num_vertices()), 0);
            for (EdgeId e : edges) {
                ++out[static_cast<size_t>(mu->tail(e))];
                ++in[static_cast<size_t>(mu->head(e))];
            }
            tn.max_indeg = 0;
            tn.max_outdeg = 0;
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                tn.max_indeg = std::max(tn.max_indeg, in[static_cast<size_t>(v)]);
                tn.max_outdeg = std::max(tn.max_outdeg, out[static_cast<size_t>(v)]);
            }
        }
        tn.edge_ids = std::move(edges);
        nodes.push_back(std::move(tn));
        return static_cast<int>(nodes.size()) - 1;
    };

    int root = make_node(0, -1, std::move(root_edges));
    std::vector<Frame> stack;
    stack.push_back({root, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        if (f.stage == 0) {
            if (nodes[static_cast<size_t>(f.node)].edge_ids.empty()) {
                nodes[static_cast<size_t>(f.node)].palette = 0;
                stack.pop_back();
                continue;
            }
            if (nodes[static_cast<size_t>(f.node)].level == h) {
                nodes[static_cast<size_t>(f.node)].palette = detail::vizing_color_into(
                    g, nodes[static_cast<size_t>(f.node)].edge_ids, run.coloring.color, f.offset);
                stack.pop_back();
                continue;
            }
            std::vector<EdgeId> side1, side2;
            if (mu == nullptr) {
                EdgePartition part = degree_split(g, nodes[static_cast<size_t>(f.node)].edge_ids);
                side1 = std::move(part.side1);
                side2 = std::move(part.side2);
            } else {
                OrientedPartition part =
                    oriented_degree_split(g, nodes[static_cast<size_t>(f.node)].edge_ids, *mu);
                side1 = std::move(part.side1);
                side2 = std::move(part.side2);
            }
            int level = nodes[static_cast<size_t>(f.node)].level;
            int c1 = make_node(level + 1, f.node, std::move(side1));
            int c2 = make_node(level + 1, f.node, std::move(side2));
            nodes[static_cast<size_t>(f.node)].child1 = c1;
            nodes[static_cast<size_t>(f.node)].child2 = c2;
            stack.back().stage = 1;
            stack.push_back({c1, 0, f.offset});
        } else if (f.stage == 1) {
            int c1 = nodes[static_cast<size_t>(f.node)].child1;
            int c2 = nodes[static_cast<size_t>(f.node)].child2;
            stack.back().stage = 2;
            stack.push_back({c2, 0, f.offset + nodes[static_cast<size_t>(c1)].palette});
        } else {
            int c1 = nodes[static_cast<size_t>(f.node)].child1;
            int c2 = nodes[static_cast<size_t>(f.node)].child2;
            nodes[static_cast<size_t>(f.node)].palette =
                nodes[static_cast<size_t>(c1)].palette + nodes[static_cast<size_t>(c2)].palette;
            stack.pop_back();
        }
    }

    run.coloring.palette = nodes[static_cast<size_t>(root)].palette;
    return run;
}

}  // namespace

ColorRun edge_coloring(const Graph& g, int h) {
    int delta = max_degree(g);
    int eff = validate_and_clamp_h(h, delta);
    return run_recursion(g, detail::all_edge_ids(g), eff, nullptr, Mode::delta);
}

ColorRun edge_coloring(const Subgraph& s, int h) {
    int delta = max_degree(s);
    int eff = validate_and_clamp_h(h, delta);
    std::vector<EdgeId> ids(s.edge_ids().begin(), s.edge_ids().end());
    return run_recursion(s.parent(), std::move(ids), eff, nullptr, Mode::delta);
}

ColorRun oriented_edge_coloring(const Graph& g, const Orientation& mu, int h) {
    if (&mu.graph() != &g)
        throw std::invalid_argument("orientation does not belong to this graph");
    int eff = validate_and_clamp_h(h, max_degree(g));
    return run_recursion(g, detail::all_edge_ids(g), eff, &mu, Mode::arboricity);
}

ColorRun oriented_edge_coloring(const Subgraph& s, const Orientation& mu, int h) {
    if (&mu.graph() != &s.parent())
        throw std::invalid_argument("orientation does not belong to this graph");
    int eff = validate_and_clamp_h(h, max_degree(s));
    std::vector<EdgeId> ids(s.edge_ids().begin(), s.edge_ids().end());
    return run_recursion(s.parent(), std::move(ids), eff, &mu, Mode::arboricity);
}

ColorRun arboricity_edge_coloring(const Graph& g, int h) {
    PeelResult peel = forests_decomposition_orientation(g);
    int alpha_hat = g.num_edges() > 0 ? peel.arboricity_estimate() : 1;
    int eff = validate_and_clamp_h(h, alpha_hat);
    return run_recursion(g, detail::all_edge_ids(g), eff, &peel.orientation, Mode::arboricity);
}

int compute_h(const Rational& epsilon, int scale) {
    if (!epsilon.positive() || !epsilon.less_than_one())
        throw std::invalid_argument("epsilon out of range (0, 1)");
    if (scale < 1) throw std::invalid_argument("scale must be positive");
    long long x = epsilon.num * static_cast<long long>(scale);
    long long y = 3 * epsilon.den;
    if (x < y) return 0;
    return std::bit_width(static_cast<unsigned long long>(x / y)) - 1;
}

EpsilonRun color_with_epsilon(const Graph& g, const Rational& epsilon, Mode mode) {
    if (g.num_edges() == 0) throw std::invalid_argument("graph has no edges");
    if (!epsilon.positive() || !epsilon.less_than_one())
        throw std::invalid_argument("epsilon out of range (0, 1)");

    EpsilonRun out;
    out.params.epsilon = epsilon;
    out.params.mode = mode;
    if (mode == Mode::delta) {
        int delta = max_degree(g);
        out.params.scale = delta;
        int h = std::min(compute_h(epsilon, delta), floor_log2(delta));
        ColorRun run = edge_coloring(g, h);
        out.params.h = run.h;
        out.coloring = std::move(run.coloring);
        out.trace = std::move(run.trace);
    } else {
        PeelResult peel = forests_decomposition_orientation(g);
        int alpha_hat = peel.arboricity_estimate();
        out.params.scale = alpha_hat;
        out.params.alpha_hat = alpha_hat;
        int h = std::min(compute_h(epsilon, alpha_hat), floor_log2(alpha_hat));
        ColorRun run = oriented_edge_coloring(g, peel.orientation, h);
        out.params.h = run.h;
        out.coloring = std::move(run.coloring);
        out.trace = std::move(run.trace);
    }
    return out;
}

}  // namespace chroma
