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

#ifndef CHROMA_COLOR_HPP
#define CHROMA_COLOR_HPP

#include <cstdint>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/rational.hpp"
#include "chroma/vizing.hpp"

namespace chroma {

enum class Mode { delta, arboricity };

/// One recursion node. Edge ids, not just summary stats, are recorded so
/// checkers can recompute every per-level quantity from scratch.
struct TraceNode {
    int level = 0;
    int parent = -1;
    int child1 = -1;
    int child2 = -1;
    std::vector<EdgeId> edge_ids;  // ascending
    int max_degree = 0;
    int max_indeg = -1;   // oriented runs only
    int max_outdeg = -1;  // oriented runs only
    int palette = 0;      // declared palette of this node's coloring

    int num_edges() const { return static_cast<int>(edge_ids.size()); }
};

struct RecursionTrace {
    Mode mode = Mode::delta;
    std::vector<TraceNode> nodes;  // [0] is the root; children in DFS order, side 1 first
    /// Root orientation flags for oriented runs; empty for plain runs.
    std::vector<std::uint8_t> forward;
};

struct ColorRun {
    Coloring coloring;
    RecursionTrace trace;
    int h = 0;  // effective recursion depth after clamping
};

/// Splits with degree_split down to depth h, colors the leaves with
/// vizing_color, and merges child palettes disjointly (side 2 offset by
/// side 1's declared palette). Proper with palette <= max_degree + 3*2^h;
/// exactly max_degree+1 when h = 0. h < 0 throws; h is clamped to
/// floor(log2(max_degree)) (0 when max_degree <= 1).
ColorRun edge_coloring(const Graph& g, int h);
ColorRun edge_coloring(const Subgraph& s, int h);

/// Same recursion with oriented_degree_split; mu must orient g's edges and
/// is threaded down by restriction, never recomputed.
ColorRun oriented_edge_coloring(const Graph& g, const Orientation& mu, int h);
ColorRun oriented_edge_coloring(const Subgraph& s, const Orientation& mu, int h);

/// Computes a forests-decomposition orientation, then runs the oriented
/// recursion. h is clamped to floor(log2(arboricity estimate)).
ColorRun arboricity_edge_coloring(const Graph& g, int h);

/// Recursion depth for a target epsilon: max(floor(log2(eps*scale/3)), 0),
/// evaluated exactly. Throws unless 0 < eps < 1.
int compute_h(const Rational& epsilon, int scale);

struct TradeoffParams {
    Rational epsilon;
    int h = 0;  // effective, after clamping
    Mode mode = Mode::delta;
    int scale = 0;      // max_degree (delta) or arboricity estimate
    int alpha_hat = -1; // arboricity mode only
};

struct EpsilonRun {
    Coloring coloring;
    RecursionTrace trace;
    TradeoffParams params;
};

/// delta mode: palette <= ceil((1+eps) * max_degree). arboricity mode:
/// palette <= max_degree + ceil(eps * alpha_hat). Epsilons below 1/scale
/// degrade gracefully to h = 0 (palette max_degree + 1). Requires a
/// nonempty graph and eps in (0,1).
EpsilonRun color_with_epsilon(const Graph& g, const Rational& epsilon, Mode mode);

}  // namespace chroma

#endif  // CHROMA_COLOR_HPP
