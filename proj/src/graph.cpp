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

#include "chroma/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace chroma {

namespace {

std::uint64_t pack_pair(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

}  // namespace

Graph build_graph(int n, std::span<const std::pair<VertexId, VertexId>> edge_list) {
    if (n < 0) {
        throw GraphError(GraphDefect::vertex_out_of_range, -1, "negative vertex count");
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    g.adjacency_.assign(static_cast<size_t>(n), {});

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_list.size() * 2);

    for (size_t i = 0; i < edge_list.size(); ++i) {
        auto [a, b] = edge_list[i];
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError(GraphDefect::vertex_out_of_range, static_cast<long long>(i),
                             "edge " + std::to_string(i) + ": vertex id out of range [0, " +
                                 std::to_string(n) + ")");
        }
        if (a == b) {
            throw GraphError(GraphDefect::self_loop, static_cast<long long>(i),
                             "edge " + std::to_string(i) + ": self-loop at vertex " +
                                 std::to_string(a));
        }
        VertexId u = std::min(a, b);
        VertexId v = std::max(a, b);
        if (!seen.insert(pack_pair(u, v)).second) {
            throw GraphError(GraphDefect::duplicate_edge, static_cast<long long>(i),
                             "edge " + std::to_string(i) + ": duplicate pair (" +
                                 std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.adjacency_[static_cast<size_t>(u)].push_back({id, v});
        g.adjacency_[static_cast<size_t>(v)].push_back({id, u});
    }
    return g;
}

Subgraph::Subgraph(const Graph& parent, std::vector<EdgeId> edge_ids, int level)
    : parent_(&parent), edge_ids_(std::move(edge_ids)), level_(level) {}

Subgraph induce_subgraph(const Graph& g, std::vector<EdgeId> edge_ids, int level) {
    std::sort(edge_ids.begin(), edge_ids.end());
    for (size_t i = 0; i < edge_ids.size(); ++i) {
        EdgeId e = edge_ids[i];
        if (e < 0 || e >= g.num_edges()) {
            throw GraphError(GraphDefect::bad_edge_id, e,
                             "invalid edge id " + std::to_string(e));
        }
        if (i > 0 && edge_ids[i - 1] == e) {
            throw GraphError(GraphDefect::bad_edge_id, e,
                             "duplicate edge id " + std::to_string(e));
        }
    }
    return Subgraph(g, std::move(edge_ids), level);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<int> deg = subgraph_degrees(g, edge_ids);
    int best = 0;
    for (int d : deg) best = std::max(best, d);
    return best;
}

int max_degree(const Subgraph& s) { return max_degree(s.parent(), s.edge_ids()); }

std::vector<int> subgraph_degrees(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
    for (EdgeId e : edge_ids) {
        Edge ed = g.edge(e);
        ++deg[static_cast<size_t>(ed.u)];
        ++deg[static_cast<size_t>(ed.v)];
    }
    return deg;
}

Orientation::Orientation(const Graph& g, std::vector<std::uint8_t> forward)
    : graph_(&g), forward_(std::move(forward)) {
    if (forward_.size() != static_cast<size_t>(g.num_edges())) {
        throw GraphError(GraphDefect::bad_edge_id,
                         static_cast<long long>(forward_.size()),
                         "orientation flag count does not match edge count");
    }
    out_.assign(static_cast<size_t>(g.num_vertices()), {});
    in_.assign(static_cast<size_t>(g.num_vertices()), {});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out_[static_cast<size_t>(tail(e))].push_back(e);
        in_[static_cast<size_t>(head(e))].push_back(e);
    }
}

namespace detail {

std::vector<EdgeId> all_edge_ids(const Graph& g) {
    std::vector<EdgeId> ids(static_cast<size_t>(g.num_edges()));
    for (EdgeId e = 0; e < g.num_edges(); ++e) ids[static_cast<size_t>(e)] = e;
    return ids;
}

}  // namespace detail

}  // namespace chroma
