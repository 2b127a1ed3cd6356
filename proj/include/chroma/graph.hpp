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

#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

using VertexId = int;
using EdgeId = int;

/// Undirected edge in canonical form (u < v). The index of an edge in
/// Graph::edges() is its stable id; ids survive subgraph views and
/// orientations, so labels and colors assigned deep in a recursion lift
/// back to the root graph without remapping.
struct Edge {
    VertexId u;
    VertexId v;
};

struct Incidence {
    EdgeId edge;
    VertexId other;
};

enum class GraphDefect {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    bad_edge_id,
};

class GraphError : public std::invalid_argument {
public:
    GraphError(GraphDefect defect, long long index, const std::string& what)
        : std::invalid_argument(what), defect_(defect), index_(index) {}

    GraphDefect defect() const { return defect_; }
    /// Index of the offending input item (edge-list position or edge id).
    long long index() const { return index_; }

private:
    GraphDefect defect_;
    long long index_;
};

/// Immutable simple undirected graph. Safe to read concurrently.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    Edge edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Incidence> neighbors(VertexId v) const {
        return adjacency_[static_cast<size_t>(v)];
    }
    int degree(VertexId v) const {
        return static_cast<int>(adjacency_[static_cast<size_t>(v)].size());
    }

    friend Graph build_graph(int n,
                             std::span<const std::pair<VertexId, VertexId>> edge_list);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Builds a Graph from an edge list. Pairs are normalized to u < v but keep
/// their input order as edge ids. Rejects self-loops, duplicates and
/// out-of-range endpoints, naming the offending input index.
Graph build_graph(int n, std::span<const std::pair<VertexId, VertexId>> edge_list);

/// Read-only view of a subset of a parent graph's edges. Vertex ids and edge
/// ids are the parent's; isolated vertices are simply never reached when
/// iterating the selected edges.
class Subgraph {
public:
    Subgraph(const Graph& parent, std::vector<EdgeId> edge_ids, int level);

    const Graph& parent() const { return *parent_; }
    std::span<const EdgeId> edge_ids() const { return edge_ids_; }
    int level() const { return level_; }
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }

private:
    const Graph* parent_;
    std::vector<EdgeId> edge_ids_;  // sorted ascending, duplicate-free
    int level_;
};

/// Validates the id set (throws GraphError on invalid or duplicate ids),
/// sorts it and wraps it as a view at the given recursion level.
Subgraph induce_subgraph(const Graph& g, std::vector<EdgeId> edge_ids, int level = 0);

int max_degree(const Graph& g);
int max_degree(const Graph& g, std::span<const EdgeId> edge_ids);
int max_degree(const Subgraph& s);

/// Per-vertex degree recount restricted to the given edges.
std::vector<int> subgraph_degrees(const Graph& g, std::span<const EdgeId> edge_ids);

/// Edge directions over a Graph: every edge carries a forward flag
/// (true = oriented u->v in canonical u < v storage), plus per-vertex
/// in/out incidence lists. Immutable after construction.
class Orientation {
public:
    Orientation() = default;
    Orientation(const Graph& g, std::vector<std::uint8_t> forward);

    const Graph& graph() const { return *graph_; }

    bool is_forward(EdgeId e) const { return forward_[static_cast<size_t>(e)] != 0; }
    VertexId tail(EdgeId e) const {
        Edge ed = graph_->edge(e);
        return is_forward(e) ? ed.u : ed.v;
    }
    VertexId head(EdgeId e) const {
        Edge ed = graph_->edge(e);
        return is_forward(e) ? ed.v : ed.u;
    }

    std::span<const EdgeId> out_edges(VertexId v) const { return out_[static_cast<size_t>(v)]; }
    std::span<const EdgeId> in_edges(VertexId v) const { return in_[static_cast<size_t>(v)]; }
    int outdeg(VertexId v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int indeg(VertexId v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    std::span<const std::uint8_t> forward_flags() const { return forward_; }

private:
    const Graph* graph_ = nullptr;
    std::vector<std::uint8_t> forward_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

namespace detail {
std::vector<EdgeId> all_edge_ids(const Graph& g);
}  // namespace detail

}  // namespace chroma

#endif  // CHROMA_GRAPH_HPP
