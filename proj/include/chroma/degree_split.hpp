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

#ifndef CHROMA_DEGREE_SPLIT_HPP
#define CHROMA_DEGREE_SPLIT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Two-way edge labeling {1, -1} with cached per-vertex label counts.
/// side1/side2 and the count vectors are derived caches; labels are the
/// ground truth (checkers recount from them).
struct EdgePartition {
    std::vector<EdgeId> edge_ids;       // covered edges, ascending
    std::vector<std::int8_t> labels;    // parallel to edge_ids
    std::vector<EdgeId> side1, side2;
    std::vector<int> count_side1, count_side2;  // indexed by vertex
};

/// Splits the edge set so that every vertex sees the two labels in almost
/// equal numbers (|deg_1(v) - deg_-1(v)| <= 2) and the sides have floor(m/2)
/// and ceil(m/2) edges. Each connected component is closed up with a dummy
/// vertex attached to its odd-degree vertices, an Euler cycle of the closed
/// component is 2-colored alternately along walk order, and the dummy edges
/// are discarded. Components with an odd edge count are then flipped
/// wholesale as needed to restore the global balance; flipping never changes
/// a per-vertex discrepancy.
EdgePartition degree_split(const Graph& g);
EdgePartition degree_split(const Graph& g, std::span<const EdgeId> edge_ids);
EdgePartition degree_split(const Subgraph& s);

struct EulerWalk {
    VertexId start = -1;  // -1 when the edge set is empty
    std::vector<EdgeId> edges;
};

/// Closed walk covering every edge exactly once (Hierholzer, explicit stack,
/// per-vertex adjacency cursors). Requires all degrees even and the
/// non-isolated part connected; throws std::invalid_argument otherwise.
EulerWalk euler_cycle(const Graph& g);

}  // namespace chroma

#endif  // CHROMA_DEGREE_SPLIT_HPP
