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

#ifndef CHROMA_AD_SPLIT_HPP
#define CHROMA_AD_SPLIT_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

enum class EndpointRole { incoming, outgoing };

/// Walk v0, e1, v1, ..., ek, vk in which every two consecutive edges are
/// both oriented toward, or both away from, their shared vertex. An endpoint
/// is "incoming" when its end edge points at it, "outgoing" otherwise. A
/// path whose two endpoints coincide is a cycle; v0 is its designated
/// endpoint.
struct ADPath {
    std::vector<VertexId> vertices;  // k+1 entries
    std::vector<EdgeId> edges;       // k entries
    EndpointRole first_role;
    EndpointRole last_role;
    bool is_cycle = false;
};

struct ADDecomposition {
    std::vector<ADPath> paths;
    /// Indexed by edge id: (path index, position within path), (-1,-1) for
    /// edges outside the decomposed set.
    std::vector<std::pair<int, int>> edge_to_path;
};

/// Greedy decomposition into maximal alternating-directions paths: seed at
/// the lowest-id active edge, grow the head end until stuck, then the tail
/// end. Every vertex ends up the incoming endpoint of at most one path and
/// the outgoing endpoint of at most one path. O(m): each vertex keeps
/// lazily-pruned active in/out lists consumed by a cursor.
ADDecomposition ad_paths_decomposition(const Graph& g, const Orientation& mu);
ADDecomposition ad_paths_decomposition(const Graph& g, std::span<const EdgeId> edge_ids,
                                       const Orientation& mu);

/// Two-way labeling with cached in/out per-vertex counts; labels are ground
/// truth, the rest is derived.
struct OrientedPartition {
    std::vector<EdgeId> edge_ids;
    std::vector<std::int8_t> labels;
    std::vector<EdgeId> side1, side2;
    std::vector<int> in_side1, in_side2, out_side1, out_side2;  // per vertex
};

/// Colors each AD path alternately starting with label 1. Every vertex gets
/// incoming discrepancy <= 1 and outgoing discrepancy <= 1.
OrientedPartition oriented_degree_split(const Graph& g, const Orientation& mu);
OrientedPartition oriented_degree_split(const Graph& g, std::span<const EdgeId> edge_ids,
                                        const Orientation& mu);

}  // namespace chroma

#endif  // CHROMA_AD_SPLIT_HPP
