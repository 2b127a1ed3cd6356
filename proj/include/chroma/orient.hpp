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

#ifndef CHROMA_ORIENT_HPP
#define CHROMA_ORIENT_HPP

#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Output of the min-degree peel. The orientation references the input
/// graph, so keep the graph alive while using it.
struct PeelResult {
    Orientation orientation;
    std::vector<VertexId> removal_order;
    std::vector<int> peel_degree;  // degree at removal, parallel to removal_order
    int degeneracy = 0;            // max peel degree

    /// max(1, ceil((degeneracy+1)/2)); never exceeds the true arboricity.
    int arboricity_estimate() const { return std::max(1, (degeneracy + 2) / 2); }
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) and
/// orients its remaining incident edges away from it. The result is acyclic
/// with max outdegree <= 2*arboricity; grouping each vertex's out-edges by
/// rank partitions the edge set into forests.
PeelResult forests_decomposition_orientation(const Graph& g);

int degeneracy(const Graph& g);

/// Requires at least one edge.
int arboricity_estimate(const Graph& g);

}  // namespace chroma

#endif  // CHROMA_ORIENT_HPP
