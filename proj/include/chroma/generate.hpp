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

#ifndef CHROMA_GENERATE_HPP
#define CHROMA_GENERATE_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

enum class Family { gnm, forest_union, cycle, complete, star };

/// param meaning per family: gnm -> edge count m; forest_union -> number of
/// forest layers k; cycle/complete/star -> unused (must be 0).
struct GenSpec {
    Family family = Family::gnm;
    int n = 0;
    long long param = 0;
    std::uint64_t seed = 0;
};

struct Generated {
    Graph graph;
    /// Certified upper bound on the arboricity, or -1 when unknown (gnm).
    int arboricity_bound = -1;
    /// forest_union only: the edges of each layer, acyclic by construction.
    /// Layers certify the arboricity bound; later layers drop edges that
    /// collided with earlier ones.
    std::vector<std::vector<std::pair<VertexId, VertexId>>> forest_layers;
};

/// Deterministic: equal specs produce byte-identical edge lists.
Generated generate(const GenSpec& spec);

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

}  // namespace chroma

#endif  // CHROMA_GENERATE_HPP
