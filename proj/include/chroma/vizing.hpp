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

#ifndef CHROMA_VIZING_HPP
#define CHROMA_VIZING_HPP

#include <span>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Edge coloring keyed by edge id. 0 means unset; set colors are in
/// [1, palette]. The declared palette may be larger than the number of
/// colors actually used.
struct Coloring {
    std::vector<int> color;
    int palette = 0;

    int color_of(EdgeId e) const { return color[static_cast<size_t>(e)]; }
};

/// Proper edge coloring with at most max_degree + 1 colors, built with
/// maximal fans, color rotations and alternating-path inversions.
/// Deterministic: edges are processed by ascending id, fans extend to the
/// lowest-id eligible neighbor. Worst-case O(m*n) time.
Coloring vizing_color(const Graph& g);
Coloring vizing_color(const Graph& g, std::span<const EdgeId> edge_ids);
Coloring vizing_color(const Subgraph& s);

/// Smallest color in [1, c.palette] unused at v. Scans v's incident edges.
int free_color(const Graph& g, const Coloring& c, VertexId v);

/// Swaps colors a and b along the maximal a/b-alternating component through
/// v. A no-op when v touches neither color; properness is preserved and only
/// the component's edges change. Re-applying with the same arguments undoes
/// the swap.
void invert_cd_path(const Graph& g, Coloring& c, VertexId v, int a, int b);

namespace detail {
/// Colors the selected edges into `colors` using values
/// offset+1 .. offset+k, where k = max_degree(restricted)+1 is returned.
int vizing_color_into(const Graph& g, std::span<const EdgeId> edge_ids,
                      std::vector<int>& colors, int offset);
}  // namespace detail

}  // namespace chroma

#endif  // CHROMA_VIZING_HPP
