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

#include "chroma/orient.hpp"

#include <set>
#include <stdexcept>

namespace chroma {

PeelResult forests_decomposition_orientation(const Graph& g) {
    const int n = g.num_vertices();

    // Bucket array indexed by current induced degree; each bucket is kept
    // ordered so the minimum-degree vertex with the lowest id is peeled
    // first. `s` tracks the smallest non-empty bucket: a peel can lower a
    // neighbor's degree by one, so s drops by at most 1 per step.
    std::vector<std::set<VertexId>> buckets(static_cast<size_t>(n) + 1);
    std::vector<int> cur_deg(static_cast<size_t>(n), 0);
    std::vector<char> active(static_cast<size_t>(n), 1);
    for (VertexId v = 0; v < n; ++v) {
        cur_deg[static_cast<size_t>(v)] = g.degree(v);
        buckets[static_cast<size_t>(g.degree(v))].insert(v);
    }

    std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()), 0);
    PeelResult result;
    result.removal_order.reserve(static_cast<size_t>(n));
    result.peel_degree.reserve(static_cast<size_t>(n));

    int s = 0;
    for (int step = 0; step < n; ++step) {
        while (s <= n && buckets[static_cast<size_t>(s)].empty()) ++s;
        auto& bucket = buckets[static_cast<size_t>(s)];
        VertexId v = *bucket.begin();
        bucket.erase(bucket.begin());
        active[static_cast<size_t>(v)] = 0;

        result.removal_order.push_back(v);
        result.peel_degree.push_back(s);
        result.degeneracy = std::max(result.degeneracy, s);

        for (const Incidence& inc : g.neighbors(v)) {
            if (!active[static_cast<size_t>(inc.other)]) continue;
            // Orient away from the peeled vertex.
            Edge ed = g.edge(inc.edge);
            forward[static_cast<size_t>(inc.edge)] = (ed.u == v) ? 1 : 0;
            int& d = cur_deg[static_cast<size_t>(inc.other)];
            buckets[static_cast<size_t>(d)].erase(inc.other);
            --d;
            buckets[static_cast<size_t>(d)].insert(inc.other);
        }
        s = std::max(0, s - 1);
    }

    result.orientation = Orientation(g, std::move(forward));
    return result;
}

int degeneracy(const Graph& g) { return forests_decomposition_orientation(g).degeneracy; }

int arboricity_estimate(const Graph& g) {
    if (g.num_edges() == 0) throw std::invalid_argument("arboricity estimate needs edges");
    return forests_decomposition_orientation(g).arboricity_estimate();
}

}  // namespace chroma
