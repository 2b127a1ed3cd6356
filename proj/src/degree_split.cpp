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

#include "chroma/degree_split.hpp"

#include <cassert>
#include <stdexcept>

namespace chroma {

namespace {

using Adjacency = std::vector<std::vector<Incidence>>;

// Hierholzer circuit from `start` over the unused edges reachable from it.
// `cursor` and `used` persist across calls; a vertex is never revisited by a
// later component, so cursors need no reset.
std::vector<EdgeId> hierholzer(VertexId start, const Adjacency& adj,
                               std::vector<size_t>& cursor, std::vector<char>& used) {
    std::vector<EdgeId> circuit;
    std::vector<std::pair<VertexId, EdgeId>> stack;
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
        auto [v, e_in] = stack.back();
        const auto& list = adj[static_cast<size_t>(v)];
        size_t& cur = cursor[static_cast<size_t>(v)];
        while (cur < list.size() && used[static_cast<size_t>(list[cur].edge)]) ++cur;
        if (cur < list.size()) {
            Incidence inc = list[cur];
            used[static_cast<size_t>(inc.edge)] = 1;
            ++cur;
            stack.emplace_back(inc.other, inc.edge);
        } else {
            stack.pop_back();
            if (e_in >= 0) circuit.push_back(e_in);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace

EdgePartition degree_split(const Graph& g) {
    std::vector<EdgeId> ids = detail::all_edge_ids(g);
    return degree_split(g, ids);
}

EdgePartition degree_split(const Subgraph& s) { return degree_split(s.parent(), s.edge_ids()); }

EdgePartition degree_split(const Graph& g, std::span<const EdgeId> edge_ids) {
    const int n = g.num_vertices();
    const VertexId dummy = n;
    const EdgeId dummy_base = g.num_edges();

    // Adjacency restricted to the selected edges; index n is the dummy slot.
    Adjacency adj(static_cast<size_t>(n) + 1);
    for (EdgeId e : edge_ids) {
        Edge ed = g.edge(e);
        adj[static_cast<size_t>(ed.u)].push_back({e, ed.v});
        adj[static_cast<size_t>(ed.v)].push_back({e, ed.u});
    }

    // Connected components of the selected edge set, in order of their
    // lowest edge id.
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int num_comps = 0;
    std::vector<VertexId> queue;
    for (EdgeId e : edge_ids) {
        VertexId root = g.edge(e).u;
        if (comp[static_cast<size_t>(root)] != -1) continue;
        int id = num_comps++;
        comp[static_cast<size_t>(root)] = id;
        queue.assign(1, root);
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (const Incidence& inc : adj[static_cast<size_t>(v)]) {
                if (comp[static_cast<size_t>(inc.other)] == -1) {
                    comp[static_cast<size_t>(inc.other)] = id;
                    queue.push_back(inc.other);
                }
            }
        }
    }

    std::vector<std::vector<EdgeId>> comp_edges(static_cast<size_t>(num_comps));
    for (EdgeId e : edge_ids)
        comp_edges[static_cast<size_t>(comp[static_cast<size_t>(g.edge(e).u)])].push_back(e);

    std::vector<std::vector<VertexId>> comp_odd(static_cast<size_t>(num_comps));
    std::vector<VertexId> comp_min_vertex(static_cast<size_t>(num_comps), n);
    int total_odd = 0;
    for (VertexId v = 0; v < n; ++v) {
        int c = comp[static_cast<size_t>(v)];
        if (c == -1) continue;
        comp_min_vertex[static_cast<size_t>(c)] = std::min(comp_min_vertex[static_cast<size_t>(c)], v);
        if (adj[static_cast<size_t>(v)].size() % 2 == 1) {
            comp_odd[static_cast<size_t>(c)].push_back(v);
            ++total_odd;
        }
    }

    std::vector<char> used(static_cast<size_t>(dummy_base + total_odd), 0);
    std::vector<size_t> cursor(static_cast<size_t>(n) + 1, 0);
    std::vector<std::int8_t> lab(static_cast<size_t>(g.num_edges()), 0);

    EdgeId next_dummy = dummy_base;
    int running = 0;  // side1 - side2 over components emitted so far
    for (int c = 0; c < num_comps; ++c) {
        auto& dummy_adj = adj[static_cast<size_t>(dummy)];
        dummy_adj.clear();
        cursor[static_cast<size_t>(dummy)] = 0;
        for (VertexId v : comp_odd[static_cast<size_t>(c)]) {
            EdgeId de = next_dummy++;
            adj[static_cast<size_t>(v)].push_back({de, dummy});
            dummy_adj.push_back({de, v});
        }

        VertexId start = dummy_adj.empty() ? comp_min_vertex[static_cast<size_t>(c)] : dummy;
        std::vector<EdgeId> circuit = hierholzer(start, adj, cursor, used);
        assert(circuit.size() ==
               comp_edges[static_cast<size_t>(c)].size() + comp_odd[static_cast<size_t>(c)].size());

        // Alternate along walk order; dummy edges keep the parity but are
        // not emitted.
        int s1 = 0, s2 = 0;
        for (size_t i = 0; i < circuit.size(); ++i) {
            EdgeId e = circuit[i];
            if (e >= dummy_base) continue;
            std::int8_t l = (i % 2 == 0) ? 1 : -1;
            lab[static_cast<size_t>(e)] = l;
            (l == 1 ? s1 : s2)++;
        }

        int contribution = s1 - s2;  // 0 for even components, +-1 for odd
        if (contribution != 0 && running != 0 && (contribution > 0) == (running > 0)) {
            for (EdgeId e : comp_edges[static_cast<size_t>(c)])
                lab[static_cast<size_t>(e)] = static_cast<std::int8_t>(-lab[static_cast<size_t>(e)]);
            contribution = -contribution;
        }
        running += contribution;
    }

    EdgePartition part;
    part.edge_ids.assign(edge_ids.begin(), edge_ids.end());
    std::sort(part.edge_ids.begin(), part.edge_ids.end());
    part.labels.reserve(part.edge_ids.size());
    part.count_side1.assign(static_cast<size_t>(n), 0);
    part.count_side2.assign(static_cast<size_t>(n), 0);
    for (EdgeId e : part.edge_ids) {
        std::int8_t l = lab[static_cast<size_t>(e)];
        part.labels.push_back(l);
        Edge ed = g.edge(e);
        if (l == 1) {
            part.side1.push_back(e);
            ++part.count_side1[static_cast<size_t>(ed.u)];
            ++part.count_side1[static_cast<size_t>(ed.v)];
        } else {
            part.side2.push_back(e);
            ++part.count_side2[static_cast<size_t>(ed.u)];
            ++part.count_side2[static_cast<size_t>(ed.v)];
        }
    }
    return part;
}

EulerWalk euler_cycle(const Graph& g) {
    const int n = g.num_vertices();
    EulerWalk walk;
    if (g.num_edges() == 0) return walk;

    VertexId start = -1;
    for (VertexId v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d % 2 != 0)
            throw std::invalid_argument("odd-degree vertex " + std::to_string(v));
        if (d > 0 && start == -1) start = v;
    }

    Adjacency adj(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[static_cast<size_t>(v)].assign(nb.begin(), nb.end());
    }
    std::vector<size_t> cursor(static_cast<size_t>(n), 0);
    std::vector<char> used(static_cast<size_t>(g.num_edges()), 0);
    std::vector<EdgeId> circuit = hierholzer(start, adj, cursor, used);
    if (static_cast<int>(circuit.size()) != g.num_edges())
        throw std::invalid_argument("edge set is disconnected");
    walk.start = start;
    walk.edges = std::move(circuit);
    return walk;
}

}  // namespace chroma
