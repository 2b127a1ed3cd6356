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

#include "chroma/ad_split.hpp"

#include <deque>

namespace chroma {

namespace {

// Active edge lists with lazy pruning: a cursor per list skips entries whose
// alive flag dropped. Cursors never rewind, so every entry is inspected O(1)
// times over the whole run.
struct ActiveLists {
    std::vector<std::vector<EdgeId>> list;
    std::vector<size_t> cursor;

    explicit ActiveLists(int n)
        : list(static_cast<size_t>(n)), cursor(static_cast<size_t>(n), 0) {}

    // First alive edge at v; consumes it (caller must clear alive).
    EdgeId pop_alive(VertexId v, const std::vector<char>& alive) {
        auto& l = list[static_cast<size_t>(v)];
        size_t& cur = cursor[static_cast<size_t>(v)];
        while (cur < l.size() && !alive[static_cast<size_t>(l[cur])]) ++cur;
        if (cur == l.size()) return -1;
        return l[cur++];
    }
};

}  // namespace

ADDecomposition ad_paths_decomposition(const Graph& g, const Orientation& mu) {
    std::vector<EdgeId> ids = detail::all_edge_ids(g);
    return ad_paths_decomposition(g, ids, mu);
}

ADDecomposition ad_paths_decomposition(const Graph& g, std::span<const EdgeId> edge_ids,
                                       const Orientation& mu) {
    const int n = g.num_vertices();
    ActiveLists out_list(n), in_list(n);
    std::vector<char> alive(static_cast<size_t>(g.num_edges()), 0);
    for (EdgeId e : edge_ids) {
        alive[static_cast<size_t>(e)] = 1;
        out_list.list[static_cast<size_t>(mu.tail(e))].push_back(e);
        in_list.list[static_cast<size_t>(mu.head(e))].push_back(e);
    }

    ADDecomposition dec;
    dec.edge_to_path.assign(static_cast<size_t>(g.num_edges()), {-1, -1});

    // Grows one end of the current path. `need_in` says whether the end
    // edge points at `end`; the next edge must point the same way, and the
    // walk then continues from its other endpoint with the flag flipped.
    auto grow = [&](VertexId& end, bool& need_in, std::deque<VertexId>& verts,
                    std::deque<EdgeId>& edges, bool at_back) {
        while (true) {
            EdgeId e = need_in ? in_list.pop_alive(end, alive) : out_list.pop_alive(end, alive);
            if (e < 0) return;
            alive[static_cast<size_t>(e)] = 0;
            VertexId next = need_in ? mu.tail(e) : mu.head(e);
            if (at_back) {
                edges.push_back(e);
                verts.push_back(next);
            } else {
                edges.push_front(e);
                verts.push_front(next);
            }
            end = next;
            need_in = !need_in;
        }
    };

    for (EdgeId seed : edge_ids) {
        if (!alive[static_cast<size_t>(seed)]) continue;
        alive[static_cast<size_t>(seed)] = 0;

        std::deque<VertexId> verts{mu.tail(seed), mu.head(seed)};
        std::deque<EdgeId> edges{seed};

        VertexId head_end = mu.head(seed);
        bool head_need_in = true;  // seed points at its head
        grow(head_end, head_need_in, verts, edges, /*at_back=*/true);

        VertexId tail_end = verts.front();
        bool tail_need_in = false;  // seed points away from its tail
        grow(tail_end, tail_need_in, verts, edges, /*at_back=*/false);

        ADPath path;
        path.vertices.assign(verts.begin(), verts.end());
        path.edges.assign(edges.begin(), edges.end());
        // The need flag of a stuck end equals the end edge's direction
        // there, which is exactly the endpoint role.
        path.first_role = tail_need_in ? EndpointRole::incoming : EndpointRole::outgoing;
        path.last_role = head_need_in ? EndpointRole::incoming : EndpointRole::outgoing;
        path.is_cycle = path.vertices.front() == path.vertices.back();

        int idx = static_cast<int>(dec.paths.size());
        for (size_t pos = 0; pos < path.edges.size(); ++pos)
            dec.edge_to_path[static_cast<size_t>(path.edges[pos])] = {idx, static_cast<int>(pos)};
        dec.paths.push_back(std::move(path));
    }
    return dec;
}

OrientedPartition oriented_degree_split(const Graph& g, const Orientation& mu) {
    std::vector<EdgeId> ids = detail::all_edge_ids(g);
    return oriented_degree_split(g, ids, mu);
}

OrientedPartition oriented_degree_split(const Graph& g, std::span<const EdgeId> edge_ids,
                                        const Orientation& mu) {
    ADDecomposition dec = ad_paths_decomposition(g, edge_ids, mu);

    std::vector<std::int8_t> lab(static_cast<size_t>(g.num_edges()), 0);
    for (const ADPath& p : dec.paths)
        for (size_t i = 0; i < p.edges.size(); ++i)
            lab[static_cast<size_t>(p.edges[i])] = (i % 2 == 0) ? 1 : -1;

    const int n = g.num_vertices();
    OrientedPartition part;
    part.edge_ids.assign(edge_ids.begin(), edge_ids.end());
    std::sort(part.edge_ids.begin(), part.edge_ids.end());
    part.labels.reserve(part.edge_ids.size());
    part.in_side1.assign(static_cast<size_t>(n), 0);
    part.in_side2.assign(static_cast<size_t>(n), 0);
    part.out_side1.assign(static_cast<size_t>(n), 0);
    part.out_side2.assign(static_cast<size_t>(n), 0);
    for (EdgeId e : part.edge_ids) {
        std::int8_t l = lab[static_cast<size_t>(e)];
        part.labels.push_back(l);
        VertexId t = mu.tail(e), h = mu.head(e);
        if (l == 1) {
            part.side1.push_back(e);
            ++part.out_side1[static_cast<size_t>(t)];
            ++part.in_side1[static_cast<size_t>(h)];
        } else {
            part.side2.push_back(e);
            ++part.out_side2[static_cast<size_t>(t)];
            ++part.in_side2[static_cast<size_t>(h)];
        }
    }
    return part;
}

}  // namespace chroma
