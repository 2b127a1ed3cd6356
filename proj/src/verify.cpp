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

#include "chroma/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "chroma/orient.hpp"

namespace chroma {

namespace {

std::uint64_t vertex_color_key(VertexId v, int color) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
           static_cast<std::uint32_t>(color);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // Returns false if x and y were already connected (a cycle would close).
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[static_cast<size_t>(rx)] = ry;
        return true;
    }
};

}  // namespace

std::optional<PairViolation> check_proper(const Graph& g, const Coloring& c) {
    std::vector<EdgeId> ids = detail::all_edge_ids(g);
    return check_proper(g, ids, c);
}

std::optional<PairViolation> check_proper(const Graph& g, std::span<const EdgeId> edge_ids,
                                          const Coloring& c) {
    std::vector<EdgeId> sorted(edge_ids.begin(), edge_ids.end());
    std::sort(sorted.begin(), sorted.end());
    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(sorted.size() * 2);
    for (EdgeId e : sorted) {
        int col = c.color_of(e);
        if (col == 0)
            throw std::invalid_argument("uncovered edge " + std::to_string(e));
        Edge ed = g.edge(e);
        for (VertexId v : {ed.u, ed.v}) {
            auto [it, inserted] = seen.try_emplace(vertex_color_key(v, col), e);
            if (!inserted) return PairViolation{it->second, e};
        }
    }
    return std::nullopt;
}

std::optional<PaletteExcess> check_palette(const Coloring& c, int bound) {
    int max_used = 0;
    for (int col : c.color) max_used = std::max(max_used, col);
    if (max_used > bound) return PaletteExcess{max_used, bound};
    return std::nullopt;
}

std::optional<VertexViolation> check_discrepancy(const Graph& g, const EdgePartition& p,
                                                 int kappa) {
    std::vector<int> sum(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < p.edge_ids.size(); ++i) {
        Edge ed = g.edge(p.edge_ids[i]);
        sum[static_cast<size_t>(ed.u)] += p.labels[i];
        sum[static_cast<size_t>(ed.v)] += p.labels[i];
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (std::abs(sum[static_cast<size_t>(v)]) > kappa)
            return VertexViolation{v, sum[static_cast<size_t>(v)]};
    return std::nullopt;
}

std::optional<VertexViolation> check_discrepancy(const Graph& g, const Orientation& mu,
                                                 const OrientedPartition& p, int kappa) {
    std::vector<int> in_sum(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> out_sum(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < p.edge_ids.size(); ++i) {
        EdgeId e = p.edge_ids[i];
        in_sum[static_cast<size_t>(mu.head(e))] += p.labels[i];
        out_sum[static_cast<size_t>(mu.tail(e))] += p.labels[i];
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (std::abs(in_sum[static_cast<size_t>(v)]) > kappa)
            return VertexViolation{v, in_sum[static_cast<size_t>(v)]};
        if (std::abs(out_sum[static_cast<size_t>(v)]) > kappa)
            return VertexViolation{v, out_sum[static_cast<size_t>(v)]};
    }
    return std::nullopt;
}

std::optional<OrientationViolation> check_orientation(const Graph& g, const Orientation& mu,
                                                      int outdeg_bound) {
    const int n = g.num_vertices();
    std::vector<int> outdeg(static_cast<size_t>(n), 0);
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        ++outdeg[static_cast<size_t>(mu.tail(e))];
        ++indeg[static_cast<size_t>(mu.head(e))];
    }
    for (VertexId v = 0; v < n; ++v)
        if (outdeg[static_cast<size_t>(v)] > outdeg_bound)
            return OrientationViolation{"outdegree " + std::to_string(outdeg[static_cast<size_t>(v)]) +
                                        " of vertex " + std::to_string(v) + " exceeds " +
                                        std::to_string(outdeg_bound)};

    // Kahn elimination on the directed view.
    std::vector<std::vector<VertexId>> succ(static_cast<size_t>(n));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        succ[static_cast<size_t>(mu.tail(e))].push_back(mu.head(e));
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
    int processed = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        ++processed;
        for (VertexId w : succ[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) queue.push_back(w);
    }
    if (processed != n) {
        for (VertexId v = 0; v < n; ++v)
            if (indeg[static_cast<size_t>(v)] > 0)
                return OrientationViolation{"directed cycle through vertex " + std::to_string(v)};
    }
    return std::nullopt;
}

std::optional<AdViolation> check_ad_decomposition(const Graph& g,
                                                  std::span<const EdgeId> edge_ids,
                                                  const Orientation& mu,
                                                  const ADDecomposition& dec, int replay_cap) {
    std::vector<char> covered(static_cast<size_t>(g.num_edges()), 0);
    for (EdgeId e : edge_ids) covered[static_cast<size_t>(e)] = 1;

    // Partition + per-path shape.
    std::vector<char> placed(static_cast<size_t>(g.num_edges()), 0);
    size_t total = 0;
    for (size_t pi = 0; pi < dec.paths.size(); ++pi) {
        const ADPath& p = dec.paths[pi];
        if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1)
            return AdViolation{"partition", "path " + std::to_string(pi) + " is malformed"};
        for (size_t i = 0; i < p.edges.size(); ++i) {
            EdgeId e = p.edges[i];
            if (!covered[static_cast<size_t>(e)])
                return AdViolation{"partition", "edge " + std::to_string(e) + " outside the edge set"};
            if (placed[static_cast<size_t>(e)])
                return AdViolation{"partition", "edge " + std::to_string(e) + " appears twice"};
            placed[static_cast<size_t>(e)] = 1;
            ++total;
            Edge ed = g.edge(e);
            VertexId a = p.vertices[i], b = p.vertices[i + 1];
            if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
                return AdViolation{"partition", "path " + std::to_string(pi) +
                                                    " misstates edge " + std::to_string(e)};
            if (dec.edge_to_path[static_cast<size_t>(e)] !=
                std::make_pair(static_cast<int>(pi), static_cast<int>(i)))
                return AdViolation{"edge-map", "edge " + std::to_string(e) + " mapped wrongly"};
        }
    }
    if (total != edge_ids.size())
        return AdViolation{"partition", "paths cover " + std::to_string(total) + " of " +
                                            std::to_string(edge_ids.size()) + " edges"};

    // AD validity: consecutive edges point the same way at their shared
    // vertex. Roles must match the end edges.
    for (size_t pi = 0; pi < dec.paths.size(); ++pi) {
        const ADPath& p = dec.paths[pi];
        for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
            VertexId shared = p.vertices[i + 1];
            bool into_a = mu.head(p.edges[i]) == shared;
            bool into_b = mu.head(p.edges[i + 1]) == shared;
            if (into_a != into_b)
                return AdViolation{"ad-validity", "path " + std::to_string(pi) +
                                                      " breaks at position " + std::to_string(i + 1)};
        }
        EndpointRole first = mu.head(p.edges.front()) == p.vertices.front()
                                 ? EndpointRole::incoming
                                 : EndpointRole::outgoing;
        EndpointRole last = mu.head(p.edges.back()) == p.vertices.back()
                                ? EndpointRole::incoming
                                : EndpointRole::outgoing;
        bool cyc = p.vertices.front() == p.vertices.back();
        if (first != p.first_role || last != p.last_role || cyc != p.is_cycle)
            return AdViolation{"ad-validity", "path " + std::to_string(pi) + " misstates its ends"};
    }

    // Endpoint bound: each vertex is the incoming endpoint of at most one
    // path, and the outgoing endpoint of at most one.
    std::vector<int> incoming_of(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> outgoing_of(static_cast<size_t>(g.num_vertices()), 0);
    for (const ADPath& p : dec.paths) {
        if (p.is_cycle) {
            // A cycle is one path; it takes each role at most once at v0
            // even when both end edges agree.
            VertexId v0 = p.vertices.front();
            if (p.first_role == EndpointRole::incoming || p.last_role == EndpointRole::incoming)
                ++incoming_of[static_cast<size_t>(v0)];
            if (p.first_role == EndpointRole::outgoing || p.last_role == EndpointRole::outgoing)
                ++outgoing_of[static_cast<size_t>(v0)];
        } else {
            if (p.first_role == EndpointRole::incoming)
                ++incoming_of[static_cast<size_t>(p.vertices.front())];
            else
                ++outgoing_of[static_cast<size_t>(p.vertices.front())];
            if (p.last_role == EndpointRole::incoming)
                ++incoming_of[static_cast<size_t>(p.vertices.back())];
            else
                ++outgoing_of[static_cast<size_t>(p.vertices.back())];
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (incoming_of[static_cast<size_t>(v)] > 1)
            return AdViolation{"endpoint-bound", "vertex " + std::to_string(v) +
                                                     " is the incoming endpoint of " +
                                                     std::to_string(incoming_of[static_cast<size_t>(v)]) +
                                                     " paths"};
        if (outgoing_of[static_cast<size_t>(v)] > 1)
            return AdViolation{"endpoint-bound", "vertex " + std::to_string(v) +
                                                     " is the outgoing endpoint of " +
                                                     std::to_string(outgoing_of[static_cast<size_t>(v)]) +
                                                     " paths"};
    }

    // Replay maximality: walking the extraction order, no then-active edge
    // of the required direction may exist at either end of any path.
    if (static_cast<int>(edge_ids.size()) <= replay_cap) {
        std::vector<char> alive = covered;
        std::vector<char> own(static_cast<size_t>(g.num_edges()), 0);
        for (size_t pi = 0; pi < dec.paths.size(); ++pi) {
            const ADPath& p = dec.paths[pi];
            for (EdgeId e : p.edges) own[static_cast<size_t>(e)] = 1;
            auto extendable = [&](VertexId at, EndpointRole role) -> bool {
                for (const Incidence& inc : g.neighbors(at)) {
                    EdgeId e = inc.edge;
                    if (!alive[static_cast<size_t>(e)] || own[static_cast<size_t>(e)]) continue;
                    bool into = mu.head(e) == at;
                    if ((role == EndpointRole::incoming) == into) return true;
                }
                return false;
            };
            if (extendable(p.vertices.front(), p.first_role) ||
                extendable(p.vertices.back(), p.last_role))
                return AdViolation{"maximality", "path " + std::to_string(pi) +
                                                     " was extendable when extracted"};
            for (EdgeId e : p.edges) {
                own[static_cast<size_t>(e)] = 0;
                alive[static_cast<size_t>(e)] = 0;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> check_trace(const RecursionTrace& t, const Graph& root) {
    std::vector<std::string> violations;
    auto report = [&](const std::string& tag, const std::string& detail) {
        for (const std::string& v : violations)
            if (v.rfind(tag, 0) == 0) return;  // one report per tag
        violations.push_back(tag + " " + detail);
    };

    if (t.nodes.empty()) {
        report("trace-structure", "empty trace");
        return violations;
    }
    const bool oriented = t.mode == Mode::arboricity;
    if (oriented && t.forward.size() != static_cast<size_t>(root.num_edges())) {
        report("trace-structure", "missing orientation flags");
        return violations;
    }
    Orientation mu;
    if (oriented) mu = Orientation(root, std::vector<std::uint8_t>(t.forward.begin(), t.forward.end()));

    if (t.nodes[0].level != 0 || t.nodes[0].parent != -1)
        report("trace-structure", "root node malformed");

    // Recomputed root quantities.
    const long long root_m = t.nodes[0].num_edges();
    const long long root_delta = max_degree(root, t.nodes[0].edge_ids);
    std::vector<int> root_in, root_out;
    if (oriented) {
        root_in.assign(static_cast<size_t>(root.num_vertices()), 0);
        root_out.assign(static_cast<size_t>(root.num_vertices()), 0);
        for (EdgeId e : t.nodes[0].edge_ids) {
            ++root_in[static_cast<size_t>(mu.head(e))];
            ++root_out[static_cast<size_t>(mu.tail(e))];
        }
    }
    int alpha_hat = 0;
    if (oriented && root.num_edges() > 0) alpha_hat = arboricity_estimate(root);

    for (size_t ni = 0; ni < t.nodes.size(); ++ni) {
        const TraceNode& node = t.nodes[ni];
        const long long pow2 = 1LL << node.level;
        const long long mi = node.num_edges();

        // Structure: children partition the parent's edge set.
        if ((node.child1 == -1) != (node.child2 == -1))
            report("trace-structure", "node " + std::to_string(ni) + " has one child");
        if (node.child1 != -1) {
            if (node.child1 >= static_cast<int>(t.nodes.size()) ||
                node.child2 >= static_cast<int>(t.nodes.size())) {
                report("trace-structure", "node " + std::to_string(ni) + " child index invalid");
                continue;
            }
            const TraceNode& a = t.nodes[static_cast<size_t>(node.child1)];
            const TraceNode& b = t.nodes[static_cast<size_t>(node.child2)];
            if (a.level != node.level + 1 || b.level != node.level + 1 ||
                a.parent != static_cast<int>(ni) || b.parent != static_cast<int>(ni))
                report("trace-structure", "node " + std::to_string(ni) + " child links broken");
            std::vector<EdgeId> merged;
            merged.reserve(a.edge_ids.size() + b.edge_ids.size());
            std::merge(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end(),
                       std::back_inserter(merged));
            if (merged != node.edge_ids)
                report("trace-structure",
                       "children of node " + std::to_string(ni) + " do not partition it");

            if (oriented) {
                // Oriented splits do not promise the halving lower bound on
                // m; instead the children's sizes may differ by at most the
                // number of vertices whose side counts differ.
                std::vector<int> d1 = subgraph_degrees(root, a.edge_ids);
                std::vector<int> d2 = subgraph_degrees(root, b.edge_ids);
                long long unbalanced = 0;
                for (size_t v = 0; v < d1.size(); ++v)
                    if (d1[v] != d2[v]) ++unbalanced;
                long long gap = std::llabs(static_cast<long long>(a.edge_ids.size()) -
                                           static_cast<long long>(b.edge_ids.size()));
                if (gap > unbalanced)
                    report("child-size-gap", "node " + std::to_string(ni) + " gap " +
                                                 std::to_string(gap) + " exceeds " +
                                                 std::to_string(unbalanced));
            }
        }

        // Declared stats must match a recount.
        int delta_i = max_degree(root, node.edge_ids);
        if (delta_i != node.max_degree ||
            static_cast<long long>(node.edge_ids.size()) != mi)
            report("trace-stats", "node " + std::to_string(ni) + " misdeclares its stats");

        std::vector<int> in_i, out_i;
        if (oriented) {
            in_i.assign(static_cast<size_t>(root.num_vertices()), 0);
            out_i.assign(static_cast<size_t>(root.num_vertices()), 0);
            for (EdgeId e : node.edge_ids) {
                ++in_i[static_cast<size_t>(mu.head(e))];
                ++out_i[static_cast<size_t>(mu.tail(e))];
            }
            int max_in = 0, max_out = 0;
            for (size_t v = 0; v < in_i.size(); ++v) {
                max_in = std::max(max_in, in_i[v]);
                max_out = std::max(max_out, out_i[v]);
            }
            if (max_in != node.max_indeg || max_out != node.max_outdeg)
                report("trace-stats", "node " + std::to_string(ni) + " misdeclares degrees");
        }

        if (!oriented) {
            // delta/2^i - 2 <= delta_i <= delta/2^i + 2, in exact arithmetic.
            if ((delta_i + 2) * pow2 < root_delta || (delta_i - 2) * pow2 > root_delta)
                report("claim-deg-bound", "node " + std::to_string(ni) + " level " +
                                              std::to_string(node.level) + " max degree " +
                                              std::to_string(delta_i));
            // m_i >= m/2^i - 2.
            if ((mi + 2) * pow2 < root_m)
                report("claim-edge-bound", "node " + std::to_string(ni) + " has " +
                                               std::to_string(mi) + " edges");
        } else {
            // Per-vertex halving of both oriented degrees.
            for (VertexId v = 0; v < root.num_vertices(); ++v) {
                long long rin = root_in[static_cast<size_t>(v)];
                long long rout = root_out[static_cast<size_t>(v)];
                long long ii = in_i[static_cast<size_t>(v)];
                long long oo = out_i[static_cast<size_t>(v)];
                if ((ii + 1) * pow2 < rin || (ii - 1) * pow2 > rin ||
                    (oo + 1) * pow2 < rout || (oo - 1) * pow2 > rout) {
                    report("claim-oriented-deg", "node " + std::to_string(ni) + " vertex " +
                                                     std::to_string(v));
                    break;
                }
            }
            // Undirected max degree only halves from above here.
            if ((delta_i - 2) * pow2 > root_delta)
                report("claim-max-deg", "node " + std::to_string(ni) + " max degree " +
                                          std::to_string(delta_i));
            // Forest witness: ranking each vertex's surviving out-edges
            // partitions the node into few forests, each acyclic.
            if (alpha_hat > 0) {
                int max_out = 0;
                for (size_t v = 0; v < out_i.size(); ++v) max_out = std::max(max_out, out_i[v]);
                if ((static_cast<long long>(max_out) - 1) * pow2 > 2LL * alpha_hat)
                    report("claim-forest-witness",
                           "node " + std::to_string(ni) + " needs " + std::to_string(max_out) +
                               " forests");
                std::vector<int> rank(static_cast<size_t>(root.num_vertices()), 0);
                std::vector<std::vector<EdgeId>> classes(static_cast<size_t>(std::max(max_out, 1)));
                for (EdgeId e : node.edge_ids) {
                    int r = rank[static_cast<size_t>(mu.tail(e))]++;
                    classes[static_cast<size_t>(r)].push_back(e);
                }
                for (size_t ci = 0; ci < classes.size(); ++ci) {
                    UnionFind uf(root.num_vertices());
                    for (EdgeId e : classes[ci]) {
                        Edge ed = root.edge(e);
                        if (!uf.unite(ed.u, ed.v)) {
                            report("claim-forest-witness",
                                   "label class " + std::to_string(ci + 1) + " of node " +
                                       std::to_string(ni) + " has a cycle");
                            break;
                        }
                    }
                }
            }
        }
    }
    return violations;
}

}  // namespace chroma
