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

#include "chroma/vizing.hpp"

#include <algorithm>
#include <cassert>

// Constructive fan-based edge coloring. For each uncolored edge (x, f0) a
// maximal fan of x is built, a free color c of x and a free color d of the
// fan's last vertex are picked, the maximal c/d-alternating path from x is
// inverted, and the fan prefix up to the first vertex missing d is rotated.
// Each vertex keeps a color -> edge index so free-color queries and path
// walks are O(1) per step.

namespace chroma {

namespace {

class VizingState {
public:
    VizingState(const Graph& g, std::span<const EdgeId> edge_ids, std::vector<int>& colors,
                int offset)
        : g_(g), colors_(colors), offset_(offset) {
        adj_.assign(static_cast<size_t>(g.num_vertices()), {});
        for (EdgeId e : edge_ids) {
            Edge ed = g.edge(e);
            adj_[static_cast<size_t>(ed.u)].push_back({e, ed.v});
            adj_[static_cast<size_t>(ed.v)].push_back({e, ed.u});
        }
        int delta = 0;
        for (const auto& list : adj_) delta = std::max(delta, static_cast<int>(list.size()));
        k_ = delta + 1;
        used_.assign(static_cast<size_t>(g.num_vertices()) * static_cast<size_t>(k_ + 1), -1);
        local_.assign(static_cast<size_t>(g.num_edges()), 0);
        fan_stamp_.assign(static_cast<size_t>(g.num_vertices()), 0);
    }

    int palette() const { return k_; }

    void run(std::span<const EdgeId> edge_ids) {
        for (EdgeId e : edge_ids) color_edge(e);
        for (EdgeId e : edge_ids)
            colors_[static_cast<size_t>(e)] = offset_ + local_[static_cast<size_t>(e)];
    }

private:
    EdgeId& used_at(VertexId v, int color) {
        return used_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) +
                     static_cast<size_t>(color)];
    }

    bool is_free(VertexId v, int color) { return used_at(v, color) < 0; }

    int find_free(VertexId v) {
        for (int c = 1; c <= k_; ++c)
            if (is_free(v, c)) return c;
        assert(false && "palette exhausted");
        return k_;
    }

    void set_color(EdgeId e, int color) {
        local_[static_cast<size_t>(e)] = color;
        Edge ed = g_.edge(e);
        used_at(ed.u, color) = e;
        used_at(ed.v, color) = e;
    }

    void unset_color(EdgeId e) {
        int color = local_[static_cast<size_t>(e)];
        if (color == 0) return;
        Edge ed = g_.edge(e);
        used_at(ed.u, color) = -1;
        used_at(ed.v, color) = -1;
        local_[static_cast<size_t>(e)] = 0;
    }

    VertexId other_end(EdgeId e, VertexId v) {
        Edge ed = g_.edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    // Swap colors c and d along the maximal alternating path leaving x with
    // a d-colored edge. Collect first, then flip, so the index never holds
    // two edges of one color at a vertex mid-update.
    void invert_path(VertexId x, int c, int d) {
        if (c == d) return;
        path_.clear();
        VertexId cur = x;
        int want = d;
        while (true) {
            EdgeId e = used_at(cur, want);
            if (e < 0) break;
            path_.push_back(e);
            cur = other_end(e, cur);
            want = (want == d) ? c : d;
            if (cur == x && want == d) break;  // closed even cycle
        }
        for (EdgeId e : path_) {
            Edge ed = g_.edge(e);
            int col = local_[static_cast<size_t>(e)];
            used_at(ed.u, col) = -1;
            used_at(ed.v, col) = -1;
        }
        for (EdgeId e : path_) {
            int col = local_[static_cast<size_t>(e)];
            set_color(e, col == c ? d : c);
        }
    }

#ifndef NDEBUG
    // Full recount of the color -> edge index; wired to the mutating steps
    // in debug builds.
    void audit() const {
        std::vector<EdgeId> expect(used_.size(), -1);
        for (const auto& list : adj_)
            for (const Incidence& inc : list) {
                int col = local_[static_cast<size_t>(inc.edge)];
                if (col == 0) continue;
                Edge ed = g_.edge(inc.edge);
                for (VertexId v : {ed.u, ed.v})
                    expect[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) +
                           static_cast<size_t>(col)] = inc.edge;
            }
        assert(expect == used_);
    }
#endif

    void color_edge(EdgeId uncolored) {
        Edge ed = g_.edge(uncolored);
        VertexId x = ed.u;
        int stamp = ++stamp_counter_;

        fan_.clear();
        fan_.push_back({uncolored, ed.v});
        fan_stamp_[static_cast<size_t>(ed.v)] = stamp;

        // Maximal fan: repeatedly add the lowest-id neighbor w whose edge
        // (x, w) is colored with a color free at the current last vertex.
        while (true) {
            VertexId last = fan_.back().other;
            EdgeId best_edge = -1;
            VertexId best_w = -1;
            for (const Incidence& inc : adj_[static_cast<size_t>(x)]) {
                int col = local_[static_cast<size_t>(inc.edge)];
                if (col == 0) continue;
                if (fan_stamp_[static_cast<size_t>(inc.other)] == stamp) continue;
                if (!is_free(last, col)) continue;
                if (best_w < 0 || inc.other < best_w) {
                    best_w = inc.other;
                    best_edge = inc.edge;
                }
            }
            if (best_w < 0) break;
            fan_.push_back({best_edge, best_w});
            fan_stamp_[static_cast<size_t>(best_w)] = stamp;
        }

        int c = find_free(x);
        int d = find_free(fan_.back().other);
        invert_path(x, c, d);
#ifndef NDEBUG
        audit();
#endif

        size_t w = 0;
        while (w < fan_.size() && !is_free(fan_[w].other, d)) ++w;
        assert(w < fan_.size());

        // Rotate: shift each fan edge's color to its predecessor, then end
        // the prefix with d.
        for (size_t i = 0; i < w; ++i) {
            int col = local_[static_cast<size_t>(fan_[i + 1].edge)];
            unset_color(fan_[i + 1].edge);
            set_color(fan_[i].edge, col);
        }
        set_color(fan_[w].edge, d);
#ifndef NDEBUG
        audit();
#endif
    }

    const Graph& g_;
    std::vector<int>& colors_;
    int offset_;
    int k_ = 1;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<EdgeId> used_;
    std::vector<int> local_;
    std::vector<int> fan_stamp_;
    int stamp_counter_ = 0;
    std::vector<Incidence> fan_;
    std::vector<EdgeId> path_;
};

}  // namespace

namespace detail {

int vizing_color_into(const Graph& g, std::span<const EdgeId> edge_ids,
                      std::vector<int>& colors, int offset) {
    VizingState state(g, edge_ids, colors, offset);
    state.run(edge_ids);
    return state.palette();
}

}  // namespace detail

Coloring vizing_color(const Graph& g) {
    std::vector<EdgeId> ids = detail::all_edge_ids(g);
    return vizing_color(g, ids);
}

Coloring vizing_color(const Subgraph& s) { return vizing_color(s.parent(), s.edge_ids()); }

Coloring vizing_color(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<EdgeId> sorted(edge_ids.begin(), edge_ids.end());
    std::sort(sorted.begin(), sorted.end());
    Coloring c;
    c.color.assign(static_cast<size_t>(g.num_edges()), 0);
    c.palette = detail::vizing_color_into(g, sorted, c.color, 0);
    return c;
}

int free_color(const Graph& g, const Coloring& c, VertexId v) {
    std::vector<char> seen(static_cast<size_t>(c.palette) + 1, 0);
    for (const Incidence& inc : g.neighbors(v)) {
        int col = c.color_of(inc.edge);
        if (col >= 1 && col <= c.palette) seen[static_cast<size_t>(col)] = 1;
    }
    for (int col = 1; col <= c.palette; ++col)
        if (!seen[static_cast<size_t>(col)]) return col;
    throw std::logic_error("no free color at vertex " + std::to_string(v));
}

void invert_cd_path(const Graph& g, Coloring& c, VertexId v, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > c.palette || b > c.palette)
        throw std::invalid_argument("colors must be distinct and within the palette");

    auto edge_with = [&](VertexId at, int col) -> EdgeId {
        EdgeId found = -1;
        for (const Incidence& inc : g.neighbors(at))
            if (c.color_of(inc.edge) == col && (found < 0 || inc.edge < found)) found = inc.edge;
        return found;
    };

    // Walks one arm of the a/b component; reports whether it closed a cycle
    // back at v.
    std::vector<EdgeId> component;
    auto walk = [&](int start_color) -> bool {
        VertexId cur = v;
        int want = start_color;
        while (true) {
            EdgeId e = edge_with(cur, want);
            if (e < 0) return false;
            component.push_back(e);
            Edge ed = g.edge(e);
            cur = (ed.u == cur) ? ed.v : ed.u;
            want = (want == a) ? b : a;
            if (cur == v && want == start_color) return true;
        }
    };

    bool cycled = walk(a);
    if (!cycled && !component.empty()) walk(b);
    if (component.empty()) walk(b);

    for (EdgeId e : component) {
        int col = c.color[static_cast<size_t>(e)];
        c.color[static_cast<size_t>(e)] = (col == a) ? b : a;
    }
}

}  // namespace chroma
