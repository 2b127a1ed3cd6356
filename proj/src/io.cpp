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

#include "chroma/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace chroma {

namespace {

// Pulls the next significant line (skips blanks and '#' comments).
// Returns false on end of stream; `line_no` tracks the physical line.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + tok + "'");
    return v;
}

struct Header {
    int n;
    int m;
};

Header parse_header(std::istream& in, int& line_no, const char* kind) {
    std::string line;
    if (!next_line(in, line, line_no)) throw ParseError(line_no, "missing header");
    auto f = split_fields(line);
    if (f.size() != 4 || f[0] != "p" || f[1] != kind)
        throw ParseError(line_no, std::string("expected header 'p ") + kind + " <n> <m>'");
    long long n = parse_int(f[2], line_no, "n");
    long long m = parse_int(f[3], line_no, "m");
    if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
    return {static_cast<int>(n), static_cast<int>(m)};
}

std::pair<VertexId, VertexId> parse_endpoint_line(const std::vector<std::string>& f,
                                                  int line_no, const char* tag, int n) {
    if (f.size() != 3 || f[0] != tag)
        throw ParseError(line_no, std::string("expected '") + tag + " <u> <v>'");
    long long u = parse_int(f[1], line_no, "u");
    long long v = parse_int(f[2], line_no, "v");
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    int line_no = 0;
    Header h = parse_header(in, line_no, "edge");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<size_t>(h.m));
    std::string line;
    for (int i = 0; i < h.m; ++i) {
        if (!next_line(in, line, line_no))
            throw ParseError(line_no, "count mismatch: header says " + std::to_string(h.m) +
                                          " edges, body has " + std::to_string(i));
        edges.push_back(parse_endpoint_line(split_fields(line), line_no, "e", h.n));
    }
    if (next_line(in, line, line_no))
        throw ParseError(line_no, "count mismatch: extra content after " +
                                      std::to_string(h.m) + " edges");
    try {
        return build_graph(h.n, edges);
    } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

void write_edge_list(const Graph& g, std::span<const EdgeId> edge_ids, std::ostream& out) {
    out << "p edge " << g.num_vertices() << " " << edge_ids.size() << "\n";
    for (EdgeId id : edge_ids) {
        Edge e = g.edge(id);
        out << "e " << e.u << " " << e.v << "\n";
    }
}

void write_coloring(const Graph& g, const Coloring& c, std::ostream& out) {
    out << "c palette " << c.palette << "\n";
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        int col = c.color_of(id);
        if (col == 0)
            throw std::invalid_argument("uncovered edge " + std::to_string(id));
        Edge e = g.edge(id);
        out << e.u << " " << e.v << " " << col << "\n";
    }
}

Coloring parse_coloring(std::istream& in, const Graph& g) {
    int line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) throw ParseError(line_no, "missing header");
    auto f = split_fields(line);
    if (f.size() != 3 || f[0] != "c" || f[1] != "palette")
        throw ParseError(line_no, "expected header 'c palette <k>'");
    long long k = parse_int(f[2], line_no, "palette");
    if (k < 0) throw ParseError(line_no, "negative palette");

    std::unordered_map<std::uint64_t, EdgeId> lookup;
    lookup.reserve(static_cast<size_t>(g.num_edges()) * 2);
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        Edge e = g.edge(id);
        lookup[(static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v)] = id;
    }

    Coloring c;
    c.palette = static_cast<int>(k);
    c.color.assign(static_cast<size_t>(g.num_edges()), 0);
    int covered = 0;
    while (next_line(in, line, line_no)) {
        auto body = split_fields(line);
        if (body.size() != 3) throw ParseError(line_no, "expected '<u> <v> <color>'");
        long long a = parse_int(body[0], line_no, "u");
        long long b = parse_int(body[1], line_no, "v");
        long long col = parse_int(body[2], line_no, "color");
        VertexId u = static_cast<VertexId>(std::min(a, b));
        VertexId v = static_cast<VertexId>(std::max(a, b));
        auto it = lookup.find((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
        if (it == lookup.end())
            throw ParseError(line_no, "unknown edge (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ")");
        if (col < 1 || col > k)
            throw ParseError(line_no, "color " + std::to_string(col) + " out of [1, " +
                                          std::to_string(k) + "]");
        if (c.color[static_cast<size_t>(it->second)] != 0)
            throw ParseError(line_no, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                          ") colored twice");
        c.color[static_cast<size_t>(it->second)] = static_cast<int>(col);
        ++covered;
    }
    if (covered != g.num_edges()) {
        for (EdgeId id = 0; id < g.num_edges(); ++id) {
            if (c.color[static_cast<size_t>(id)] == 0) {
                Edge e = g.edge(id);
                throw ParseError(line_no, "missing edge (" + std::to_string(e.u) + ", " +
                                              std::to_string(e.v) + ")");
            }
        }
    }
    return c;
}

ParsedOrientation parse_orientation(std::istream& in) {
    int line_no = 0;
    Header h = parse_header(in, line_no, "orient");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::uint8_t> forward;
    edges.reserve(static_cast<size_t>(h.m));
    forward.reserve(static_cast<size_t>(h.m));
    std::string line;
    for (int i = 0; i < h.m; ++i) {
        if (!next_line(in, line, line_no))
            throw ParseError(line_no, "count mismatch: header says " + std::to_string(h.m) +
                                          " arcs, body has " + std::to_string(i));
        auto [u, v] = parse_endpoint_line(split_fields(line), line_no, "a", h.n);
        if (u == v) throw ParseError(line_no, "self-loop arc");
        edges.emplace_back(u, v);
        forward.push_back(u < v ? 1 : 0);
    }
    if (next_line(in, line, line_no))
        throw ParseError(line_no, "count mismatch: extra content after " +
                                      std::to_string(h.m) + " arcs");
    ParsedOrientation po;
    try {
        po.graph = build_graph(h.n, edges);
    } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
    }
    po.forward = std::move(forward);
    return po;
}

void write_orientation(const Orientation& mu, std::ostream& out) {
    const Graph& g = mu.graph();
    out << "p orient " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (EdgeId id = 0; id < g.num_edges(); ++id)
        out << "a " << mu.tail(id) << " " << mu.head(id) << "\n";
}

void write_orientation(const Orientation& mu, std::span<const EdgeId> edge_ids,
                       std::ostream& out) {
    out << "p orient " << mu.graph().num_vertices() << " " << edge_ids.size() << "\n";
    for (EdgeId id : edge_ids) out << "a " << mu.tail(id) << " " << mu.head(id) << "\n";
}

}  // namespace chroma
