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

#include "chroma/generate.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

#include "chroma/rng.hpp"

namespace chroma {

namespace {

std::uint64_t pack(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Uniformly random labeled tree on n >= 2 vertices via Prufer decoding.
// Edge order is the decode order, which is fully determined by the sequence.
std::vector<std::pair<VertexId, VertexId>> random_tree(int n, SplitMix64& rng) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (n < 2) return edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (auto& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<size_t>(x)];

    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);

    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

}  // namespace

Generated generate(const GenSpec& spec) {
    require(spec.n >= 1, "vertex count must be positive");
    Generated out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    const int n = spec.n;

    switch (spec.family) {
        case Family::gnm: {
            long long max_m = static_cast<long long>(n) * (n - 1) / 2;
            require(spec.param >= 0 && spec.param <= max_m,
                    "gnm edge count must be in [0, n(n-1)/2]");
            SplitMix64 rng(spec.seed);
            std::unordered_set<std::uint64_t> seen;
            seen.reserve(static_cast<size_t>(spec.param) * 2);
            while (static_cast<long long>(edges.size()) < spec.param) {
                VertexId a = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
                VertexId b = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
                if (a == b) continue;
                VertexId u = std::min(a, b), v = std::max(a, b);
                if (!seen.insert(pack(u, v)).second) continue;
                edges.emplace_back(u, v);
            }
            break;
        }
        case Family::forest_union: {
            require(spec.param >= 1, "forest-union needs at least one layer");
            SplitMix64 rng(spec.seed);
            std::unordered_set<std::uint64_t> seen;
            for (long long layer = 0; layer < spec.param; ++layer) {
                auto tree = random_tree(n, rng);
                std::vector<std::pair<VertexId, VertexId>> kept;
                for (auto [u, v] : tree) {
                    if (seen.insert(pack(u, v)).second) {
                        edges.emplace_back(u, v);
                        kept.emplace_back(u, v);
                    }
                }
                out.forest_layers.push_back(std::move(kept));
            }
            out.arboricity_bound = static_cast<int>(spec.param);
            break;
        }
        case Family::cycle: {
            require(n >= 3, "cycle needs n >= 3");
            require(spec.param == 0, "cycle takes no param");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            out.arboricity_bound = 2;
            break;
        }
        case Family::complete: {
            require(spec.param == 0, "complete takes no param");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            out.arboricity_bound = (n + 1) / 2;
            break;
        }
        case Family::star: {
            require(spec.param == 0, "star takes no param");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            out.arboricity_bound = 1;
            break;
        }
    }
    out.graph = build_graph(n, edges);
    return out;
}

Family parse_family(std::string_view name) {
    if (name == "gnm") return Family::gnm;
    if (name == "forest-union") return Family::forest_union;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::gnm: return "gnm";
        case Family::forest_union: return "forest-union";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
    }
    return "?";
}

}  // namespace chroma
