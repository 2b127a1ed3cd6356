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

#ifndef CHROMA_VERIFY_HPP
#define CHROMA_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chroma/ad_split.hpp"
#include "chroma/color.hpp"
#include "chroma/degree_split.hpp"
#include "chroma/graph.hpp"
#include "chroma/vizing.hpp"

// Checkers recompute everything from raw edges, labels and colors; cached
// counts inside the checked structures are never trusted.

namespace chroma {

struct PairViolation {
    EdgeId first, second;
};

/// First pair of incident same-colored edges in edge-id scan order, or
/// nullopt. Throws std::invalid_argument on an uncovered edge.
std::optional<PairViolation> check_proper(const Graph& g, const Coloring& c);
std::optional<PairViolation> check_proper(const Graph& g, std::span<const EdgeId> edge_ids,
                                          const Coloring& c);

struct PaletteExcess {
    int max_used;
    int bound;
};

std::optional<PaletteExcess> check_palette(const Coloring& c, int bound);

struct VertexViolation {
    VertexId vertex;
    int value;
};

/// |sum of labels incident on v| <= kappa for every v (labels recounted).
std::optional<VertexViolation> check_discrepancy(const Graph& g, const EdgePartition& p,
                                                 int kappa);
/// Oriented variant: the incoming and the outgoing sums both bounded.
std::optional<VertexViolation> check_discrepancy(const Graph& g, const Orientation& mu,
                                                 const OrientedPartition& p, int kappa);

struct OrientationViolation {
    std::string what;
};

/// Per-vertex outdegree <= bound plus acyclicity (Kahn elimination).
std::optional<OrientationViolation> check_orientation(const Graph& g, const Orientation& mu,
                                                      int outdeg_bound);

struct AdViolation {
    std::string check;
    std::string detail;
};

/// Partition, AD validity, endpoint bounds; replay maximality when the edge
/// set has at most replay_cap edges.
std::optional<AdViolation> check_ad_decomposition(const Graph& g,
                                                  std::span<const EdgeId> edge_ids,
                                                  const Orientation& mu,
                                                  const ADDecomposition& dec,
                                                  int replay_cap = 100);

/// Evaluates every per-level inequality the recursion promises; returns the
/// violated claim tags (with details), empty when all hold.
std::vector<std::string> check_trace(const RecursionTrace& t, const Graph& root);

}  // namespace chroma

#endif  // CHROMA_VERIFY_HPP
