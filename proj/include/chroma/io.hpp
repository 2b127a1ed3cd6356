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

#ifndef CHROMA_IO_HPP
#define CHROMA_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "chroma/graph.hpp"
#include "chroma/vizing.hpp"

// Text formats, 0-based ids, '#' comment lines allowed anywhere:
//
//   edge list     header "p edge <n> <m>",   body "e <u> <v>" (one per edge)
//   orientation   header "p orient <n> <m>", body "a <u> <v>" (directed u->v)
//   coloring      header "c palette <k>",    body "<u> <v> <color>"
//
// Writers emit edges in id order; parse(write(x)) reproduces x exactly.

namespace chroma {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

Graph parse_edge_list(std::istream& in);

void write_edge_list(const Graph& g, std::ostream& out);
/// Writes the selected edges only (header m = selection size, same n).
void write_edge_list(const Graph& g, std::span<const EdgeId> edge_ids, std::ostream& out);

/// Requires c to cover every edge of g.
void write_coloring(const Graph& g, const Coloring& c, std::ostream& out);
Coloring parse_coloring(std::istream& in, const Graph& g);

struct ParsedOrientation {
    Graph graph;
    std::vector<std::uint8_t> forward;  // bind with Orientation(graph, forward)
};

ParsedOrientation parse_orientation(std::istream& in);
void write_orientation(const Orientation& mu, std::ostream& out);
void write_orientation(const Orientation& mu, std::span<const EdgeId> edge_ids,
                       std::ostream& out);

}  // namespace chroma

#endif  // CHROMA_IO_HPP
