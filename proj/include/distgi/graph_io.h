// Copyright 2026 The distgi Authors.
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

// Readers and writers for the graph6 and DIMACS edge formats.

#ifndef DISTGI_GRAPH_IO_H_
#define DISTGI_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "distgi/graph.h"

namespace distgi {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One graph6 line, without the trailing newline. An optional ">>graph6<<"
// header is accepted. Rejects non-canonical size prefixes and non-zero padding
// bits so that emit_graph6(parse_graph6(x)) == x for every accepted x.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// "p edge n m" followed by "e u v" lines (1-indexed); "c" lines are comments.
// The edge count in the header is not enforced.
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kDimacs };

GraphFormat parse_format_name(std::string_view name);

// graph6 if the extension says so or if the first non-blank line consists of
// graph6 characters only; DIMACS otherwise.
GraphFormat sniff_format(std::string_view path, std::string_view contents);

Graph parse_graph(std::string_view contents, GraphFormat format);

// Throws std::runtime_error if the file cannot be read, ParseError if it is
// malformed.
std::string read_file(const std::string& path);
Graph read_graph_file(const std::string& path,
                      GraphFormat format = GraphFormat::kAuto);

}  // namespace distgi

#endif  // DISTGI_GRAPH_IO_H_
