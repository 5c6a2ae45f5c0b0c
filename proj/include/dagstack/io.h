// Copyright 2026 The dagstack Authors
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


#ifndef DAGSTACK_IO_H_
#define DAGSTACK_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"

#include "dagstack/adversary.h"
#include "dagstack/block_cut_tree.h"
#include "dagstack/engine.h"
#include "dagstack/graph.h"
#include "dagstack/hpartition.h"
#include "dagstack/layout.h"
#include "dagstack/twotree.h"

namespace dagstack {

using Json = nlohmann::json;

enum class GraphFormat { kAuto, kJson, kEdgeList };

// {"n": 3, "edges": [[0, 1], [1, 2]], "names": [...]}; names are optional.
// Throws kParseError (with the byte offset) or kInvariantViolation.
DirectedGraph parse_graph_json(std::string_view text);
DirectedGraph graph_from_json(const Json& j);
Json graph_to_json(const DirectedGraph& g);

// One "tail head" pair per line, '#' starts a comment. An optional line
// "n COUNT" fixes the vertex count, otherwise it is the largest id plus one.
// Throws kParseError (with the line number) or kInvariantViolation.
DirectedGraph parse_edge_list(std::string_view text);
std::string graph_to_edge_list(const DirectedGraph& g);

// kAuto picks JSON when the first non-blank character is '{'.
DirectedGraph load_graph(const std::string& path,
                         GraphFormat format = GraphFormat::kAuto);

std::string read_file(const std::string& path);
// Throws kIoError.
void write_file(const std::string& path, std::string_view content);

// Sorted keys, two-space indent, trailing LF.
std::string canonical_dump(const Json& j);

Json layout_to_json(const Layout& l);
// Stacks are keyed "tail-head". Throws kParseError.
Layout layout_from_json(const Json& j);

Json sequence_to_json(const ConstructionSequence& seq);
Json partition_to_json(const DirectedHPartition& hp);
Json adversary_spec_to_json(const AdversarySpec& spec);
Json bound_report_to_json(const BoundReport& report);

std::string quotient_to_dot(const DirectedHPartition& hp);
std::string block_cut_tree_to_dot(const DirectedGraph& g,
                                  const BlockCutTree& bct);

// Vertices evenly spaced on a baseline in layout order, one semicircular arc
// per edge above it, coloured by stack, with an arrowhead at the head.
std::string render_arc_diagram_svg(const Layout& l);
// Throws kIoError.
void render_arc_diagram(const Layout& l, const std::string& path);

}  // namespace dagstack

#endif  // DAGSTACK_IO_H_
