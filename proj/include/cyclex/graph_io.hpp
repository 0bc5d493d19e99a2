#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Standard graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string; an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws ParseError on anything else.
Graph from_graph6(std::string_view text);

/// Edge-list text: first line "n" (a trailing ';' is allowed), then one
/// "u v" pair per line. Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads every non-empty line of a graph6 file.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Named catalog: "K<t>", "C<t>", "P<t>", "E<t>" (edgeless), "K<a>,<b>,..."
/// (complete multipartite). Falls back to graph6 for anything else.
Graph graph_from_spec(std::string_view spec);

}  // namespace cyclex
