#pragma once

#include <string>
#include <string_view>

#include "gluing/graph.hpp"

namespace gluing {

enum class GraphFormat { graph6, edgelist };

/// Serialized graph together with its format tag.
struct GraphText {
  GraphFormat format = GraphFormat::graph6;
  std::string payload;
};

/// graph6 line (no trailing newline). Orders up to 62 use the one-byte size
/// prefix; orders up to 258047 use the four-byte form. Larger orders throw
/// SizeError.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws ParseError with the byte offset of the first bad character.
Graph from_graph6(std::string_view text);

/// "n m" header, then m lines "u v" with 0-based endpoints.
std::string to_edgelist(const Graph& g);

/// Blank lines and lines starting with '#' are ignored. Throws ParseError
/// with the offending line number.
Graph from_edgelist(std::string_view text);

Graph parse_graph_text(const GraphText& input);
GraphText serialize_graph(const Graph& g, GraphFormat format);

/// Guesses the format of a file's contents: an edge list starts with two
/// integers on its first significant line.
GraphFormat sniff_format(std::string_view text);

}  // namespace gluing
