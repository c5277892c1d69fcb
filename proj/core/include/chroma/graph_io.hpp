#pragma once

#include <string>
#include <string_view>

#include "chroma/graph.hpp"

namespace chroma {

/// Largest order representable in short-form graph6.
inline constexpr int kMaxGraph6Order = 62;

/// Parses one graph6 line. A leading ">>graph6<<" header and surrounding
/// whitespace are accepted. Throws ParseError on a bad length prefix, a
/// bit region of the wrong length, or bytes outside 63..126.
Graph parse_graph6(std::string_view text);

/// Short-form graph6; throws chroma::Error for n > 62.
std::string to_graph6(const Graph& g);

/// Parses "u v" lines. An optional first data line "n <count>" fixes the
/// order; otherwise it is one more than the largest index. Blank lines and
/// lines starting with '#' are ignored, duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

/// Picks graph6 when the first data line is a single graph6 token and the
/// edge-list reader otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace chroma
