#pragma once

#include <nlohmann/json.hpp>

#include "chroma/coloring.hpp"

namespace chroma {

/// {"k": int, "uncolored": [u, v] | null, "edges": [[u, v, color], ...]}
/// with color 0 for uncolored edges, edges in id order.
nlohmann::json coloring_to_json(const PartialEdgeColoring& c);

/// Inverse of coloring_to_json against a known graph. Throws ParseError on
/// schema problems and ColoringError if the colors are improper or name
/// pairs that are not edges of `g`.
PartialEdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace chroma
