#pragma once

#include <functional>
#include <span>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

/// Vizing's adjacency count at a critical edge xy of a class-2 graph: x has
/// at least Δ - d(y) + 1 neighbours of degree Δ other than y.
CheckResult check_vizing_adjacency(const Graph& g, Vertex x, Vertex y);

/// Sampled Δ-colorings of G - e for an edge e of G.
using ColoringSource = std::function<std::span<const PartialEdgeColoring>(Edge)>;

/// Degree dichotomy around a low-degree vertex `a` of a Δ-critical graph.
///
/// Applies when 3 d(a) <= 2Δ - n + 2. Then every other vertex v has
/// d(v) >= Δ - d(a) + 1 or d(v) <= n - Δ + 2 d(a) - 6; and each high v
/// shares at most one missing color with a and b, for every Δ-neighbour b
/// of a and every coloring `source` yields for G - ab.
CheckResult check_degree_dichotomy(const Graph& g, Vertex a, const ColoringSource& source);

}  // namespace chroma
