#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma::fixtures {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph petersen();
/// Petersen graph with vertex 0 removed: n=9, Δ=3, 12 edges.
Graph petersen_minus_vertex();
/// K4 with one edge replaced by a path of length two: n=5, Δ=3, δ=2.
Graph subdivided_k4();

/// The hand-listed fixture family emitted by `chroma gen-basic`:
/// odd cycles C3..C9, complete graphs K2..K7, Petersen, Petersen minus a
/// vertex and the subdivided K4, each paired with a short name.
std::vector<std::pair<std::string, Graph>> basic_family();

}  // namespace chroma::fixtures
