#pragma once

#include <span>
#include <vector>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

/// Path v0 v1 ... vp starting with the uncolored edge v0v1, where the color
/// of each later edge v_{i-1}v_i is missing at some v_j with j <= i-2.
struct KiersteadPath {
    std::vector<Vertex> vertices;

    std::size_t vertex_count() const { return vertices.size(); }
    Vertex operator[](std::size_t i) const { return vertices[i]; }
};

/// Enumeration is capped at this many vertices.
inline constexpr std::size_t kMaxKiersteadVertices = 5;

CheckResult validate_kierstead_structure(const PartialEdgeColoring& c, const KiersteadPath& path);

/// Every one-vertex extension of `seed` that is again a Kierstead path,
/// ordered by the new vertex. Seeds at the size cap yield nothing.
std::vector<KiersteadPath> extend_kierstead(const PartialEdgeColoring& c, const KiersteadPath& seed);

/// All Kierstead paths with `vertex_count` vertices (2..5) starting at
/// `v0`, an end of the gap edge. Deterministic lexicographic order.
std::vector<KiersteadPath> enumerate_kierstead(const PartialEdgeColoring& c, Vertex v0, std::size_t vertex_count);

/// Four-vertex path at a critical edge: if min(d(v1), d(v2)) < Δ the
/// vertex set is elementary.
CheckResult check_kierstead4_elementary(const PartialEdgeColoring& c, const KiersteadPath& path);

/// Four-vertex path at a critical edge: v3 shares at most one missing color
/// with v0 and v1 together.
CheckResult check_kierstead4_intersection(const PartialEdgeColoring& c, const KiersteadPath& path);

CheckResult validate_kierstead4(const PartialEdgeColoring& c, const KiersteadPath& path);

}  // namespace chroma
