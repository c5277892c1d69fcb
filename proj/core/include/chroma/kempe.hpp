#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chroma/coloring.hpp"

namespace chroma {

enum class ChainShape { Path, Cycle };

/// A maximal connected subgraph whose edges are colored alpha or beta.
///
/// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`; for a cycle the last
/// edge closes back to `vertices[0]`. A vertex missing both colors forms a
/// trivial path with no edges.
struct KempeChain {
    Color alpha = 0;
    Color beta = 0;
    ChainShape shape = ChainShape::Path;
    std::vector<Vertex> vertices;
    std::vector<int> edges;

    bool is_path() const { return shape == ChainShape::Path; }
    bool is_trivial() const { return edges.empty(); }
    bool contains(Vertex v) const { return position(v).has_value(); }
    bool contains_edge(int edge_id) const;
    std::optional<std::size_t> position(Vertex v) const;
    /// True for the two ends of a path (the single vertex of a trivial one).
    bool is_endpoint(Vertex v) const;
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    /// Subpath of a path chain between two of its vertices, oriented from
    /// `from`. Throws ColoringError for cycles or foreign vertices.
    KempeChain segment(Vertex from, Vertex to) const;
};

/// The (alpha, beta)-chain through x. A path is oriented from x when x is an
/// end, otherwise from its lower-indexed end; a cycle starts at x and
/// leaves along its alpha edge. Throws ColoringError if alpha == beta, either
/// color is outside [1, k], or the component is not a path or cycle (which
/// only happens in improper intermediate states).
KempeChain kempe_chain(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta);

/// Every subchain that starts at x and ends at another vertex missing exactly
/// one of the two colors: one candidate when x ends the path, two when it is
/// interior, none for cycles and trivial chains.
std::vector<KempeChain> chains_from(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta);

/// Kempe change: exchange the two colors on exactly the chain's edges.
/// Throws ColoringError if the chain no longer matches the coloring.
PartialEdgeColoring kempe_swap(const PartialEdgeColoring& c, const KempeChain& chain);

/// Kempe change on the whole chain through x.
PartialEdgeColoring swap_at(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta);

/// Exchange colors only on the subpath between x and y of their common
/// (alpha, beta)-path. Throws ColoringError if x and y are not linked by a
/// path, or if the exchange leaves the coloring improper.
PartialEdgeColoring swap_subchain(const PartialEdgeColoring& c, Vertex x, Vertex y, Color alpha, Color beta);

/// x and y lie in the same (alpha, beta)-chain.
bool linked(const PartialEdgeColoring& c, Vertex x, Vertex y, Color alpha, Color beta);

/// Missing sets of the (distinct) members of `s` are pairwise disjoint.
bool is_elementary(const PartialEdgeColoring& c, std::span<const Vertex> s);

namespace detail {
/// Exchange the two colors on `chain` without checking the result.
void exchange(PartialEdgeColoring& c, const KempeChain& chain);
}  // namespace detail

}  // namespace chroma
