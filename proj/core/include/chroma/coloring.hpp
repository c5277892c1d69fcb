#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Colors are 1-based; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Set of colors as a bitmask; bit c set iff color c is a member. Bit 0 is
/// never used.
using ColorSet = std::uint64_t;

inline constexpr int kMaxPalette = 62;

inline constexpr ColorSet color_bit(Color c) { return ColorSet{1} << c; }
/// {1..k}
inline constexpr ColorSet palette_mask(int k) { return ((ColorSet{1} << k) - 1) << 1; }
inline constexpr bool contains(ColorSet s, Color c) { return c > 0 && ((s >> c) & 1) != 0; }
inline int color_count(ColorSet s) { return std::popcount(s); }
/// Smallest member; `s` must be non-empty.
inline Color lowest_color(ColorSet s) { return std::countr_zero(s); }
std::vector<Color> colors_in(ColorSet s);

namespace detail {
struct ColoringAccess;
}

/// An edge k-coloring of G in which some edges may be uncolored, together
/// with exact per-vertex present/missing color sets.
///
/// The usual state is a member of C^k(G - e): every edge except the
/// designated `uncolored_edge()` carries a color in [1, k] and no two edges
/// at a vertex share one. Values are immutable from the outside; every
/// operation that changes colors returns a new value.
class PartialEdgeColoring {
public:
    /// All edges uncolored, `uncolored` designated as the gap edge.
    /// Throws ColoringError if `uncolored` is not an edge or k < Δ(G).
    static PartialEdgeColoring empty(const Graph& g, Edge uncolored, int k);

    /// All edges uncolored, no designated gap. Throws ColoringError if k < Δ(G).
    static PartialEdgeColoring blank(const Graph& g, int k);

    /// `colors` is indexed by edge id. Throws ColoringError unless the
    /// assignment is proper, colors lie in [0, k], and `uncolored` (if set)
    /// is an edge carrying 0.
    static PartialEdgeColoring from_colors(const Graph& g, int k, std::vector<Color> colors,
                                           std::optional<Edge> uncolored);

    const Graph& graph() const { return graph_; }
    int palette_size() const { return k_; }
    std::optional<Edge> uncolored_edge() const { return uncolored_; }

    Color color(int edge_id) const { return colors_[static_cast<std::size_t>(edge_id)]; }
    /// Throws ColoringError if {u,v} is not an edge.
    Color color(Vertex u, Vertex v) const;
    Color color(Edge e) const { return color(e.u, e.v); }
    std::span<const Color> colors() const { return colors_; }

    ColorSet present(Vertex v) const { return present_[static_cast<std::size_t>(v)]; }
    ColorSet missing(Vertex v) const { return palette_mask(k_) & ~present(v); }
    /// Union of the missing sets of `vs`.
    ColorSet missing(std::span<const Vertex> vs) const;

    /// Id of the edge at v colored c, or -1.
    int edge_with(Vertex v, Color c) const;
    /// Neighbour of v across the edge colored c, or -1.
    Vertex neighbor_with(Vertex v, Color c) const;

    int uncolored_count() const;
    bool is_full() const { return uncolored_count() == 0; }
    /// Every edge except the designated one is colored (and it is not).
    bool is_gap_coloring() const;

    /// Independent full scan: every colored edge has a color in [1, k] and no
    /// two edges at a vertex share a color.
    bool is_proper() const;
    /// Present/missing sets match a recomputation from the edge colors.
    bool bookkeeping_consistent() const;

    /// Copy with edge e set to color c (0 uncolors it). Throws ColoringError
    /// if the result is improper or c is outside [0, k].
    PartialEdgeColoring with_color(Edge e, Color c) const;

    friend bool operator==(const PartialEdgeColoring& a, const PartialEdgeColoring& b);

private:
    friend struct detail::ColoringAccess;

    PartialEdgeColoring(const Graph& g, int k);

    void assign(int edge_id, Color c);
    void refresh(Vertex v);

    Graph graph_;
    int k_ = 0;
    std::optional<Edge> uncolored_;
    std::vector<Color> colors_;
    std::vector<ColorSet> present_;
};

namespace detail {

/// Raw mutation for in-library algorithms that tolerate (or immediately
/// repair) improper intermediate states: swap scripts and the exact oracle.
struct ColoringAccess {
    static void assign(PartialEdgeColoring& c, int edge_id, Color color) { c.assign(edge_id, color); }
    static void set_gap(PartialEdgeColoring& c, std::optional<Edge> e) { c.uncolored_ = e; }
};

}  // namespace detail

}  // namespace chroma
