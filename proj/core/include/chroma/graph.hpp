#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace chroma {

using Vertex = int;

/// Vertex subset as a bitmask; bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << v; }
inline int count(VertexSet s) { return std::popcount(s); }

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool has(Vertex x) const { return x == u || x == v; }
    constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: a bit row per vertex for O(1) set algebra, and a
/// sorted neighbour list for iteration. Edges carry dense ids in sorted
/// (u, v) order. Copies share the underlying storage.
class Graph {
public:
    Graph();

    /// Throws chroma::Error on loops, out-of-range endpoints, or n outside
    /// [0, kMaxVertices]. Duplicate edges are collapsed.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return data_->n; }
    int size() const { return static_cast<int>(data_->edges.size()); }

    std::span<const Edge> edges() const { return data_->edges; }
    const Edge& edge(int id) const { return data_->edges[static_cast<std::size_t>(id)]; }

    /// Dense id of edge {u,v}, or -1 if absent.
    int edge_id(Vertex u, Vertex v) const;
    int edge_id(Edge e) const { return edge_id(e.u, e.v); }
    bool has_edge(Vertex u, Vertex v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    int degree(Vertex v) const { return static_cast<int>(data_->neighbors[static_cast<std::size_t>(v)].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return data_->neighbors[static_cast<std::size_t>(v)]; }
    VertexSet adjacency(Vertex v) const { return data_->rows[static_cast<std::size_t>(v)]; }
    VertexSet all_vertices() const;

    /// Edge ids incident to v, in neighbour order.
    std::span<const int> incident_edges(Vertex v) const { return data_->incident[static_cast<std::size_t>(v)]; }

    /// 0 for the empty graph.
    int max_degree() const { return data_->max_degree; }
    int min_degree() const { return data_->min_degree; }

    bool is_connected() const;

    Graph without_edge(Edge e) const;
    Graph without_vertex(Vertex x) const;
    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in index order.
    Graph induced(VertexSet keep) const;
    /// Number of edges with both ends in `s`.
    int edges_within(VertexSet s) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    struct Data {
        int n = 0;
        int max_degree = 0;
        int min_degree = 0;
        std::vector<Edge> edges;
        std::vector<VertexSet> rows;
        std::vector<std::vector<Vertex>> neighbors;
        std::vector<std::vector<int>> incident;
        std::vector<int> ids;  // n*n, -1 where no edge
    };
    std::shared_ptr<const Data> data_;
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> sequence;  // indexed by vertex
};

/// Throws chroma::Error when n = 0.
DegreeStats degree_stats(const Graph& g);

}  // namespace chroma
