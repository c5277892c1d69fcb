#include "chroma/graph.hpp"

#include <algorithm>
#include <string>

#include "chroma/error.hpp"

namespace chroma {

Graph::Graph() : Graph(0, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices) {
        throw Error("graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxVertices) + "]");
    }
    auto d = std::make_shared<Data>();
    d->n = n;
    d->rows.assign(static_cast<std::size_t>(n), 0);
    d->neighbors.resize(static_cast<std::size_t>(n));
    d->incident.resize(static_cast<std::size_t>(n));
    d->ids.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) {
            throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (e.u == e.v) {
            throw Error("loop at vertex " + std::to_string(e.u));
        }
        d->edges.push_back(e);
    }
    std::sort(d->edges.begin(), d->edges.end());
    d->edges.erase(std::unique(d->edges.begin(), d->edges.end()), d->edges.end());

    for (std::size_t id = 0; id < d->edges.size(); ++id) {
        const auto [u, v] = d->edges[id];
        d->rows[static_cast<std::size_t>(u)] |= vertex_bit(v);
        d->rows[static_cast<std::size_t>(v)] |= vertex_bit(u);
        d->ids[static_cast<std::size_t>(u * n + v)] = static_cast<int>(id);
        d->ids[static_cast<std::size_t>(v * n + u)] = static_cast<int>(id);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = d->neighbors[static_cast<std::size_t>(v)];
        auto& inc = d->incident[static_cast<std::size_t>(v)];
        for (VertexSet row = d->rows[static_cast<std::size_t>(v)]; row != 0; row &= row - 1) {
            const Vertex w = std::countr_zero(row);
            nb.push_back(w);
            inc.push_back(d->ids[static_cast<std::size_t>(v * n + w)]);
        }
    }
    if (n > 0) {
        auto [lo, hi] = std::minmax_element(d->neighbors.begin(), d->neighbors.end(),
                                            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        d->min_degree = static_cast<int>(lo->size());
        d->max_degree = static_cast<int>(hi->size());
    }
    data_ = std::move(d);
}

int Graph::edge_id(Vertex u, Vertex v) const {
    const int n = data_->n;
    if (u < 0 || v < 0 || u >= n || v >= n) return -1;
    return data_->ids[static_cast<std::size_t>(u * n + v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

VertexSet Graph::all_vertices() const {
    return data_->n == 64 ? ~VertexSet{0} : vertex_bit(data_->n) - 1;
}

bool Graph::is_connected() const {
    if (data_->n == 0) return true;
    VertexSet seen = vertex_bit(0);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f != 0; f &= f - 1) {
            next |= adjacency(std::countr_zero(f));
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all_vertices();
}

Graph Graph::without_edge(Edge e) const {
    std::vector<Edge> rest;
    rest.reserve(data_->edges.size());
    for (const Edge& f : data_->edges) {
        if (f != e) rest.push_back(f);
    }
    return Graph(data_->n, rest);
}

Graph Graph::without_vertex(Vertex x) const {
    return induced(all_vertices() & ~vertex_bit(x));
}

Graph Graph::induced(VertexSet keep) const {
    keep &= all_vertices();
    std::vector<int> relabel(static_cast<std::size_t>(data_->n), -1);
    int next = 0;
    for (VertexSet s = keep; s != 0; s &= s - 1) {
        relabel[static_cast<std::size_t>(std::countr_zero(s))] = next++;
    }
    std::vector<Edge> kept;
    for (const Edge& e : data_->edges) {
        const int a = relabel[static_cast<std::size_t>(e.u)];
        const int b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    return Graph(next, kept);
}

int Graph::edges_within(VertexSet s) const {
    int twice = 0;
    for (VertexSet t = s; t != 0; t &= t - 1) {
        twice += count(adjacency(std::countr_zero(t)) & s);
    }
    return twice / 2;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.data_ == b.data_ || (a.order() == b.order() && a.data_->edges == b.data_->edges);
}

DegreeStats degree_stats(const Graph& g) {
    if (g.order() == 0) {
        throw Error("degree statistics are undefined for the empty graph");
    }
    DegreeStats s;
    s.max_degree = g.max_degree();
    s.min_degree = g.min_degree();
    s.sequence.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) s.sequence.push_back(g.degree(v));
    return s;
}

}  // namespace chroma
