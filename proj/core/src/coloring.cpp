#include "chroma/coloring.hpp"

#include <string>

#include "chroma/error.hpp"

namespace chroma {

std::vector<Color> colors_in(ColorSet s) {
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(color_count(s)));
    for (; s != 0; s &= s - 1) out.push_back(lowest_color(s));
    return out;
}

PartialEdgeColoring::PartialEdgeColoring(const Graph& g, int k)
    : graph_(g), k_(k), colors_(static_cast<std::size_t>(g.size()), kUncolored),
      present_(static_cast<std::size_t>(g.order()), 0) {
    if (k < g.max_degree()) {
        throw ColoringError("palette size " + std::to_string(k) + " is below the maximum degree " +
                            std::to_string(g.max_degree()));
    }
    if (k < 1 || k > kMaxPalette) {
        throw ColoringError("palette size " + std::to_string(k) + " outside [1, " +
                            std::to_string(kMaxPalette) + "]");
    }
}

PartialEdgeColoring PartialEdgeColoring::empty(const Graph& g, Edge uncolored, int k) {
    if (!g.has_edge(uncolored)) {
        throw ColoringError("{" + std::to_string(uncolored.u) + "," + std::to_string(uncolored.v) +
                            "} is not an edge");
    }
    PartialEdgeColoring c(g, k);
    c.uncolored_ = uncolored;
    return c;
}

PartialEdgeColoring PartialEdgeColoring::blank(const Graph& g, int k) { return PartialEdgeColoring(g, k); }

PartialEdgeColoring PartialEdgeColoring::from_colors(const Graph& g, int k, std::vector<Color> colors,
                                                     std::optional<Edge> uncolored) {
    PartialEdgeColoring c(g, k);
    if (colors.size() != static_cast<std::size_t>(g.size())) {
        throw ColoringError("expected " + std::to_string(g.size()) + " edge colors, got " +
                            std::to_string(colors.size()));
    }
    for (Color col : colors) {
        if (col < 0 || col > k) {
            throw ColoringError("color " + std::to_string(col) + " outside [0, " + std::to_string(k) + "]");
        }
    }
    c.colors_ = std::move(colors);
    for (Vertex v = 0; v < g.order(); ++v) c.refresh(v);
    if (uncolored) {
        const int id = g.edge_id(*uncolored);
        if (id < 0) throw ColoringError("designated uncolored pair is not an edge");
        if (c.colors_[static_cast<std::size_t>(id)] != kUncolored) {
            throw ColoringError("designated uncolored edge carries a color");
        }
        c.uncolored_ = Edge(uncolored->u, uncolored->v);
    }
    if (!c.is_proper()) throw ColoringError("assignment is not a proper edge coloring");
    return c;
}

Color PartialEdgeColoring::color(Vertex u, Vertex v) const {
    const int id = graph_.edge_id(u, v);
    if (id < 0) {
        throw ColoringError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    }
    return colors_[static_cast<std::size_t>(id)];
}

ColorSet PartialEdgeColoring::missing(std::span<const Vertex> vs) const {
    ColorSet out = 0;
    for (Vertex v : vs) out |= missing(v);
    return out;
}

int PartialEdgeColoring::edge_with(Vertex v, Color c) const {
    if (!contains(present(v), c)) return -1;
    for (int id : graph_.incident_edges(v)) {
        if (colors_[static_cast<std::size_t>(id)] == c) return id;
    }
    return -1;
}

Vertex PartialEdgeColoring::neighbor_with(Vertex v, Color c) const {
    const int id = edge_with(v, c);
    return id < 0 ? -1 : graph_.edge(id).other(v);
}

int PartialEdgeColoring::uncolored_count() const {
    int n = 0;
    for (Color c : colors_) n += c == kUncolored ? 1 : 0;
    return n;
}

bool PartialEdgeColoring::is_gap_coloring() const {
    if (!uncolored_) return false;
    const int gap = graph_.edge_id(*uncolored_);
    for (int id = 0; id < graph_.size(); ++id) {
        const bool blank = colors_[static_cast<std::size_t>(id)] == kUncolored;
        if (blank != (id == gap)) return false;
    }
    return true;
}

bool PartialEdgeColoring::is_proper() const {
    for (Vertex v = 0; v < graph_.order(); ++v) {
        ColorSet seen = 0;
        for (int id : graph_.incident_edges(v)) {
            const Color c = colors_[static_cast<std::size_t>(id)];
            if (c == kUncolored) continue;
            if (c < 0 || c > k_ || contains(seen, c)) return false;
            seen |= color_bit(c);
        }
    }
    return true;
}

bool PartialEdgeColoring::bookkeeping_consistent() const {
    for (Vertex v = 0; v < graph_.order(); ++v) {
        ColorSet expect = 0;
        for (int id : graph_.incident_edges(v)) {
            const Color c = colors_[static_cast<std::size_t>(id)];
            if (c != kUncolored) expect |= color_bit(c);
        }
        if (expect != present(v)) return false;
        if ((present(v) | missing(v)) != palette_mask(k_) || (present(v) & missing(v)) != 0) return false;
    }
    return true;
}

PartialEdgeColoring PartialEdgeColoring::with_color(Edge e, Color c) const {
    const int id = graph_.edge_id(e);
    if (id < 0) throw ColoringError("not an edge");
    if (c < 0 || c > k_) throw ColoringError("color " + std::to_string(c) + " outside [0, " + std::to_string(k_) + "]");
    PartialEdgeColoring out = *this;
    out.assign(id, c);
    if (c != kUncolored && uncolored_ && *uncolored_ == graph_.edge(id)) out.uncolored_.reset();
    if (!out.is_proper()) {
        throw ColoringError("color " + std::to_string(c) + " on {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} clashes with an adjacent edge");
    }
    return out;
}

void PartialEdgeColoring::assign(int edge_id, Color c) {
    colors_[static_cast<std::size_t>(edge_id)] = c;
    const Edge& e = graph_.edge(edge_id);
    refresh(e.u);
    refresh(e.v);
}

void PartialEdgeColoring::refresh(Vertex v) {
    ColorSet p = 0;
    for (int id : graph_.incident_edges(v)) {
        const Color c = colors_[static_cast<std::size_t>(id)];
        if (c != kUncolored) p |= color_bit(c);
    }
    present_[static_cast<std::size_t>(v)] = p;
}

bool operator==(const PartialEdgeColoring& a, const PartialEdgeColoring& b) {
    return a.k_ == b.k_ && a.uncolored_ == b.uncolored_ && a.colors_ == b.colors_ && a.graph_ == b.graph_;
}

}  // namespace chroma
