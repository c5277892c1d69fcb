#include "chroma/kempe.hpp"

#include <algorithm>
#include <string>

#include "chroma/error.hpp"

namespace chroma {

namespace {

void check_colors(const PartialEdgeColoring& c, Color alpha, Color beta) {
    const int k = c.palette_size();
    if (alpha < 1 || alpha > k || beta < 1 || beta > k) {
        throw ColoringError("chain colors (" + std::to_string(alpha) + "," + std::to_string(beta) +
                            ") outside [1, " + std::to_string(k) + "]");
    }
    if (alpha == beta) throw ColoringError("chain colors must differ");
}

// The unique edge at v colored col, or -1. Two such edges means the
// component is not a path or cycle.
int unique_edge(const PartialEdgeColoring& c, Vertex v, Color col) {
    int found = -1;
    for (int id : c.graph().incident_edges(v)) {
        if (c.color(id) != col) continue;
        if (found >= 0) {
            throw ColoringError("vertex " + std::to_string(v) + " has two edges colored " + std::to_string(col));
        }
        found = id;
    }
    return found;
}

struct Walk {
    std::vector<Vertex> vertices;  // excluding the start
    std::vector<int> edges;
    bool closed = false;
};

Walk walk(const PartialEdgeColoring& c, Vertex start, Color first, Color second) {
    Walk w;
    Vertex v = start;
    Color col = first;
    int prev = -1;
    for (int guard = 0; guard <= c.graph().size(); ++guard) {
        const int id = unique_edge(c, v, col);
        if (id < 0 || id == prev) return w;
        const Vertex next = c.graph().edge(id).other(v);
        w.edges.push_back(id);
        if (next == start) {
            w.closed = true;
            return w;
        }
        w.vertices.push_back(next);
        prev = id;
        v = next;
        col = col == first ? second : first;
    }
    throw ColoringError("chain walk did not terminate");
}

}  // namespace

bool KempeChain::contains_edge(int edge_id) const {
    return std::find(edges.begin(), edges.end(), edge_id) != edges.end();
}

std::optional<std::size_t> KempeChain::position(Vertex v) const {
    const auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

bool KempeChain::is_endpoint(Vertex v) const {
    return is_path() && !vertices.empty() && (v == front() || v == back());
}

KempeChain KempeChain::segment(Vertex from, Vertex to) const {
    if (!is_path()) throw ColoringError("segments are only defined on path chains");
    const auto i = position(from);
    const auto j = position(to);
    if (!i || !j) throw ColoringError("segment bounds are not on the chain");
    KempeChain out{alpha, beta, ChainShape::Path, {}, {}};
    if (*i <= *j) {
        out.vertices.assign(vertices.begin() + static_cast<std::ptrdiff_t>(*i),
                            vertices.begin() + static_cast<std::ptrdiff_t>(*j) + 1);
        out.edges.assign(edges.begin() + static_cast<std::ptrdiff_t>(*i),
                         edges.begin() + static_cast<std::ptrdiff_t>(*j));
    } else {
        for (std::size_t p = *i + 1; p-- > *j;) out.vertices.push_back(vertices[p]);
        for (std::size_t p = *i; p-- > *j;) out.edges.push_back(edges[p]);
    }
    return out;
}

KempeChain kempe_chain(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta) {
    check_colors(c, alpha, beta);
    if (x < 0 || x >= c.graph().order()) throw ColoringError("vertex " + std::to_string(x) + " out of range");

    KempeChain chain{alpha, beta, ChainShape::Path, {}, {}};
    Walk forward = walk(c, x, alpha, beta);
    if (forward.closed) {
        chain.shape = ChainShape::Cycle;
        chain.vertices.push_back(x);
        chain.vertices.insert(chain.vertices.end(), forward.vertices.begin(), forward.vertices.end());
        chain.edges = std::move(forward.edges);
        return chain;
    }
    Walk backward = walk(c, x, beta, alpha);
    chain.vertices.assign(backward.vertices.rbegin(), backward.vertices.rend());
    chain.vertices.push_back(x);
    chain.vertices.insert(chain.vertices.end(), forward.vertices.begin(), forward.vertices.end());
    chain.edges.assign(backward.edges.rbegin(), backward.edges.rend());
    chain.edges.insert(chain.edges.end(), forward.edges.begin(), forward.edges.end());

    const bool x_is_end = chain.front() == x || chain.back() == x;
    const bool reverse = x_is_end ? chain.back() == x && chain.front() != x : chain.back() < chain.front();
    if (reverse) {
        std::reverse(chain.vertices.begin(), chain.vertices.end());
        std::reverse(chain.edges.begin(), chain.edges.end());
    }
    return chain;
}

std::vector<KempeChain> chains_from(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta) {
    const KempeChain chain = kempe_chain(c, x, alpha, beta);
    std::vector<KempeChain> out;
    if (!chain.is_path() || chain.is_trivial()) return out;
    if (chain.front() != x) out.push_back(chain.segment(x, chain.front()));
    if (chain.back() != x) out.push_back(chain.segment(x, chain.back()));
    return out;
}

namespace detail {
void exchange(PartialEdgeColoring& c, const KempeChain& chain) {
    for (int id : chain.edges) {
        const Color now = c.color(id);
        ColoringAccess::assign(c, id, now == chain.alpha ? chain.beta : chain.alpha);
    }
}
}  // namespace detail

PartialEdgeColoring kempe_swap(const PartialEdgeColoring& c, const KempeChain& chain) {
    if (chain.vertices.empty()) throw ColoringError("empty chain");
    const KempeChain now = kempe_chain(c, chain.front(), chain.alpha, chain.beta);
    auto sorted = [](std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    if (sorted(now.edges) != sorted(chain.edges)) {
        throw ColoringError("stale chain: the coloring changed since the chain was extracted");
    }
    PartialEdgeColoring out = c;
    detail::exchange(out, chain);
    return out;
}

PartialEdgeColoring swap_at(const PartialEdgeColoring& c, Vertex x, Color alpha, Color beta) {
    PartialEdgeColoring out = c;
    detail::exchange(out, kempe_chain(c, x, alpha, beta));
    return out;
}

PartialEdgeColoring swap_subchain(const PartialEdgeColoring& c, Vertex x, Vertex y, Color alpha, Color beta) {
    const KempeChain chain = kempe_chain(c, x, alpha, beta);
    if (!chain.contains(y)) {
        throw ColoringError(std::to_string(x) + " and " + std::to_string(y) + " are not (" +
                            std::to_string(alpha) + "," + std::to_string(beta) + ")-linked");
    }
    if (x == y) return c;
    if (!chain.is_path()) throw ColoringError("subchain bounds lie on a cycle");
    PartialEdgeColoring out = c;
    detail::exchange(out, chain.segment(x, y));
    if (!out.is_proper()) {
        throw ColoringError("exchanging colors between " + std::to_string(x) + " and " + std::to_string(y) +
                            " leaves the coloring improper");
    }
    return out;
}

bool linked(const PartialEdgeColoring& c, Vertex x, Vertex y, Color alpha, Color beta) {
    check_colors(c, alpha, beta);
    if (x == y) return true;
    return kempe_chain(c, x, alpha, beta).contains(y);
}

bool is_elementary(const PartialEdgeColoring& c, std::span<const Vertex> s) {
    VertexSet seen = 0;
    ColorSet acc = 0;
    for (Vertex v : s) {
        if (seen & vertex_bit(v)) continue;
        seen |= vertex_bit(v);
        if (acc & c.missing(v)) return false;
        acc |= c.missing(v);
    }
    return true;
}

}  // namespace chroma
