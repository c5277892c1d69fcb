#include "chroma/degree_lemmas.hpp"

#include <string>

namespace chroma {

CheckResult check_vizing_adjacency(const Graph& g, Vertex x, Vertex y) {
    if (!g.has_edge(x, y)) return CheckResult::structural("not an edge");
    const int delta = g.max_degree();
    int full = 0;
    for (Vertex w : g.neighbors(x)) full += (w != y && g.degree(w) == delta) ? 1 : 0;
    const int need = delta - g.degree(y) + 1;
    if (full >= need) return CheckResult::ok();
    return CheckResult::violation("vertex " + std::to_string(x) + " has " + std::to_string(full) +
                                  " maximum-degree neighbours besides " + std::to_string(y) + ", needs " +
                                  std::to_string(need));
}

CheckResult check_degree_dichotomy(const Graph& g, Vertex a, const ColoringSource& source) {
    const int n = g.order();
    const int delta = g.max_degree();
    const int da = g.degree(a);
    if (3 * da > 2 * delta - n + 2) {
        return CheckResult::inapplicable("d(a) exceeds (2Δ - n + 2)/3");
    }
    const int high = delta - da + 1;
    const int low = n - delta + 2 * da - 6;
    for (Vertex v = 0; v < n; ++v) {
        if (v == a) continue;
        const int dv = g.degree(v);
        if (dv < high && dv > low) {
            return CheckResult::violation("vertex " + std::to_string(v) + " has degree " + std::to_string(dv) +
                                          " strictly between " + std::to_string(low) + " and " + std::to_string(high));
        }
    }
    for (Vertex b : g.neighbors(a)) {
        if (g.degree(b) != delta) continue;
        for (const PartialEdgeColoring& phi : source(Edge(a, b))) {
            const ColorSet ab = phi.missing(a) | phi.missing(b);
            for (Vertex v = 0; v < n; ++v) {
                if (v == a || g.degree(v) < high) continue;
                if (color_count(phi.missing(v) & ab) > 1) {
                    return CheckResult::violation("vertex " + std::to_string(v) + " shares " +
                                                  std::to_string(color_count(phi.missing(v) & ab)) +
                                                  " missing colors with a=" + std::to_string(a) + ", b=" +
                                                  std::to_string(b));
                }
            }
        }
    }
    return CheckResult::ok();
}

}  // namespace chroma
