#include "chroma/overfull.hpp"

#include <string>
#include <vector>

#include "chroma/error.hpp"

namespace chroma {

namespace {

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

OverfullVerdict is_overfull(const Graph& g) {
    if (g.order() == 0) throw Error("overfullness of the empty graph");
    OverfullVerdict out;
    const std::int64_t delta = g.max_degree();
    out.excess = g.size() - delta * (g.order() / 2);
    out.overfull = out.excess >= 1;
    const auto h = min_degree_overfull_hypothesis(g);
    out.hypothesis = h.holds;
    out.margin = h.margin;
    return out;
}

HypothesisCheck min_degree_overfull_hypothesis(const Graph& g) {
    const std::int64_t n = g.order(), delta = g.max_degree(), small = g.min_degree();
    const Rational margin = Rational(delta) - Rational(7 * small, 4) - Rational(3 * n - 17, 4);
    return {margin >= 0, margin};
}

bool small_min_degree_hypothesis(const Graph& g, Rational eps) {
    if (eps <= 0 || eps >= Rational(1, 7)) throw Error("epsilon must lie strictly between 0 and 1/7");
    const std::int64_t n = g.order();
    const Rational en = eps * n;
    return Rational(g.min_degree()) <= en && Rational(g.max_degree()) >= (Rational(3 * n - 17) + 7 * en) / 4;
}

std::string_view to_string(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::Holds: return "holds";
        case TheoremVerdict::Counterexample: return "counterexample";
        case TheoremVerdict::Inapplicable: return "inapplicable";
        case TheoremVerdict::Undecided: return "undecided";
    }
    return "?";
}

TheoremCheck verify_min_degree_overfull(const Graph& g, bool delta_critical) {
    if (!delta_critical) return {TheoremVerdict::Inapplicable, "not Δ-critical"};
    const auto h = min_degree_overfull_hypothesis(g);
    if (!h.holds) return {TheoremVerdict::Inapplicable, "hypothesis margin " + rational_text(h.margin) + " < 0"};
    const auto o = is_overfull(g);
    if (o.overfull) return {TheoremVerdict::Holds, "excess " + std::to_string(o.excess)};
    return {TheoremVerdict::Counterexample, "hypothesis margin " + rational_text(h.margin) + " but excess " +
                                                std::to_string(o.excess)};
}

TheoremCheck verify_min_degree_overfull(const Graph& g, const OracleOptions& opts) {
    if (g.order() == 0) return {TheoremVerdict::Inapplicable, "empty graph"};
    if (!min_degree_overfull_hypothesis(g).holds) return verify_min_degree_overfull(g, true);
    try {
        return verify_min_degree_overfull(g, is_delta_critical(g, opts));
    } catch (const TimeoutError& e) {
        return {TheoremVerdict::Undecided, e.what()};
    }
}

CheckResult parity_check(int n, int k, std::span<const ColorSet> missing) {
    for (Color a = 1; a <= k; ++a) {
        int count = 0;
        for (ColorSet m : missing) count += contains(m, a) ? 1 : 0;
        if ((count - n) % 2 != 0) {
            return CheckResult::violation("color " + std::to_string(a) + " is missing at " + std::to_string(count) +
                                          " vertices, n = " + std::to_string(n));
        }
    }
    return CheckResult::ok();
}

CheckResult parity_check(const PartialEdgeColoring& c) {
    if (!c.is_full()) return CheckResult::structural("parity needs a full coloring");
    const int n = c.graph().order();
    std::vector<ColorSet> missing(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) missing[static_cast<std::size_t>(v)] = c.missing(v);
    return parity_check(n, c.palette_size(), missing);
}

PartialEdgeColoring drop_uncolored_edge(const PartialEdgeColoring& c) {
    const auto gap = c.uncolored_edge();
    if (!gap) throw ColoringError("coloring has no designated uncolored edge");
    const Graph& g = c.graph();
    const int skip = g.edge_id(*gap);
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(g.size() - 1));
    for (int id = 0; id < g.size(); ++id) {
        if (id != skip) colors.push_back(c.color(id));
    }
    return PartialEdgeColoring::from_colors(g.without_edge(*gap), c.palette_size(), std::move(colors), std::nullopt);
}

std::optional<VertexSet> find_overfull_subgraph(const Graph& g) {
    const int n = g.order();
    if (n > kOverfullSearchLimit) {
        throw BudgetError("overfull subgraph search is limited to " + std::to_string(kOverfullSearchLimit) +
                          " vertices");
    }
    const int delta = g.max_degree();
    if (delta == 0) return std::nullopt;
    VertexSet hubs = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == delta) hubs |= vertex_bit(v);
    }
    const VertexSet limit = vertex_bit(n);
    for (VertexSet s = 1; s < limit; ++s) {
        const int size = count(s);
        if (size % 2 == 0 || (s & hubs) == 0) continue;
        // Δ(H) = Δ(G) needs a hub whose whole neighbourhood is inside.
        bool full = false;
        for (VertexSet h = s & hubs; h != 0 && !full; h &= h - 1) {
            const Vertex v = std::countr_zero(h);
            full = (g.adjacency(v) & ~s) == 0;
        }
        if (!full) continue;
        if (g.edges_within(s) > delta * (size / 2)) return s;
    }
    return std::nullopt;
}

}  // namespace chroma
