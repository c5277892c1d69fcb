#include <gtest/gtest.h>

#include "chroma/degree_lemmas.hpp"
#include "chroma/fixtures.hpp"
#include "chroma/oracle.hpp"

using namespace chroma;

namespace {

std::span<const PartialEdgeColoring> nothing(Edge) { return {}; }

// K5 on 0..4 plus vertex 5 joined to 0 and 1: Δ = 5, n = 6, d(5) = 2.
Graph k5_with_ear() {
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        for (Vertex j = i + 1; j < 5; ++j) es.emplace_back(i, j);
    }
    es.emplace_back(0, 5);
    es.emplace_back(1, 5);
    return Graph(6, es);
}

}  // namespace

TEST(VizingAdjacency, CriticalFixtures) {
    for (const Graph& g : {fixtures::cycle(5), fixtures::petersen_minus_vertex(), fixtures::subdivided_k4()}) {
        for (const Edge& e : g.edges()) {
            EXPECT_TRUE(check_vizing_adjacency(g, e.u, e.v).is_ok());
            EXPECT_TRUE(check_vizing_adjacency(g, e.v, e.u).is_ok());
        }
    }
}

TEST(VizingAdjacency, CountsOnlyOtherMaxDegreeNeighbours) {
    // Star K_{1,3}: the center's neighbours all have degree 1.
    const Graph s = fixtures::star(3);
    const auto r = check_vizing_adjacency(s, 0, 1);
    EXPECT_EQ(r.verdict, Verdict::Violation);
    // Leaf 1 at edge 1-0 needs Δ - d(0) + 1 = 1 neighbour of degree 3 besides 0.
    EXPECT_EQ(check_vizing_adjacency(s, 1, 0).verdict, Verdict::Violation);
    EXPECT_EQ(check_vizing_adjacency(s, 1, 2).verdict, Verdict::Structural);
}

TEST(DegreeDichotomy, InapplicableWhenDegreeTooLarge) {
    const Graph k4 = fixtures::complete(4);
    for (Vertex a = 0; a < 4; ++a) EXPECT_EQ(check_degree_dichotomy(k4, a, nothing).verdict, Verdict::Inapplicable);
}

TEST(DegreeDichotomy, FirstClause) {
    // Leaf of K_{1,5}: n = 6, Δ = 5, d(a) = 1 meets 3 <= 6; other leaves have
    // degree 1, neither >= 5 nor <= -3.
    const Graph star = fixtures::star(5);
    EXPECT_EQ(check_degree_dichotomy(star, 1, nothing).verdict, Verdict::Violation);

    // Ear vertex 5: 3·2 <= 2·5 - 6 + 2; every other vertex has degree >= 4.
    EXPECT_TRUE(check_degree_dichotomy(k5_with_ear(), 5, nothing).is_ok());
}

TEST(DegreeDichotomy, SecondClauseUsesColorings) {
    const Graph g = k5_with_ear();
    // Palette 5 coloring of G - {5,0}: vertices 2, 3, 4 have degree 4 and miss
    // one color each.
    const auto samples = sample_colorings(g, {0, 5}, 5, 1);
    const ColoringSource given = [&](Edge e) -> std::span<const PartialEdgeColoring> {
        if (e == Edge(0, 5)) return samples;
        return {};
    };
    const auto r = check_degree_dichotomy(g, 5, given);
    EXPECT_NE(r.verdict, Verdict::Inapplicable);
    EXPECT_NE(r.verdict, Verdict::Structural);

    // A wide palette makes every vertex miss many colors: the bound fails.
    std::vector<Color> colors(static_cast<std::size_t>(g.size()), 0);
    Color next = 1;
    for (int id = 0; id < g.size(); ++id) {
        if (g.edge(id) != Edge(0, 5)) colors[static_cast<std::size_t>(id)] = next++;
    }
    const std::vector<PartialEdgeColoring> wide{PartialEdgeColoring::from_colors(g, next - 1, colors, Edge(0, 5))};
    const ColoringSource loose = [&](Edge e) -> std::span<const PartialEdgeColoring> {
        if (e == Edge(0, 5)) return wide;
        return {};
    };
    EXPECT_EQ(check_degree_dichotomy(g, 5, loose).verdict, Verdict::Violation);
}
