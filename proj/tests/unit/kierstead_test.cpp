#include <gtest/gtest.h>

#include "chroma/fixtures.hpp"
#include "chroma/kierstead.hpp"
#include "chroma/oracle.hpp"

using namespace chroma;

namespace {

// Path 0-1-2-3-4 with 01 uncolored, palette 3: 12 = 1, 23 = 2, 34 = 3.
// m(0) = {1,2,3}, m(1) = {2,3}, m(2) = {3}, m(3) = {1}, m(4) = {1,2}.
PartialEdgeColoring path_gap() {
    return PartialEdgeColoring::from_colors(fixtures::path(5), 3, {0, 1, 2, 3}, Edge(0, 1));
}

}  // namespace

TEST(Kierstead, StructureChecks) {
    const auto c = path_gap();
    EXPECT_TRUE(validate_kierstead_structure(c, {{0, 1, 2, 3, 4}}).is_ok());
    EXPECT_TRUE(validate_kierstead_structure(c, {{1, 0}}).is_ok());
    EXPECT_EQ(validate_kierstead_structure(c, {{1, 2}}).verdict, Verdict::Structural);
    EXPECT_EQ(validate_kierstead_structure(c, {{0}}).verdict, Verdict::Structural);
    EXPECT_EQ(validate_kierstead_structure(c, {{0, 1, 3}}).verdict, Verdict::Structural);
}

TEST(Kierstead, MalformedIsStructural) {
    // 01 gap, 04 = 2, 05 = 3, 16 = 2, 12 = 1, 23 = 2 on palette 3:
    // m(0) = {1}, m(1) = {3}, so 23 is missed by neither v0 nor v1.
    const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 6}});
    std::vector<Color> colors(static_cast<std::size_t>(g.size()), 0);
    auto set = [&](Vertex u, Vertex v, Color col) { colors[static_cast<std::size_t>(g.edge_id(u, v))] = col; };
    set(0, 4, 2);
    set(0, 5, 3);
    set(1, 6, 2);
    set(1, 2, 1);
    set(2, 3, 2);
    const auto c = PartialEdgeColoring::from_colors(g, 3, colors, Edge(0, 1));
    const KiersteadPath k{{0, 1, 2, 3}};
    EXPECT_TRUE(validate_kierstead_structure(c, {{0, 1, 2}}).is_ok());
    EXPECT_EQ(validate_kierstead_structure(c, k).verdict, Verdict::Structural);
    EXPECT_EQ(check_kierstead4_intersection(c, k).verdict, Verdict::Structural);
    EXPECT_EQ(check_kierstead4_elementary(c, k).verdict, Verdict::Structural);
}

TEST(Kierstead, Enumeration) {
    const auto c = path_gap();
    const auto two = enumerate_kierstead(c, 0, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].vertices, (std::vector<Vertex>{0, 1}));
    const auto five = enumerate_kierstead(c, 0, 5);
    ASSERT_EQ(five.size(), 1u);
    EXPECT_EQ(five[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(enumerate_kierstead(c, 1, 3).empty());
    EXPECT_TRUE(enumerate_kierstead(c, 0, 6).empty());
    EXPECT_TRUE(extend_kierstead(c, five[0]).empty());
    for (const auto& k : enumerate_kierstead(c, 0, 4)) EXPECT_TRUE(validate_kierstead_structure(c, k).is_ok());
}

TEST(Kierstead, FourVertexLemmaOnPath) {
    // d(v1) = 2 = Δ and d(v2) = 2: the elementary clause does not apply.
    const auto c = path_gap();
    const KiersteadPath k{{0, 1, 2, 3}};
    EXPECT_EQ(check_kierstead4_elementary(c, k).verdict, Verdict::Inapplicable);
    // m(3) = {1} meets m(0): one shared color is allowed.
    EXPECT_TRUE(check_kierstead4_intersection(c, k).is_ok());
    EXPECT_EQ(check_kierstead4_intersection(c, {{0, 1, 2}}).verdict, Verdict::Structural);
}

TEST(Kierstead, CheckerFlagsNonCriticalHost) {
    // Same path on palette 5: m(3) = {1,4,5} shares three colors with m(0).
    const auto c = PartialEdgeColoring::from_colors(fixtures::path(5), 5, {0, 1, 2, 3}, Edge(0, 1));
    const KiersteadPath k{{0, 1, 2, 3}};
    EXPECT_EQ(check_kierstead4_intersection(c, k).verdict, Verdict::Violation);
    // Add a degree-3 vertex so v1, v2 fall below Δ.
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    std::vector<Color> colors(6, 0);
    colors[static_cast<std::size_t>(g.edge_id(1, 2))] = 1;
    colors[static_cast<std::size_t>(g.edge_id(2, 3))] = 2;
    colors[static_cast<std::size_t>(g.edge_id(3, 4))] = 3;
    colors[static_cast<std::size_t>(g.edge_id(3, 5))] = 4;
    colors[static_cast<std::size_t>(g.edge_id(4, 5))] = 1;
    const auto d = PartialEdgeColoring::from_colors(g, 4, colors, Edge(0, 1));
    EXPECT_EQ(check_kierstead4_elementary(d, k).verdict, Verdict::Violation);
    EXPECT_EQ(validate_kierstead4(d, k).verdict, Verdict::Violation);
}

TEST(Kierstead, OracleColoringsOfCriticalGraphsPass) {
    for (const Graph& g : {fixtures::cycle(7), fixtures::petersen_minus_vertex(), fixtures::subdivided_k4()}) {
        for (const Edge& e : g.edges()) {
            for (const auto& c : sample_colorings(g, e, 10, 5)) {
                for (Vertex v0 : {e.u, e.v}) {
                    for (const auto& k : enumerate_kierstead(c, v0, 4)) {
                        const auto r = validate_kierstead4(c, k);
                        EXPECT_NE(r.verdict, Verdict::Violation) << r.detail;
                        EXPECT_NE(r.verdict, Verdict::Structural) << r.detail;
                    }
                }
            }
        }
    }
}
