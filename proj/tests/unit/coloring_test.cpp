#include <gtest/gtest.h>

#include "chroma/coloring.hpp"
#include "chroma/coloring_json.hpp"
#include "chroma/error.hpp"
#include "chroma/fixtures.hpp"
#include "test_support.hpp"

using namespace chroma;

TEST(ColorSets, Helpers) {
    EXPECT_EQ(palette_mask(3), color_bit(1) | color_bit(2) | color_bit(3));
    EXPECT_FALSE(contains(palette_mask(3), 0));
    EXPECT_EQ(colors_in(color_bit(2) | color_bit(5)), (std::vector<Color>{2, 5}));
    EXPECT_EQ(lowest_color(color_bit(4) | color_bit(7)), 4);
}

TEST(Coloring, GapShellTracksMissing) {
    const Graph c5 = fixtures::cycle(5);
    auto c = PartialEdgeColoring::empty(c5, {0, 1}, 2);
    EXPECT_EQ(c.uncolored_count(), 5);
    EXPECT_FALSE(c.is_gap_coloring());
    c = c.with_color({1, 2}, 1).with_color({2, 3}, 2).with_color({3, 4}, 1).with_color({0, 4}, 2);
    EXPECT_TRUE(c.is_gap_coloring());
    EXPECT_EQ(c.missing(0), color_bit(1));
    EXPECT_EQ(c.missing(1), color_bit(2));
    EXPECT_EQ(c.present(2), palette_mask(2));
    EXPECT_EQ(c.missing(std::vector<Vertex>{0, 1}), palette_mask(2));
    EXPECT_EQ(c.edge_with(2, 2), c5.edge_id(2, 3));
    EXPECT_EQ(c.neighbor_with(3, 1), 4);
    EXPECT_EQ(c.neighbor_with(0, 1), -1);
    EXPECT_TRUE(c.bookkeeping_consistent());
}

TEST(Coloring, RejectsImproperAndOutOfRange) {
    const Graph k3 = fixtures::complete(3);
    auto c = PartialEdgeColoring::blank(k3, 3).with_color({0, 1}, 1);
    EXPECT_THROW(c.with_color({0, 2}, 1), ColoringError);
    EXPECT_THROW(c.with_color({0, 2}, 4), ColoringError);
    EXPECT_THROW(c.color(0, 0), ColoringError);
    EXPECT_THROW(PartialEdgeColoring::blank(k3, 1), ColoringError);
    EXPECT_THROW(PartialEdgeColoring::empty(k3, {0, 5}, 3), ColoringError);
    EXPECT_THROW(PartialEdgeColoring::from_colors(k3, 3, {1, 1, 2}, std::nullopt), ColoringError);
    EXPECT_THROW(PartialEdgeColoring::from_colors(k3, 3, {1, 2}, std::nullopt), ColoringError);
    EXPECT_THROW(PartialEdgeColoring::from_colors(k3, 3, {1, 2, 3}, Edge(0, 1)), ColoringError);
}

TEST(Coloring, ColoringTheGapClearsIt) {
    const Graph k3 = fixtures::complete(3);
    auto c = PartialEdgeColoring::from_colors(k3, 3, {0, 2, 3}, Edge(0, 1));
    EXPECT_TRUE(c.is_gap_coloring());
    auto full = c.with_color({0, 1}, 1);
    EXPECT_TRUE(full.is_full());
    EXPECT_FALSE(full.uncolored_edge().has_value());
}

TEST(Coloring, MissingMatchesIndependentRecount) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const Graph g = testkit::random_connected_graph(rng, 8, 0.45);
        const auto c = testkit::random_greedy_coloring(rng, g, 2 * g.max_degree() - 1 + 1, std::nullopt);
        const auto want = testkit::recount_missing(c);
        for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(c.missing(v), want[static_cast<std::size_t>(v)]);
        EXPECT_TRUE(c.is_proper());
    }
}

TEST(ColoringJson, RoundTripAndSchema) {
    const Graph c5 = fixtures::cycle(5);
    const auto c = PartialEdgeColoring::from_colors(c5, 2, {0, 2, 1, 2, 1}, Edge(0, 1));
    const auto j = coloring_to_json(c);
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["uncolored"], nlohmann::json::array({0, 1}));
    EXPECT_EQ(j["edges"].size(), 5u);
    EXPECT_EQ(coloring_from_json(c5, j), c);

    auto bad = j;
    bad["edges"][1] = {0, 3, 1};
    EXPECT_ANY_THROW(coloring_from_json(c5, bad));
    EXPECT_THROW(coloring_from_json(c5, nlohmann::json::array()), ParseError);
    auto missing_k = j;
    missing_k.erase("k");
    EXPECT_THROW(coloring_from_json(c5, missing_k), ParseError);
}
