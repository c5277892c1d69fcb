#include <gtest/gtest.h>

#include <random>

#include "chroma/error.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/kempe.hpp"
#include "test_support.hpp"

using namespace chroma;

namespace {

struct Pick {
    Vertex x;
    Color alpha;
    Color beta;
};

Pick pick(std::mt19937_64& rng, const PartialEdgeColoring& c) {
    const int k = c.palette_size();
    const Vertex x = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(c.graph().order()));
    const Color alpha = 1 + static_cast<Color>(rng() % static_cast<std::uint64_t>(k));
    Color beta = 1 + static_cast<Color>(rng() % static_cast<std::uint64_t>(k - 1));
    if (beta >= alpha) ++beta;
    return {x, alpha, beta};
}

void expect_partition(const PartialEdgeColoring& c) {
    const auto recount = testkit::recount_missing(c);
    const ColorSet all = palette_mask(c.palette_size());
    for (Vertex v = 0; v < c.graph().order(); ++v) {
        ASSERT_EQ(c.present(v) & c.missing(v), 0u);
        ASSERT_EQ(c.present(v) | c.missing(v), all);
        ASSERT_EQ(c.missing(v), recount[static_cast<std::size_t>(v)]);
        ASSERT_EQ(color_count(c.present(v)), c.graph().degree(v) - (c.uncolored_edge() && c.uncolored_edge()->has(v)));
    }
}

}  // namespace

TEST(KempeProperty, TenThousandRandomSwaps) {
    std::mt19937_64 rng(20261018);
    int operations = 0;
    while (operations < 10'000) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const Graph g = testkit::random_connected_graph(rng, n, 0.4);
        const Edge gap = g.edge(static_cast<int>(rng() % static_cast<std::uint64_t>(g.size())));
        const int k = std::max(2, 2 * g.max_degree() - 1) + static_cast<int>(rng() % 2);
        PartialEdgeColoring c = testkit::random_greedy_coloring(rng, g, k, gap);
        for (int step = 0; step < 50 && operations < 10'000; ++step, ++operations) {
            const auto [x, alpha, beta] = pick(rng, c);
            const KempeChain chain = kempe_chain(c, x, alpha, beta);
            ASSERT_TRUE(chain.contains(x));
            const PartialEdgeColoring next = swap_at(c, x, alpha, beta);
            ASSERT_TRUE(next.is_proper());
            ASSERT_TRUE(next.bookkeeping_consistent());
            ASSERT_EQ(next.uncolored_edge(), c.uncolored_edge());
            ASSERT_EQ(next.uncolored_count(), c.uncolored_count());
            expect_partition(next);
            // Only chain ends can change their missing sets.
            for (Vertex v = 0; v < n; ++v) {
                if (c.missing(v) != next.missing(v)) {
                    ASSERT_TRUE(chain.is_endpoint(v)) << "vertex " << v;
                }
            }
            // Swapping the same chain again restores the coloring.
            ASSERT_EQ(swap_at(next, x, alpha, beta), c);
            ASSERT_EQ(kempe_swap(next, kempe_chain(next, x, alpha, beta)), c);
            c = next;
        }
    }
    EXPECT_EQ(operations, 10'000);
}

TEST(KempeProperty, SubchainSwapsEitherSucceedProperlyOrThrow) {
    std::mt19937_64 rng(77);
    int succeeded = 0;
    for (int round = 0; round < 2000; ++round) {
        const Graph g = testkit::random_connected_graph(rng, 8, 0.4);
        const int k = 2 * g.max_degree();
        const auto c = testkit::random_greedy_coloring(rng, g, k, std::nullopt);
        const auto [x, alpha, beta] = pick(rng, c);
        const KempeChain chain = kempe_chain(c, x, alpha, beta);
        const Vertex y = chain.vertices[rng() % chain.vertices.size()];
        try {
            const auto out = swap_subchain(c, x, y, alpha, beta);
            ASSERT_TRUE(out.is_proper());
            expect_partition(out);
            ++succeeded;
        } catch (const ColoringError&) {
            // Interior segments of a path or any part of a cycle clash.
            ASSERT_TRUE(!chain.is_path() || !chain.is_endpoint(x) || !chain.is_endpoint(y));
        }
    }
    EXPECT_GT(succeeded, 0);
}

TEST(Graph6Property, RoundTripRandomGraphs) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 40);
        std::vector<Edge> es;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) es.emplace_back(u, v);
            }
        }
        const Graph g(n, es);
        ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
}
