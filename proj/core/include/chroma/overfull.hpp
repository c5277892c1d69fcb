#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <boost/rational.hpp>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"
#include "chroma/oracle.hpp"

namespace chroma {

// Compare with Rational operands only: boost 1.74's mixed rational == int
// recurses forever under C++20's reversed-operator lookup.
using Rational = boost::rational<std::int64_t>;

struct OverfullVerdict {
    bool overfull = false;
    /// |E| - Δ·floor(n/2)
    std::int64_t excess = 0;
    /// margin >= 0
    bool hypothesis = false;
    /// (Δ - 7δ/4) - (3n - 17)/4
    Rational margin;
};

/// Throws chroma::Error for the graph on zero vertices.
OverfullVerdict is_overfull(const Graph& g);

/// Δ - 7δ/4 >= (3n - 17)/4, with the margin between the two sides.
struct HypothesisCheck {
    bool holds = false;
    Rational margin;
};
HypothesisCheck min_degree_overfull_hypothesis(const Graph& g);

/// δ <= εn and Δ >= (3n - 17 + 7εn)/4. Throws chroma::Error unless
/// 0 < ε < 1/7.
bool small_min_degree_hypothesis(const Graph& g, Rational eps);

enum class TheoremVerdict { Holds, Counterexample, Inapplicable, Undecided };

std::string_view to_string(TheoremVerdict v);

struct TheoremCheck {
    TheoremVerdict verdict = TheoremVerdict::Inapplicable;
    std::string detail;
};

/// A Δ-critical graph meeting the min-degree hypothesis must be overfull.
/// Inapplicable unless both premises hold; Undecided when the oracle runs
/// out of time.
TheoremCheck verify_min_degree_overfull(const Graph& g, const OracleOptions& opts = {});

/// Same, with criticality already known.
TheoremCheck verify_min_degree_overfull(const Graph& g, bool delta_critical);

/// Every color is missing at a number of vertices congruent to n mod 2.
/// Structural if `c` has an uncolored edge.
CheckResult parity_check(const PartialEdgeColoring& c);

/// Same test over explicit missing sets; used to sanity-check the checker.
CheckResult parity_check(int n, int k, std::span<const ColorSet> missing);

/// Coloring of G - e carrying the colors of a gap coloring at e.
PartialEdgeColoring drop_uncolored_edge(const PartialEdgeColoring& c);

/// Vertex set (bitmask) of an induced subgraph H with Δ(H) = Δ(G) and
/// |E(H)| > Δ(G)·floor(|H|/2), smallest mask first; nullopt if none.
/// Throws BudgetError above 24 vertices.
std::optional<VertexSet> find_overfull_subgraph(const Graph& g);

inline constexpr int kOverfullSearchLimit = 24;

}  // namespace chroma
