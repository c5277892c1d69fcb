#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/error.hpp"

namespace chroma {

/// G - e has no Δ(G)-edge-coloring, so there is nothing to sample.
class UncolorableError : public Error {
public:
    using Error::Error;
};

struct OracleOptions {
    /// Budget per decision; zero or negative means unlimited.
    std::chrono::milliseconds timeout{10'000};
};

enum class EdgeClass { Class1, Class2 };

std::string_view to_string(EdgeClass c);

struct ChiResult {
    int chi_prime = 0;
    EdgeClass classification = EdgeClass::Class1;
    /// Full proper coloring with palette chi_prime.
    PartialEdgeColoring witness;
};

/// A proper k-coloring of every edge except `skip` (left uncolored and
/// designated as the gap), or nullopt if none exists. With `shuffle_seed`
/// the color tried first at each step and the final palette labels are
/// drawn from that seed. Throws TimeoutError when the budget runs out.
std::optional<PartialEdgeColoring> find_coloring(const Graph& g, int k, std::optional<Edge> skip = std::nullopt,
                                                 const OracleOptions& opts = {},
                                                 std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Throws chroma::Error for graphs without edges, TimeoutError on budget.
ChiResult chromatic_index(const Graph& g, const OracleOptions& opts = {});

/// chi'(G - e) = Δ(G) < chi'(G). Pass `chi_prime` to reuse a known value.
/// Throws chroma::Error if e is not an edge.
bool is_critical_edge(const Graph& g, Edge e, const OracleOptions& opts = {},
                      std::optional<int> chi_prime = std::nullopt);

/// Connected, class 2, and every edge critical.
bool is_delta_critical(const Graph& g, const OracleOptions& opts = {});

/// `count` Δ(G)-colorings of G - e from seeded randomized searches.
/// Deterministic in (g, e, count, seed); duplicates are possible. Throws
/// UncolorableError if G - e has no Δ-coloring.
std::vector<PartialEdgeColoring> sample_colorings(const Graph& g, Edge e, int count, std::uint64_t seed,
                                                  const OracleOptions& opts = {});

}  // namespace chroma
