#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

enum class ForkKind { Fork, ShortKite, Kite };

std::string_view to_string(ForkKind k);

/// Small tree-like subgraph hanging off the uncolored edge ab.
///
///   fork:       ab, bu, us1, us2, s1t1, s2t2          (c = -1)
///   short-kite: ab, ac, bu, cu, ux, uy                 (x in s1, y in s2, t1 = t2 = -1)
///   kite:       ab, ac, bu, cu, us1, us2, s1t1, s2t2
struct ForkLike {
    ForkKind kind = ForkKind::Fork;
    Vertex a = -1, b = -1, c = -1, u = -1;
    Vertex s1 = -1, s2 = -1, t1 = -1, t2 = -1;

    Vertex x() const { return s1; }
    Vertex y() const { return s2; }

    std::vector<Vertex> vertices() const;
    std::vector<Edge> edges() const;

    friend auto operator<=>(const ForkLike&, const ForkLike&) = default;
};

/// Every embedding of the requested kind with `a` as the named end of the
/// uncolored edge. Forks must meet the fork color constraints (listed once,
/// with s1 < s2); short-kites and kites must make both
/// K = (a, b, u, x)        / (a, b, u, s1, t1) and
/// K* = (b, a, c, u, y)    / (b, a, c, u, s2, t2)
/// Kierstead paths. Sorted by vertex tuple.
std::vector<ForkLike> find_forklike(const PartialEdgeColoring& c, ForkKind kind, Vertex a);

/// Both orientations of the uncolored edge, a = lower end first.
std::vector<ForkLike> find_forklike(const PartialEdgeColoring& c, ForkKind kind);

/// No fork with Δ >= d(a) + d(t1) + d(t2) + 1 exists with `a` as the named
/// end. Inapplicable when Δ < d(a) + 2δ + 1, since then no fork can qualify.
CheckResult check_fork_absence(const PartialEdgeColoring& c, Vertex a);

/// Structural unless the two Kierstead paths hold; inapplicable unless both
/// x and y miss a color of m(a) ∪ m(b); otherwise ok iff max(d(x), d(y)) = Δ.
CheckResult validate_shortkite(const PartialEdgeColoring& c, const ForkLike& sk);

/// Structural unless the two Kierstead paths hold; inapplicable unless
/// s1t1 and s2t2 share a color; otherwise ok iff
/// |m(t1) ∩ m(t2) ∩ (m(a) ∪ m(b))| <= 4.
CheckResult validate_kite(const PartialEdgeColoring& c, const ForkLike& kt);

}  // namespace chroma
