#pragma once

#include <vector>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

/// Star at `center` whose first spoke is the uncolored edge; every later
/// spoke's color is missing at some earlier spoke end.
struct Multifan {
    Vertex center = 0;
    std::vector<Vertex> spokes;  // y1..yp

    std::vector<Vertex> vertices() const;
};

/// Maximal multifan at `center` over the gap edge of `c`. Spokes are added
/// smallest color first. Throws StructureError unless `c` is a gap coloring
/// and `center` is an end of the gap.
Multifan grow_multifan(const PartialEdgeColoring& c, Vertex center);

/// Structural check only (spoke edges exist, distinct vertices, first spoke
/// is the gap edge, each later spoke color missed earlier in the fan).
CheckResult validate_multifan_structure(const PartialEdgeColoring& c, const Multifan& fan);

/// At a critical gap edge the fan's vertex set is elementary.
CheckResult check_fan_elementary(const PartialEdgeColoring& c, const Multifan& fan);

/// At a critical gap edge, for alpha missing at the center and beta missing
/// at spoke y_i, the center and y_i are (alpha, beta)-linked.
CheckResult check_fan_center_linkage(const PartialEdgeColoring& c, const Multifan& fan);

/// Structure, then elementarity, then center linkage; first failure wins.
CheckResult validate_multifan(const PartialEdgeColoring& c, const Multifan& fan);

/// Splits the missing colors of a multifan's spoke ends by which color
/// missing at y1 seeds them.
///
/// Spoke i > 0 hangs below the unique spoke that misses the color of
/// center-y_i; following parents upward reaches a spoke whose edge color is
/// some alpha missing at y1, and every spoke on that way is alpha-inducing.
/// The alpha-sequences are exactly the downward paths from that spoke.
struct AlphaDecomposition {
    Vertex center = 0;
    std::vector<Vertex> spokes;
    std::vector<int> parent;        // spoke index; -1 for y1
    std::vector<Color> seed;        // inducing color per spoke; 0 for y1
    std::vector<int> owner;         // per color: spoke index missing it, or -1
    std::vector<Color> induced_by;  // per color: inducing color, or 0

    /// Spokes inducing `alpha`, in fan order.
    std::vector<Vertex> inducing_vertices(Color alpha) const;
    /// Every maximal alpha-sequence.
    std::vector<std::vector<Vertex>> sequences(Color alpha) const;
    /// delta ≺ beta: both induced by the same alpha, and either delta is
    /// alpha itself or delta's spoke lies strictly above beta's spoke in
    /// one alpha-sequence.
    bool precedes(Color delta, Color beta) const;
};

/// Throws StructureError if `fan` is malformed or its spoke ends are not
/// elementary (the decomposition would not be unique).
AlphaDecomposition alpha_decompose(const PartialEdgeColoring& c, const Multifan& fan);

/// Spokes y_i != y_j with delta missing at y_i and lambda at y_j induced by
/// different colors are (delta, lambda)-linked.
CheckResult check_fan_induced_linkage(const PartialEdgeColoring& c, const Multifan& fan);

/// Same inducing color, delta ≺ lambda, y_i and y_j unlinked: then the
/// center lies on the (lambda, delta)-chain from y_j.
CheckResult check_fan_precedence_linkage(const PartialEdgeColoring& c, const Multifan& fan);

/// Both linkage checks; Structural if the decomposition fails.
CheckResult validate_fan_linkage(const PartialEdgeColoring& c, const Multifan& fan);

}  // namespace chroma
