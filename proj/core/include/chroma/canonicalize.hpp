#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"
#include "chroma/kierstead.hpp"

namespace chroma {

struct CanonicalForm {
    /// Ok when `coloring` satisfies the three target conditions; Violation
    /// when some branch guard failed or the loop ran out of rounds;
    /// Inapplicable / Structural when the input does not qualify.
    CheckResult form;
    /// d(b) = d(u) = Δ.
    CheckResult degrees;
    std::optional<PartialEdgeColoring> coloring;
    /// One entry per branch taken, in order.
    std::vector<std::string> trail;
};

/// The target conditions for path (a, b, u, s, t):
/// bu ∈ m(a) ∩ m(t), us ∈ m(b) ∩ m(t), st ∈ m(a).
bool satisfies_canonical_form(const PartialEdgeColoring& c, const KiersteadPath& path);

/// Recolor a five-vertex Kierstead path (a, b, u, s, t) on a critical
/// uncolored edge ab, where t misses at least three colors of m(a) ∪ m(b),
/// until the target conditions hold.
///
/// The procedure is a branch table over the colors of bu, us and st; each
/// branch runs as a swap script and the table is re-entered after it. Every
/// branch re-checks its own guard, so a dead end is reported in `form`
/// rather than thrown.
CanonicalForm canonicalize_k5_path(const PartialEdgeColoring& c, const KiersteadPath& path);

}  // namespace chroma
