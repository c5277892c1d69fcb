#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chroma/coloring.hpp"

namespace chroma {

/// Exchange alpha/beta on the chain through `from`, or only on the subpath
/// from `from` to `to` when `to` is set.
struct SwapChainStep {
    Vertex from = 0;
    std::optional<Vertex> to;
    Color alpha = 0;
    Color beta = 0;
};

/// uv: from -> to. The edge must currently carry `from`.
struct RecolorEdgeStep {
    Edge edge;
    Color from = 0;
    Color to = 0;
};

/// Give a currently uncolored edge its first color.
struct ColorEdgeStep {
    Edge edge;
    Color color = 0;
};

using ScriptStep = std::variant<SwapChainStep, RecolorEdgeStep, ColorEdgeStep>;

std::string describe(const ScriptStep& step);

/// An ordered list of recoloring operations, applied left to right, each on
/// the coloring produced by its predecessors. Intermediate colorings may be
/// improper; only the final one must be proper.
class SwapScript {
public:
    SwapScript& swap_at(Vertex x, Color alpha, Color beta);
    SwapScript& swap_between(Vertex x, Vertex y, Color alpha, Color beta);
    SwapScript& recolor(Vertex u, Vertex v, Color from, Color to);
    SwapScript& color(Vertex u, Vertex v, Color c);
    SwapScript& append(const SwapScript& other);

    const std::vector<ScriptStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }

private:
    std::vector<ScriptStep> steps_;
};

struct ScriptRun {
    PartialEdgeColoring result;
    /// Coloring after each step; transcript[i] follows step i.
    std::vector<PartialEdgeColoring> transcript;
};

/// Runs the script on a copy of `c`. Throws ScriptError carrying the failing
/// step index when a step's precondition fails, or with index == size() when
/// the final coloring is improper. `c` is never modified.
ScriptRun apply_script(const PartialEdgeColoring& c, const SwapScript& script);

}  // namespace chroma
