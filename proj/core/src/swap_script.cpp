#include "chroma/swap_script.hpp"

#include <sstream>

#include "chroma/error.hpp"
#include "chroma/kempe.hpp"

namespace chroma {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void apply_step(PartialEdgeColoring& c, const ScriptStep& step) {
    const Graph& g = c.graph();
    std::visit(overloaded{
                   [&](const SwapChainStep& s) {
                       const KempeChain chain = kempe_chain(c, s.from, s.alpha, s.beta);
                       if (!s.to) {
                           detail::exchange(c, chain);
                           return;
                       }
                       if (!chain.contains(*s.to)) {
                           throw ColoringError(std::to_string(s.from) + " and " + std::to_string(*s.to) +
                                               " are not on a common chain");
                       }
                       if (*s.to == s.from) return;
                       detail::exchange(c, chain.segment(s.from, *s.to));
                   },
                   [&](const RecolorEdgeStep& s) {
                       const int id = g.edge_id(s.edge);
                       if (id < 0) throw ColoringError(edge_name(s.edge) + " is not an edge");
                       if (c.color(id) != s.from) {
                           throw ColoringError(edge_name(s.edge) + " has color " + std::to_string(c.color(id)) +
                                               ", expected " + std::to_string(s.from));
                       }
                       if (s.to < 1 || s.to > c.palette_size()) throw ColoringError("target color out of range");
                       detail::ColoringAccess::assign(c, id, s.to);
                   },
                   [&](const ColorEdgeStep& s) {
                       const int id = g.edge_id(s.edge);
                       if (id < 0) throw ColoringError(edge_name(s.edge) + " is not an edge");
                       if (c.color(id) != kUncolored) throw ColoringError(edge_name(s.edge) + " is already colored");
                       if (s.color < 1 || s.color > c.palette_size()) throw ColoringError("color out of range");
                       detail::ColoringAccess::assign(c, id, s.color);
                       if (c.uncolored_edge() == g.edge(id)) detail::ColoringAccess::set_gap(c, std::nullopt);
                   },
               },
               step);
}

}  // namespace

std::string describe(const ScriptStep& step) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const SwapChainStep& s) {
                       out << "swap (" << s.alpha << "," << s.beta << ") ";
                       if (s.to) {
                           out << "on [" << s.from << "," << *s.to << "]";
                       } else {
                           out << "at " << s.from;
                       }
                   },
                   [&](const RecolorEdgeStep& s) { out << edge_name(s.edge) << ": " << s.from << "->" << s.to; },
                   [&](const ColorEdgeStep& s) { out << "color " << edge_name(s.edge) << " with " << s.color; },
               },
               step);
    return out.str();
}

SwapScript& SwapScript::swap_at(Vertex x, Color alpha, Color beta) {
    steps_.push_back(SwapChainStep{x, std::nullopt, alpha, beta});
    return *this;
}

SwapScript& SwapScript::swap_between(Vertex x, Vertex y, Color alpha, Color beta) {
    steps_.push_back(SwapChainStep{x, y, alpha, beta});
    return *this;
}

SwapScript& SwapScript::recolor(Vertex u, Vertex v, Color from, Color to) {
    steps_.push_back(RecolorEdgeStep{Edge(u, v), from, to});
    return *this;
}

SwapScript& SwapScript::color(Vertex u, Vertex v, Color c) {
    steps_.push_back(ColorEdgeStep{Edge(u, v), c});
    return *this;
}

SwapScript& SwapScript::append(const SwapScript& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
}

ScriptRun apply_script(const PartialEdgeColoring& c, const SwapScript& script) {
    ScriptRun run{c, {}};
    run.transcript.reserve(script.size());
    for (std::size_t i = 0; i < script.size(); ++i) {
        try {
            apply_step(run.result, script.steps()[i]);
        } catch (const ColoringError& e) {
            throw ScriptError(i, describe(script.steps()[i]) + ": " + e.what());
        }
        run.transcript.push_back(run.result);
    }
    if (!run.result.is_proper()) {
        throw ScriptError(script.size(), "final coloring is improper");
    }
    return run;
}

}  // namespace chroma
