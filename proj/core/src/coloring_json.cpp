#include "chroma/coloring_json.hpp"

#include "chroma/error.hpp"

namespace chroma {

nlohmann::json coloring_to_json(const PartialEdgeColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    const Graph& g = c.graph();
    for (int id = 0; id < g.size(); ++id) {
        const Edge& e = g.edge(id);
        edges.push_back({e.u, e.v, c.color(id)});
    }
    nlohmann::json out;
    out["k"] = c.palette_size();
    if (const auto gap = c.uncolored_edge()) {
        out["uncolored"] = {gap->u, gap->v};
    } else {
        out["uncolored"] = nullptr;
    }
    out["edges"] = std::move(edges);
    return out;
}

PartialEdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
    try {
        const int k = j.at("k").get<int>();
        std::optional<Edge> gap;
        if (const auto& u = j.at("uncolored"); !u.is_null()) {
            gap = Edge(u.at(0).get<int>(), u.at(1).get<int>());
        }
        std::vector<Color> colors(static_cast<std::size_t>(g.size()), kUncolored);
        std::vector<bool> seen(colors.size(), false);
        for (const auto& row : j.at("edges")) {
            const int id = g.edge_id(row.at(0).get<int>(), row.at(1).get<int>());
            if (id < 0) throw ColoringError("coloring names a pair that is not an edge");
            colors[static_cast<std::size_t>(id)] = row.at(2).get<int>();
            seen[static_cast<std::size_t>(id)] = true;
        }
        for (bool s : seen) {
            if (!s) throw ParseError("coloring JSON does not list every edge");
        }
        return PartialEdgeColoring::from_colors(g, k, std::move(colors), gap);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring JSON: ") + e.what());
    }
}

}  // namespace chroma
