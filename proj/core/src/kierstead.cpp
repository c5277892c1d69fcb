#include "chroma/kierstead.hpp"

#include <algorithm>
#include <string>

#include "chroma/kempe.hpp"

namespace chroma {

namespace {

std::string path_text(const KiersteadPath& p) {
    std::string s;
    for (Vertex v : p.vertices) s += (s.empty() ? "" : "-") + std::to_string(v);
    return s;
}

// The (K1) condition for appending w after the current last vertex.
bool extends(const PartialEdgeColoring& c, const KiersteadPath& p, Vertex w) {
    const Vertex last = p.vertices.back();
    if (!c.graph().has_edge(last, w)) return false;
    if (std::find(p.vertices.begin(), p.vertices.end(), w) != p.vertices.end()) return false;
    const Color col = c.color(last, w);
    if (col == kUncolored) return false;
    const std::span<const Vertex> earlier(p.vertices.data(), p.vertices.size() - 1);
    return contains(c.missing(earlier), col);
}

}  // namespace

CheckResult validate_kierstead_structure(const PartialEdgeColoring& c, const KiersteadPath& path) {
    const auto& vs = path.vertices;
    if (vs.size() < 2) return CheckResult::structural("a Kierstead path needs at least two vertices");
    const Edge first(vs[0], vs[1]);
    if (c.uncolored_edge() != first || !c.graph().has_edge(first) || c.color(first) != kUncolored) {
        return CheckResult::structural("v0v1 is not the uncolored edge");
    }
    KiersteadPath prefix{{vs[0], vs[1]}};
    if (vs[0] == vs[1]) return CheckResult::structural("repeated vertex");
    for (std::size_t i = 2; i < vs.size(); ++i) {
        if (!extends(c, prefix, vs[i])) {
            return CheckResult::structural("edge " + std::to_string(vs[i - 1]) + "-" + std::to_string(vs[i]) +
                                           " of " + path_text(path) + " breaks the Kierstead condition");
        }
        prefix.vertices.push_back(vs[i]);
    }
    return CheckResult::ok();
}

std::vector<KiersteadPath> extend_kierstead(const PartialEdgeColoring& c, const KiersteadPath& seed) {
    std::vector<KiersteadPath> out;
    if (seed.vertices.empty() || seed.vertex_count() >= kMaxKiersteadVertices) return out;
    for (Vertex w : c.graph().neighbors(seed.vertices.back())) {
        if (seed.vertex_count() == 1) {
            if (c.uncolored_edge() != Edge(seed.vertices[0], w)) continue;
        } else if (!extends(c, seed, w)) {
            continue;
        }
        KiersteadPath next = seed;
        next.vertices.push_back(w);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<KiersteadPath> enumerate_kierstead(const PartialEdgeColoring& c, Vertex v0, std::size_t vertex_count) {
    std::vector<KiersteadPath> frontier{KiersteadPath{{v0}}};
    if (vertex_count < 2 || vertex_count > kMaxKiersteadVertices) return {};
    for (std::size_t size = 1; size < vertex_count; ++size) {
        std::vector<KiersteadPath> next;
        for (const auto& p : frontier) {
            for (auto& q : extend_kierstead(c, p)) next.push_back(std::move(q));
        }
        frontier = std::move(next);
    }
    return frontier;
}

CheckResult check_kierstead4_elementary(const PartialEdgeColoring& c, const KiersteadPath& path) {
    if (path.vertex_count() != 4) return CheckResult::structural("expected a four-vertex path");
    if (auto s = validate_kierstead_structure(c, path); !s.is_ok()) return s;
    const Graph& g = c.graph();
    if (std::min(g.degree(path[1]), g.degree(path[2])) >= g.max_degree()) {
        return CheckResult::inapplicable("v1 and v2 both have maximum degree");
    }
    if (is_elementary(c, path.vertices)) return CheckResult::ok();
    return CheckResult::violation("vertex set of " + path_text(path) + " is not elementary");
}

CheckResult check_kierstead4_intersection(const PartialEdgeColoring& c, const KiersteadPath& path) {
    if (path.vertex_count() != 4) return CheckResult::structural("expected a four-vertex path");
    if (auto s = validate_kierstead_structure(c, path); !s.is_ok()) return s;
    const ColorSet shared = c.missing(path[3]) & (c.missing(path[0]) | c.missing(path[1]));
    if (color_count(shared) <= 1) return CheckResult::ok();
    return CheckResult::violation("v3 of " + path_text(path) + " shares " + std::to_string(color_count(shared)) +
                                  " missing colors with v0, v1");
}

CheckResult validate_kierstead4(const PartialEdgeColoring& c, const KiersteadPath& path) {
    auto a = check_kierstead4_elementary(c, path);
    if (a.verdict == Verdict::Violation || a.verdict == Verdict::Structural) return a;
    return check_kierstead4_intersection(c, path);
}

}  // namespace chroma
