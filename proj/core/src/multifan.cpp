#include "chroma/multifan.hpp"

#include <algorithm>
#include <string>

#include "chroma/error.hpp"
#include "chroma/kempe.hpp"

namespace chroma {

namespace {

std::string pair_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

std::vector<Vertex> Multifan::vertices() const {
    std::vector<Vertex> out{center};
    out.insert(out.end(), spokes.begin(), spokes.end());
    return out;
}

Multifan grow_multifan(const PartialEdgeColoring& c, Vertex center) {
    if (!c.is_gap_coloring()) throw StructureError("multifans need exactly one uncolored edge");
    const Edge gap = *c.uncolored_edge();
    if (!gap.has(center)) throw StructureError("center " + std::to_string(center) + " is not on the uncolored edge");

    Multifan fan{center, {gap.other(center)}};
    VertexSet members = vertex_bit(center) | vertex_bit(fan.spokes[0]);
    ColorSet reachable = c.missing(fan.spokes[0]);
    for (;;) {
        bool grown = false;
        for (ColorSet cand = reachable & c.present(center); cand != 0; cand &= cand - 1) {
            const Vertex w = c.neighbor_with(center, lowest_color(cand));
            if (members & vertex_bit(w)) continue;
            fan.spokes.push_back(w);
            members |= vertex_bit(w);
            reachable |= c.missing(w);
            grown = true;
            break;
        }
        if (!grown) return fan;
    }
}

CheckResult validate_multifan_structure(const PartialEdgeColoring& c, const Multifan& fan) {
    const Graph& g = c.graph();
    if (fan.spokes.empty()) return CheckResult::structural("multifan has no spokes");
    if (fan.center < 0 || fan.center >= g.order()) return CheckResult::structural("center out of range");
    VertexSet seen = vertex_bit(fan.center);
    for (Vertex y : fan.spokes) {
        if (y < 0 || y >= g.order() || (seen & vertex_bit(y))) {
            return CheckResult::structural("spoke vertices are not distinct");
        }
        seen |= vertex_bit(y);
        if (!g.has_edge(fan.center, y)) return CheckResult::structural(pair_text(fan.center, y) + " is not an edge");
    }
    const Edge first(fan.center, fan.spokes[0]);
    if (c.uncolored_edge() != first || c.color(first) != kUncolored) {
        return CheckResult::structural("first spoke is not the uncolored edge");
    }
    ColorSet earlier = c.missing(fan.spokes[0]);
    for (std::size_t i = 1; i < fan.spokes.size(); ++i) {
        const Color col = c.color(fan.center, fan.spokes[i]);
        if (col == kUncolored || !contains(earlier, col)) {
            return CheckResult::structural("spoke " + pair_text(fan.center, fan.spokes[i]) + " color " +
                                           std::to_string(col) + " is not missing at an earlier spoke");
        }
        earlier |= c.missing(fan.spokes[i]);
    }
    return CheckResult::ok();
}

CheckResult check_fan_elementary(const PartialEdgeColoring& c, const Multifan& fan) {
    if (auto s = validate_multifan_structure(c, fan); !s.is_ok()) return s;
    const auto vs = fan.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const ColorSet shared = c.missing(vs[i]) & c.missing(vs[j]);
            if (shared != 0) {
                return CheckResult::violation("fan vertices " + std::to_string(vs[i]) + " and " +
                                              std::to_string(vs[j]) + " both miss color " +
                                              std::to_string(lowest_color(shared)));
            }
        }
    }
    return CheckResult::ok();
}

CheckResult check_fan_center_linkage(const PartialEdgeColoring& c, const Multifan& fan) {
    if (auto s = validate_multifan_structure(c, fan); !s.is_ok()) return s;
    const ColorSet at_center = c.missing(fan.center);
    for (Vertex y : fan.spokes) {
        for (Color alpha : colors_in(at_center)) {
            for (Color beta : colors_in(c.missing(y))) {
                if (alpha == beta) continue;
                if (!linked(c, fan.center, y, alpha, beta)) {
                    return CheckResult::violation("center " + std::to_string(fan.center) + " and spoke " +
                                                  std::to_string(y) + " are (" + std::to_string(alpha) + "," +
                                                  std::to_string(beta) + ")-unlinked");
                }
            }
        }
    }
    return CheckResult::ok();
}

CheckResult validate_multifan(const PartialEdgeColoring& c, const Multifan& fan) {
    if (auto r = check_fan_elementary(c, fan); !r.is_ok()) return r;
    return check_fan_center_linkage(c, fan);
}

std::vector<Vertex> AlphaDecomposition::inducing_vertices(Color alpha) const {
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < spokes.size(); ++i) {
        if (seed[i] == alpha) out.push_back(spokes[i]);
    }
    return out;
}

std::vector<std::vector<Vertex>> AlphaDecomposition::sequences(Color alpha) const {
    std::vector<std::vector<Vertex>> out;
    std::vector<int> trail;
    auto descend = [&](auto&& self, int at) -> void {
        trail.push_back(at);
        bool leaf = true;
        for (std::size_t i = 1; i < spokes.size(); ++i) {
            if (parent[i] == at) {
                leaf = false;
                self(self, static_cast<int>(i));
            }
        }
        if (leaf) {
            std::vector<Vertex> seq;
            for (int s : trail) seq.push_back(spokes[static_cast<std::size_t>(s)]);
            out.push_back(std::move(seq));
        }
        trail.pop_back();
    };
    for (std::size_t i = 1; i < spokes.size(); ++i) {
        if (parent[i] == 0 && seed[i] == alpha) descend(descend, static_cast<int>(i));
    }
    return out;
}

bool AlphaDecomposition::precedes(Color delta, Color beta) const {
    const auto in_range = [&](Color x) { return x > 0 && static_cast<std::size_t>(x) < induced_by.size(); };
    if (delta == beta || !in_range(delta) || !in_range(beta)) return false;
    const Color root = induced_by[static_cast<std::size_t>(delta)];
    if (root == 0 || root != induced_by[static_cast<std::size_t>(beta)]) return false;
    if (delta == root) return true;
    const int upper = owner[static_cast<std::size_t>(delta)];
    for (int at = owner[static_cast<std::size_t>(beta)]; at > 0;) {
        at = parent[static_cast<std::size_t>(at)];
        if (at == upper) return true;
    }
    return false;
}

AlphaDecomposition alpha_decompose(const PartialEdgeColoring& c, const Multifan& fan) {
    if (auto s = validate_multifan_structure(c, fan); !s.is_ok()) throw StructureError(s.detail);

    const auto k = static_cast<std::size_t>(c.palette_size());
    AlphaDecomposition d;
    d.center = fan.center;
    d.spokes = fan.spokes;
    d.parent.assign(fan.spokes.size(), -1);
    d.seed.assign(fan.spokes.size(), 0);
    d.owner.assign(k + 1, -1);
    d.induced_by.assign(k + 1, 0);

    for (std::size_t i = 0; i < fan.spokes.size(); ++i) {
        for (Color col : colors_in(c.missing(fan.spokes[i]))) {
            auto& slot = d.owner[static_cast<std::size_t>(col)];
            if (slot >= 0) {
                throw StructureError("color " + std::to_string(col) + " is missing at two spokes; fan not elementary");
            }
            slot = static_cast<int>(i);
        }
    }
    for (std::size_t i = 1; i < fan.spokes.size(); ++i) {
        const Color col = c.color(fan.center, fan.spokes[i]);
        const int p = d.owner[static_cast<std::size_t>(col)];
        if (p < 0 || static_cast<std::size_t>(p) >= i) {
            throw StructureError("spoke " + std::to_string(fan.spokes[i]) + " has no earlier parent");
        }
        d.parent[i] = p;
        d.seed[i] = p == 0 ? col : d.seed[static_cast<std::size_t>(p)];
    }
    for (std::size_t col = 1; col <= k; ++col) {
        const int o = d.owner[col];
        if (o < 0) continue;
        d.induced_by[col] = o == 0 ? static_cast<Color>(col) : d.seed[static_cast<std::size_t>(o)];
    }
    return d;
}

namespace {

template <class Visit>
CheckResult for_spoke_color_pairs(const PartialEdgeColoring& c, const Multifan& fan, Visit&& visit) {
    for (std::size_t i = 0; i < fan.spokes.size(); ++i) {
        for (std::size_t j = 0; j < fan.spokes.size(); ++j) {
            if (i == j) continue;
            for (Color delta : colors_in(c.missing(fan.spokes[i]))) {
                for (Color lambda : colors_in(c.missing(fan.spokes[j]))) {
                    if (auto r = visit(fan.spokes[i], fan.spokes[j], delta, lambda); !r.is_ok()) return r;
                }
            }
        }
    }
    return CheckResult::ok();
}

}  // namespace

CheckResult check_fan_induced_linkage(const PartialEdgeColoring& c, const Multifan& fan) {
    AlphaDecomposition d;
    try {
        d = alpha_decompose(c, fan);
    } catch (const StructureError& e) {
        return CheckResult::structural(e.what());
    }
    return for_spoke_color_pairs(c, fan, [&](Vertex yi, Vertex yj, Color delta, Color lambda) {
        if (d.induced_by[static_cast<std::size_t>(delta)] == d.induced_by[static_cast<std::size_t>(lambda)]) {
            return CheckResult::ok();
        }
        if (linked(c, yi, yj, delta, lambda)) return CheckResult::ok();
        return CheckResult::violation("spokes " + std::to_string(yi) + " and " + std::to_string(yj) +
                                      " are (" + std::to_string(delta) + "," + std::to_string(lambda) +
                                      ")-unlinked although induced by different colors");
    });
}

CheckResult check_fan_precedence_linkage(const PartialEdgeColoring& c, const Multifan& fan) {
    AlphaDecomposition d;
    try {
        d = alpha_decompose(c, fan);
    } catch (const StructureError& e) {
        return CheckResult::structural(e.what());
    }
    return for_spoke_color_pairs(c, fan, [&](Vertex yi, Vertex yj, Color delta, Color lambda) {
        if (!d.precedes(delta, lambda) || linked(c, yi, yj, delta, lambda)) return CheckResult::ok();
        if (kempe_chain(c, yj, lambda, delta).contains(fan.center)) return CheckResult::ok();
        return CheckResult::violation("spokes " + std::to_string(yi) + "," + std::to_string(yj) + " unlinked in (" +
                                      std::to_string(delta) + "," + std::to_string(lambda) +
                                      ") but the center is off the chain from " + std::to_string(yj));
    });
}

CheckResult validate_fan_linkage(const PartialEdgeColoring& c, const Multifan& fan) {
    if (auto r = check_fan_induced_linkage(c, fan); !r.is_ok()) return r;
    return check_fan_precedence_linkage(c, fan);
}

}  // namespace chroma
