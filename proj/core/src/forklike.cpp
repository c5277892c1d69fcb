#include "chroma/forklike.hpp"

#include <algorithm>
#include <string>

#include "chroma/kierstead.hpp"

namespace chroma {

namespace {

std::string tuple_text(const ForkLike& f) {
    std::string s = std::string(to_string(f.kind)) + " a=" + std::to_string(f.a) + " b=" + std::to_string(f.b);
    if (f.c >= 0) s += " c=" + std::to_string(f.c);
    s += " u=" + std::to_string(f.u);
    if (f.kind == ForkKind::ShortKite) return s + " x=" + std::to_string(f.s1) + " y=" + std::to_string(f.s2);
    return s + " s1=" + std::to_string(f.s1) + " s2=" + std::to_string(f.s2) + " t1=" + std::to_string(f.t1) +
           " t2=" + std::to_string(f.t2);
}

bool distinct(std::initializer_list<Vertex> vs) {
    VertexSet seen = 0;
    for (Vertex v : vs) {
        if (v < 0 || (seen & vertex_bit(v))) return false;
        seen |= vertex_bit(v);
    }
    return true;
}

// Colored edge whose color lies in `allowed`.
bool colored_in(const PartialEdgeColoring& c, Vertex p, Vertex q, ColorSet allowed) {
    return contains(allowed, c.color(p, q));
}

void find_forks(const PartialEdgeColoring& c, Vertex a, Vertex b, std::vector<ForkLike>& out) {
    const Graph& g = c.graph();
    const ColorSet m = c.missing(a) | c.missing(b);
    for (Vertex u : g.neighbors(b)) {
        if (u == a || !colored_in(c, b, u, c.missing(a))) continue;
        for (Vertex s1 : g.neighbors(u)) {
            if (!distinct({a, b, u, s1}) || !colored_in(c, u, s1, m)) continue;
            for (Vertex s2 : g.neighbors(u)) {
                if (s2 <= s1 || !distinct({a, b, u, s1, s2}) || !colored_in(c, u, s2, m)) continue;
                for (Vertex t1 : g.neighbors(s1)) {
                    if (!distinct({a, b, u, s1, s2, t1})) continue;
                    for (Vertex t2 : g.neighbors(s2)) {
                        if (!distinct({a, b, u, s1, s2, t1, t2})) continue;
                        if (!colored_in(c, s1, t1, m & c.missing(t2))) continue;
                        if (!colored_in(c, s2, t2, m & c.missing(t1))) continue;
                        out.push_back({ForkKind::Fork, a, b, -1, u, s1, s2, t1, t2});
                    }
                }
            }
        }
    }
}

// Kites and short-kites share the a-b-u-c square.
void find_kites(const PartialEdgeColoring& c, ForkKind kind, Vertex a, Vertex b, std::vector<ForkLike>& out) {
    const Graph& g = c.graph();
    const ColorSet ma = c.missing(a), mb = c.missing(b);
    for (Vertex u : g.neighbors(b)) {
        if (u == a || !colored_in(c, b, u, ma)) continue;
        const ColorSet mabu = ma | mb | c.missing(u);
        for (Vertex cc : g.neighbors(a)) {
            if (!distinct({a, b, u, cc}) || !g.has_edge(cc, u)) continue;
            if (!colored_in(c, a, cc, mb) || !colored_in(c, cc, u, ma | mb)) continue;
            const ColorSet mbac = ma | mb | c.missing(cc);
            const ColorSet mbacu = mbac | c.missing(u);
            for (Vertex s1 : g.neighbors(u)) {
                if (!distinct({a, b, u, cc, s1}) || !colored_in(c, u, s1, ma | mb)) continue;
                for (Vertex s2 : g.neighbors(u)) {
                    if (!distinct({a, b, u, cc, s1, s2}) || !colored_in(c, u, s2, mbac)) continue;
                    if (kind == ForkKind::ShortKite) {
                        out.push_back({kind, a, b, cc, u, s1, s2, -1, -1});
                        continue;
                    }
                    for (Vertex t1 : g.neighbors(s1)) {
                        if (!distinct({a, b, u, cc, s1, s2, t1}) || !colored_in(c, s1, t1, mabu)) continue;
                        for (Vertex t2 : g.neighbors(s2)) {
                            if (!distinct({a, b, u, cc, s1, s2, t1, t2}) || !colored_in(c, s2, t2, mbacu)) continue;
                            out.push_back({kind, a, b, cc, u, s1, s2, t1, t2});
                        }
                    }
                }
            }
        }
    }
}

// Structural check shared by short-kites and kites.
CheckResult kite_paths(const PartialEdgeColoring& c, const ForkLike& f) {
    const Graph& g = c.graph();
    const bool shortk = f.kind == ForkKind::ShortKite;
    const bool ok_vertices = shortk ? distinct({f.a, f.b, f.c, f.u, f.s1, f.s2})
                                    : distinct({f.a, f.b, f.c, f.u, f.s1, f.s2, f.t1, f.t2});
    if (!ok_vertices) return CheckResult::structural("named vertices are not distinct");
    for (Vertex v : f.vertices()) {
        if (v >= g.order()) return CheckResult::structural("vertex out of range");
    }
    for (const Edge& e : f.edges()) {
        if (!g.has_edge(e)) {
            return CheckResult::structural(std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
        }
    }
    KiersteadPath k{{f.a, f.b, f.u, f.s1}};
    KiersteadPath kstar{{f.b, f.a, f.c, f.u, f.s2}};
    if (!shortk) {
        k.vertices.push_back(f.t1);
        kstar.vertices.push_back(f.t2);
    }
    if (auto r = validate_kierstead_structure(c, k); !r.is_ok()) return CheckResult::structural("K: " + r.detail);
    if (auto r = validate_kierstead_structure(c, kstar); !r.is_ok()) return CheckResult::structural("K*: " + r.detail);
    return CheckResult::ok();
}

}  // namespace

std::string_view to_string(ForkKind k) {
    switch (k) {
        case ForkKind::Fork: return "fork";
        case ForkKind::ShortKite: return "short-kite";
        case ForkKind::Kite: return "kite";
    }
    return "?";
}

std::vector<Vertex> ForkLike::vertices() const {
    switch (kind) {
        case ForkKind::Fork: return {a, b, u, s1, s2, t1, t2};
        case ForkKind::ShortKite: return {a, b, c, u, s1, s2};
        case ForkKind::Kite: return {a, b, c, u, s1, s2, t1, t2};
    }
    return {};
}

std::vector<Edge> ForkLike::edges() const {
    switch (kind) {
        case ForkKind::Fork: return {{a, b}, {b, u}, {u, s1}, {u, s2}, {s1, t1}, {s2, t2}};
        case ForkKind::ShortKite: return {{a, b}, {a, c}, {b, u}, {c, u}, {u, s1}, {u, s2}};
        case ForkKind::Kite: return {{a, b}, {a, c}, {b, u}, {c, u}, {u, s1}, {u, s2}, {s1, t1}, {s2, t2}};
    }
    return {};
}

std::vector<ForkLike> find_forklike(const PartialEdgeColoring& c, ForkKind kind, Vertex a) {
    std::vector<ForkLike> out;
    if (!c.is_gap_coloring()) return out;
    const Edge gap = *c.uncolored_edge();
    if (!gap.has(a)) return out;
    const Vertex b = gap.other(a);
    if (kind == ForkKind::Fork) {
        find_forks(c, a, b, out);
    } else {
        find_kites(c, kind, a, b, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ForkLike> find_forklike(const PartialEdgeColoring& c, ForkKind kind) {
    if (!c.is_gap_coloring()) return {};
    const Edge gap = *c.uncolored_edge();
    auto out = find_forklike(c, kind, gap.u);
    auto rev = find_forklike(c, kind, gap.v);
    out.insert(out.end(), rev.begin(), rev.end());
    return out;
}

CheckResult check_fork_absence(const PartialEdgeColoring& c, Vertex a) {
    const Graph& g = c.graph();
    const int delta = g.max_degree();
    if (delta < g.degree(a) + 2 * g.min_degree() + 1) {
        return CheckResult::inapplicable("Δ < d(a) + 2δ + 1");
    }
    for (const ForkLike& f : find_forklike(c, ForkKind::Fork, a)) {
        if (delta >= g.degree(f.a) + g.degree(f.t1) + g.degree(f.t2) + 1) {
            return CheckResult::violation(tuple_text(f) + " with Δ >= d(a) + d(t1) + d(t2) + 1");
        }
    }
    return CheckResult::ok();
}

CheckResult validate_shortkite(const PartialEdgeColoring& c, const ForkLike& sk) {
    if (sk.kind != ForkKind::ShortKite) return CheckResult::structural("not a short-kite");
    if (auto r = kite_paths(c, sk); !r.is_ok()) return r;
    const ColorSet m = c.missing(sk.a) | c.missing(sk.b);
    if ((c.missing(sk.x()) & m) == 0 || (c.missing(sk.y()) & m) == 0) {
        return CheckResult::inapplicable("x or y misses no color of m(a) ∪ m(b)");
    }
    const Graph& g = c.graph();
    if (std::max(g.degree(sk.x()), g.degree(sk.y())) == g.max_degree()) return CheckResult::ok();
    return CheckResult::violation(tuple_text(sk) + ": neither x nor y has maximum degree");
}

CheckResult validate_kite(const PartialEdgeColoring& c, const ForkLike& kt) {
    if (kt.kind != ForkKind::Kite) return CheckResult::structural("not a kite");
    if (auto r = kite_paths(c, kt); !r.is_ok()) return r;
    if (c.color(kt.s1, kt.t1) != c.color(kt.s2, kt.t2)) {
        return CheckResult::inapplicable("s1t1 and s2t2 carry different colors");
    }
    const ColorSet gamma = c.missing(kt.t1) & c.missing(kt.t2) & (c.missing(kt.a) | c.missing(kt.b));
    if (color_count(gamma) <= 4) return CheckResult::ok();
    return CheckResult::violation(tuple_text(kt) + ": t1 and t2 share " + std::to_string(color_count(gamma)) +
                                  " colors missing at a or b");
}

}  // namespace chroma
