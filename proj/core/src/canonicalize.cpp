#include "chroma/canonicalize.hpp"

#include <string>

#include "chroma/error.hpp"
#include "chroma/kempe.hpp"
#include "chroma/swap_script.hpp"

namespace chroma {

namespace {

constexpr int kMaxRounds = 32;

std::string colors_text(std::initializer_list<std::pair<const char*, Color>> named) {
    std::string s;
    for (const auto& [name, col] : named) {
        s += (s.empty() ? "" : " ") + std::string(name) + "=" + std::to_string(col);
    }
    return s;
}

struct Machine {
    Vertex a, b, u, s, t;
    PartialEdgeColoring phi;
    std::vector<std::string> trail;

    // Runs `script`, logging `label`. Returns false when the script fails.
    bool run(const std::string& label, const SwapScript& script, std::string& failure) {
        std::string line = label + ":";
        for (const auto& step : script.steps()) line += " " + describe(step) + ";";
        trail.push_back(line);
        try {
            phi = apply_script(phi, script).result;
            return true;
        } catch (const Error& e) {
            failure = label + " failed: " + e.what();
            return false;
        }
    }

    bool on_chain(Vertex from, Color x, Color y, Vertex w) const { return kempe_chain(phi, from, x, y).contains(w); }

    bool edge_on_chain(Vertex from, Color x, Color y, Vertex p, Vertex q) const {
        return kempe_chain(phi, from, x, y).contains_edge(phi.graph().edge_id(p, q));
    }
};

}  // namespace

bool satisfies_canonical_form(const PartialEdgeColoring& c, const KiersteadPath& path) {
    if (path.vertex_count() != 5) return false;
    const Vertex a = path[0], b = path[1], u = path[2], s = path[3], t = path[4];
    return contains(c.missing(a) & c.missing(t), c.color(b, u)) &&
           contains(c.missing(b) & c.missing(t), c.color(u, s)) && contains(c.missing(a), c.color(s, t));
}

CanonicalForm canonicalize_k5_path(const PartialEdgeColoring& c, const KiersteadPath& path) {
    CanonicalForm out;
    if (path.vertex_count() != 5) {
        out.form = out.degrees = CheckResult::structural("expected a five-vertex path");
        return out;
    }
    if (auto r = validate_kierstead_structure(c, path); !r.is_ok()) {
        out.form = out.degrees = r;
        return out;
    }
    const Graph& g = c.graph();
    Machine m{path[0], path[1], path[2], path[3], path[4], c, {}};
    const Vertex a = m.a, b = m.b, u = m.u, s = m.s, t = m.t;

    const ColorSet gamma0 = c.missing(t) & (c.missing(a) | c.missing(b));
    if (color_count(gamma0) < 3) {
        out.form = out.degrees = CheckResult::inapplicable("t misses fewer than three colors of m(a) ∪ m(b)");
        return out;
    }

    const int delta = g.max_degree();
    if (g.degree(b) == delta && g.degree(u) == delta) {
        out.degrees = CheckResult::ok();
    } else {
        out.degrees = CheckResult::violation("d(b)=" + std::to_string(g.degree(b)) + " d(u)=" +
                                             std::to_string(g.degree(u)) + " with Δ=" + std::to_string(delta));
    }

    auto finish = [&](CheckResult form) {
        out.form = std::move(form);
        out.trail = std::move(m.trail);
        if (out.form.is_ok()) out.coloring = m.phi;
        return out;
    };

    std::string failure;
    try {
    for (int round = 0; round < kMaxRounds; ++round) {
        const PartialEdgeColoring& phi = m.phi;
        if (satisfies_canonical_form(phi, path)) {
            if (!phi.is_gap_coloring() || phi.uncolored_edge() != Edge(a, b) || !phi.is_proper()) {
                return finish(CheckResult::violation("final coloring left the class of ab-gap colorings"));
            }
            return finish(CheckResult::ok());
        }
        const ColorSet ma = phi.missing(a), mb = phi.missing(b), mt = phi.missing(t), mu = phi.missing(u);
        const ColorSet gamma = mt & (ma | mb);
        if (color_count(gamma) < 2) {
            return finish(CheckResult::violation("t lost the colors shared with a and b"));
        }
        const Color bu = phi.color(b, u), us = phi.color(u, s), st = phi.color(s, t);

        // Normalize so that alpha is missing at a and beta at b, preferring
        // the colors already on bu and us.
        const ColorSet ga = gamma & ma, gb = gamma & mb;
        if (ga == 0 || gb == 0) {
            const Color y = lowest_color(gamma & (gamma - 1));
            if (ga != 0) {
                const Color lambda = lowest_color(mb);
                if (!m.run("normalize (both at a)", SwapScript().swap_at(b, y, lambda), failure)) break;
            } else {
                const Color lambda = lowest_color(ma);
                if (!m.run("normalize (both at b)", SwapScript().swap_at(a, y, lambda), failure)) break;
            }
            continue;
        }
        const Color alpha = contains(ga, bu) ? bu : lowest_color(ga);
        const Color beta = contains(gb, us) ? us : lowest_color(gb);

        if (bu != alpha) {
            if (!contains(ma, bu)) {
                failure = "bu color " + std::to_string(bu) + " is not missing at a";
                break;
            }
            if (!m.run("move bu color onto t " + colors_text({{"alpha", alpha}, {"beta", beta}, {"delta", bu}}),
                       SwapScript().swap_at(t, beta, bu).swap_at(t, alpha, beta), failure)) {
                break;
            }
            continue;
        }

        if (contains(mb, us)) {
            const Color tau = us;
            if (tau == beta) {
                failure = "us and bu already fit but st color " + std::to_string(st) +
                          " is not missing at a (a smaller Kierstead path would break)";
                break;
            }
            const std::string names = colors_text({{"alpha", alpha}, {"beta", beta}, {"tau", tau}});
            if (!m.edge_on_chain(t, beta, tau, u, s)) {
                if (!m.run("us outside P_t(beta,tau) " + names, SwapScript().swap_at(t, beta, tau), failure)) break;
            } else {
                if (!m.run("us on P_t(beta,tau) " + names,
                           SwapScript().swap_at(t, beta, tau).swap_at(t, alpha, beta).swap_at(t, alpha, tau),
                           failure)) {
                    break;
                }
            }
            continue;
        }
        if (!contains(ma, us)) {
            failure = "us color " + std::to_string(us) + " is missing at neither a nor b";
            break;
        }

        const Color delta_c = us;
        const Color gamma_c = st;
        const std::string names =
            colors_text({{"alpha", alpha}, {"beta", beta}, {"delta", delta_c}, {"gamma", gamma_c}});
        SwapScript script;
        std::string label;
        if (contains(mb, gamma_c)) {
            if (m.on_chain(a, beta, delta_c, u)) {
                label = "st missing at b, u on P_a(beta,delta)";
                script.swap_at(t, beta, delta_c).swap_at(a, delta_c, gamma_c);
            } else {
                label = "st missing at b, u off P_a(beta,delta)";
                script.swap_at(a, beta, delta_c).swap_at(a, beta, gamma_c);
            }
        } else if (contains(mu, gamma_c)) {
            if (contains(mt, delta_c)) {
                label = "st missing at u, delta at t";
                script.swap_at(t, beta, gamma_c).swap_at(a, beta, delta_c);
            } else {
                label = "st missing at u, delta not at t";
                script.swap_at(t, beta, gamma_c).swap_at(t, gamma_c, delta_c).swap_at(a, beta, delta_c);
            }
        } else if (contains(ma, gamma_c)) {
            if (contains(mt, delta_c)) {
                label = "st missing at a, delta at t";
                script.swap_at(t, beta, gamma_c).swap_at(a, beta, delta_c);
            } else {
                const ColorSet rest = gamma & ~color_bit(alpha) & ~color_bit(beta);
                if (rest == 0) {
                    failure = "no third color shared by t with a and b";
                    break;
                }
                const Color tau = lowest_color(rest);
                const std::string more = names + " tau=" + std::to_string(tau);
                if (contains(mu, tau)) {
                    label = "st missing at a, tau at u";
                    script.swap_at(t, tau, delta_c);
                } else if (contains(mb, tau)) {
                    if (!m.on_chain(a, tau, delta_c, u)) {
                        label = "st missing at a, tau at b, u off P_a(tau,delta)";
                        script.swap_at(a, tau, delta_c);
                    } else {
                        label = "st missing at a, tau at b, u on P_a(tau,delta)";
                        script.swap_at(t, tau, delta_c);
                    }
                } else if (!m.on_chain(a, beta, delta_c, u)) {
                    label = "st missing at a, tau at a, u off P_a(beta,delta)";
                    script.swap_at(a, beta, delta_c)
                        .swap_at(t, alpha, delta_c)
                        .swap_at(a, gamma_c, delta_c)
                        .swap_at(t, beta, gamma_c)
                        .swap_at(t, gamma_c, alpha)
                        .swap_at(t, tau, gamma_c)
                        .swap_at(a, beta, gamma_c)
                        .swap_at(a, beta, delta_c);
                } else {
                    label = "st missing at a, tau at a, u on P_a(beta,delta)";
                    script.swap_at(t, beta, delta_c)
                        .swap_at(t, tau, beta)
                        .swap_at(a, beta, gamma_c)
                        .swap_at(a, gamma_c, delta_c);
                }
                label += " [" + more + "]";
                if (!m.run(label, script, failure)) break;
                continue;
            }
        } else {
            failure = "st color " + std::to_string(gamma_c) + " is missing at none of a, b, u";
            break;
        }
        if (!m.run(label + " [" + names + "]", script, failure)) break;
    }
    } catch (const Error& e) {
        failure = std::string("branch guard raised: ") + e.what();
    }
    if (failure.empty()) failure = "no canonical coloring after " + std::to_string(kMaxRounds) + " rounds";
    return finish(CheckResult::violation(failure));
}

}  // namespace chroma
