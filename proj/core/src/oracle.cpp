#include "chroma/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace chroma {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
    Search(const Graph& g, int k, std::optional<Edge> skip, const OracleOptions& opts,
           std::optional<std::uint64_t> seed)
        : g_(g), k_(k), skip_id_(skip ? g.edge_id(*skip) : -1),
          colors_(static_cast<std::size_t>(g.size()), kUncolored),
          used_(static_cast<std::size_t>(g.order()), 0),
          remaining_(static_cast<std::size_t>(g.order()), 0) {
        if (opts.timeout.count() > 0) deadline_ = Clock::now() + opts.timeout;
        if (seed) rng_.emplace(*seed);
        plan();
    }

    bool run() { return descend(0); }
    std::vector<Color>& colors() { return colors_; }
    std::optional<std::mt19937_64>& rng() { return rng_; }

private:
    // Fix the star at a maximum-degree vertex to colors 1..d, then the rest
    // in decreasing endpoint-degree-sum order.
    void plan() {
        const int n = g_.order();
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (int id = 0; id < g_.size(); ++id) {
            if (id == skip_id_) continue;
            ++deg[static_cast<std::size_t>(g_.edge(id).u)];
            ++deg[static_cast<std::size_t>(g_.edge(id).v)];
        }
        Vertex hub = 0;
        for (Vertex v = 1; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(hub)]) hub = v;
        }
        std::vector<int> rest;
        for (int id = 0; id < g_.size(); ++id) {
            if (id == skip_id_) continue;
            if (g_.edge(id).has(hub)) {
                order_.push_back(id);
            } else {
                rest.push_back(id);
            }
        }
        fixed_ = order_.size();
        auto weight = [&](int id) {
            const Edge& e = g_.edge(id);
            return deg[static_cast<std::size_t>(e.u)] + deg[static_cast<std::size_t>(e.v)];
        };
        std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) { return weight(x) > weight(y); });
        order_.insert(order_.end(), rest.begin(), rest.end());
        for (int id : order_) {
            ++remaining_[static_cast<std::size_t>(g_.edge(id).u)];
            ++remaining_[static_cast<std::size_t>(g_.edge(id).v)];
        }
    }

    void tick() {
        if (!deadline_ || (++nodes_ & 1023) != 0) return;
        if (Clock::now() > *deadline_) throw TimeoutError("edge-coloring search exceeded its time budget");
    }

    // Remaining edges fit: each vertex has room, and the colors' possible
    // matchings among vertices with remaining edges cover what is left.
    bool feasible(std::size_t pos) const {
        const ColorSet all = palette_mask(k_);
        long capacity = 0;
        std::vector<int> free_count(static_cast<std::size_t>(k_ + 1), 0);
        for (Vertex v = 0; v < g_.order(); ++v) {
            const int r = remaining_[static_cast<std::size_t>(v)];
            if (r == 0) continue;
            const ColorSet free = all & ~used_[static_cast<std::size_t>(v)];
            if (color_count(free) < r) return false;
            for (ColorSet f = free; f != 0; f &= f - 1) ++free_count[static_cast<std::size_t>(lowest_color(f))];
        }
        for (int c = 1; c <= k_; ++c) capacity += free_count[static_cast<std::size_t>(c)] / 2;
        return capacity >= static_cast<long>(order_.size() - pos);
    }

    void set(int id, Color c) {
        const Edge& e = g_.edge(id);
        colors_[static_cast<std::size_t>(id)] = c;
        used_[static_cast<std::size_t>(e.u)] |= color_bit(c);
        used_[static_cast<std::size_t>(e.v)] |= color_bit(c);
        --remaining_[static_cast<std::size_t>(e.u)];
        --remaining_[static_cast<std::size_t>(e.v)];
    }

    void unset(int id, Color c) {
        const Edge& e = g_.edge(id);
        colors_[static_cast<std::size_t>(id)] = kUncolored;
        used_[static_cast<std::size_t>(e.u)] &= ~color_bit(c);
        used_[static_cast<std::size_t>(e.v)] &= ~color_bit(c);
        ++remaining_[static_cast<std::size_t>(e.u)];
        ++remaining_[static_cast<std::size_t>(e.v)];
    }

    bool descend(std::size_t pos) {
        tick();
        if (pos == order_.size()) return true;
        const int id = order_[pos];
        const Edge& e = g_.edge(id);
        if (pos < fixed_) {
            const Color c = static_cast<Color>(pos) + 1;
            if (c > k_) return false;
            set(id, c);
            if (feasible(pos + 1) && descend(pos + 1)) return true;
            unset(id, c);
            return false;
        }
        const ColorSet free = palette_mask(k_) & ~used_[static_cast<std::size_t>(e.u)] &
                              ~used_[static_cast<std::size_t>(e.v)];
        std::vector<Color> choices = colors_in(free);
        if (rng_) {
            for (std::size_t i = choices.size(); i > 1; --i) {
                std::swap(choices[i - 1], choices[static_cast<std::size_t>((*rng_)() % i)]);
            }
        }
        for (Color c : choices) {
            set(id, c);
            if (feasible(pos + 1) && descend(pos + 1)) return true;
            unset(id, c);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int skip_id_;
    std::vector<Color> colors_;
    std::vector<ColorSet> used_;
    std::vector<int> remaining_;
    std::vector<int> order_;
    std::size_t fixed_ = 0;
    std::optional<Clock::time_point> deadline_;
    std::optional<std::mt19937_64> rng_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(EdgeClass c) { return c == EdgeClass::Class1 ? "class1" : "class2"; }

std::optional<PartialEdgeColoring> find_coloring(const Graph& g, int k, std::optional<Edge> skip,
                                                 const OracleOptions& opts, std::optional<std::uint64_t> shuffle_seed) {
    if (skip && !g.has_edge(*skip)) throw Error("skipped pair is not an edge");
    if (k < 1 || k > kMaxPalette) throw Error("palette size " + std::to_string(k) + " out of range");
    // A palette below Δ(G - e) cannot work; below Δ(G) the coloring type
    // cannot represent it either.
    if (k < g.max_degree()) return std::nullopt;
    Search search(g, k, skip, opts, shuffle_seed);
    if (!search.run()) return std::nullopt;
    std::vector<Color> colors = std::move(search.colors());
    if (auto& rng = search.rng()) {
        std::vector<Color> perm(static_cast<std::size_t>(k + 1));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size() - 1; i > 1; --i) {
            std::swap(perm[i], perm[1 + static_cast<std::size_t>((*rng)() % i)]);
        }
        for (Color& c : colors) c = perm[static_cast<std::size_t>(c)];
    }
    return PartialEdgeColoring::from_colors(g, k, std::move(colors),
                                            skip ? std::optional<Edge>(Edge(skip->u, skip->v)) : std::nullopt);
}

ChiResult chromatic_index(const Graph& g, const OracleOptions& opts) {
    if (g.size() == 0) throw Error("chromatic index of a graph without edges");
    const int delta = g.max_degree();
    if (auto c = find_coloring(g, delta, std::nullopt, opts)) return {delta, EdgeClass::Class1, std::move(*c)};
    auto c = find_coloring(g, delta + 1, std::nullopt, opts);
    if (!c) throw Error("no (Δ+1)-edge-coloring found; the search is broken");
    return {delta + 1, EdgeClass::Class2, std::move(*c)};
}

bool is_critical_edge(const Graph& g, Edge e, const OracleOptions& opts, std::optional<int> chi_prime) {
    if (!g.has_edge(e)) throw Error("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    const int chi = chi_prime ? *chi_prime : chromatic_index(g, opts).chi_prime;
    if (chi == g.max_degree()) return false;
    return find_coloring(g, g.max_degree(), e, opts).has_value();
}

bool is_delta_critical(const Graph& g, const OracleOptions& opts) {
    if (g.size() == 0 || !g.is_connected()) return false;
    const ChiResult chi = chromatic_index(g, opts);
    if (chi.classification == EdgeClass::Class1) return false;
    for (const Edge& e : g.edges()) {
        if (!is_critical_edge(g, e, opts, chi.chi_prime)) return false;
    }
    return true;
}

std::vector<PartialEdgeColoring> sample_colorings(const Graph& g, Edge e, int count, std::uint64_t seed,
                                                  const OracleOptions& opts) {
    if (!g.has_edge(e)) throw Error("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    std::vector<PartialEdgeColoring> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    std::mt19937_64 seeds(seed);
    for (int i = 0; i < count; ++i) {
        auto c = find_coloring(g, g.max_degree(), e, opts, seeds());
        if (!c) {
            throw UncolorableError("G - {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has no " +
                                   std::to_string(g.max_degree()) + "-edge-coloring");
        }
        out.push_back(std::move(*c));
    }
    return out;
}

}  // namespace chroma
