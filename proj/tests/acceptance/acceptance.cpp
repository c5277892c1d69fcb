// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "chroma/census.hpp"
#include "chroma/fixtures.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/kempe.hpp"
#include "chroma/oracle.hpp"
#include "chroma/overfull.hpp"
#include "test_support.hpp"

using namespace chroma;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

void report(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > budget_s) {
        o.pass = false;
        o.detail += " (over budget " + std::to_string(budget_s) + " s)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::string> full_corpus() {
    auto corpus = testkit::load_corpus("connected_upto7.g6");
    for (const auto& [name, g] : fixtures::basic_family()) corpus.push_back(to_graph6(g));
    return corpus;
}

CensusConfig census_config() {
    CensusConfig cfg;
    cfg.seed = 1;
    cfg.samples = 100;
    cfg.threads = threads_from_env();
    return cfg;
}

}  // namespace

int main() {
    report("C1", "Petersen minus a vertex", 1.0, [] {
        const Graph g = fixtures::petersen_minus_vertex();
        const auto of = is_overfull(g);
        const auto chi = chromatic_index(g);
        const bool critical = is_delta_critical(g);
        std::ostringstream d;
        d << "n=" << g.order() << " Δ=" << g.max_degree() << " |E|=" << g.size() << " excess=" << of.excess
          << " critical=" << critical << " class=" << to_string(chi.classification) << " overfull=" << of.overfull;
        const bool ok = g.order() == 9 && g.max_degree() == 3 && g.size() == 12 && of.excess == 0 && critical &&
                        chi.classification == EdgeClass::Class2 && !of.overfull;
        return Outcome{ok, d.str()};
    });

    report("C2", "oracle closed forms", 30.0, [] {
        std::string bad;
        for (int k = 1; k <= 4; ++k) {
            if (chromatic_index(fixtures::cycle(2 * k + 1)).chi_prime != 3) bad += " C" + std::to_string(2 * k + 1);
        }
        for (int n = 2; n <= 7; ++n) {
            const int want = n % 2 == 0 ? n - 1 : n;
            if (chromatic_index(fixtures::complete(n)).chi_prime != want) bad += " K" + std::to_string(n);
        }
        if (chromatic_index(fixtures::petersen()).chi_prime != 4) bad += " Petersen";
        return Outcome{bad.empty(), bad.empty() ? "C3..C9, K2..K7, Petersen" : "mismatch:" + bad};
    });

    report("C3", "subdivided K4 at the hypothesis boundary", 5.0, [] {
        const Graph g = fixtures::subdivided_k4();
        const auto of = is_overfull(g);
        const bool critical = is_delta_critical(g);
        const std::int64_t bound = static_cast<std::int64_t>(g.max_degree()) * (g.order() / 2);
        std::ostringstream d;
        d << "margin=" << of.margin << " critical=" << critical << " |E|=" << g.size() << " bound=" << bound;
        return Outcome{of.margin == Rational(0) && critical && of.overfull && g.size() == 7 && bound == 6, d.str()};
    });

    CensusReport census;
    report("C4", "no lemma violations on n<=7 corpus plus fixtures", 600.0, [&] {
        census = run_census(full_corpus(), census_config());
        std::int64_t checked = 0;
        for (const auto& r : census.records) {
            for (const auto& [name, t] : r.lemmas) checked += t.checked;
        }
        std::int64_t timeouts = 0;
        for (const auto& r : census.records) timeouts += r.status != "ok";
        std::ostringstream d;
        d << census.records.size() << " graphs, " << checked << " checks, " << census.violations()
          << " violations, " << timeouts << " unfinished";
        return Outcome{census.violations() == 0 && timeouts == 0 && checked > 0, d.str()};
    });

    report("C5", "min-degree overfull theorem sweep", 1.0, [&] {
        int holds = 0, counter = 0;
        for (const auto& r : census.records) {
            holds += r.theorem.verdict == TheoremVerdict::Holds;
            counter += r.theorem.verdict == TheoremVerdict::Counterexample;
        }
        std::ostringstream d;
        d << holds << " holds, " << counter << " counterexamples";
        return Outcome{!census.records.empty() && holds >= 1 && counter == 0, d.str()};
    });

    report("C6", "random Kempe operations on corpus colorings", 60.0, [] {
        std::vector<Graph> graphs;
        for (const auto& line : testkit::load_corpus("connected_upto7.g6")) {
            Graph g = parse_graph6(line);
            if (g.size() >= 2) graphs.push_back(std::move(g));
        }
        std::mt19937_64 rng(6);
        int ops = 0, swaps = 0, links = 0, subchains = 0;
        std::string bad;
        auto partition_ok = [](const PartialEdgeColoring& c) {
            const auto recount = testkit::recount_missing(c);
            for (Vertex v = 0; v < c.graph().order(); ++v) {
                if (c.missing(v) != recount[static_cast<std::size_t>(v)] || (c.missing(v) & c.present(v)) != 0 ||
                    (c.missing(v) | c.present(v)) != palette_mask(c.palette_size())) {
                    return false;
                }
            }
            return c.is_proper();
        };
        while (ops < 10'000 && bad.empty()) {
            const Graph& g = graphs[rng() % graphs.size()];
            const Edge gap = g.edge(static_cast<int>(rng() % static_cast<std::uint64_t>(g.size())));
            const int k = g.max_degree() + 1;
            auto c = *find_coloring(g, k, gap, {}, rng());
            for (int s = 0; s < 20 && ops < 10'000 && bad.empty(); ++s, ++ops) {
                const Vertex x = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.order()));
                const Color a = 1 + static_cast<Color>(rng() % static_cast<std::uint64_t>(k));
                Color b = 1 + static_cast<Color>(rng() % static_cast<std::uint64_t>(k - 1));
                if (b >= a) ++b;
                const KempeChain chain = kempe_chain(c, x, a, b);
                const Vertex y = chain.vertices[rng() % chain.vertices.size()];
                switch (rng() % 3) {
                    case 0: {
                        const auto next = swap_at(c, x, a, b);
                        if (!partition_ok(next)) bad = "swap broke the coloring at op " + std::to_string(ops);
                        if (swap_at(next, x, a, b) != c) bad = "swap twice differs at op " + std::to_string(ops);
                        c = next;
                        ++swaps;
                        break;
                    }
                    case 1:
                        if (!linked(c, x, y, a, b) || !linked(c, y, x, b, a)) {
                            bad = "chain members reported unlinked at op " + std::to_string(ops);
                        }
                        ++links;
                        break;
                    default: {
                        if (!chain.is_path()) break;
                        const Vertex from = chain.front(), to = chain.back();
                        const auto next = swap_subchain(c, from, to, a, b);
                        if (!partition_ok(next)) bad = "subchain swap broke the coloring at op " + std::to_string(ops);
                        if (swap_subchain(next, from, to, a, b) != c) {
                            bad = "subchain swap twice differs at op " + std::to_string(ops);
                        }
                        c = next;
                        ++subchains;
                        break;
                    }
                }
            }
        }
        std::ostringstream d;
        d << ops << " operations (" << swaps << " swaps, " << links << " linked, " << subchains << " subchains)";
        return Outcome{bad.empty() && ops == 10'000, bad.empty() ? d.str() : bad};
    });

    report("C7", "census reproducible for a fixed seed", 600.0, [&] {
        std::ostringstream first, second;
        write_jsonl(first, census, false);
        write_jsonl(second, run_census(full_corpus(), census_config()), false);
        const bool same = first.str() == second.str();
        return Outcome{same && !first.str().empty(),
                       same ? std::to_string(first.str().size()) + " bytes identical" : "outputs differ"};
    });

    std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
    return failures == 0 ? 0 : 1;
}
