// chroma: edge-coloring toolkit for small graphs.
//
// Exit codes: 0 success, 1 a lemma violation or counterexample was found,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chroma/census.hpp"
#include "chroma/coloring_json.hpp"
#include "chroma/error.hpp"
#include "chroma/fixtures.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/oracle.hpp"
#include "chroma/overfull.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chroma::ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rational_text(const chroma::Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Writes each witness as its own file; returns how many were written.
std::size_t dump_witnesses(const std::vector<const chroma::GraphRecord*>& records, const std::string& dir) {
    std::size_t written = 0;
    for (const auto* r : records) {
        if (r->witnesses.empty()) continue;
        std::filesystem::create_directories(dir);
        for (const auto& w : r->witnesses) {
            const auto path = std::filesystem::path(dir) / ("witness-" + std::to_string(written++) + ".json");
            std::ofstream out(path);
            out << chroma::witness_to_json(w).dump(2) << '\n';
        }
    }
    return written;
}

struct Common {
    std::uint64_t seed = 0;
    int samples = 100;
    long timeout_ms = 10'000;
    std::string format = "json";
    std::string witness_dir = "witnesses";
    bool no_timing = false;
};

chroma::CensusConfig census_config(const Common& o) {
    chroma::CensusConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.timeout = std::chrono::milliseconds(o.timeout_ms);
    cfg.threads = chroma::threads_from_env();
    return cfg;
}

int cmd_color(const std::string& file, const Common& o) {
    const chroma::Graph g = chroma::parse_graph_auto(slurp(file));
    const auto chi = chroma::chromatic_index(g, {std::chrono::milliseconds(o.timeout_ms)});
    if (o.format == "csv") {
        std::cout << "u,v,color\n";
        for (int id = 0; id < g.size(); ++id) {
            std::cout << g.edge(id).u << ',' << g.edge(id).v << ',' << chi.witness.color(id) << '\n';
        }
    } else {
        std::cout << chroma::coloring_to_json(chi.witness).dump() << '\n';
    }
    return kExitOk;
}

int cmd_chi(const std::string& file, const Common& o) {
    const chroma::Graph g = chroma::parse_graph_auto(slurp(file));
    const auto chi = chroma::chromatic_index(g, {std::chrono::milliseconds(o.timeout_ms)});
    if (o.format == "csv") {
        std::cout << "chi_prime,max_degree,class\n"
                  << chi.chi_prime << ',' << g.max_degree() << ',' << to_string(chi.classification) << '\n';
    } else {
        std::cout << nlohmann::json{{"chi_prime", chi.chi_prime},
                                    {"max_degree", g.max_degree()},
                                    {"class", std::string(to_string(chi.classification))}}
                         .dump()
                  << '\n';
    }
    return kExitOk;
}

int cmd_critical(const std::string& file, const Common& o) {
    const chroma::Graph g = chroma::parse_graph_auto(slurp(file));
    const chroma::OracleOptions opts{std::chrono::milliseconds(o.timeout_ms)};
    nlohmann::json j;
    j["connected"] = g.is_connected();
    nlohmann::json edges = nlohmann::json::array();
    bool all = g.size() > 0;
    if (g.size() > 0) {
        const auto chi = chroma::chromatic_index(g, opts);
        j["chi_prime"] = chi.chi_prime;
        j["class"] = std::string(to_string(chi.classification));
        for (const auto& e : g.edges()) {
            const bool crit = chroma::is_critical_edge(g, e, opts, chi.chi_prime);
            all = all && crit;
            edges.push_back({{"edge", {e.u, e.v}}, {"critical", crit}});
        }
    }
    j["delta_critical"] = all && g.is_connected();
    j["edges"] = edges;
    if (o.format == "csv") {
        std::cout << "u,v,critical\n";
        for (const auto& e : edges) std::cout << e["edge"][0] << ',' << e["edge"][1] << ',' << e["critical"] << '\n';
    } else {
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_overfull(const std::string& file, const Common& o) {
    const chroma::Graph g = chroma::parse_graph_auto(slurp(file));
    const auto v = chroma::is_overfull(g);
    if (o.format == "json") {
        nlohmann::json j{{"overfull", v.overfull},
                         {"excess", v.excess},
                         {"hypothesis", v.hypothesis},
                         {"margin", rational_text(v.margin)}};
        if (g.order() <= chroma::kOverfullSearchLimit) {
            const auto h = chroma::find_overfull_subgraph(g);
            nlohmann::json members = nlohmann::json::array();
            if (h) {
                for (chroma::Vertex x = 0; x < g.order(); ++x) {
                    if (*h & chroma::vertex_bit(x)) members.push_back(x);
                }
            }
            j["overfull_subgraph"] = h ? members : nlohmann::json(nullptr);
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (v.overfull ? "overfull" : "not overfull") << " excess=" << v.excess << '\n';
    }
    return kExitOk;
}

int cmd_census(const std::string& file, const Common& o, const std::string& output) {
    std::istringstream in(slurp(file));
    const auto corpus = chroma::read_corpus(in);
    const auto report = chroma::run_census(corpus, census_config(o));

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        file_out.open(output);
        if (!file_out) throw chroma::ParseError("cannot write " + output);
        out = &file_out;
    }
    if (o.format == "csv") {
        chroma::write_csv(*out, report, !o.no_timing);
    } else {
        chroma::write_jsonl(*out, report, !o.no_timing);
    }
    std::vector<const chroma::GraphRecord*> records;
    for (const auto& r : report.records) records.push_back(&r);
    const auto written = dump_witnesses(records, o.witness_dir);
    if (report.violations() > 0) {
        std::cerr << "chroma: " << report.violations() << " violation(s); " << written << " witness file(s) in "
                  << o.witness_dir << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, const Common& o) {
    const chroma::Graph g = chroma::parse_graph_auto(slurp(file));
    const auto rec = chroma::census_graph(g, census_config(o));
    std::cout << chroma::record_to_json(rec, !o.no_timing).dump(o.format == "json" ? -1 : 2) << '\n';
    const auto written = dump_witnesses({&rec}, o.witness_dir);
    if (rec.violations() > 0) {
        std::cerr << "chroma: " << rec.violations() << " violation(s); " << written << " witness file(s) in "
                  << o.witness_dir << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_gen_basic(bool names) {
    for (const auto& [name, g] : chroma::fixtures::basic_family()) {
        if (names) std::cout << "# " << name << '\n';
        std::cout << chroma::to_graph6(g) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-coloring toolkit: chromatic index, criticality, overfullness, lemma census"};
    app.require_subcommand(1);
    Common opts;
    std::string file = "-";
    std::string output;
    bool names = false;

    auto add_common = [&](CLI::App* sub, bool sampling, std::vector<std::string> formats = {"json", "csv"}) {
        sub->add_option("file", file, "graph6 or edge-list input ('-' for stdin)");
        sub->add_option("--timeout-ms", opts.timeout_ms, "budget per chromatic-index decision")->check(CLI::PositiveNumber);
        sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember(formats));
        if (sampling) {
            sub->add_option("--seed", opts.seed, "sampling seed");
            sub->add_option("--samples,--max-samples", opts.samples, "colorings sampled per critical edge")
                ->check(CLI::PositiveNumber);
            sub->add_option("--witness-dir", opts.witness_dir, "directory for violation witnesses");
            sub->add_flag("--no-timing", opts.no_timing, "omit timing fields");
        }
    };

    auto* color = app.add_subcommand("color", "print an optimal edge coloring");
    add_common(color, false);
    auto* chi = app.add_subcommand("chi", "chromatic index and class");
    add_common(chi, false);
    auto* critical = app.add_subcommand("critical", "per-edge criticality and Δ-criticality");
    add_common(critical, false);
    auto* overfull = app.add_subcommand("overfull", "overfullness, excess and min-degree hypothesis");
    add_common(overfull, false, {"text", "json"});
    auto* census = app.add_subcommand("census", "run every checker over a graph6 corpus");
    add_common(census, true);
    census->add_option("-o,--output", output, "report path (default stdout)");
    auto* verify = app.add_subcommand("verify-lemmas", "run every checker on one graph");
    add_common(verify, true);
    auto* gen = app.add_subcommand("gen-basic", "emit the fixture family as graph6");
    gen->add_flag("--names", names, "precede each graph with a '# name' comment");

    try {
        app.parse(argc, argv);
        if (overfull->parsed() && overfull->count("--format") == 0) opts.format = "text";
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        if (color->parsed()) return cmd_color(file, opts);
        if (chi->parsed()) return cmd_chi(file, opts);
        if (critical->parsed()) return cmd_critical(file, opts);
        if (overfull->parsed()) return cmd_overfull(file, opts);
        if (census->parsed()) return cmd_census(file, opts, output);
        if (verify->parsed()) return cmd_verify(file, opts);
        if (gen->parsed()) return cmd_gen_basic(names);
    } catch (const chroma::TimeoutError& e) {
        std::cerr << "chroma: timeout: " << e.what() << '\n';
        return kExitUsage;
    } catch (const chroma::Error& e) {
        std::cerr << "chroma: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "chroma: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
