#include "chroma/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

#include "chroma/canonicalize.hpp"
#include "chroma/coloring_json.hpp"
#include "chroma/degree_lemmas.hpp"
#include "chroma/error.hpp"
#include "chroma/forklike.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/kierstead.hpp"
#include "chroma/multifan.hpp"

namespace chroma {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

class Recorder {
public:
    explicit Recorder(GraphRecord& rec) : rec_(rec) {
        for (auto name : kLemmaSuites) rec_.lemmas[std::string(name)];
    }

    void add(std::string_view lemma, const CheckResult& r, std::optional<Edge> edge = std::nullopt,
             const PartialEdgeColoring* coloring = nullptr) {
        rec_.lemmas[std::string(lemma)].add(r);
        if (r.verdict != Verdict::Violation && r.verdict != Verdict::Structural) return;
        LemmaWitness w{rec_.graph6, edge, std::nullopt, std::string(lemma), r.detail};
        if (r.verdict == Verdict::Structural) w.detail = "structural: " + w.detail;
        if (coloring) w.coloring = *coloring;
        rec_.witnesses.push_back(std::move(w));
    }

private:
    GraphRecord& rec_;
};

void coloring_suites(Recorder& rec, const PartialEdgeColoring& phi, Edge e) {
    const Graph& g = phi.graph();
    for (Vertex center : {e.u, e.v}) {
        const Multifan fan = grow_multifan(phi, center);
        rec.add("fan_elementary", check_fan_elementary(phi, fan), e, &phi);
        rec.add("fan_center_linkage", check_fan_center_linkage(phi, fan), e, &phi);
        rec.add("fan_induced_linkage", check_fan_induced_linkage(phi, fan), e, &phi);
        rec.add("fan_precedence_linkage", check_fan_precedence_linkage(phi, fan), e, &phi);

        for (const KiersteadPath& k : enumerate_kierstead(phi, center, 4)) {
            rec.add("kierstead4_elementary", check_kierstead4_elementary(phi, k), e, &phi);
            rec.add("kierstead4_intersection", check_kierstead4_intersection(phi, k), e, &phi);
        }
        for (const KiersteadPath& k : enumerate_kierstead(phi, center, 5)) {
            const CanonicalForm cf = canonicalize_k5_path(phi, k);
            if (cf.form.verdict == Verdict::Inapplicable) continue;
            rec.add("k5_canonical_form", cf.form, e, &phi);
            rec.add("k5_degrees", cf.degrees, e, &phi);
        }

        rec.add("fork_absence", check_fork_absence(phi, center), e, &phi);
        for (const ForkLike& sk : find_forklike(phi, ForkKind::ShortKite, center)) {
            rec.add("short_kite_degree", validate_shortkite(phi, sk), e, &phi);
        }
        for (const ForkLike& kt : find_forklike(phi, ForkKind::Kite, center)) {
            rec.add("kite_gamma_bound", validate_kite(phi, kt), e, &phi);
        }
    }
    rec.add("parity", parity_check(drop_uncolored_edge(phi)), e, &phi);
    (void)g;
}

void run_lemmas(GraphRecord& out, const Graph& g, const CensusConfig& config, Recorder& rec) {
    const OracleOptions opts{config.timeout};
    const std::uint64_t graph_seed = splitmix(config.seed ^ fnv1a(out.graph6));
    std::map<Edge, std::vector<PartialEdgeColoring>> samples;
    for (int id = 0; id < g.size(); ++id) {
        const Edge e = g.edge(id);
        samples.emplace(e, sample_colorings(g, e, config.samples, splitmix(graph_seed + static_cast<std::uint64_t>(id)),
                                            opts));
    }
    for (const auto& [e, list] : samples) {
        rec.add("vizing_adjacency", check_vizing_adjacency(g, e.u, e.v), e);
        rec.add("vizing_adjacency", check_vizing_adjacency(g, e.v, e.u), e);
        for (const auto& phi : list) coloring_suites(rec, phi, e);
    }
    const ColoringSource source = [&samples](Edge e) -> std::span<const PartialEdgeColoring> {
        return samples.at(e);
    };
    for (Vertex a = 0; a < g.order(); ++a) rec.add("degree_dichotomy", check_degree_dichotomy(g, a, source));
}

}  // namespace

int threads_from_env() {
    const char* v = std::getenv("CHROMA_THREADS");
    if (!v) return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1) return 1;
    return static_cast<int>(std::min<long>(n, 256));
}

void Tally::add(const CheckResult& r) {
    ++checked;
    switch (r.verdict) {
        case Verdict::Ok: ++ok; break;
        case Verdict::Inapplicable: ++inapplicable; break;
        case Verdict::Violation:
        case Verdict::Structural: ++violations; break;
    }
}

Tally& Tally::operator+=(const Tally& o) {
    checked += o.checked;
    ok += o.ok;
    inapplicable += o.inapplicable;
    violations += o.violations;
    return *this;
}

nlohmann::json witness_to_json(const LemmaWitness& w) {
    nlohmann::json j;
    j["graph6"] = w.graph6;
    j["edge"] = w.edge ? nlohmann::json::array({w.edge->u, w.edge->v}) : nlohmann::json(nullptr);
    j["coloring"] = w.coloring ? coloring_to_json(*w.coloring) : nlohmann::json(nullptr);
    j["lemma"] = w.lemma;
    j["detail"] = w.detail;
    return j;
}

std::int64_t GraphRecord::violations() const {
    std::int64_t v = 0;
    for (const auto& [name, t] : lemmas) v += t.violations;
    return v + (theorem.verdict == TheoremVerdict::Counterexample ? 1 : 0);
}

std::int64_t CensusReport::violations() const {
    std::int64_t v = 0;
    for (const auto& r : records) v += r.violations();
    return v;
}

GraphRecord census_graph(const Graph& g, const CensusConfig& config) {
    GraphRecord out;
    out.graph6 = to_graph6(g);
    out.n = g.order();
    out.max_degree = g.max_degree();
    out.min_degree = g.min_degree();
    out.edges = g.size();
    Recorder rec(out);
    if (g.order() == 0) {
        out.status = "error";
        out.status_detail = "graph without vertices";
        return out;
    }
    out.overfull = is_overfull(g);

    const OracleOptions opts{config.timeout};
    auto start = Clock::now();
    std::optional<ChiResult> chi;
    try {
        if (g.size() > 0) {
            chi = chromatic_index(g, opts);
            out.chi_prime = chi->chi_prime;
            out.classification = chi->classification;
            out.critical = is_delta_critical(g, opts);
        }
    } catch (const TimeoutError& e) {
        out.status = "timeout";
        out.status_detail = e.what();
    }
    out.classify_ms = ms_since(start);

    if (out.status == "timeout") {
        out.theorem = {TheoremVerdict::Undecided, out.status_detail};
        return out;
    }
    out.theorem = verify_min_degree_overfull(g, out.critical);
    if (chi) {
        rec.add("parity", parity_check(chi->witness));
        const bool consistent = !out.overfull.overfull || chi->classification == EdgeClass::Class2;
        rec.add("overfull_class2", consistent ? CheckResult::ok()
                                              : CheckResult::violation("overfull graph colored with Δ colors"));
    }

    start = Clock::now();
    if (out.critical) {
        try {
            run_lemmas(out, g, config, rec);
        } catch (const TimeoutError& e) {
            out.status = "timeout";
            out.status_detail = e.what();
        }
    } else {
        for (auto name : kLemmaSuites) {
            if (name == "parity" || name == "overfull_class2") continue;
            rec.add(name, CheckResult::inapplicable("not Δ-critical"));
        }
    }
    out.lemmas_ms = ms_since(start);
    return out;
}

std::vector<std::string> read_corpus(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string token = line.substr(first, last - first + 1);
        try {
            parse_graph6(token);
        } catch (const ParseError& e) {
            throw ParseError("corpus line " + std::to_string(number) + ": " + e.what());
        }
        out.push_back(std::move(token));
    }
    return out;
}

std::uint64_t corpus_hash(std::span<const std::string> lines) {
    std::vector<std::string> sorted(lines.begin(), lines.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0) h = fnv1a("\n", h);
        h = fnv1a(sorted[i], h);
    }
    return h;
}

CensusReport run_census(std::span<const std::string> corpus, const CensusConfig& config) {
    if (config.samples < 1) throw Error("samples must be at least 1");
    if (config.timeout.count() <= 0) throw Error("timeout must be positive");
    const auto start = Clock::now();

    std::vector<Graph> graphs;
    graphs.reserve(corpus.size());
    for (const auto& line : corpus) graphs.push_back(parse_graph6(line));
    std::vector<std::size_t> order(graphs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::string> keys;
    keys.reserve(graphs.size());
    for (const auto& g : graphs) keys.push_back(to_graph6(g));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });

    CensusReport report;
    report.config = config;
    report.corpus_hash = corpus_hash(corpus);
    report.records.resize(graphs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) {
            report.records[i] = census_graph(graphs[order[i]], config);
        }
    };
    const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(order.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    report.elapsed_ms = ms_since(start);
    return report;
}

nlohmann::json record_to_json(const GraphRecord& r, bool with_timing) {
    nlohmann::json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["max_degree"] = r.max_degree;
    j["min_degree"] = r.min_degree;
    j["edges"] = r.edges;
    j["status"] = r.status;
    if (!r.status_detail.empty()) j["status_detail"] = r.status_detail;
    j["chi_prime"] = r.chi_prime ? nlohmann::json(*r.chi_prime) : nlohmann::json(nullptr);
    j["class"] = r.classification ? nlohmann::json(std::string(to_string(*r.classification))) : nlohmann::json(nullptr);
    j["critical"] = r.critical;
    j["overfull"] = {{"overfull", r.overfull.overfull},
                     {"excess", r.overfull.excess},
                     {"hypothesis", r.overfull.hypothesis},
                     {"margin", rational_text(r.overfull.margin)}};
    j["theorem"] = {{"verdict", std::string(to_string(r.theorem.verdict))}, {"detail", r.theorem.detail}};
    nlohmann::json lemmas = nlohmann::json::object();
    for (const auto& [name, t] : r.lemmas) {
        lemmas[name] = {{"checked", t.checked}, {"ok", t.ok}, {"inapplicable", t.inapplicable},
                        {"violations", t.violations}};
    }
    j["lemmas"] = std::move(lemmas);
    j["violations"] = r.violations();
    if (with_timing) j["timing_ms"] = {{"classify", r.classify_ms}, {"lemmas", r.lemmas_ms}};
    return j;
}

nlohmann::json summary_to_json(const CensusReport& report, bool with_timing) {
    std::map<std::string, Tally> lemmas;
    std::map<std::string, std::int64_t> theorem;
    for (auto v : {TheoremVerdict::Holds, TheoremVerdict::Counterexample, TheoremVerdict::Inapplicable,
                   TheoremVerdict::Undecided}) {
        theorem[std::string(to_string(v))] = 0;
    }
    std::int64_t critical = 0, class2 = 0, timeouts = 0, overfull = 0;
    for (const auto& r : report.records) {
        for (const auto& [name, t] : r.lemmas) lemmas[name] += t;
        ++theorem[std::string(to_string(r.theorem.verdict))];
        critical += r.critical ? 1 : 0;
        class2 += r.classification == EdgeClass::Class2 ? 1 : 0;
        timeouts += r.status == "timeout" ? 1 : 0;
        overfull += r.overfull.overfull ? 1 : 0;
    }
    nlohmann::json j;
    j["summary"] = true;
    j["seed"] = report.config.seed;
    j["samples"] = report.config.samples;
    j["timeout_ms"] = report.config.timeout.count();
    j["corpus_hash"] = hex(report.corpus_hash);
    j["graphs"] = report.records.size();
    j["critical"] = critical;
    j["class2"] = class2;
    j["overfull"] = overfull;
    j["timeouts"] = timeouts;
    j["theorem"] = theorem;
    nlohmann::json lj = nlohmann::json::object();
    for (const auto& [name, t] : lemmas) {
        lj[name] = {{"checked", t.checked}, {"ok", t.ok}, {"inapplicable", t.inapplicable},
                    {"violations", t.violations}};
    }
    j["lemmas"] = std::move(lj);
    j["violations"] = report.violations();
    if (with_timing) j["timing_ms"] = {{"total", report.elapsed_ms}};
    return j;
}

void write_jsonl(std::ostream& out, const CensusReport& report, bool with_timing) {
    for (const auto& r : report.records) out << record_to_json(r, with_timing).dump() << '\n';
    out << summary_to_json(report, with_timing).dump() << '\n';
}

void write_csv(std::ostream& out, const CensusReport& report, bool with_timing) {
    std::vector<std::string> header{"graph6", "n", "max_degree", "min_degree", "edges", "status", "chi_prime",
                                    "class", "critical", "overfull", "excess", "hypothesis", "margin", "theorem"};
    for (auto name : kLemmaSuites) {
        for (const char* field : {"checked", "ok", "inapplicable", "violations"}) {
            header.push_back(std::string(name) + "_" + field);
        }
    }
    header.push_back("violations");
    if (with_timing) {
        header.push_back("classify_ms");
        header.push_back("lemmas_ms");
    }
    auto cell = [](const nlohmann::json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
        return v.dump();
    };
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& r : report.records) {
        const nlohmann::json j = record_to_json(r, with_timing);
        std::vector<std::string> row{cell(j["graph6"]),   cell(j["n"]),
                                     cell(j["max_degree"]), cell(j["min_degree"]),
                                     cell(j["edges"]),    cell(j["status"]),
                                     cell(j["chi_prime"]), cell(j["class"]),
                                     cell(j["critical"]), cell(j["overfull"]["overfull"]),
                                     cell(j["overfull"]["excess"]), cell(j["overfull"]["hypothesis"]),
                                     cell(j["overfull"]["margin"]), cell(j["theorem"]["verdict"])};
        for (auto name : kLemmaSuites) {
            const auto& t = j["lemmas"][std::string(name)];
            for (const char* field : {"checked", "ok", "inapplicable", "violations"}) row.push_back(cell(t[field]));
        }
        row.push_back(cell(j["violations"]));
        if (with_timing) {
            row.push_back(cell(j["timing_ms"]["classify"]));
            row.push_back(cell(j["timing_ms"]["lemmas"]));
        }
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

}  // namespace chroma
