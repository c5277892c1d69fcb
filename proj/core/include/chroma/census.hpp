#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chroma/check.hpp"
#include "chroma/coloring.hpp"
#include "chroma/oracle.hpp"
#include "chroma/overfull.hpp"

namespace chroma {

/// Names of the lemma suites, in report order.
inline constexpr std::string_view kLemmaSuites[] = {
    "vizing_adjacency",      "fan_elementary",       "fan_center_linkage",     "fan_induced_linkage",
    "fan_precedence_linkage", "kierstead4_elementary", "kierstead4_intersection", "degree_dichotomy",
    "fork_absence",          "short_kite_degree",    "kite_gamma_bound",       "parity",
    "k5_canonical_form",     "k5_degrees",           "overfull_class2",
};

struct CensusConfig {
    std::uint64_t seed = 0;
    int samples = 100;
    std::chrono::milliseconds timeout{10'000};
    int threads = 1;
};

/// CHROMA_THREADS if set to a positive integer, else 1.
int threads_from_env();

struct Tally {
    std::int64_t checked = 0;
    std::int64_t ok = 0;
    std::int64_t inapplicable = 0;
    /// Lemma violations plus structural failures of objects the census
    /// built itself (either one means something is wrong).
    std::int64_t violations = 0;

    void add(const CheckResult& r);
    Tally& operator+=(const Tally& o);
};

struct LemmaWitness {
    std::string graph6;
    std::optional<Edge> edge;
    std::optional<PartialEdgeColoring> coloring;
    std::string lemma;
    std::string detail;
};

/// {"graph6", "edge", "coloring", "lemma", "detail"}; absent parts are null.
nlohmann::json witness_to_json(const LemmaWitness& w);

struct GraphRecord {
    std::string graph6;
    int n = 0;
    int max_degree = 0;
    int min_degree = 0;
    int edges = 0;
    /// "ok", "timeout" or "error"
    std::string status = "ok";
    std::string status_detail;
    std::optional<int> chi_prime;
    std::optional<EdgeClass> classification;
    bool critical = false;
    OverfullVerdict overfull;
    TheoremCheck theorem;
    std::map<std::string, Tally> lemmas;
    std::vector<LemmaWitness> witnesses;
    double classify_ms = 0;
    double lemmas_ms = 0;

    std::int64_t violations() const;
};

/// Classify one graph and, when it is Δ-critical, run every lemma suite on
/// every edge with `config.samples` sampled colorings each.
GraphRecord census_graph(const Graph& g, const CensusConfig& config);

struct CensusReport {
    CensusConfig config;
    std::uint64_t corpus_hash = 0;
    /// Sorted by graph6.
    std::vector<GraphRecord> records;
    double elapsed_ms = 0;

    std::int64_t violations() const;
};

/// Reads graph6 lines, skipping blanks and '#' comments. Throws ParseError
/// naming the line on malformed input.
std::vector<std::string> read_corpus(std::istream& in);

/// Throws chroma::Error when samples < 1 or timeout <= 0.
CensusReport run_census(std::span<const std::string> corpus, const CensusConfig& config);

nlohmann::json record_to_json(const GraphRecord& r, bool with_timing = true);
nlohmann::json summary_to_json(const CensusReport& report, bool with_timing = true);

/// One record per line, then the summary line.
void write_jsonl(std::ostream& out, const CensusReport& report, bool with_timing = true);
/// Header plus one row per record, columns derived from the JSON records.
void write_csv(std::ostream& out, const CensusReport& report, bool with_timing = true);

/// FNV-1a over the sorted lines joined by '\n'.
std::uint64_t corpus_hash(std::span<const std::string> lines);

}  // namespace chroma
