#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cws/clique.hpp"
#include "cws/cwsmap.hpp"
#include "cws/evolve.hpp"
#include "cws/graph.hpp"
#include "cws/pauli.hpp"

namespace cws {

// Runs fn(0), ..., fn(count-1) across `jobs` worker threads (jobs <= 1 runs
// inline).  Iteration order is unspecified; callers write disjoint output
// slots so results never depend on scheduling.  The first worker exception
// is rethrown.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

// Builds an error set from its text form:
//   symmetric:d=<d>          all operators of weight < d
//   ad:t=<t>[:id|:xz|:yz]    amplitude-damping set, optionally with the
//                            X<->Z or Y<->Z letter swap on every qubit
// The key names are optional ("symmetric:2", "ad:1:xz" also parse).
ErrorSet build_error_set(const std::string& spec, int n);

// --- solvers ----------------------------------------------------------------

struct SolverSpec {
    enum class Kind { exact, pls };
    Kind kind = Kind::exact;
    size_t exact_guard = 4096; // node cap for the exact solver
    int pls_attempts = 100;
    int pls_selections = 1000;

    // Canonical text ("exact" / "pls:a=100:s=1000"); doubles as cache key.
    std::string text() const;
};

// Parses the text form produced by SolverSpec::text (plus bare "pls").
SolverSpec parse_solver(const std::string& text);

// --- single-graph solving ---------------------------------------------------

struct GraphOutcome {
    Graph graph;
    std::string graph6;
    int64_t nodes = 0;  // clique-instance node count
    int ann_dim = 0;
    bool pure = false;
    int64_t clique = 0; // largest clique found (0 when the instance is empty)
    int64_t K = 0;      // see below
    std::vector<uint32_t> words; // codewords of the best code, zero first
};

// Builds the clique instance for (g, e), runs the chosen solver, and applies
// the size rule: a clique of size w >= 1 gives K = w + 1 (the zero word is
// free); an empty instance gives K = 1 when the graph is pure -- the zero
// word alone is then a valid one-dimensional code -- and K = 0 when
// degenerate errors exclude even that.  `seed` feeds the PLS solver only.
GraphOutcome solve_graph(const Graph& g, const ErrorSet& e, const SolverSpec& solver,
                         uint64_t seed);

// --- census -----------------------------------------------------------------

// One row per LC-isomorphism class: how many labeled graphs it holds and how
// many isomorphism classes sit inside it.  iso_classes is filled only when
// n is small enough to index all labeled graphs (n <= 7).
struct CensusRow {
    Graph rep;
    uint64_t labeled = 0;
    uint32_t iso_classes = 0;
};

struct Census {
    int n = 0;
    std::vector<CensusRow> rows;
    uint64_t iso_total = 0;     // |G_n|, 0 when iso counting was skipped
    uint64_t labeled_total = 0; // 2^(n(n-1)/2)
};

Census build_census(int n, int max_n = 7);

// --- result cache -----------------------------------------------------------

// Append-only JSON-lines cache keyed by (graph6, error-set hash, solver
// text).  Loading tolerates a truncated final line (interrupted run); hits
// skip solving entirely.  Thread-safe.
class ResultCache {
public:
    ResultCache() = default; // disabled
    explicit ResultCache(const std::string& path);

    bool enabled() const { return !path_.empty(); }
    std::optional<GraphOutcome> find(const std::string& graph6, const std::string& errorset_hash,
                                     const std::string& solver) const;
    void store(const std::string& errorset_hash, const std::string& solver,
               const GraphOutcome& outcome);
    size_t size() const;

private:
    std::string path_;
    std::unordered_map<std::string, GraphOutcome> entries_;
    std::ofstream append_;
    mutable std::mutex mutex_;
};

// --- exhaustive search --------------------------------------------------------

struct ExhaustiveConfig {
    int n = 4;
    std::string error_spec = "symmetric:d=2";
    SolverSpec solver;
    // lc_isomorphism is exhaustive only for error sets invariant under all
    // per-qubit letter permutations (the symmetric sets); amplitude-damping
    // sets are only relabeling-invariant, so they search isomorphism reps.
    Relation relation = Relation::lc_isomorphism;
    uint64_t seed = 0;
    int jobs = 1;
    int max_n = 7; // enumeration gate passthrough
};

struct ClassResult {
    GraphOutcome outcome;
    uint64_t labeled = 0;     // labeled graphs in the class
    uint32_t iso_classes = 0; // isomorphism classes in the class
};

// Histogram bucket over one code size: how many classes of the searched
// relation attain K, and the lifts to isomorphism classes and labeled
// graphs those classes account for.
struct SizeBucket {
    int64_t K = 0;
    uint64_t classes = 0;
    uint64_t iso_classes = 0;
    uint64_t labeled = 0;
};

struct ExhaustiveReport {
    int n = 0;
    std::string error_spec;
    std::string errorset_hash;
    std::string solver;
    Relation relation = Relation::lc_isomorphism;
    uint64_t seed = 0;
    std::vector<ClassResult> rows;      // class order of the enumeration
    std::vector<SizeBucket> histogram;  // ascending K
    int64_t max_K = 0;
    uint64_t class_total = 0;
    uint64_t iso_total = 0;    // 0 when iso lifting was skipped
    uint64_t labeled_total = 0;
    double wall_seconds = 0;   // informational; never serialized
};

// Solves one representative per class of config.relation and lifts the code
// size distribution to isomorphism classes and labeled graphs.  Row i uses
// PLS seed derive_seed(config.seed, i).
ExhaustiveReport run_exhaustive(const ExhaustiveConfig& config, ResultCache* cache = nullptr);

// --- random search ------------------------------------------------------------

struct RandomSearchConfig {
    int n = 8;
    std::string error_spec = "symmetric:d=2";
    SolverSpec solver;
    uint64_t samples = 100;
    uint64_t seed = 0;
    int jobs = 1;
};

struct RandomSearchReport {
    RandomSearchConfig config;
    std::string errorset_hash;
    std::vector<GraphOutcome> rows; // sample order
    int64_t max_K = 0;
    size_t best_row = 0;
    double wall_seconds = 0;
};

// Samples graphs uniformly (sample i is random_graph seeded with
// derive_seed(seed, i)) and solves each one.
RandomSearchReport run_random_search(const RandomSearchConfig& config, ResultCache* cache = nullptr);

// --- genetic-algorithm campaigns ----------------------------------------------

struct GaCampaignConfig {
    GaConfig ga;               // ga.seed is the campaign master seed
    std::string error_spec = "symmetric:d=2";
    SolverSpec solver;         // final clique solve of each instance's best
    int instances = 20;
    int jobs = 1;
    // Instance i runs with seed derive_seed(ga.seed, seed_stride * i +
    // seed_offset); the compare runner interleaves two campaigns this way.
    uint64_t seed_offset = 0;
    uint64_t seed_stride = 1;
};

struct GaInstanceResult {
    GaOutcome ga;        // fitness trace, best graph
    GraphOutcome solved; // clique solve of the best graph
};

struct GaCampaignReport {
    GaCampaignConfig config;
    std::string errorset_hash;
    std::vector<GaInstanceResult> instances;
    int64_t best_K = 0;
    size_t best_instance = 0;
    double mean_best_fitness = 0; // mean over instances of final best fitness
    double wall_seconds = 0;
};

// Runs `instances` independent GA instances with fitness = clique-instance
// node count (cheap to evaluate; no clique solving during evolution), then
// clique-solves each instance's best graph.
GaCampaignReport run_ga_campaign(const GaCampaignConfig& config);

struct GaCompareReport {
    GaCampaignReport spectral;
    GaCampaignReport plain; // identical campaign with random crossover
    double p_value = 1.0;   // one-sided: spectral best fitness > random
};

// Crossover comparison: same base campaign run once with spectral crossover
// (instance seeds at even offsets) and once with random crossover (odd
// offsets), then a Mann-Whitney test on the per-instance best fitness.
GaCompareReport run_ga_compare(const GaCampaignConfig& base);

// One-sided Mann-Whitney U test via the normal approximation with tie
// correction and continuity correction: p-value for the alternative
// "samples in a are stochastically greater than samples in b".  Returns 1.0
// when every value is tied (no evidence).
double mann_whitney_p(const std::vector<double>& a, const std::vector<double>& b);

// --- cluster histograms ---------------------------------------------------------

struct ClusterHist {
    std::vector<std::pair<int64_t, uint64_t>> buckets; // (node count, graphs), ascending
    uint64_t total = 0;
};

// Clique-instance node counts over one representative per class.
ClusterHist cluster_hist_classes(int n, const ErrorSet& e, Relation rel, int jobs,
                                 int max_n = 7);
// ... and over uniformly sampled labeled graphs.
ClusterHist cluster_hist_sample(int n, const ErrorSet& e, uint64_t samples, uint64_t seed,
                                int jobs);

} // namespace cws
