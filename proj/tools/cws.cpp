// Command-line front end: graph class listings, code searches, code-file
// verification, LP bound tables, and clique-order histograms.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cws/bounds.hpp"
#include "cws/qoracle.hpp"
#include "cws/search.hpp"

namespace {

using json = nlohmann::json;

// Output sink: "-" writes to stdout, anything else to a fresh file.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path == "-") return;
        file_.open(path);
        if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string resolve_error_spec(const std::string& error_set, int d) {
    if (!error_set.empty()) return error_set;
    if (d > 0) return "symmetric:d=" + std::to_string(d);
    throw std::invalid_argument("pass --error-set <spec> or --d <distance>");
}

cws::Relation resolve_relation(const std::string& relation, const std::string& error_spec) {
    if (relation == "lc") return cws::Relation::lc_isomorphism;
    if (relation == "iso") return cws::Relation::isomorphism;
    // auto: LC classes exhaust the standard-form search only when the error
    // set survives arbitrary per-qubit letter permutations; the
    // amplitude-damping sets do not, so they sweep isomorphism classes.
    return error_spec.rfind("ad", 0) == 0 ? cws::Relation::isomorphism
                                          : cws::Relation::lc_isomorphism;
}

const char* relation_name(cws::Relation rel) {
    return rel == cws::Relation::lc_isomorphism ? "lc" : "iso";
}

std::vector<std::string> word_strings(const cws::GraphOutcome& outcome, int n) {
    std::vector<std::string> words;
    words.reserve(outcome.words.size());
    for (uint32_t w : outcome.words) words.push_back(cws::word_string(w, n));
    return words;
}

json outcome_fields(const cws::GraphOutcome& outcome, int n) {
    return json{{"graph6", outcome.graph6}, {"nodes", outcome.nodes},
                {"ann_dim", outcome.ann_dim}, {"pure", outcome.pure},
                {"clique", outcome.clique},   {"K", outcome.K},
                {"words", word_strings(outcome, n)}};
}

// Re-checks reported codes against the definition (and, where the state
// space is small enough, against the statevector oracle).  Returns the
// number of failures.
size_t verify_outcomes(const cws::ErrorSet& errors,
                       const std::vector<const cws::GraphOutcome*>& rows) {
    size_t failures = 0;
    for (const cws::GraphOutcome* row : rows) {
        if (row->words.empty()) continue; // K = 0: nothing claimed
        cws::CwsCode code{errors.n, row->words};
        cws::VerifyResult direct = cws::verify_code(row->graph, errors, code);
        bool ok = direct.ok;
        if (ok && errors.n <= 12) ok = cws::detection_check(row->graph, errors, code).ok;
        if (!ok) {
            std::cerr << "verification FAILED for " << row->graph6 << " (K=" << row->K << ")\n";
            ++failures;
        }
    }
    return failures;
}

void write_best_code_file(const std::string& path, const cws::ErrorSet& errors,
                          const cws::GraphOutcome& outcome) {
    if (outcome.words.empty())
        throw std::runtime_error("best outcome has no code to export (K=0)");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open code file '" + path + "'");
    out << cws::write_code_file(outcome.graph, errors, cws::CwsCode{errors.n, outcome.words});
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateOptions {
    int n = 4;
    std::string relation = "lc";
    std::string out = "-";
    int max_n = 7;
};

int run_enumerate(const EnumerateOptions& opt) {
    cws::Relation rel =
        opt.relation == "lc" ? cws::Relation::lc_isomorphism : cws::Relation::isomorphism;
    cws::Classification classes = cws::classify(opt.n, rel, false, opt.max_n);
    Sink sink(opt.out);
    sink.out() << "index,graph6,class_size,edges\n";
    uint64_t labeled = 0;
    for (size_t i = 0; i < classes.classes.size(); ++i) {
        const cws::GraphClass& c = classes.classes[i];
        sink.out() << i << ',' << cws::to_graph6(c.representative) << ',' << c.size << ','
                   << c.representative.edge_count() << '\n';
        labeled += c.size;
    }
    std::cerr << classes.classes.size() << " " << opt.relation << " classes on " << opt.n
              << " nodes covering " << labeled << " labeled graphs\n";
    return 0;
}

// --- search -------------------------------------------------------------------

struct SearchOptions {
    std::string mode = "exhaustive";
    int n = 4;
    std::string error_set;
    int d = 0;
    std::string relation = "auto";
    std::string solver = "exact";
    int attempts = -1;
    int selections = -1;
    uint64_t samples = 100;
    int instances = 20;
    int population = 20;
    int generations = 100;
    double p_crossover = 0.9;
    double p_mutation = 0.1;
    int tournament = 10;
    int elitism = 2;
    std::string crossover = "spectral";
    double uniform_pe = 0.5;
    uint64_t seed = 0;
    int jobs = 1;
    int max_n = 7;
    std::string out = "-";
    std::string cache;
    std::string best_code;
};

cws::SolverSpec resolve_solver(const SearchOptions& opt) {
    cws::SolverSpec solver = cws::parse_solver(opt.solver);
    if (opt.attempts > 0) solver.pls_attempts = opt.attempts;
    if (opt.selections > 0) solver.pls_selections = opt.selections;
    return solver;
}

int run_search_exhaustive(const SearchOptions& opt, const cws::ErrorSet& errors,
                          cws::ResultCache* cache) {
    cws::ExhaustiveConfig config;
    config.n = opt.n;
    config.error_spec = errors.descriptor;
    config.solver = resolve_solver(opt);
    config.relation = resolve_relation(opt.relation, errors.descriptor);
    config.seed = opt.seed;
    config.jobs = opt.jobs;
    config.max_n = opt.max_n;
    cws::ExhaustiveReport report = cws::run_exhaustive(config, cache);

    Sink sink(opt.out);
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const cws::ClassResult& row = report.rows[i];
        json j = outcome_fields(row.outcome, opt.n);
        j["type"] = "class";
        j["index"] = i;
        j["labeled"] = row.labeled;
        j["iso_classes"] = row.iso_classes;
        sink.out() << j.dump() << '\n';
    }
    json hist = json::array();
    for (const cws::SizeBucket& b : report.histogram)
        hist.push_back({{"K", b.K},
                        {"classes", b.classes},
                        {"iso_classes", b.iso_classes},
                        {"labeled", b.labeled}});
    json summary{{"type", "summary"},
                 {"mode", "exhaustive"},
                 {"n", report.n},
                 {"error_set", report.error_spec},
                 {"errorset_hash", report.errorset_hash},
                 {"solver", report.solver},
                 {"relation", relation_name(report.relation)},
                 {"seed", report.seed},
                 {"max_K", report.max_K},
                 {"class_total", report.class_total},
                 {"iso_total", report.iso_total},
                 {"labeled_total", report.labeled_total},
                 {"histogram", hist}};
    sink.out() << summary.dump() << '\n';
    std::cerr << "exhaustive " << report.error_spec << " over " << report.class_total << " "
              << relation_name(report.relation) << " classes at n=" << report.n
              << ": max K=" << report.max_K << " (" << report.wall_seconds << "s)\n";

    std::vector<const cws::GraphOutcome*> best;
    for (const cws::ClassResult& row : report.rows)
        if (row.outcome.K == report.max_K) best.push_back(&row.outcome);
    if (!opt.best_code.empty() && !best.empty())
        write_best_code_file(opt.best_code, errors, *best.front());
    return verify_outcomes(errors, best) == 0 ? 0 : 1;
}

int run_search_random(const SearchOptions& opt, const cws::ErrorSet& errors,
                      cws::ResultCache* cache) {
    cws::RandomSearchConfig config;
    config.n = opt.n;
    config.error_spec = errors.descriptor;
    config.solver = resolve_solver(opt);
    config.samples = opt.samples;
    config.seed = opt.seed;
    config.jobs = opt.jobs;
    cws::RandomSearchReport report = cws::run_random_search(config, cache);

    Sink sink(opt.out);
    for (size_t i = 0; i < report.rows.size(); ++i) {
        json j = outcome_fields(report.rows[i], opt.n);
        j["type"] = "sample";
        j["index"] = i;
        sink.out() << j.dump() << '\n';
    }
    json summary{{"type", "summary"},      {"mode", "random"},
                 {"n", opt.n},             {"error_set", errors.descriptor},
                 {"errorset_hash", report.errorset_hash}, {"solver", config.solver.text()},
                 {"seed", opt.seed},       {"samples", opt.samples},
                 {"max_K", report.max_K},  {"best_row", report.best_row}};
    sink.out() << summary.dump() << '\n';
    std::cerr << "random search, " << opt.samples << " samples at n=" << opt.n
              << ": max K=" << report.max_K << " (" << report.wall_seconds << "s)\n";

    std::vector<const cws::GraphOutcome*> best;
    for (const cws::GraphOutcome& row : report.rows)
        if (row.K == report.max_K) best.push_back(&row);
    if (!opt.best_code.empty() && !best.empty())
        write_best_code_file(opt.best_code, errors, *best.front());
    return verify_outcomes(errors, best) == 0 ? 0 : 1;
}

cws::GaCampaignConfig ga_campaign_config(const SearchOptions& opt) {
    cws::GaCampaignConfig config;
    config.ga.n = opt.n;
    config.ga.population = opt.population;
    config.ga.generations = opt.generations;
    config.ga.p_crossover = opt.p_crossover;
    config.ga.p_mutation = opt.p_mutation;
    config.ga.tournament = opt.tournament;
    config.ga.elitism = opt.elitism;
    config.ga.kind = cws::crossover_kind_from_string(opt.crossover);
    config.ga.uniform_p_e = opt.uniform_pe;
    config.ga.seed = opt.seed;
    config.instances = opt.instances;
    config.jobs = opt.jobs;
    cws::SolverSpec solver = resolve_solver(opt);
    config.solver = solver;
    return config;
}

json campaign_summary(const cws::GaCampaignReport& report) {
    return json{{"type", "summary"},
                {"mode", "ga"},
                {"n", report.config.ga.n},
                {"error_set", report.config.error_spec},
                {"errorset_hash", report.errorset_hash},
                {"crossover", cws::to_string(report.config.ga.kind)},
                {"instances", report.config.instances},
                {"population", report.config.ga.population},
                {"generations", report.config.ga.generations},
                {"seed", report.config.ga.seed},
                {"best_K", report.best_K},
                {"best_instance", report.best_instance},
                {"mean_best_fitness", report.mean_best_fitness}};
}

void write_campaign_rows(Sink& sink, const cws::GaCampaignReport& report) {
    int n = report.config.ga.n;
    for (size_t i = 0; i < report.instances.size(); ++i) {
        const cws::GaInstanceResult& inst = report.instances[i];
        json j = outcome_fields(inst.solved, n);
        j["type"] = "instance";
        j["index"] = i;
        j["crossover"] = cws::to_string(report.config.ga.kind);
        j["best_fitness"] = inst.ga.best_fitness;
        j["best_history"] = inst.ga.best_history;
        j["mean_history"] = inst.ga.mean_history;
        sink.out() << j.dump() << '\n';
    }
}

int run_search_ga(const SearchOptions& opt, const cws::ErrorSet& errors) {
    cws::GaCampaignConfig config = ga_campaign_config(opt);
    config.error_spec = errors.descriptor;
    cws::GaCampaignReport report = cws::run_ga_campaign(config);

    Sink sink(opt.out);
    write_campaign_rows(sink, report);
    sink.out() << campaign_summary(report).dump() << '\n';
    std::cerr << "ga campaign (" << cws::to_string(config.ga.kind) << "), " << config.instances
              << " instances at n=" << opt.n << ": best K=" << report.best_K << " ("
              << report.wall_seconds << "s)\n";

    std::vector<const cws::GraphOutcome*> best;
    for (const cws::GaInstanceResult& inst : report.instances)
        if (inst.solved.K == report.best_K) best.push_back(&inst.solved);
    if (!opt.best_code.empty() && !best.empty())
        write_best_code_file(opt.best_code, errors, *best.front());
    return verify_outcomes(errors, best) == 0 ? 0 : 1;
}

int run_search(const SearchOptions& opt) {
    std::string spec = resolve_error_spec(opt.error_set, opt.d);
    cws::ErrorSet errors = cws::build_error_set(spec, opt.n);
    std::unique_ptr<cws::ResultCache> cache_storage;
    if (!opt.cache.empty()) cache_storage = std::make_unique<cws::ResultCache>(opt.cache);
    cws::ResultCache* cache = cache_storage.get();
    if (opt.mode == "exhaustive") return run_search_exhaustive(opt, errors, cache);
    if (opt.mode == "random") return run_search_random(opt, errors, cache);
    return run_search_ga(opt, errors);
}

// --- verify -------------------------------------------------------------------

struct VerifyOptions {
    std::string path;
    bool oracle = false;
};

int run_verify(const VerifyOptions& opt) {
    std::ifstream in(opt.path);
    if (!in) throw std::runtime_error("cannot open code file '" + opt.path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    cws::CodeFile file = cws::parse_code_file(buffer.str());

    cws::ErrorSet errors = cws::build_error_set(file.errorspec, file.n);
    if (cws::content_hash(errors) != file.errorset_hash)
        throw std::runtime_error("error-set hash mismatch: file says " + file.errorset_hash +
                                 ", spec '" + file.errorspec + "' hashes to " +
                                 cws::content_hash(errors));
    cws::Graph g = cws::from_graph6(file.graph6);
    cws::CwsCode code{file.n, file.words};

    cws::VerifyResult result = cws::verify_code(g, errors, code);
    std::cout << "graph " << file.graph6 << ", " << errors.descriptor << ", K=" << code.words.size()
              << '\n';
    if (!result.ok) {
        const cws::Violation& v = *result.violation;
        std::cout << "INVALID: ";
        if (v.kind == cws::Violation::pair_collision)
            std::cout << "error " << cws::op_letters(v.op, file.n) << " maps codeword "
                      << cws::word_string(v.xi, file.n) << " onto "
                      << cws::word_string(v.xj, file.n) << '\n';
        else
            std::cout << "degenerate error " << cws::op_letters(v.op, file.n)
                      << " undetected on codeword " << cws::word_string(v.xi, file.n) << '\n';
        return 1;
    }
    std::cout << "detection conditions hold (" << (result.pure ? "pure" : "impure") << ")\n";
    if (opt.oracle) {
        if (file.n > 12) throw std::runtime_error("statevector oracle is gated to n <= 12");
        cws::DetectionCheck check = cws::detection_check(g, errors, code);
        if (!check.ok) {
            const auto& v = *check.violation;
            std::cout << "ORACLE DISAGREES: error " << cws::op_letters(v.op, file.n)
                      << " at word pair (" << v.i << ", " << v.j << ")\n";
            return 1;
        }
        std::cout << "statevector oracle agrees\n";
    }
    return 0;
}

// --- bounds -------------------------------------------------------------------

struct BoundsOptions {
    int n_min = 2, n_max = 12;
    int d_min = 2, d_max = 5;
    bool pure = false;
    std::string out = "-";
    std::string reference;
};

int check_reference(const BoundsOptions& opt) {
    std::ifstream in(opt.reference);
    if (!in) throw std::runtime_error("cannot open reference file '" + opt.reference + "'");
    std::string line;
    std::getline(in, line); // header
    size_t mismatches = 0, checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream row(line);
        std::string n_s, d_s, value_s, kind, source;
        std::getline(row, n_s, ',');
        std::getline(row, d_s, ',');
        std::getline(row, value_s, ',');
        std::getline(row, kind, ',');
        std::getline(row, source, ',');
        int n = std::stoi(n_s), d = std::stoi(d_s);
        if (n < opt.n_min || n > opt.n_max || d < opt.d_min || d > opt.d_max) continue;
        cws::BigInt value(value_s);
        cws::BigInt computed;
        if (source == "lp_bound" && kind == "upper")
            computed = cws::lp_max_K(n, d, opt.pure).best_integer;
        else if (source == "rains_family")
            computed = cws::known_family_size(cws::KnownFamily::rains, n);
        else if (source == "smolin_family")
            computed = cws::known_family_size(cws::KnownFamily::smolin, n);
        else
            continue; // tabulated lower bounds with no closed form here
        ++checked;
        if (computed != value) {
            std::cerr << "reference mismatch at n=" << n << " d=" << d << " (" << source
                      << "): table says " << value << ", computed " << computed << '\n';
            ++mismatches;
        }
    }
    std::cerr << "reference check: " << checked << " rows compared, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int run_bounds(const BoundsOptions& opt) {
    Sink sink(opt.out);
    sink.out() << "n,d,lp_max_K,lp_sup,singleton\n";
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (int d = opt.d_min; d <= opt.d_max; ++d) {
            if (d > n + 1) continue; // no such error set on n qubits
            cws::LpBound bound = cws::lp_max_K(n, d, opt.pure);
            sink.out() << n << ',' << d << ',' << bound.best_integer << ','
                       << boost::multiprecision::numerator(bound.sup) << '/'
                       << boost::multiprecision::denominator(bound.sup) << ','
                       << cws::singleton_bound(n, d) << '\n';
        }
    if (!opt.reference.empty()) return check_reference(opt);
    return 0;
}

// --- cluster-hist ---------------------------------------------------------------

struct ClusterOptions {
    int n = 6;
    std::string error_set;
    int d = 0;
    std::string relation = "auto";
    uint64_t samples = 0; // 0 = one representative per class
    uint64_t seed = 0;
    int jobs = 1;
    int max_n = 7;
    std::string out = "-";
};

int run_cluster_hist(const ClusterOptions& opt) {
    std::string spec = resolve_error_spec(opt.error_set, opt.d);
    cws::ErrorSet errors = cws::build_error_set(spec, opt.n);
    cws::ClusterHist hist;
    if (opt.samples == 0) {
        cws::Relation rel = resolve_relation(opt.relation, errors.descriptor);
        hist = cws::cluster_hist_classes(opt.n, errors, rel, opt.jobs, opt.max_n);
    } else {
        hist = cws::cluster_hist_sample(opt.n, errors, opt.samples, opt.seed, opt.jobs);
    }
    Sink sink(opt.out);
    sink.out() << "order,count\n";
    for (auto [order, count] : hist.buckets) sink.out() << order << ',' << count << '\n';
    std::cerr << "clique-order histogram over " << hist.total << " graphs, " << hist.buckets.size()
              << " distinct orders\n";
    return 0;
}

// --- ga-compare -----------------------------------------------------------------

int run_ga_compare_cmd(const SearchOptions& opt) {
    std::string spec = resolve_error_spec(opt.error_set, opt.d);
    cws::ErrorSet errors = cws::build_error_set(spec, opt.n);
    cws::GaCampaignConfig base = ga_campaign_config(opt);
    base.error_spec = errors.descriptor;
    cws::GaCompareReport report = cws::run_ga_compare(base);

    Sink sink(opt.out);
    write_campaign_rows(sink, report.spectral);
    write_campaign_rows(sink, report.plain);
    json spectral = campaign_summary(report.spectral);
    spectral["type"] = "campaign";
    json plain = campaign_summary(report.plain);
    plain["type"] = "campaign";
    sink.out() << spectral.dump() << '\n' << plain.dump() << '\n';
    json compare{{"type", "compare"},
                 {"p_value", report.p_value},
                 {"spectral_mean_best", report.spectral.mean_best_fitness},
                 {"random_mean_best", report.plain.mean_best_fitness}};
    sink.out() << compare.dump() << '\n';
    std::cerr << "spectral mean best fitness " << report.spectral.mean_best_fitness
              << " vs random " << report.plain.mean_best_fitness
              << ", one-sided p=" << report.p_value << '\n';
    return 0;
}

void add_ga_options(CLI::App* cmd, SearchOptions& opt) {
    cmd->add_option("--instances", opt.instances, "independent GA instances");
    cmd->add_option("--population", opt.population, "population size");
    cmd->add_option("--generations", opt.generations, "generation count");
    cmd->add_option("--p-crossover", opt.p_crossover, "crossover probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p-mutation", opt.p_mutation, "mutation probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--tournament", opt.tournament, "tournament size");
    cmd->add_option("--elitism", opt.elitism, "elites copied unchanged");
    cmd->add_option("--uniform-pe", opt.uniform_pe, "uniform-crossover exchange probability")
        ->check(CLI::Range(0.0, 1.0));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"codeword-stabilized quantum code search toolkit"};
    app.require_subcommand(1);

    EnumerateOptions enum_opt;
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list graph classes as CSV");
    cmd_enum->add_option("--n", enum_opt.n, "node count")->required()->check(CLI::Range(1, 16));
    cmd_enum->add_option("--relation", enum_opt.relation, "class relation")
        ->check(CLI::IsMember({"iso", "lc"}));
    cmd_enum->add_option("--out", enum_opt.out, "output path ('-' = stdout)");
    cmd_enum->add_option("--max-n", enum_opt.max_n, "raise the enumeration size gate");

    SearchOptions search_opt;
    CLI::App* cmd_search = app.add_subcommand("search", "search graphs for detecting codes");
    cmd_search->add_option("--mode", search_opt.mode, "search mode")
        ->check(CLI::IsMember({"exhaustive", "random", "ga"}));
    cmd_search->add_option("--n", search_opt.n, "qubit count")->required()->check(CLI::Range(1, 16));
    cmd_search->add_option("--error-set", search_opt.error_set,
                           "error-set spec (symmetric:d=<d> | ad:t=<t>[:id|:xz|:yz])");
    cmd_search->add_option("--d", search_opt.d, "shorthand for --error-set symmetric:d=<d>");
    cmd_search->add_option("--relation", search_opt.relation, "exhaustive class relation")
        ->check(CLI::IsMember({"auto", "lc", "iso"}));
    cmd_search->add_option("--solver", search_opt.solver, "clique solver")
        ->check(CLI::IsMember({"exact", "pls"}));
    cmd_search->add_option("--attempts", search_opt.attempts, "PLS attempts");
    cmd_search->add_option("--selections", search_opt.selections, "PLS selections per attempt");
    cmd_search->add_option("--samples", search_opt.samples, "random-mode sample count");
    add_ga_options(cmd_search, search_opt);
    cmd_search->add_option("--crossover", search_opt.crossover, "GA crossover operator")
        ->check(CLI::IsMember({"single_point", "two_point", "uniform", "random", "spectral"}));
    cmd_search->add_option("--seed", search_opt.seed, "master seed");
    cmd_search->add_option("--jobs", search_opt.jobs, "worker threads");
    cmd_search->add_option("--max-n", search_opt.max_n, "raise the enumeration size gate");
    cmd_search->add_option("--out", search_opt.out, "JSON-lines report path ('-' = stdout)");
    cmd_search->add_option("--cache", search_opt.cache, "append-only result cache file");
    cmd_search->add_option("--best-code", search_opt.best_code, "write the best code file here");

    VerifyOptions verify_opt;
    CLI::App* cmd_verify = app.add_subcommand("verify", "re-check a code file");
    cmd_verify->add_option("file", verify_opt.path, "code file")->required();
    cmd_verify->add_flag("--oracle", verify_opt.oracle, "also run the statevector oracle");

    BoundsOptions bounds_opt;
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "LP bound table as CSV");
    cmd_bounds->add_option("--n-min", bounds_opt.n_min)->check(CLI::Range(1, 32));
    cmd_bounds->add_option("--n-max", bounds_opt.n_max)->check(CLI::Range(1, 32));
    cmd_bounds->add_option("--d-min", bounds_opt.d_min)->check(CLI::Range(1, 16));
    cmd_bounds->add_option("--d-max", bounds_opt.d_max)->check(CLI::Range(1, 16));
    cmd_bounds->add_flag("--pure", bounds_opt.pure, "add the pure-code constraints");
    cmd_bounds->add_option("--out", bounds_opt.out, "output path ('-' = stdout)");
    cmd_bounds->add_option("--reference", bounds_opt.reference,
                           "cross-check against a reference CSV; nonzero exit on mismatch");

    ClusterOptions cluster_opt;
    CLI::App* cmd_cluster = app.add_subcommand("cluster-hist", "clique-order histogram as CSV");
    cmd_cluster->add_option("--n", cluster_opt.n, "qubit count")->required()->check(CLI::Range(1, 16));
    cmd_cluster->add_option("--error-set", cluster_opt.error_set, "error-set spec");
    cmd_cluster->add_option("--d", cluster_opt.d, "shorthand for symmetric:d=<d>");
    cmd_cluster->add_option("--relation", cluster_opt.relation, "class relation in class mode")
        ->check(CLI::IsMember({"auto", "lc", "iso"}));
    cmd_cluster->add_option("--samples", cluster_opt.samples,
                            "sample count (0 = one representative per class)");
    cmd_cluster->add_option("--seed", cluster_opt.seed, "sampling seed");
    cmd_cluster->add_option("--jobs", cluster_opt.jobs, "worker threads");
    cmd_cluster->add_option("--max-n", cluster_opt.max_n, "raise the enumeration size gate");
    cmd_cluster->add_option("--out", cluster_opt.out, "output path ('-' = stdout)");

    SearchOptions compare_opt;
    compare_opt.solver = "pls";
    CLI::App* cmd_compare =
        app.add_subcommand("ga-compare", "spectral vs random crossover campaigns");
    cmd_compare->add_option("--n", compare_opt.n, "qubit count")->required()->check(CLI::Range(2, 16));
    cmd_compare->add_option("--error-set", compare_opt.error_set, "error-set spec");
    cmd_compare->add_option("--d", compare_opt.d, "shorthand for symmetric:d=<d>");
    add_ga_options(cmd_compare, compare_opt);
    cmd_compare->add_option("--solver", compare_opt.solver, "final clique solver")
        ->check(CLI::IsMember({"exact", "pls"}));
    cmd_compare->add_option("--attempts", compare_opt.attempts, "PLS attempts");
    cmd_compare->add_option("--selections", compare_opt.selections, "PLS selections per attempt");
    cmd_compare->add_option("--seed", compare_opt.seed, "master seed");
    cmd_compare->add_option("--jobs", compare_opt.jobs, "worker threads");
    cmd_compare->add_option("--out", compare_opt.out, "JSON-lines report path ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_enum->parsed()) return run_enumerate(enum_opt);
        if (cmd_search->parsed()) return run_search(search_opt);
        if (cmd_verify->parsed()) return run_verify(verify_opt);
        if (cmd_bounds->parsed()) return run_bounds(bounds_opt);
        if (cmd_cluster->parsed()) return run_cluster_hist(cluster_opt);
        if (cmd_compare->parsed()) return run_ga_compare_cmd(compare_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
