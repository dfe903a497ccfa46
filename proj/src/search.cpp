#include "cws/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace cws {

namespace {

using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t from = 0;
    while (true) {
        size_t at = s.find(sep, from);
        parts.push_back(s.substr(from, at - from));
        if (at == std::string::npos) break;
        from = at + 1;
    }
    return parts;
}

// Accepts "7" or "<key>=7".
int keyed_int(std::string tok, const std::string& key, const std::string& what) {
    if (tok.rfind(key + "=", 0) == 0) tok = tok.substr(key.size() + 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(what + ": expected " + key + "=<integer>, got '" + tok + "'");
    return std::stoi(tok);
}

} // namespace

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(jobs, count);
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

ErrorSet build_error_set(const std::string& spec, int n) {
    auto parts = split(spec, ':');
    if (parts[0] == "symmetric") {
        if (parts.size() != 2)
            throw std::invalid_argument("error-set spec '" + spec + "': want symmetric:d=<d>");
        return symmetric_error_set(n, keyed_int(parts[1], "d", "error-set spec"));
    }
    if (parts[0] == "ad") {
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("error-set spec '" + spec +
                                        "': want ad:t=<t>[:id|:xz|:yz]");
        int t = keyed_int(parts[1], "t", "error-set spec");
        LetterPerm perm = LetterPerm::identity();
        if (parts.size() == 3) {
            if (parts[2] == "id") perm = LetterPerm::identity();
            else if (parts[2] == "xz") perm = LetterPerm::swap_xz();
            else if (parts[2] == "yz") perm = LetterPerm::swap_yz();
            else
                throw std::invalid_argument("error-set spec '" + spec +
                                            "': letter swap must be id, xz, or yz");
        }
        return amp_damp_error_set(n, t, perm);
    }
    throw std::invalid_argument("error-set spec '" + spec +
                                "': want symmetric:d=<d> or ad:t=<t>[:id|:xz|:yz]");
}

std::string SolverSpec::text() const {
    if (kind == Kind::exact) return "exact";
    return "pls:a=" + std::to_string(pls_attempts) + ":s=" + std::to_string(pls_selections);
}

SolverSpec parse_solver(const std::string& text) {
    auto parts = split(text, ':');
    SolverSpec s;
    if (parts[0] == "exact") {
        if (parts.size() > 1)
            throw std::invalid_argument("solver spec '" + text + "': exact takes no options");
        return s;
    }
    if (parts[0] != "pls")
        throw std::invalid_argument("solver spec '" + text + "': want exact or pls[:a=..][:s=..]");
    s.kind = SolverSpec::Kind::pls;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].rfind("a=", 0) == 0)
            s.pls_attempts = keyed_int(parts[i], "a", "solver spec");
        else if (parts[i].rfind("s=", 0) == 0)
            s.pls_selections = keyed_int(parts[i], "s", "solver spec");
        else
            throw std::invalid_argument("solver spec '" + text + "': unknown option '" +
                                        parts[i] + "'");
    }
    return s;
}

GraphOutcome solve_graph(const Graph& g, const ErrorSet& e, const SolverSpec& solver,
                         uint64_t seed) {
    GraphOutcome out;
    out.graph = g;
    out.graph6 = to_graph6(g);
    CliqueOrder order = clique_graph_order(g, e);
    out.nodes = order.order;
    out.ann_dim = order.ann_dim;
    out.pure = order.ann_dim == g.n; // no degenerate errors <=> no annihilator cut

    std::vector<uint32_t> members;
    if (out.nodes > 0) {
        CliqueInstance inst = clique_instance(g, e);
        if ((int64_t)inst.nodes.size() != out.nodes)
            throw std::logic_error("clique instance size disagrees with the direct node count");
        if (solver.kind == SolverSpec::Kind::exact) {
            members = max_clique_exact(inst, solver.exact_guard).members;
        } else {
            PlsParams params;
            params.attempts = solver.pls_attempts;
            params.max_selections = solver.pls_selections;
            params.seed = seed;
            members = pls_clique(inst, params).members;
        }
    }
    out.clique = (int64_t)members.size();
    if (out.clique >= 1) {
        out.K = out.clique + 1;
        out.words.push_back(0);
        std::sort(members.begin(), members.end());
        out.words.insert(out.words.end(), members.begin(), members.end());
    } else if (out.pure) {
        out.K = 1;
        out.words.push_back(0);
    } else {
        out.K = 0;
    }
    return out;
}

Census build_census(int n, int max_n) {
    Census census;
    census.n = n;
    census.labeled_total = uint64_t(1) << pair_bits(n);
    bool lift = n <= 7; // class id lookup needs one int per labeled graph
    Classification lc = classify(n, Relation::lc_isomorphism, lift, max_n);
    census.rows.reserve(lc.classes.size());
    for (const GraphClass& c : lc.classes) census.rows.push_back({c.representative, c.size, 0});
    if (lift) {
        Classification iso = classify(n, Relation::isomorphism, false, max_n);
        for (const GraphClass& c : iso.classes)
            ++census.rows[lc.class_of[pack_index(c.representative)]].iso_classes;
        census.iso_total = iso.classes.size();
    }
    return census;
}

// --- result cache -----------------------------------------------------------

namespace {

std::string cache_key(const std::string& graph6, const std::string& hash,
                      const std::string& solver) {
    return graph6 + '\x1f' + hash + '\x1f' + solver;
}

json outcome_to_json(const std::string& hash, const std::string& solver,
                     const GraphOutcome& o) {
    return json{{"graph6", o.graph6}, {"errorset", hash},   {"solver", solver},
                {"nodes", o.nodes},   {"ann_dim", o.ann_dim}, {"pure", o.pure},
                {"clique", o.clique}, {"K", o.K},           {"words", o.words}};
}

GraphOutcome outcome_from_json(const json& j) {
    GraphOutcome o;
    o.graph6 = j.at("graph6").get<std::string>();
    o.graph = from_graph6(o.graph6);
    o.nodes = j.at("nodes").get<int64_t>();
    o.ann_dim = j.at("ann_dim").get<int>();
    o.pure = j.at("pure").get<bool>();
    o.clique = j.at("clique").get<int64_t>();
    o.K = j.at("K").get<int64_t>();
    o.words = j.at("words").get<std::vector<uint32_t>>();
    return o;
}

} // namespace

ResultCache::ResultCache(const std::string& path) : path_(path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error&) {
            break; // truncated tail from an interrupted run; keep what parsed
        }
        GraphOutcome o = outcome_from_json(j);
        entries_[cache_key(o.graph6, j.at("errorset").get<std::string>(),
                           j.at("solver").get<std::string>())] = std::move(o);
    }
    in.close();
    append_.open(path, std::ios::app);
    if (!append_) throw std::runtime_error("cannot open cache file '" + path + "' for append");
}

std::optional<GraphOutcome> ResultCache::find(const std::string& graph6,
                                              const std::string& errorset_hash,
                                              const std::string& solver) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(cache_key(graph6, errorset_hash, solver));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& errorset_hash, const std::string& solver,
                        const GraphOutcome& outcome) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] =
        entries_.emplace(cache_key(outcome.graph6, errorset_hash, solver), outcome);
    if (!fresh) return;
    append_ << outcome_to_json(errorset_hash, solver, outcome).dump() << '\n';
    append_.flush();
}

size_t ResultCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

// --- searches -----------------------------------------------------------------

namespace {

// Cache-aware single solve shared by the search drivers.
GraphOutcome solve_cached(const Graph& g, const ErrorSet& e, const std::string& hash,
                          const SolverSpec& solver, uint64_t seed, ResultCache* cache) {
    std::string g6 = to_graph6(g);
    if (cache && cache->enabled()) {
        if (auto hit = cache->find(g6, hash, solver.text())) return *hit;
    }
    GraphOutcome out = solve_graph(g, e, solver, seed);
    if (cache && cache->enabled()) cache->store(hash, solver.text(), out);
    return out;
}

std::vector<SizeBucket> histogram_of(const std::vector<ClassResult>& rows) {
    std::map<int64_t, SizeBucket> buckets;
    for (const ClassResult& r : rows) {
        SizeBucket& b = buckets[r.outcome.K];
        b.K = r.outcome.K;
        b.classes += 1;
        b.iso_classes += r.iso_classes;
        b.labeled += r.labeled;
    }
    std::vector<SizeBucket> out;
    out.reserve(buckets.size());
    for (auto& [k, b] : buckets) out.push_back(b);
    return out;
}

} // namespace

ExhaustiveReport run_exhaustive(const ExhaustiveConfig& config, ResultCache* cache) {
    auto start = clock_type::now();
    ErrorSet errors = build_error_set(config.error_spec, config.n);

    ExhaustiveReport report;
    report.n = config.n;
    report.error_spec = errors.descriptor;
    report.errorset_hash = content_hash(errors);
    report.solver = config.solver.text();
    report.relation = config.relation;
    report.seed = config.seed;

    if (config.relation == Relation::lc_isomorphism) {
        Census census = build_census(config.n, config.max_n);
        report.rows.resize(census.rows.size());
        for (size_t i = 0; i < census.rows.size(); ++i) {
            report.rows[i].labeled = census.rows[i].labeled;
            report.rows[i].iso_classes = census.rows[i].iso_classes;
            report.rows[i].outcome.graph = census.rows[i].rep;
        }
        report.iso_total = census.iso_total;
    } else {
        Classification iso = classify(config.n, Relation::isomorphism, false, config.max_n);
        report.rows.resize(iso.classes.size());
        for (size_t i = 0; i < iso.classes.size(); ++i) {
            report.rows[i].labeled = iso.classes[i].size;
            report.rows[i].iso_classes = 1;
            report.rows[i].outcome.graph = iso.classes[i].representative;
        }
        report.iso_total = iso.classes.size();
    }

    parallel_for(report.rows.size(), config.jobs, [&](size_t i) {
        report.rows[i].outcome =
            solve_cached(report.rows[i].outcome.graph, errors, report.errorset_hash,
                         config.solver, derive_seed(config.seed, i), cache);
    });

    report.histogram = histogram_of(report.rows);
    report.class_total = report.rows.size();
    for (const ClassResult& r : report.rows) report.labeled_total += r.labeled;
    for (const SizeBucket& b : report.histogram) report.max_K = std::max(report.max_K, b.K);
    report.wall_seconds = seconds_since(start);
    return report;
}

RandomSearchReport run_random_search(const RandomSearchConfig& config, ResultCache* cache) {
    auto start = clock_type::now();
    ErrorSet errors = build_error_set(config.error_spec, config.n);

    RandomSearchReport report;
    report.config = config;
    report.errorset_hash = content_hash(errors);
    report.rows.resize(config.samples);
    parallel_for(config.samples, config.jobs, [&](size_t i) {
        Rng rng(derive_seed(config.seed, 2 * i));
        Graph g = random_graph(config.n, rng);
        report.rows[i] = solve_cached(g, errors, report.errorset_hash, config.solver,
                                      derive_seed(config.seed, 2 * i + 1), cache);
    });
    for (size_t i = 0; i < report.rows.size(); ++i)
        if (report.rows[i].K > report.max_K) {
            report.max_K = report.rows[i].K;
            report.best_row = i;
        }
    report.wall_seconds = seconds_since(start);
    return report;
}

GaCampaignReport run_ga_campaign(const GaCampaignConfig& config) {
    auto start = clock_type::now();
    ErrorSet errors = build_error_set(config.error_spec, config.ga.n);

    GaCampaignReport report;
    report.config = config;
    report.errorset_hash = content_hash(errors);
    report.instances.resize(config.instances);

    auto fitness = [&errors](const Graph& g) { return clique_graph_order(g, errors).order; };

    parallel_for(config.instances, config.jobs, [&](size_t i) {
        GaConfig ga = config.ga;
        ga.seed = derive_seed(config.ga.seed, config.seed_stride * i + config.seed_offset);
        GaInstanceResult& slot = report.instances[i];
        slot.ga = run_ga(ga, fitness);
        slot.solved = solve_graph(slot.ga.best_graph, errors, config.solver,
                                  derive_seed(ga.seed, 0xFFFF));
    });

    report.best_K = -1;
    for (size_t i = 0; i < report.instances.size(); ++i) {
        const GaInstanceResult& r = report.instances[i];
        if (r.solved.K > report.best_K) {
            report.best_K = r.solved.K;
            report.best_instance = i;
        }
        report.mean_best_fitness += (double)r.ga.best_fitness;
    }
    if (!report.instances.empty()) report.mean_best_fitness /= (double)report.instances.size();
    report.wall_seconds = seconds_since(start);
    return report;
}

GaCompareReport run_ga_compare(const GaCampaignConfig& base) {
    GaCompareReport report;

    GaCampaignConfig spectral = base;
    spectral.ga.kind = CrossoverKind::spectral;
    spectral.seed_offset = 0;
    spectral.seed_stride = 2;
    report.spectral = run_ga_campaign(spectral);

    GaCampaignConfig plain = base;
    plain.ga.kind = CrossoverKind::random;
    plain.seed_offset = 1;
    plain.seed_stride = 2;
    report.plain = run_ga_campaign(plain);

    auto bests = [](const GaCampaignReport& r) {
        std::vector<double> v;
        v.reserve(r.instances.size());
        for (const GaInstanceResult& inst : r.instances) v.push_back((double)inst.ga.best_fitness);
        return v;
    };
    report.p_value = mann_whitney_p(bests(report.spectral), bests(report.plain));
    return report;
}

double mann_whitney_p(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_p: both samples must be nonempty");
    struct Item {
        double value;
        int side;
    };
    std::vector<Item> all;
    all.reserve(a.size() + b.size());
    for (double v : a) all.push_back({v, 0});
    for (double v : b) all.push_back({v, 1});
    std::sort(all.begin(), all.end(),
              [](const Item& x, const Item& y) { return x.value < y.value; });

    size_t n1 = a.size(), n2 = b.size(), total = all.size();
    double rank_sum_a = 0, tie_term = 0;
    size_t i = 0;
    while (i < total) {
        size_t j = i;
        while (j < total && all[j].value == all[i].value) ++j;
        double rank = (double)(i + 1 + j) / 2.0; // average of 1-based ranks i+1..j
        double ties = (double)(j - i);
        tie_term += ties * ties * ties - ties;
        for (size_t k = i; k < j; ++k)
            if (all[k].side == 0) rank_sum_a += rank;
        i = j;
    }
    double u = rank_sum_a - (double)n1 * (n1 + 1) / 2.0;
    double mean = (double)n1 * n2 / 2.0;
    double variance = (double)n1 * n2 / 12.0 *
                      ((double)(total + 1) - tie_term / ((double)total * (total - 1)));
    if (variance <= 0) return 1.0; // every observation tied
    double z = (u - mean - 0.5) / std::sqrt(variance);
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

namespace {

ClusterHist hist_from_orders(std::vector<int64_t>& orders) {
    std::map<int64_t, uint64_t> counts;
    for (int64_t v : orders) ++counts[v];
    ClusterHist hist;
    hist.total = orders.size();
    for (auto& [order, count] : counts) hist.buckets.emplace_back(order, count);
    return hist;
}

} // namespace

ClusterHist cluster_hist_classes(int n, const ErrorSet& e, Relation rel, int jobs, int max_n) {
    Classification classes = classify(n, rel, false, max_n);
    std::vector<int64_t> orders(classes.classes.size());
    parallel_for(orders.size(), jobs, [&](size_t i) {
        orders[i] = clique_graph_order(classes.classes[i].representative, e).order;
    });
    return hist_from_orders(orders);
}

ClusterHist cluster_hist_sample(int n, const ErrorSet& e, uint64_t samples, uint64_t seed,
                                int jobs) {
    std::vector<int64_t> orders(samples);
    parallel_for(samples, jobs, [&](size_t i) {
        Rng rng(derive_seed(seed, i));
        orders[i] = clique_graph_order(random_graph(n, rng), e).order;
    });
    return hist_from_orders(orders);
}

} // namespace cws
