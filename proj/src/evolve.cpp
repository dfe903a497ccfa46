#include "cws/evolve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cws/spectral.hpp"

namespace cws {

std::vector<uint8_t> encode_bits(const Graph& g) {
    std::vector<uint8_t> bits;
    bits.reserve(pair_bits(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    return bits;
}

Graph decode_bits(const std::vector<uint8_t>& bits, int n) {
    if ((int)bits.size() != pair_bits(n))
        throw std::invalid_argument("decode_bits: expected " + std::to_string(pair_bits(n)) +
                                    " bits, got " + std::to_string(bits.size()));
    Graph g = empty_graph(n);
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (bits[k]) g.add_edge(i, j);
    return g;
}

CrossoverKind crossover_kind_from_string(const std::string& s) {
    if (s == "single_point") return CrossoverKind::single_point;
    if (s == "two_point") return CrossoverKind::two_point;
    if (s == "uniform") return CrossoverKind::uniform;
    if (s == "random") return CrossoverKind::random;
    if (s == "spectral") return CrossoverKind::spectral;
    throw std::invalid_argument("unknown crossover kind '" + s + "'");
}

std::string to_string(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::single_point: return "single_point";
        case CrossoverKind::two_point: return "two_point";
        case CrossoverKind::uniform: return "uniform";
        case CrossoverKind::random: return "random";
        case CrossoverKind::spectral: return "spectral";
    }
    return "?";
}

std::pair<std::vector<uint8_t>, std::vector<uint8_t>>
crossover_bits(CrossoverKind kind, const std::vector<uint8_t>& p1,
               const std::vector<uint8_t>& p2, Rng& rng, double uniform_p_e) {
    if (p1.size() != p2.size()) throw std::invalid_argument("crossover_bits: length mismatch");
    auto c1 = p1, c2 = p2;
    size_t b = p1.size();
    switch (kind) {
        case CrossoverKind::single_point: {
            size_t cut = rng.below(b);
            for (size_t k = cut; k < b; ++k) std::swap(c1[k], c2[k]);
            break;
        }
        case CrossoverKind::two_point: {
            size_t i = rng.below(b), j = rng.below(b);
            if (i > j) std::swap(i, j);
            for (size_t k = i; k < j; ++k) std::swap(c1[k], c2[k]);
            break;
        }
        case CrossoverKind::uniform: {
            for (size_t k = 0; k < b; ++k)
                if (rng.chance(uniform_p_e)) std::swap(c1[k], c2[k]);
            break;
        }
        default:
            throw std::invalid_argument("crossover_bits: not a genome-level kind");
    }
    return {std::move(c1), std::move(c2)};
}

namespace {

std::vector<int> mask_nodes(uint16_t mask) {
    std::vector<int> nodes;
    for (int i = 0; i < 16; ++i)
        if ((mask >> i) & 1u) nodes.push_back(i);
    return nodes;
}

// One spectral-crossover child: the base parent's part1 fragment stays on
// its own nodes, the donor's part2 fragment is grafted onto the remaining
// slots in ascending order, then deficit-guided edges rejoin the halves.
Graph spectral_child(const Graph& base, uint16_t base_part1, const Graph& donor,
                     uint16_t donor_part2, Rng& rng) {
    int n = base.n;
    Graph child = empty_graph(n);

    std::vector<int> keep = mask_nodes(base_part1);
    std::vector<int> slots; // nodes not claimed by the base fragment
    for (int i = 0; i < n; ++i)
        if (!((base_part1 >> i) & 1u)) slots.push_back(i);
    std::vector<int> donor_nodes = mask_nodes(donor_part2);
    // halves of an n-node bisection always pair up exactly
    if (slots.size() != donor_nodes.size())
        throw std::logic_error("spectral_child: fragment size mismatch");

    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b)
            if (base.has_edge(keep[a], keep[b])) child.add_edge(keep[a], keep[b]);
    for (size_t a = 0; a < donor_nodes.size(); ++a)
        for (size_t b = a + 1; b < donor_nodes.size(); ++b)
            if (donor.has_edge(donor_nodes[a], donor_nodes[b]))
                child.add_edge(slots[a], slots[b]);

    // degree deficits relative to the full parents
    std::vector<int> deficit(n, 0);
    for (int v : keep) deficit[v] = base.degree(v) - child.degree(v);
    for (size_t a = 0; a < slots.size(); ++a)
        deficit[slots[a]] = donor.degree(donor_nodes[a]) - child.degree(slots[a]);

    auto total = [&](const std::vector<int>& side) {
        int t = 0;
        for (int v : side) t += deficit[v];
        return t;
    };

    // join one node from each side, weighted by deficit product, skipping
    // pairs already joined; stop when either side is satisfied or no
    // unjoined deficit pair remains
    while (total(keep) > 0 && total(slots) > 0) {
        int64_t weight_sum = 0;
        for (int u : keep)
            for (int w : slots)
                if (deficit[u] > 0 && deficit[w] > 0 && !child.has_edge(u, w))
                    weight_sum += int64_t(deficit[u]) * deficit[w];
        if (weight_sum == 0) break;
        int64_t pick = (int64_t)rng.below((uint64_t)weight_sum);
        for (int u : keep) {
            for (int w : slots) {
                if (deficit[u] > 0 && deficit[w] > 0 && !child.has_edge(u, w)) {
                    pick -= int64_t(deficit[u]) * deficit[w];
                    if (pick < 0) {
                        child.add_edge(u, w);
                        --deficit[u];
                        --deficit[w];
                        u = -1; // break both loops
                        break;
                    }
                }
            }
            if (u < 0) break;
        }
    }

    // leftover deficit units each connect to a uniformly random node of the
    // satisfied side with probability 1/2 (an attempt landing on an
    // existing edge is spent without effect)
    const std::vector<int>& open = total(keep) > 0 ? keep : slots;
    const std::vector<int>& done = total(keep) > 0 ? slots : keep;
    for (int v : open)
        while (deficit[v] > 0) {
            --deficit[v];
            if (!rng.chance(0.5)) continue;
            int w = done[rng.below(done.size())];
            if (!child.has_edge(v, w)) child.add_edge(v, w);
        }
    return child;
}

} // namespace

std::pair<Graph, Graph> crossover_spectral(const Graph& p1, const Graph& p2, Rng& rng) {
    if (p1.n != p2.n) throw std::invalid_argument("crossover_spectral: size mismatch");
    Bisection b1 = spectral_bisection(p1);
    Bisection b2 = spectral_bisection(p2);
    Graph c1 = spectral_child(p1, b1.part1, p2, b2.part2, rng);
    Graph c2 = spectral_child(p2, b2.part1, p1, b1.part2, rng);
    return {c1, c2};
}

Graph mutate(const Graph& g, Rng& rng) {
    Graph out = g;
    uint64_t pair = rng.below((uint64_t)pair_bits(g.n));
    uint64_t k = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++k)
            if (k == pair) {
                out.toggle_edge(i, j);
                return out;
            }
    return out;
}

GaOutcome run_ga(const GaConfig& config, const std::function<int64_t(const Graph&)>& fitness) {
    if (config.population < 2) throw std::invalid_argument("run_ga: population must be >= 2");
    if (config.elitism < 0 || config.elitism > config.population)
        throw std::invalid_argument("run_ga: elitism out of range");
    if (config.tournament < 1 || config.tournament > config.population)
        throw std::invalid_argument("run_ga: tournament size out of range");

    Rng rng(config.seed);

    // memo per run: fitness must be pure, and populations converge hard
    std::unordered_map<GraphKey, int64_t, GraphKeyHash> memo;
    auto fit = [&](const Graph& g) {
        GraphKey key = graph_key(g);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int64_t f = fitness(g);
        memo.emplace(key, f);
        return f;
    };

    std::vector<Graph> pop;
    pop.reserve(config.population);
    for (int i = 0; i < config.population; ++i) pop.push_back(random_graph(config.n, rng));
    std::vector<int64_t> scores(config.population);
    for (int i = 0; i < config.population; ++i) scores[i] = fit(pop[i]);

    GaOutcome outcome;
    outcome.best_fitness = INT64_MIN;
    auto record = [&]() {
        int best_i = 0;
        double mean = 0;
        for (int i = 0; i < config.population; ++i) {
            if (scores[i] > scores[best_i]) best_i = i;
            mean += (double)scores[i];
        }
        outcome.best_history.push_back(scores[best_i]);
        outcome.mean_history.push_back(mean / config.population);
        if (scores[best_i] > outcome.best_fitness) {
            outcome.best_fitness = scores[best_i];
            outcome.best_graph = pop[best_i];
        }
    };
    record();

    // fittest first, ties to the lower index: used for elitism
    auto ranked = [&]() {
        std::vector<int> order(config.population);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return scores[a] > scores[b]; });
        return order;
    };

    // tournament: sample `tournament` distinct entrants, fittest wins
    std::vector<int> scratch(config.population);
    auto select_parent = [&]() {
        std::iota(scratch.begin(), scratch.end(), 0);
        int winner = -1;
        for (int k = 0; k < config.tournament; ++k) {
            size_t pick = k + (size_t)rng.below((uint64_t)(config.population - k));
            std::swap(scratch[k], scratch[pick]);
            int entrant = scratch[k];
            if (winner < 0 || scores[entrant] > scores[winner] ||
                (scores[entrant] == scores[winner] && entrant < winner))
                winner = entrant;
        }
        return winner;
    };

    for (int gen = 1; gen <= config.generations; ++gen) {
        std::vector<Graph> next;
        next.reserve(config.population);
        std::vector<int> order = ranked();
        for (int e = 0; e < config.elitism; ++e) next.push_back(pop[order[e]]);

        while ((int)next.size() < config.population) {
            const Graph& pa = pop[select_parent()];
            const Graph& pb = pop[select_parent()];
            Graph ca = pa, cb = pb;
            if (rng.chance(config.p_crossover)) {
                switch (config.kind) {
                    case CrossoverKind::random:
                        ca = random_graph(config.n, rng);
                        cb = random_graph(config.n, rng);
                        break;
                    case CrossoverKind::spectral: {
                        auto pair = crossover_spectral(pa, pb, rng);
                        ca = pair.first;
                        cb = pair.second;
                        break;
                    }
                    default: {
                        auto pair = crossover_bits(config.kind, encode_bits(pa), encode_bits(pb),
                                                   rng, config.uniform_p_e);
                        ca = decode_bits(pair.first, config.n);
                        cb = decode_bits(pair.second, config.n);
                        break;
                    }
                }
            }
            if (rng.chance(config.p_mutation)) ca = mutate(ca, rng);
            if (rng.chance(config.p_mutation)) cb = mutate(cb, rng);
            next.push_back(ca);
            if ((int)next.size() < config.population) next.push_back(cb);
        }

        pop = std::move(next);
        for (int i = 0; i < config.population; ++i) scores[i] = fit(pop[i]);
        record();
    }
    return outcome;
}

} // namespace cws
