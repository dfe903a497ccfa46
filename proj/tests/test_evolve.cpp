#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cws/evolve.hpp"
#include "cws/graph.hpp"
#include "cws/rng.hpp"

using namespace cws;

namespace {

// Zeros-vs-ones parents make the exchanged region directly visible.
std::vector<uint8_t> zeros(int b) { return std::vector<uint8_t>(b, 0); }
std::vector<uint8_t> ones(int b) { return std::vector<uint8_t>(b, 1); }

int transitions(const std::vector<uint8_t>& bits) {
    int t = 0;
    for (size_t i = 1; i < bits.size(); ++i) t += bits[i] != bits[i - 1];
    return t;
}

Graph dumbbell() {
    // Two triangles joined by the bridge 2-3: the spectral split is clean.
    Graph g = empty_graph(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(3, 5);
    g.add_edge(2, 3);
    return g;
}

} // namespace

TEST_CASE("encode_bits lists the upper triangle row by row") {
    Graph g = empty_graph(4);
    g.add_edge(0, 2);
    CHECK(encode_bits(g) == std::vector<uint8_t>{0, 1, 0, 0, 0, 0});
    g.add_edge(2, 3);
    CHECK(encode_bits(g) == std::vector<uint8_t>{0, 1, 0, 0, 0, 1});
    CHECK(encode_bits(empty_graph(1)).empty());
}

TEST_CASE("encode_bits and decode_bits round-trip") {
    Rng rng(111);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng.below(12));
        Graph g = random_graph(n, rng);
        CHECK(decode_bits(encode_bits(g), n) == g);
    }
    CHECK_THROWS_AS(decode_bits({0, 1}, 4), std::invalid_argument);
}

TEST_CASE("crossover kind names round-trip") {
    for (CrossoverKind kind : {CrossoverKind::single_point, CrossoverKind::two_point,
                               CrossoverKind::uniform, CrossoverKind::random,
                               CrossoverKind::spectral}) {
        CHECK(crossover_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(crossover_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("single-point crossover swaps a suffix") {
    Rng rng(113);
    for (int trial = 0; trial < 50; ++trial) {
        int b = 3 + int(rng.below(20));
        auto [c1, c2] = crossover_bits(CrossoverKind::single_point, zeros(b), ones(b), rng);
        // c1 = 0...01...1 and c2 is its complement.
        CHECK(transitions(c1) <= 1);
        CHECK(c1.front() <= c1.back());
        for (int i = 0; i < b; ++i) CHECK(c1[i] + c2[i] == 1);
        CHECK(c1.back() == 1); // the cut is below b, so the suffix moves
    }
}

TEST_CASE("two-point crossover swaps a span") {
    Rng rng(127);
    for (int trial = 0; trial < 50; ++trial) {
        int b = 3 + int(rng.below(20));
        auto [c1, c2] = crossover_bits(CrossoverKind::two_point, zeros(b), ones(b), rng);
        // c1 = 0..0 1..1 0..0; the span may be empty or touch the front,
        // but both indices land below b, so the last locus never moves.
        CHECK(transitions(c1) <= 2);
        CHECK(c1.back() == 0);
        for (int i = 0; i < b; ++i) CHECK(c1[i] + c2[i] == 1);
    }
}

TEST_CASE("uniform crossover at the exchange extremes") {
    Rng rng(131);
    auto [swap1, swap2] = crossover_bits(CrossoverKind::uniform, zeros(12), ones(12), rng, 1.0);
    CHECK(swap1 == ones(12));
    CHECK(swap2 == zeros(12));
    auto [keep1, keep2] = crossover_bits(CrossoverKind::uniform, zeros(12), ones(12), rng, 0.0);
    CHECK(keep1 == zeros(12));
    CHECK(keep2 == ones(12));
}

TEST_CASE("bit crossovers fix identical parents") {
    Rng rng(137);
    Graph g = random_graph(6, rng);
    std::vector<uint8_t> bits = encode_bits(g);
    for (CrossoverKind kind : {CrossoverKind::single_point, CrossoverKind::two_point,
                               CrossoverKind::uniform}) {
        auto [c1, c2] = crossover_bits(kind, bits, bits, rng);
        CHECK(c1 == bits);
        CHECK(c2 == bits);
    }
    CHECK_THROWS_AS(crossover_bits(CrossoverKind::spectral, bits, bits, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(crossover_bits(CrossoverKind::single_point, bits, zeros(3), rng),
                    std::invalid_argument);
}

TEST_CASE("spectral crossover reproduces a clean two-cluster parent") {
    // Both parents the same dumbbell: fragments are the triangles, the only
    // degree deficit is the severed bridge, and reconnection must restore it.
    Rng rng(139);
    for (int trial = 0; trial < 20; ++trial) {
        auto [c1, c2] = crossover_spectral(dumbbell(), dumbbell(), rng);
        CHECK(c1 == dumbbell());
        CHECK(c2 == dumbbell());
    }
}

TEST_CASE("spectral crossover yields valid graphs of the same size") {
    Rng rng(149);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng.below(11));
        Graph p1 = random_graph(n, rng);
        Graph p2 = random_graph(n, rng);
        auto [c1, c2] = crossover_spectral(p1, p2, rng);
        CHECK(c1.n == n);
        CHECK(c2.n == n);
        validate(c1); // throws on asymmetry/self-loops
        validate(c2);
    }
    CHECK_THROWS_AS(crossover_spectral(empty_graph(3), empty_graph(4), rng),
                    std::invalid_argument);
}

TEST_CASE("mutate toggles exactly one pair") {
    Rng rng(151);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng.below(11));
        Graph g = random_graph(n, rng);
        Graph m = mutate(g, rng);
        int changed = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                changed += g.has_edge(i, j) != m.has_edge(i, j);
        CHECK(changed == 1);
        validate(m);
    }
}

TEST_CASE("run_ga rejects broken configurations") {
    auto fit = [](const Graph& g) { return int64_t(g.edge_count()); };
    GaConfig config;
    config.n = 5;
    config.population = 1;
    CHECK_THROWS_AS(run_ga(config, fit), std::invalid_argument);
    config.population = 10;
    config.elitism = 11;
    CHECK_THROWS_AS(run_ga(config, fit), std::invalid_argument);
    config.elitism = 2;
    config.tournament = 0;
    CHECK_THROWS_AS(run_ga(config, fit), std::invalid_argument);
    config.tournament = 11;
    CHECK_THROWS_AS(run_ga(config, fit), std::invalid_argument);
}

TEST_CASE("run_ga improves monotonically under elitism") {
    auto fit = [](const Graph& g) { return int64_t(g.edge_count()); };
    for (CrossoverKind kind : {CrossoverKind::spectral, CrossoverKind::random,
                               CrossoverKind::single_point}) {
        GaConfig config;
        config.n = 7;
        config.population = 10;
        config.generations = 15;
        config.tournament = 5;
        config.elitism = 2;
        config.kind = kind;
        config.seed = 1000 + int(kind);
        GaOutcome out = run_ga(config, fit);
        REQUIRE(out.best_history.size() == 16);
        CHECK(std::is_sorted(out.best_history.begin(), out.best_history.end()));
        CHECK(out.best_fitness == out.best_history.back());
        CHECK(fit(out.best_graph) == out.best_fitness);
        // Selection pressure toward edge count must beat a random start.
        CHECK(out.best_history.back() >= out.best_history.front());
        CHECK(out.mean_history.size() == 16);
    }
}

TEST_CASE("run_ga is deterministic in the seed") {
    auto fit = [](const Graph& g) { return int64_t(g.edge_count() * 3 - g.degree(0)); };
    GaConfig config;
    config.n = 6;
    config.population = 8;
    config.generations = 12;
    config.tournament = 4;
    config.seed = 77;
    GaOutcome a = run_ga(config, fit);
    GaOutcome b = run_ga(config, fit);
    CHECK(a.best_graph == b.best_graph);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.best_history == b.best_history);
    CHECK(a.mean_history == b.mean_history);
}

TEST_CASE("run_ga memoizes the fitness per distinct graph") {
    std::set<uint64_t> seen;
    int calls = 0;
    auto fit = [&](const Graph& g) {
        ++calls;
        CHECK(seen.insert(pack_index(g)).second); // never re-evaluated
        return int64_t(g.edge_count());
    };
    GaConfig config;
    config.n = 6;
    config.population = 10;
    config.generations = 10;
    config.tournament = 5;
    config.seed = 3;
    run_ga(config, fit);
    CHECK(calls == int(seen.size()));
    CHECK(calls <= 10 * 11);
}

TEST_CASE("run_ga with zero generations scores the initial population") {
    int calls = 0;
    auto fit = [&](const Graph& g) {
        ++calls;
        return int64_t(g.edge_count());
    };
    GaConfig config;
    config.n = 5;
    config.population = 6;
    config.generations = 0;
    config.tournament = 3;
    config.seed = 9;
    GaOutcome out = run_ga(config, fit);
    CHECK(out.best_history.size() == 1);
    CHECK(calls <= 6);
    CHECK(out.best_fitness == out.best_history[0]);
}
