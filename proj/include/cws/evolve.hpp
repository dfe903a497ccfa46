#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cws/graph.hpp"
#include "cws/rng.hpp"

namespace cws {

// Bitstring genome: the upper triangle row by row, i.e. pairs
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
std::vector<uint8_t> encode_bits(const Graph& g);
Graph decode_bits(const std::vector<uint8_t>& bits, int n);

enum class CrossoverKind { single_point, two_point, uniform, random, spectral };

CrossoverKind crossover_kind_from_string(const std::string& s);
std::string to_string(CrossoverKind kind);

// Genome-level crossovers (single_point / two_point / uniform only).
//   single_point: a cut index in [0, b) is drawn; the suffix from the cut
//                 on is exchanged (index 0 swaps everything).
//   two_point:    two indices are drawn, the span between them exchanged.
//   uniform:      each locus exchanged independently with probability p_e.
std::pair<std::vector<uint8_t>, std::vector<uint8_t>>
crossover_bits(CrossoverKind kind, const std::vector<uint8_t>& p1,
               const std::vector<uint8_t>& p2, Rng& rng, double uniform_p_e = 0.5);

// Structural crossover: both parents are split by spectral bisection; a
// child keeps one parent's fragment on its own nodes, grafts the other
// parent's complementary fragment onto the remaining node slots (ascending
// order), then reconnects the fragments by repeatedly joining one node from
// each side, drawn with probability proportional to its degree deficit
// (parent degree minus current degree), until one side's deficits are
// exhausted.  Leftover deficits on the other side each connect to a
// uniformly random node of the finished side with probability 1/2.
std::pair<Graph, Graph> crossover_spectral(const Graph& p1, const Graph& p2, Rng& rng);

// Toggles one uniformly random node pair.
Graph mutate(const Graph& g, Rng& rng);

struct GaConfig {
    int n = 8;
    int population = 20;
    int generations = 100;
    double p_crossover = 0.9;
    double p_mutation = 0.1;
    int tournament = 10;    // entrants per parent pick, sampled without replacement
    int elitism = 2;        // fittest parents copied into the next generation
    CrossoverKind kind = CrossoverKind::spectral;
    double uniform_p_e = 0.5;
    uint64_t seed = 0;
};

struct GaOutcome {
    Graph best_graph;
    int64_t best_fitness = 0;
    std::vector<int64_t> best_history;  // entry 0 = initial population, then one per generation
    std::vector<double> mean_history;
};

// Steady generational GA over graphs.  Deterministic given the seed.  With
// elitism >= 1 the best_history is non-decreasing.  generations = 0 just
// scores the random initial population.  Fitness values are memoized per
// run, so the fitness function must be pure.
GaOutcome run_ga(const GaConfig& config, const std::function<int64_t(const Graph&)>& fitness);

} // namespace cws
